#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intspec {

inline constexpr std::size_t kDefaultExtensionCap = 2000;

/// Finite strict partial order on elements 0..n-1.
///
/// Element indices are canonical: input order for cover lists, row-major for
/// partition shapes, lexicographic tuple order for boxes. Every matrix
/// downstream is laid out from this indexing.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of `relations` and keeps its transitive
  /// reduction as the cover set. Reflexive pairs are dropped; a message is
  /// appended to `warnings` (or written to std::clog when null).
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& relations,
                           std::vector<std::string>* warnings = nullptr);
  static Poset from_relation(int n, const std::vector<std::pair<int, int>>& relations);

  /// Cell poset of a Young diagram: (r,c) < (r',c') iff r<=r', c<=c'.
  static Poset from_partition(std::span<const int> parts);
  /// Componentwise order on the box [1..d1] x ... x [1..dk].
  static Poset from_chain_product(std::span<const int> dims);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }

  bool less(int a, int b) const noexcept { return closure_[static_cast<std::size_t>(a * n_ + b)] != 0; }
  bool comparable(int a, int b) const noexcept { return less(a, b) || less(b, a); }

  /// Partition parts when built by from_partition; empty otherwise.
  const std::vector<int>& shape() const noexcept { return shape_; }
  bool is_partition_shape() const noexcept { return !shape_.empty(); }
  /// 0-based (row, column) of a cell; only meaningful for partition shapes.
  std::pair<int, int> cell(int element) const { return cells_.at(static_cast<std::size_t>(element)); }

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && names_ == other.names_ && closure_ == other.closure_;
  }

 private:
  void finish_from_relation(const std::vector<std::pair<int, int>>& relations);

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint8_t> closure_;
  std::vector<int> shape_;
  std::vector<std::pair<int, int>> cells_;
};

/// A total order compatible with the poset. `order[k]` is the element at
/// (0-based) position k and `rank[e]` its inverse.
struct LinearExtension {
  std::vector<int> order;
  std::vector<int> rank;

  static LinearExtension from_order(std::vector<int> order);
  /// Builds from 1-based ranks listed in element order (a tableau read row by row).
  static LinearExtension from_ranks(std::span<const int> ranks_one_based);

  int size() const noexcept { return static_cast<int>(order.size()); }
  bool operator==(const LinearExtension& other) const { return order == other.order; }
};

bool is_linear_extension(const Poset& poset, const LinearExtension& ext);

/// All linear extensions in canonical order (lexicographic in `order`).
/// Throws SizeCapExceeded once more than `cap` are found.
std::vector<LinearExtension> linear_extensions(const Poset& poset, std::size_t cap = kDefaultExtensionCap);

/// Tot_X with a reverse lookup from order sequence to canonical index.
class ExtensionSet {
 public:
  ExtensionSet() = default;
  explicit ExtensionSet(const Poset& poset, std::size_t cap = kDefaultExtensionCap);

  std::size_t size() const noexcept { return items_.size(); }
  const LinearExtension& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<LinearExtension>& items() const noexcept { return items_; }
  /// Canonical index of an extension; throws MismatchedPoset if absent.
  std::size_t index_of(const LinearExtension& ext) const;
  std::size_t index_of_order(const std::vector<int>& order) const;

 private:
  std::vector<LinearExtension> items_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Number of strict partial orders on a labeled n-set, by brute force (n <= 5).
std::uint64_t count_posets(int n);

/// "3,2,1" -> {3,2,1}
std::vector<int> parse_partition(std::string_view text);
/// "2x2x2" -> {2,2,2}
std::vector<int> parse_box(std::string_view text);

std::vector<int> hook_lengths(std::span<const int> parts);

}  // namespace intspec
