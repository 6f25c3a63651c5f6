#pragma once

#include <string>
#include <vector>

#include "intspec/linalg.hpp"
#include "intspec/pedestal.hpp"
#include "intspec/poset.hpp"

namespace intspec {

/// Surjective order-preserving map X -> {0..rank-1}; the fibres are floors.
/// Rank-n filters are exactly the linear extensions (chambers).
struct Filter {
  std::vector<int> floors;  // indexed by element, 0-based floor
  int rank = 0;

  /// Validates surjectivity onto 0..k-1 (k inferred).
  static Filter from_floors(std::vector<int> floors);
  static Filter from_extension(const LinearExtension& ext);

  int size() const noexcept { return static_cast<int>(floors.size()); }
  bool is_chamber() const noexcept { return rank == size(); }
  bool separates(int a, int b) const { return floors[static_cast<std::size_t>(a)] != floors[static_cast<std::size_t>(b)]; }
  LinearExtension to_extension() const;
  std::vector<std::vector<int>> floor_sets() const;

  bool operator==(const Filter& other) const { return floors == other.floors; }
  auto operator<=>(const Filter& other) const { return floors <=> other.floors; }
};

bool is_filter(const Poset& poset, const Filter& f);

struct Composition {
  std::vector<int> parts;

  int total() const noexcept;
  std::string to_string() const;
  bool operator==(const Composition&) const = default;
};

/// Cuts {1..n} after each position k with eps(k) = 1.
Composition composition_of(const EpsilonMask& mask);

/// Filters with |F^{-1}(i)| = parts[i], lexicographic in the floor vector.
std::vector<Filter> enumerate_filters(const Poset& poset, const Composition& comp);
/// Every filter of the poset, lexicographic in the floor vector.
std::vector<Filter> all_filters(const Poset& poset);

/// F = outer * inner: outer decides strict comparisons, inner breaks its ties.
Filter filter_product(const Filter& outer, const Filter& inner);
LinearExtension apply_filter(const Filter& f, const LinearExtension& p);

/// (M_F)_{P,Q} = 1 iff Q = FP.
IntMatrix filter_matrix(const ExtensionSet& exts, const Filter& f);

/// "{(1,1),(1,2)} | {(2,1)}"
std::string format_filter(const Poset& poset, const Filter& f);

/// One coarsening of the mask composition and the filters that realize it.
struct MergerTerm {
  int mergers = 0;
  int sign = 1;  // (-1)^mergers
  Composition composition;
  std::vector<Filter> filters;
};

struct Decomposition {
  EpsilonMask mask;
  bool realized = false;
  /// Exact equality of the signed sum with B_eps; only asserted when realized.
  bool verified = false;
  std::vector<MergerTerm> terms;
};

/// All 2^{r-1} mergers of neighbouring parts of `comp`, fewest mergers first.
std::vector<MergerTerm> merger_terms(const Poset& poset, const Composition& comp);
IntMatrix signed_filter_sum(const ExtensionSet& exts, const std::vector<MergerTerm>& terms);

/// Inclusion-exclusion expansion of B_eps over filter matrices. For a realized
/// mask the sum is compared with b_matrix and DecompositionMismatch thrown on
/// any difference; an unrealized mask only returns the terms.
Decomposition b_decomposition(const PedestalMatrix& pm, const EpsilonMask& mask);

}  // namespace intspec
