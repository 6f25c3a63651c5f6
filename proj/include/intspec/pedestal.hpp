#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intspec/linalg.hpp"
#include "intspec/poset.hpp"

namespace intspec {

/// Descent record of Q read against P: bits[k-1] = 1 iff the element at
/// position k+1 of Q has a smaller P-rank than the one at position k.
/// Names one formal variable a_eps.
struct EpsilonMask {
  std::vector<std::uint8_t> bits;

  static EpsilonMask zeros(int n) { return {std::vector<std::uint8_t>(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0)}; }
  static EpsilonMask parse(const std::string& bitstring);

  int length() const noexcept { return static_cast<int>(bits.size()); }
  int weight() const noexcept;
  bool is_zero() const noexcept { return weight() == 0; }
  /// "0101"; empty for a one-element poset.
  std::string bitstring() const;
  /// "a_0101", or "a_∅" for the empty mask.
  std::string name() const;

  auto operator<=>(const EpsilonMask&) const = default;
};

/// Integer combination of the a_eps; zero coefficients are never stored.
using LinearForm = std::map<EpsilonMask, std::int64_t>;

void add_term(LinearForm& form, const EpsilonMask& mask, std::int64_t coeff);
std::string to_string(const LinearForm& form);

struct Pedestal {
  std::vector<int> values;  // indexed by element
  int volume = 0;
};

/// Exponents of x_1..x_n (index 0 is x_1).
struct MonomialVector {
  std::vector<int> exponents;

  int degree() const noexcept;
  std::string to_string() const;
  auto operator<=>(const MonomialVector&) const = default;
};

/// Multivariate polynomial: exponent vector -> coefficient.
using MultiPolynomial = std::map<std::vector<int>, std::int64_t>;

EpsilonMask epsilon(const LinearExtension& p, const LinearExtension& q);
Pedestal pedestal(const LinearExtension& p, const LinearExtension& q);
MonomialVector monomial(const LinearExtension& p, const LinearExtension& q);
/// The monomial determined by a mask alone (the map mask -> m_PQ is injective).
MonomialVector monomial_of(const EpsilonMask& mask);
/// sum_k (n-k) eps(k): the pedestal volume carried by a mask.
int volume_weight(const EpsilonMask& mask);
/// sum_k k eps(k): the literal substitution exponent.
int index_weight(const EpsilonMask& mask);

/// M^X over Tot_X in canonical order. Entries are stored as indices into the
/// sorted list of realized masks.
class PedestalMatrix {
 public:
  explicit PedestalMatrix(Poset poset, std::size_t cap = kDefaultExtensionCap);

  const Poset& poset() const noexcept { return poset_; }
  const ExtensionSet& extensions() const noexcept { return extensions_; }
  std::size_t dim() const noexcept { return extensions_.size(); }
  int n() const noexcept { return poset_.size(); }

  const std::vector<EpsilonMask>& masks() const noexcept { return masks_; }
  std::size_t mask_index(std::size_t p, std::size_t q) const { return entries_[p * dim() + q]; }
  const EpsilonMask& entry(std::size_t p, std::size_t q) const { return masks_[mask_index(p, q)]; }
  MonomialVector monomial_entry(std::size_t p, std::size_t q) const { return monomial_of(entry(p, q)); }
  std::optional<std::size_t> find_mask(const EpsilonMask& mask) const;

  /// Integer specialization: value of a_eps for each realized mask (by index).
  IntMatrix specialize(const std::vector<std::int64_t>& values) const;

 private:
  Poset poset_;
  ExtensionSet extensions_;
  std::vector<EpsilonMask> masks_;
  std::vector<std::size_t> entries_;
};

/// Indicator matrix of the entries equal to `mask`; zero when unrealized.
IntMatrix b_matrix(const PedestalMatrix& pm, const EpsilonMask& mask);

struct PedestalPolynomial {
  std::vector<std::int64_t> coeffs;  // coefficient of t^v
  LinearForm row_sum;                // common row sum of M^X
};

/// Pi_X(t) and the row-sum form; throws RowMismatch if any row differs.
PedestalPolynomial pedestal_polynomial(const PedestalMatrix& pm);

/// h_P = sum_Q m_PQ for the extension at canonical index `p`.
MultiPolynomial h_polynomial(const PedestalMatrix& pm, std::size_t p);

/// One variable of the example-style numbering a1, a2, ...: realized masks
/// ordered by their monomial exponent vectors, lexicographically descending.
struct LegendEntry {
  std::string label;
  EpsilonMask mask;
  MonomialVector monomial;
};

std::vector<LegendEntry> legend(const PedestalMatrix& pm);

}  // namespace intspec
