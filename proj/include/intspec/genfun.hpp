#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "intspec/linalg.hpp"
#include "intspec/pedestal.hpp"
#include "intspec/poset.hpp"

namespace intspec {

inline constexpr int kDefaultTruncation = 20;
inline constexpr int kMaxTruncation = 200;

/// Power series c_0 + c_1 t + ... known exactly up to t^T.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation) : coeffs_(static_cast<std::size_t>(truncation) + 1, BigInt(0)) {}
  TruncatedSeries(int truncation, std::span<const std::int64_t> poly);

  static TruncatedSeries one(int truncation);

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  BigInt& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries operator*(const TruncatedSeries& other) const;
  /// Multiplies by 1/(1 - t^k).
  TruncatedSeries& divide_by_one_minus_power(int k);

  bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// "1 + 2 t + t^3"
std::string polynomial_string(std::span<const std::int64_t> coeffs);

/// prod_{l=1}^n 1/(1 - t^l)
TruncatedSeries chain_series(int n, int truncation);

/// g_k = #{monotone p : X -> {0,1,...} with sum p = k}, counted by recursion
/// along a linear extension with memoization on the relevant value profile.
TruncatedSeries gen_monotone(const Poset& poset, int truncation);

/// prod over cells 1/(1 - t^{hook}); throws NotAPartitionShape.
TruncatedSeries macmahon(const Poset& poset, int truncation);
std::string hook_product_string(const Poset& poset);

struct IdentityReport {
  int truncation = 0;
  std::vector<std::int64_t> pedestal_poly;  // Pi_X(t) from pedestal volumes
  TruncatedSeries monotone{0};
  TruncatedSeries product{0};  // Pi_X(t) prod 1/(1-t^l)
  bool holds = false;
  // Row-sum form under a_eps -> t^{sum k eps(k)} and t^{sum (n-k) eps(k)}.
  std::vector<std::int64_t> literal_substitution;
  std::vector<std::int64_t> reversed_substitution;
  bool literal_matches = false;
  bool reversed_matches = false;
  bool has_macmahon = false;
  bool macmahon_matches = false;
};

/// Coefficientwise check of G_X = Pi_X(t) G_{X_n}; throws IdentityViolated.
IdentityReport pedestal_identity_check(const PedestalMatrix& pm, int truncation = kDefaultTruncation);

/// p(Q^{-1}(k)) = q_PQ(Q^{-1}(k)) + pi(k), returned indexed by element.
std::vector<int> monotone_from_pedestal(const LinearExtension& q, const Pedestal& ped, std::span<const int> pi);

struct BijectionReport {
  std::size_t base_index = 0;
  int truncation = 0;
  std::size_t images = 0;
  std::vector<std::int64_t> image_counts;  // per volume
  bool passed = false;
};

/// Walks every (Q, pi) with volume <= T, checking membership in P_X,
/// injectivity and volume preservation, then compares per-volume image
/// counts with gen_monotone. Throws BijectionFailure.
BijectionReport bijection_check(const PedestalMatrix& pm, std::size_t base_index, int truncation);

}  // namespace intspec
