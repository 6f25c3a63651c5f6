#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intspec/filters.hpp"
#include "intspec/linalg.hpp"
#include "intspec/pedestal.hpp"
#include "intspec/poset.hpp"

namespace intspec {

/// Each linear extension seen as a vertex of the tournament cube: coordinate
/// (i,j), i<j, is +1 iff i precedes j.
struct SignCoordinates {
  std::vector<std::pair<int, int>> pairs;          // lexicographic
  std::vector<std::vector<std::int8_t>> vectors;  // one per extension
};

SignCoordinates sign_coordinates(const ExtensionSet& exts, int n);

/// Degree-ordered basis of functions on Tot_X made of restricted cube
/// monomials prod_{(i,j) in S} x_ij. Every filter operator is upper
/// triangular in it.
struct FlagBasis {
  SignCoordinates coords;
  std::vector<std::vector<int>> monomials;  // indices into coords.pairs
  std::vector<int> degrees;
  IntMatrix basis;  // rows: extensions, columns: monomials (entries +-1)
  // basis^{-1} = inverse_scaled / denominator
  BigIntMatrix inverse_scaled;
  BigInt denominator;

  std::size_t dim() const noexcept { return monomials.size(); }
  /// Restriction of the monomial over `pair_indices` to Tot_X.
  std::vector<std::int64_t> evaluate(const std::vector<int>& pair_indices) const;
  std::string monomial_name(std::size_t column) const;
};

/// Greedy choice over candidates ordered by degree, then lexicographically,
/// keeping those that raise the exact rank. Monomials containing a
/// comparable pair are skipped: they restrict to a lower-degree candidate.
FlagBasis build_flag_basis(const Poset& poset, const ExtensionSet& exts);

/// W^{-1} M W, exact.
RationalMatrix conjugate(const IntMatrix& m, const FlagBasis& basis);
/// conjugate() plus an upper-triangularity assertion (NotTriangular).
RationalMatrix triangularize(const IntMatrix& m, const FlagBasis& basis);
/// W^{-1} [a,b] W for the commutator of two integer matrices.
RationalMatrix conjugated_commutator(const IntMatrix& a, const IntMatrix& b, const FlagBasis& basis);

/// Graded shortcut: entry S is 1 iff F separates no pair of S.
std::vector<int> filter_diagonal(const Filter& f, const FlagBasis& basis);

struct EigenForm {
  LinearForm coeffs;
  int multiplicity = 0;
};

struct Spectrum {
  /// lambda_S in basis order.
  std::vector<LinearForm> per_monomial;
  /// Distinct forms in order of first appearance; index 0 is the S = {} form.
  std::vector<EigenForm> forms;
  /// diag_S(W^{-1} B_eps W), by realized mask.
  std::map<EpsilonMask, std::vector<std::int64_t>> diagonals;
};

/// Eigenforms of M^X. diag_S(B_eps) is computed by conjugating B_eps and by
/// the signed filter diagonals; any disagreement throws SpectrumMismatch.
Spectrum eigenvalues(const PedestalMatrix& pm, const FlagBasis& basis);
Spectrum eigenvalues(const PedestalMatrix& pm);

/// Eigenvalue multiset as a specialization of each form.
std::vector<BigInt> specialize(const Spectrum& spectrum, const PedestalMatrix& pm, const std::vector<std::int64_t>& values);

struct SpectrumDraw {
  std::vector<std::int64_t> values;  // per realized mask
  std::vector<BigInt> charpoly;
  std::vector<BigInt> product;
  bool match = false;
};

struct SpectrumReport {
  std::uint64_t seed = 0;
  std::vector<SpectrumDraw> draws;
  bool passed = false;
};

/// Exact characteristic polynomial of one integer specialization against the
/// product of specialized eigenforms.
SpectrumDraw check_specialization(const PedestalMatrix& pm, const Spectrum& spectrum, std::vector<std::int64_t> values);

/// `draws` specializations with a_eps uniform in [-99, 99]; throws
/// SpectrumMismatch on the first mismatch.
SpectrumReport verify_spectrum(const PedestalMatrix& pm, const Spectrum& spectrum, std::uint64_t seed, int draws = 5);

struct JordanEntry {
  Rational value;
  int algebraic = 0;
  int geometric = 0;
};

struct JordanReport {
  std::vector<JordanEntry> entries;  // ascending by value
  bool factorization_verified = false;
  bool diagonalizable = false;
};

/// Algebraic multiplicities from the eigenforms (checked against the exact
/// characteristic polynomial), geometric ones from rank(M - lambda I).
JordanReport jordan_probe(const PedestalMatrix& pm, const Spectrum& spectrum,
                          const std::map<EpsilonMask, Rational>& specialization);

struct BaseCaseEntry {
  std::string name;
  IntMatrix tournament_matrix;
  RationalMatrix conjugated;
  RationalMatrix expected;
  bool match = false;
};

/// The three 2x2 tournament operators of the two-element antichain under the
/// Fourier matrix U = (1 1; 1 -1)/sqrt 2.
std::vector<BaseCaseEntry> n2_base_case();

}  // namespace intspec
