#include "intspec/spectra.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "intspec/error.hpp"

namespace intspec {

SignCoordinates sign_coordinates(const ExtensionSet& exts, int n) {
  SignCoordinates sc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sc.pairs.emplace_back(i, j);
  sc.vectors.reserve(exts.size());
  for (const auto& ext : exts.items()) {
    std::vector<std::int8_t> v;
    v.reserve(sc.pairs.size());
    for (const auto& [i, j] : sc.pairs)
      v.push_back(ext.rank[static_cast<std::size_t>(i)] < ext.rank[static_cast<std::size_t>(j)] ? 1 : -1);
    sc.vectors.push_back(std::move(v));
  }
  return sc;
}

std::vector<std::int64_t> FlagBasis::evaluate(const std::vector<int>& pair_indices) const {
  std::vector<std::int64_t> out(coords.vectors.size(), 1);
  for (std::size_t q = 0; q < out.size(); ++q)
    for (int idx : pair_indices) out[q] *= coords.vectors[q][static_cast<std::size_t>(idx)];
  return out;
}

std::string FlagBasis::monomial_name(std::size_t column) const {
  const auto& s = monomials[column];
  if (s.empty()) return "1";
  std::string name;
  for (int idx : s) {
    if (!name.empty()) name += " ";
    const auto [i, j] = coords.pairs[static_cast<std::size_t>(idx)];
    name += "x" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  }
  return name;
}

namespace {

// Advances `c` (strictly increasing, values < m) to the next combination in
// lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& c, int m) {
  const int d = static_cast<int>(c.size());
  int i = d - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == m - d + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int k = i + 1; k < d; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] + 1;
  return true;
}

}  // namespace

FlagBasis build_flag_basis(const Poset& poset, const ExtensionSet& exts) {
  FlagBasis fb;
  fb.coords = sign_coordinates(exts, poset.size());
  const std::size_t dim = exts.size();

  std::vector<int> free_pairs;
  for (std::size_t idx = 0; idx < fb.coords.pairs.size(); ++idx) {
    const auto [i, j] = fb.coords.pairs[idx];
    if (!poset.comparable(i, j)) free_pairs.push_back(static_cast<int>(idx));
  }
  const int m = static_cast<int>(free_pairs.size());

  IncrementalRowSpace space(dim);
  std::vector<std::vector<std::int64_t>> columns;
  for (int d = 0; d <= m && fb.monomials.size() < dim; ++d) {
    std::vector<int> comb(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) comb[static_cast<std::size_t>(k)] = k;
    do {
      std::vector<int> s;
      s.reserve(comb.size());
      for (int c : comb) s.push_back(free_pairs[static_cast<std::size_t>(c)]);
      auto values = fb.evaluate(s);
      if (space.try_add(values)) {
        fb.monomials.push_back(std::move(s));
        fb.degrees.push_back(d);
        columns.push_back(std::move(values));
      }
    } while (fb.monomials.size() < dim && next_combination(comb, m));
  }
  if (fb.monomials.size() != dim) throw std::logic_error("build_flag_basis: monomials do not span functions on Tot_X");

  fb.basis = IntMatrix(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) fb.basis(r, c) = columns[c][r];

  RationalMatrix inv = inverse(to_rational(fb.basis));
  BigInt den = 1;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), inv(i, j).get_den_mpz_t());
  fb.denominator = den;
  fb.inverse_scaled = BigIntMatrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational scaled = inv(i, j) * den;
      fb.inverse_scaled(i, j) = scaled.get_num();
    }
  return fb;
}

RationalMatrix conjugate(const IntMatrix& m, const FlagBasis& fb) {
  const std::size_t n = fb.dim();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("conjugate: matrix size differs from basis");
  const IntMatrix mw = m * fb.basis;
  RationalMatrix out(n, n);
  std::vector<BigInt> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& a : acc) a = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = fb.inverse_scaled(i, k);
      if (aik == 0) continue;
      const auto row = mw.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t x = row[j];
        if (x > 0) {
          mpz_addmul_ui(acc[j].get_mpz_t(), aik.get_mpz_t(), static_cast<unsigned long>(x));
        } else if (x < 0) {
          mpz_submul_ui(acc[j].get_mpz_t(), aik.get_mpz_t(), static_cast<unsigned long>(-x));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(acc[j], fb.denominator);
      out(i, j).canonicalize();
    }
  }
  return out;
}

RationalMatrix triangularize(const IntMatrix& m, const FlagBasis& fb) {
  RationalMatrix t = conjugate(m, fb);
  if (!is_upper_triangular(t)) throw Error(ErrorKind::NotTriangular, "conjugated matrix has a nonzero entry below the diagonal");
  return t;
}

RationalMatrix conjugated_commutator(const IntMatrix& a, const IntMatrix& b, const FlagBasis& fb) {
  return conjugate(a * b - b * a, fb);
}

std::vector<int> filter_diagonal(const Filter& f, const FlagBasis& fb) {
  std::vector<int> diag;
  diag.reserve(fb.dim());
  for (const auto& s : fb.monomials) {
    bool kept = true;
    for (int idx : s) {
      const auto [i, j] = fb.coords.pairs[static_cast<std::size_t>(idx)];
      if (f.separates(i, j)) {
        kept = false;
        break;
      }
    }
    diag.push_back(kept ? 1 : 0);
  }
  return diag;
}

Spectrum eigenvalues(const PedestalMatrix& pm, const FlagBasis& fb) {
  Spectrum sp;
  const std::size_t n = fb.dim();
  sp.per_monomial.assign(n, LinearForm{});
  for (const auto& mask : pm.masks()) {
    const RationalMatrix t = triangularize(b_matrix(pm, mask), fb);
    std::vector<std::int64_t> direct(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (t(s, s).get_den() != 1 || !t(s, s).get_num().fits_slong_p())
        throw Error(ErrorKind::SpectrumMismatch, "non-integer diagonal entry for " + mask.name());
      direct[s] = t(s, s).get_num().get_si();
    }

    std::vector<std::int64_t> graded(n, 0);
    for (const auto& term : merger_terms(pm.poset(), composition_of(mask))) {
      for (const auto& f : term.filters) {
        const auto d = filter_diagonal(f, fb);
        for (std::size_t s = 0; s < n; ++s) graded[s] += term.sign * d[s];
      }
    }
    if (graded != direct)
      throw Error(ErrorKind::SpectrumMismatch, "signed filter diagonals disagree with conjugation for " + mask.name());

    for (std::size_t s = 0; s < n; ++s) add_term(sp.per_monomial[s], mask, direct[s]);
    sp.diagonals.emplace(mask, std::move(direct));
  }
  for (const auto& form : sp.per_monomial) {
    auto it = std::find_if(sp.forms.begin(), sp.forms.end(), [&](const EigenForm& e) { return e.coeffs == form; });
    if (it == sp.forms.end()) {
      sp.forms.push_back({form, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return sp;
}

Spectrum eigenvalues(const PedestalMatrix& pm) { return eigenvalues(pm, build_flag_basis(pm.poset(), pm.extensions())); }

std::vector<BigInt> specialize(const Spectrum& spectrum, const PedestalMatrix& pm, const std::vector<std::int64_t>& values) {
  std::vector<BigInt> out;
  for (const auto& form : spectrum.per_monomial) {
    BigInt v = 0;
    for (const auto& [mask, c] : form) {
      const auto idx = pm.find_mask(mask);
      if (!idx) throw Error(ErrorKind::MismatchedPoset, "eigenform references an unrealized mask");
      v += BigInt(static_cast<long>(c)) * static_cast<long>(values[*idx]);
    }
    out.push_back(v);
  }
  return out;
}

SpectrumDraw check_specialization(const PedestalMatrix& pm, const Spectrum& spectrum, std::vector<std::int64_t> values) {
  SpectrumDraw d;
  d.charpoly = characteristic_polynomial(to_bigint(pm.specialize(values)));
  const auto roots = specialize(spectrum, pm, values);
  d.product = polynomial_from_roots(roots);
  d.match = d.charpoly == d.product;
  d.values = std::move(values);
  return d;
}

namespace {

// Uniform on [lo, hi] by rejection, independent of the standard library's
// distribution implementation so draws are reproducible everywhere.
std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

SpectrumReport verify_spectrum(const PedestalMatrix& pm, const Spectrum& spectrum, std::uint64_t seed, int draws) {
  SpectrumReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < draws; ++k) {
    std::vector<std::int64_t> values(pm.masks().size());
    for (auto& v : values) v = uniform_in(rng, -99, 99);
    auto d = check_specialization(pm, spectrum, std::move(values));
    const bool ok = d.match;
    rep.draws.push_back(std::move(d));
    if (!ok)
      throw Error(ErrorKind::SpectrumMismatch,
                  "characteristic polynomial differs from eigenform product (seed " + std::to_string(seed) + ", draw " +
                      std::to_string(k) + ")");
  }
  rep.passed = true;
  return rep;
}

JordanReport jordan_probe(const PedestalMatrix& pm, const Spectrum& spectrum,
                          const std::map<EpsilonMask, Rational>& specialization) {
  const std::size_t n = pm.dim();
  std::vector<Rational> values;
  for (const auto& mask : pm.masks()) {
    auto it = specialization.find(mask);
    if (it == specialization.end()) throw Error(ErrorKind::ParseError, "no value given for " + mask.name());
    values.push_back(it->second);
  }
  RationalMatrix m(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(p, q) = values[pm.mask_index(p, q)];

  std::vector<Rational> lambdas;
  for (const auto& form : spectrum.per_monomial) {
    Rational v = 0;
    for (const auto& [mask, c] : form) v += Rational(static_cast<long>(c)) * values[*pm.find_mask(mask)];
    lambdas.push_back(v);
  }

  // Clear denominators: charpoly(D M) must equal prod (x - D lambda).
  BigInt den = 1;
  for (const auto& v : values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  BigIntMatrix scaled(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Rational s = m(p, q) * den;
      scaled(p, q) = s.get_num();
    }
  std::vector<BigInt> roots;
  for (const auto& l : lambdas) {
    const Rational s = l * den;
    roots.push_back(s.get_num());
  }
  JordanReport rep;
  rep.factorization_verified = characteristic_polynomial(scaled) == polynomial_from_roots(roots);

  std::vector<Rational> distinct = lambdas;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  rep.diagonalizable = true;
  for (const auto& l : distinct) {
    JordanEntry e;
    e.value = l;
    e.algebraic = static_cast<int>(std::count(lambdas.begin(), lambdas.end(), l));
    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= l;
    e.geometric = static_cast<int>(n - rank(std::move(shifted)));
    rep.diagonalizable = rep.diagonalizable && e.geometric == e.algebraic;
    rep.entries.push_back(e);
  }
  return rep;
}

std::vector<BaseCaseEntry> n2_base_case() {
  auto mat = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    IntMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
  };
  // U N U^{-1} with U = H/sqrt 2 and U^{-1} = H/sqrt 2 equals H N H / 2.
  const IntMatrix h = mat(1, 1, 1, -1);
  std::vector<BaseCaseEntry> out{
      {"N1", mat(1, 0, 1, 0), {}, to_rational(mat(1, 1, 0, 0)), false},
      {"N2", mat(1, 0, 0, 1), {}, to_rational(mat(1, 0, 0, 1)), false},
      {"N3", mat(0, 1, 0, 1), {}, to_rational(mat(1, -1, 0, 0)), false},
  };
  for (auto& e : out) {
    e.conjugated = to_rational(h * e.tournament_matrix * h);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) e.conjugated(i, j) /= 2;
    e.match = e.conjugated == e.expected;
  }
  return out;
}

}  // namespace intspec
