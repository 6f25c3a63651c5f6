#include "intspec/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "intspec/error.hpp"
#include "intspec/filters.hpp"
#include "intspec/spectra.hpp"

namespace intspec {

namespace {

class Recorder {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }

  VerifyReport report;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

}  // namespace

VerifyReport run_verification(const PedestalMatrix& pm, const VerifyOptions& opt) {
  Recorder rec;
  const Poset& poset = pm.poset();
  const ExtensionSet& exts = pm.extensions();
  const std::size_t dim = pm.dim();
  std::map<EpsilonMask, std::string> labels;
  for (const auto& e : legend(pm)) labels.emplace(e.mask, e.label);

  rec.run("extensions", [&] {
    for (const auto& ext : exts.items()) require(is_linear_extension(poset, ext), "invalid linear extension");
    return std::to_string(dim) + " linear extensions, " + std::to_string(pm.masks().size()) + " realized masks";
  });

  rec.run("volume weights", [&] {
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q)
        require(pedestal(exts[p], exts[q]).volume == volume_weight(pm.entry(p, q)),
                "pedestal volume differs from sum (n-k) eps(k)");
    return std::string("every pedestal volume equals sum (n-k) eps(k)");
  });

  rec.run("row sums", [&] {
    const PedestalPolynomial pp = pedestal_polynomial(pm);
    return "common row sum " + to_string(pp.row_sum) + ", Pi(t) = " + polynomial_string(pp.coeffs);
  });

  rec.run("stochastic rows", [&] {
    if (dim == 0) return std::string("empty");
    const MultiPolynomial h0 = h_polynomial(pm, 0);
    for (std::size_t p = 1; p < dim; ++p) require(h_polynomial(pm, p) == h0, "h_P depends on P");
    return "h_P has " + std::to_string(h0.size()) + " terms for every P";
  });

  for (const auto& mask : pm.masks()) {
    std::string name = "decomposition " + mask.name();
    if (auto it = labels.find(mask); it != labels.end()) name += " (" + it->second + ")";
    rec.run(name, [&] {
      const Decomposition d = b_decomposition(pm, mask);
      std::string detail = "B =";
      for (const auto& t : d.terms) {
        if (t.filters.empty()) continue;
        const bool first = detail.size() == 3;
        detail += (t.sign < 0 ? (first ? " -" : " - ") : (first ? " " : " + ")) + std::to_string(t.filters.size()) + " M_F" +
                  t.composition.to_string();
      }
      return detail;
    });
  }

  const std::vector<Filter> filters = all_filters(poset);
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  rec.run("band identities", [&] {
    const std::size_t f = filters.size();
    for (const auto& a : filters) require(filter_product(a, a) == a, "ff != f");
    const bool all_pairs = f * f <= opt.pair_limit;
    const std::size_t pairs = all_pairs ? f * f : opt.pair_limit;
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto& a = filters[all_pairs ? k / f : pick(f)];
      const auto& b = filters[all_pairs ? k % f : pick(f)];
      const Filter ab = filter_product(a, b);
      require(filter_product(ab, a) == ab, "fgf != fg");
      require(is_filter(poset, ab), "product is not a filter");
    }
    const bool all_triples = f * f * f <= opt.triple_limit;
    const std::size_t triples = all_triples ? f * f * f : opt.triple_limit;
    for (std::size_t k = 0; k < triples; ++k) {
      const auto& a = filters[all_triples ? k / (f * f) : pick(f)];
      const auto& b = filters[all_triples ? k / f % f : pick(f)];
      const auto& c = filters[all_triples ? k % f : pick(f)];
      require(filter_product(filter_product(a, b), c) == filter_product(a, filter_product(b, c)), "product not associative");
    }
    return std::to_string(f) + " filters, " + (all_pairs ? "all " : "sampled ") + std::to_string(pairs) + " pairs, " +
           (all_triples ? "all " : "sampled ") + std::to_string(triples) + " triples";
  });

  rec.run("action", [&] {
    const std::size_t f = filters.size();
    const std::size_t samples = std::min<std::size_t>(f * f, 20'000);
    for (std::size_t k = 0; k < samples; ++k) {
      const auto& a = filters[pick(f)];
      const auto& b = filters[pick(f)];
      const auto& p = exts[pick(dim)];
      require(apply_filter(a, apply_filter(b, p)) == apply_filter(filter_product(a, b), p), "F(GP) != (FG)P");
    }
    return std::to_string(samples) + " sampled (F, G, P)";
  });

  FlagBasis basis;
  rec.run("flag basis", [&] {
    basis = build_flag_basis(poset, exts);
    int top = 0;
    for (int d : basis.degrees) top = std::max(top, d);
    return std::to_string(basis.dim()) + " monomials, top degree " + std::to_string(top);
  });
  const bool have_basis = basis.dim() == dim;

  rec.run("triangularity", [&] {
    require(have_basis, "no flag basis");
    for (const auto& f : filters) {
      const RationalMatrix t = triangularize(filter_matrix(exts, f), basis);
      const auto shortcut = filter_diagonal(f, basis);
      for (std::size_t s = 0; s < dim; ++s) {
        require(t(s, s) == 0 || t(s, s) == 1, "diagonal entry outside {0,1}");
        require(t(s, s) == shortcut[s], "diagonal differs from the separation shortcut");
      }
    }
    return "all " + std::to_string(filters.size()) + " filter operators upper triangular with 0/1 diagonal";
  });

  rec.run("commutators", [&] {
    require(have_basis, "no flag basis");
    std::vector<IntMatrix> bs;
    for (const auto& mask : pm.masks()) bs.push_back(b_matrix(pm, mask));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        const RationalMatrix c = conjugated_commutator(bs[i], bs[j], basis);
        require(is_strictly_upper_triangular(c), "commutator of " + pm.masks()[i].name() + " and " +
                                                     pm.masks()[j].name() + " has a nonzero diagonal");
        ++pairs;
      }
    return std::to_string(pairs) + " pairs strictly upper triangular";
  });

  Spectrum spectrum;
  bool have_spectrum = false;
  rec.run("eigenvalues", [&] {
    require(have_basis, "no flag basis");
    spectrum = eigenvalues(pm, basis);
    have_spectrum = true;
    int total = 0;
    LinearForm trace;
    for (const auto& f : spectrum.forms) {
      total += f.multiplicity;
      for (const auto& [mask, c] : f.coeffs) add_term(trace, mask, c * f.multiplicity);
    }
    require(total == static_cast<int>(dim), "multiplicities do not sum to |Tot|");
    LinearForm expected;
    if (dim > 0) add_term(expected, EpsilonMask::zeros(pm.n()), static_cast<std::int64_t>(dim));
    require(trace == expected, "sum of eigenvalues differs from the trace");
    if (dim > 0) require(spectrum.per_monomial[0] == pedestal_polynomial(pm).row_sum, "S = {} form differs from the row sum");
    return std::to_string(spectrum.forms.size()) + " distinct forms, graded and direct diagonals agree";
  });

  rec.run("spectrum oracle", [&] {
    require(have_spectrum, "no spectrum");
    const SpectrumReport r = verify_spectrum(pm, spectrum, opt.seed, opt.draws);
    return std::to_string(r.draws.size()) + " draws, seed " + std::to_string(opt.seed);
  });

  rec.run("generating function", [&] {
    const IdentityReport r = pedestal_identity_check(pm, opt.truncation);
    std::string detail = "coefficientwise to t^" + std::to_string(opt.truncation);
    if (r.has_macmahon) {
      require(r.macmahon_matches, "hook product differs from the monotone series");
      detail += ", hook product matches";
    }
    return detail;
  });

  rec.run("bijection", [&] {
    const int t = std::min(opt.truncation, opt.bijection_truncation);
    const BijectionReport r = bijection_check(pm, 0, t);
    return std::to_string(r.images) + " monotone functions of volume <= " + std::to_string(t);
  });

  rec.report.passed = std::all_of(rec.report.checks.begin(), rec.report.checks.end(), [](const CheckResult& c) { return c.passed; });
  return std::move(rec.report);
}

}  // namespace intspec
