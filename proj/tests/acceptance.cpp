// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "forms.hpp"
#include "golden.hpp"

#include "intspec/error.hpp"
#include "intspec/filters.hpp"
#include "intspec/genfun.hpp"
#include "intspec/pedestal.hpp"
#include "intspec/poset.hpp"
#include "intspec/spectra.hpp"

using namespace intspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out.detail = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit) {
    out.ok = false;
    out.detail += "; over the time limit";
  }
  if (!out.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", secs, limit);
  std::cout << (out.ok ? "PASS " : "FAIL ") << id << " " << title << " [" << timing << "]: " << out.detail << std::endl;
}

Poset par31() { return Poset::from_covers({"u", "v", "w"}, {{"u", "v"}}); }
Poset shape(std::vector<int> parts) { return Poset::from_partition(parts); }

// Five named elements; each pair is related with probability 0.35 along a
// random ordering, passed in as cover input.
Poset random_covers_poset(std::mt19937_64& rng) {
  std::vector<std::string> names = {"p", "q", "r", "s", "t"};
  std::vector<int> perm = {0, 1, 2, 3, 4};
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(0.35);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (edge(rng)) covers.emplace_back(names[static_cast<std::size_t>(perm[i])], names[static_cast<std::size_t>(perm[j])]);
  std::vector<std::string> warnings;
  return Poset::from_covers(names, covers, &warnings);
}

struct Named {
  std::string name;
  Poset poset;
};

std::vector<Named> acceptance_posets() {
  std::vector<Named> out = {{"par31", par31()},
                            {"(3,2)", shape({3, 2})},
                            {"(3,1,1)", shape({3, 1, 1})},
                            {"(3,2,1)", shape({3, 2, 1})},
                            {"box 2x2x2", Poset::from_chain_product(std::vector<int>{2, 2, 2})}};
  std::mt19937_64 rng(20240);
  for (int i = 0; i < 20; ++i) out.push_back({"random5 #" + std::to_string(i + 1), random_covers_poset(rng)});
  return out;
}

std::string multiplicity_list(const Spectrum& sp) {
  std::vector<int> m;
  for (const auto& f : sp.forms) m.push_back(f.multiplicity);
  std::sort(m.rbegin(), m.rend());
  std::string s;
  for (int x : m) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

LinearForm weighted_sum(const forms::Multiset& m) {
  LinearForm out;
  for (const auto& [form, mult] : m)
    for (const auto& [mask, c] : form) add_term(out, mask, c * mult);
  return out;
}

IntMatrix reorder(const IntMatrix& m, const ExtensionSet& exts, const std::vector<std::vector<int>>& tableaux) {
  std::vector<std::size_t> idx;
  for (const auto& t : tableaux) idx.push_back(exts.index_of(LinearExtension::from_ranks(t)));
  IntMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

}  // namespace

int main() {
  const std::vector<Named> posets = acceptance_posets();

  criterion(1, "three-element poset eigenforms", 1, [] {
    const Spectrum sp = eigenvalues(PedestalMatrix(par31()));
    std::set<std::string> got;
    for (const auto& f : sp.forms) {
      expect(f.multiplicity == 1, "multiplicity " + std::to_string(f.multiplicity));
      got.insert(to_string(f.coeffs));
    }
    expect(got == std::set<std::string>{"a_00 - a_01", "a_00 - a_10", "a_00 + a_01 + a_10"}, "forms differ");
    return std::string("a_00 - a_01, a_00 - a_10, a_00 + a_01 + a_10, each simple");
  });

  criterion(2, "shape (3,2) eigenforms", 1, [] {
    const PedestalMatrix pm(shape({3, 2}));
    expect(pm.dim() == 5, std::to_string(pm.dim()) + " extensions");
    const auto leg = legend(pm);
    const std::vector<std::string> masks = {"0000", "0001", "0010", "0100", "0101"};
    expect(leg.size() == masks.size(), "legend size");
    for (std::size_t i = 0; i < masks.size(); ++i) expect(leg[i].mask.bitstring() == masks[i], "legend order");
    expect(forms::of(eigenvalues(pm)) == forms::of(golden::kEigen32, leg), "forms differ from the golden list");
    return std::string("5 extensions, 5 simple forms equal the golden list");
  });

  criterion(3, "shape (3,1,1) eigenforms", 1, [] {
    const PedestalMatrix pm(shape({3, 1, 1}));
    expect(pm.dim() == 6, std::to_string(pm.dim()) + " extensions");
    const auto leg = legend(pm);
    const auto got = forms::of(eigenvalues(pm));
    expect(got == forms::of(golden::kEigen311, leg), "forms differ from the golden list");
    bool doubled = false;
    for (const auto& [form, mult] : got) doubled |= form == forms::parse("a1 - a3", leg) && mult == 2;
    expect(doubled, "a1 - a3 is not double");
    return std::string("6 extensions, forms equal the golden list, a1 - a3 with multiplicity 2");
  });

  criterion(4, "shape (3,2,1) eigenforms", 5, [] {
    const PedestalMatrix pm(shape({3, 2, 1}));
    expect(pm.dim() == 16, std::to_string(pm.dim()) + " extensions");
    const auto leg = legend(pm);
    const Spectrum sp = eigenvalues(pm);
    expect(sp.forms.size() == 9, std::to_string(sp.forms.size()) + " forms");
    expect(multiplicity_list(sp) == "3,2,2,2,2,2,1,1,1", "multiplicities " + multiplicity_list(sp));
    const auto got = forms::of(sp);
    auto corrected = golden::kEigen321Listed;
    corrected.back().first = golden::kMain321Corrected;
    expect(got == forms::of(corrected, leg), "forms differ from the golden list beyond the main form");
    // The golden main form omits a4; with it the eigenvalues sum to the trace 16 a1.
    LinearForm trace;
    add_term(trace, leg[0].mask, 16);
    expect(weighted_sum(got) == trace, "computed forms do not sum to the trace");
    const bool listed_equal = got == forms::of(golden::kEigen321Listed, leg);
    const bool listed_trace = weighted_sum(forms::of(golden::kEigen321Listed, leg)) == trace;
    std::string detail = "16 extensions, nine forms, multiplicities 3,2,2,2,2,2,1,1,1; eight forms as listed";
    if (!listed_equal && !listed_trace)
      detail += ", main form is " + std::string(golden::kMain321Corrected) +
                " (the golden list lacks + a4, which breaks the trace)";
    return detail;
  });

  criterion(5, "inclusion-exclusion over filters", 30, [&] {
    std::size_t masks = 0;
    for (const auto& [name, p] : posets) {
      const PedestalMatrix pm(p);
      for (const auto& m : pm.masks()) {
        const Decomposition d = b_decomposition(pm, m);
        expect(d.verified, name + ": " + m.name() + " not reproduced");
        ++masks;
      }
    }
    const PedestalMatrix pm(shape({3, 1, 1}));
    const ExtensionSet& exts = pm.extensions();
    const EpsilonMask a3 = EpsilonMask::parse("0010");
    expect(legend(pm)[2].mask == a3, "a3 is not 0010");
    IntMatrix sum = filter_matrix(exts, Filter::from_floors({0, 0, 1, 0, 1}));
    sum += filter_matrix(exts, Filter::from_floors({0, 0, 0, 1, 1}));
    sum += filter_matrix(exts, Filter::from_floors({0, 1, 1, 0, 0}));
    sum -= IntMatrix::identity(6);
    expect(sum == b_matrix(pm, a3), "B_a3 != M_F1 + M_F2 + M_F3 - I");
    IntMatrix shown(6, 6);
    const int rows[6][6] = {{0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 1},
                            {1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 0}};
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) shown(i, j) = rows[i][j];
    expect(reorder(sum, exts, golden::kTableaux311) == shown, "B_a3 differs from the golden matrix");
    return std::to_string(posets.size()) + " posets, " + std::to_string(masks) +
           " realized masks exact; B_a3 = M_F1 + M_F2 + M_F3 - I matches the golden matrix";
  });

  criterion(6, "spectrum oracle", 30, [&] {
    for (const auto& [name, p] : posets) {
      const PedestalMatrix pm(p);
      const Spectrum sp = eigenvalues(pm);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SpectrumReport r = verify_spectrum(pm, sp, seed, 5);
        expect(r.passed && r.draws.size() == 5, name + ", seed " + std::to_string(seed));
      }
    }
    return std::to_string(posets.size()) + " posets x seeds 0-4 x 5 draws, charpoly equals the product of forms";
  });

  criterion(7, "triangularity and commutators", 60, [&] {
    std::size_t ops = 0, pairs = 0;
    for (const auto& [name, p] : posets) {
      const PedestalMatrix pm(p);
      const FlagBasis fb = build_flag_basis(p, pm.extensions());
      expect(fb.dim() == pm.dim(), name + ": no flag basis");
      for (const auto& f : all_filters(p)) {
        const RationalMatrix t = triangularize(filter_matrix(pm.extensions(), f), fb);
        for (std::size_t s = 0; s < fb.dim(); ++s) expect(t(s, s) == 0 || t(s, s) == 1, name + ": diagonal outside {0,1}");
        ++ops;
      }
      std::vector<IntMatrix> bs;
      for (const auto& m : pm.masks()) bs.push_back(b_matrix(pm, m));
      for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
          expect(is_strictly_upper_triangular(conjugated_commutator(bs[i], bs[j], fb)), name + ": commutator diagonal");
          ++pairs;
        }
    }
    return std::to_string(ops) + " filter operators triangular, " + std::to_string(pairs) + " commutators with zero diagonal";
  });

  criterion(8, "Jordan probe", 1, [] {
    const PedestalMatrix pm(par31());
    const Spectrum sp = eigenvalues(pm);
    const JordanReport r = jordan_probe(pm, sp,
                                        {{EpsilonMask::parse("00"), Rational(5)},
                                         {EpsilonMask::parse("01"), Rational(1)},
                                         {EpsilonMask::parse("10"), Rational(-2)}});
    expect(r.factorization_verified, "charpoly does not factor as predicted");
    expect(r.entries.size() == 2, "expected two distinct eigenvalues");
    // a00 - a01 = 4, a00 + 2 a01 = 7
    expect(r.entries[0].value == 4 && r.entries[0].algebraic == 2 && r.entries[0].geometric == 1, "eigenvalue 4");
    expect(r.entries[1].value == 7 && r.entries[1].algebraic == 1 && r.entries[1].geometric == 1, "eigenvalue 7");
    expect(!r.diagonalizable, "diagonalizable");
    return std::string("a_10 = -2 a_01 at (5, 1): 4 algebraic 2 geometric 1, 7 simple");
  });

  criterion(9, "generating functions", 60, [&] {
    for (const auto& [name, p] : posets) {
      const IdentityReport r = pedestal_identity_check(PedestalMatrix(p), 20);
      expect(r.holds, name + ": identity fails");
    }
    for (const auto& parts : std::vector<std::vector<int>>{{3, 2}, {3, 1, 1}, {3, 2, 1}}) {
      const Poset p = shape(parts);
      expect(macmahon(p, 20) == gen_monotone(p, 20), "hook product differs");
    }
    const auto P = LinearExtension::from_ranks(std::vector<int>{1, 2, 3, 4, 5, 6});
    const auto Q = LinearExtension::from_ranks(std::vector<int>{1, 2, 5, 3, 4, 6});
    const Poset box = shape({3, 3});
    expect(is_linear_extension(box, P) && is_linear_extension(box, Q), "tableaux on the 2x3 diagram");
    expect(pedestal(P, Q).values == std::vector<int>{0, 0, 1, 0, 0, 1}, "pedestal on the 2x3 diagram");
    const BijectionReport b = bijection_check(PedestalMatrix(shape({3, 2})), 0, 12);
    expect(b.passed, "bijection");
    return std::to_string(posets.size()) + " posets to t^20, hook products match, q_PQ = [0 0 1 / 0 0 1], bijection " +
           std::to_string(b.images) + " images to t^12";
  });

  criterion(10, "poset counts and band identities", 60, [] {
    const BigInt c4 = count_posets(4);
    expect(c4 == 219, "count_posets(4) = " + c4.get_str());
    std::vector<Poset> small = {Poset::chain(4), Poset::antichain(4), shape({2, 2}), shape({2, 1, 1}), shape({3, 1}), par31()};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 8; ++i) {
      const int n = 2 + i % 3;
      std::bernoulli_distribution edge(0.4);
      std::vector<std::pair<int, int>> rel;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (edge(rng)) rel.emplace_back(a, b);
      small.push_back(Poset::from_relation(n, rel));
    }
    std::size_t checked = 0;
    for (const auto& p : small) {
      const auto fs = all_filters(p);
      for (const auto& f : fs) {
        expect(filter_product(f, f) == f, "ff != f");
        for (const auto& g : fs) {
          const Filter fg = filter_product(f, g);
          expect(filter_product(fg, f) == fg, "fgf != fg");
          for (const auto& h : fs) expect(filter_product(fg, h) == filter_product(f, filter_product(g, h)), "not associative");
          ++checked;
        }
      }
    }
    return "219 posets on 4 points; " + std::to_string(small.size()) + " posets, " + std::to_string(checked) +
           " filter pairs satisfy ff = f, fgf = fg, associativity";
  });

  criterion(11, "two-element base case", 1, [] {
    const auto cases = n2_base_case();
    expect(cases.size() == 3, "expected three operators");
    std::string names;
    for (const auto& c : cases) {
      expect(c.match, c.name + " differs");
      names += (names.empty() ? "" : ", ") + c.name;
    }
    return "conjugated " + names + " match";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
