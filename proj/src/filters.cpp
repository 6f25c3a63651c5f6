#include "intspec/filters.hpp"

#include <algorithm>
#include <utility>

#include "intspec/error.hpp"

namespace intspec {

Filter Filter::from_floors(std::vector<int> floors) {
  int k = 0;
  for (int f : floors) {
    if (f < 0) throw Error(ErrorKind::ParseError, "negative floor index");
    k = std::max(k, f + 1);
  }
  std::vector<char> hit(static_cast<std::size_t>(k), 0);
  for (int f : floors) hit[static_cast<std::size_t>(f)] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw Error(ErrorKind::ParseError, "floor assignment is not surjective");
  return Filter{std::move(floors), k};
}

Filter Filter::from_extension(const LinearExtension& ext) { return Filter{ext.rank, ext.size()}; }

LinearExtension Filter::to_extension() const {
  if (!is_chamber()) throw Error(ErrorKind::MismatchedPoset, "filter of rank < n is not a linear order");
  std::vector<int> order(floors.size());
  for (std::size_t e = 0; e < floors.size(); ++e) order[static_cast<std::size_t>(floors[e])] = static_cast<int>(e);
  return LinearExtension::from_order(std::move(order));
}

std::vector<std::vector<int>> Filter::floor_sets() const {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(rank));
  for (std::size_t e = 0; e < floors.size(); ++e) sets[static_cast<std::size_t>(floors[e])].push_back(static_cast<int>(e));
  return sets;
}

bool is_filter(const Poset& poset, const Filter& f) {
  if (f.size() != poset.size()) return false;
  for (int a = 0; a < poset.size(); ++a)
    for (int b = 0; b < poset.size(); ++b)
      if (poset.less(a, b) && f.floors[static_cast<std::size_t>(a)] > f.floors[static_cast<std::size_t>(b)]) return false;
  return true;
}

int Composition::total() const noexcept {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Composition composition_of(const EpsilonMask& mask) {
  Composition c;
  int run = 1;
  for (auto b : mask.bits) {
    if (b) {
      c.parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  c.parts.push_back(run);
  return c;
}

namespace {

struct FloorSearch {
  const Poset& poset;
  const std::vector<int>& parts;
  std::vector<int> remaining;
  std::vector<int> floors;
  std::vector<Filter> out;

  void run(int e) {
    const int n = poset.size();
    if (e == n) {
      out.push_back(Filter{floors, static_cast<int>(parts.size())});
      return;
    }
    for (int f = 0; f < static_cast<int>(parts.size()); ++f) {
      if (remaining[static_cast<std::size_t>(f)] == 0 || !fits(e, f)) continue;
      --remaining[static_cast<std::size_t>(f)];
      floors[static_cast<std::size_t>(e)] = f;
      run(e + 1);
      ++remaining[static_cast<std::size_t>(f)];
    }
  }

  bool fits(int e, int f) const {
    for (int a = 0; a < e; ++a) {
      const int fa = floors[static_cast<std::size_t>(a)];
      if (poset.less(a, e) && fa > f) return false;
      if (poset.less(e, a) && f > fa) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Filter> enumerate_filters(const Poset& poset, const Composition& comp) {
  if (comp.total() != poset.size()) throw Error(ErrorKind::MismatchedPoset, "composition does not sum to n");
  FloorSearch s{poset, comp.parts, comp.parts, std::vector<int>(static_cast<std::size_t>(poset.size()), 0), {}};
  s.run(0);
  return std::move(s.out);
}

std::vector<Filter> all_filters(const Poset& poset) {
  const int n = poset.size();
  std::vector<Filter> out;
  if (n == 0) return out;
  // Compositions of n correspond to subsets of the n-1 cut points.
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    Composition c;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (cuts >> k & 1) {
        c.parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.parts.push_back(run);
    auto fs = enumerate_filters(poset, c);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Filter filter_product(const Filter& outer, const Filter& inner) {
  if (outer.size() != inner.size()) throw Error(ErrorKind::MismatchedPoset, "filters on different posets");
  // Classes are labelled by the key (outer, inner) in lex order.
  const auto width = static_cast<std::size_t>(inner.rank);
  std::vector<int> label(static_cast<std::size_t>(outer.rank) * width, -1);
  for (std::size_t e = 0; e < outer.floors.size(); ++e)
    label[static_cast<std::size_t>(outer.floors[e]) * width + static_cast<std::size_t>(inner.floors[e])] = 0;
  int next = 0;
  for (auto& l : label)
    if (l == 0) l = next++;
  Filter f;
  f.rank = next;
  f.floors.reserve(outer.floors.size());
  for (std::size_t e = 0; e < outer.floors.size(); ++e)
    f.floors.push_back(label[static_cast<std::size_t>(outer.floors[e]) * width + static_cast<std::size_t>(inner.floors[e])]);
  return f;
}

LinearExtension apply_filter(const Filter& f, const LinearExtension& p) {
  return filter_product(f, Filter::from_extension(p)).to_extension();
}

IntMatrix filter_matrix(const ExtensionSet& exts, const Filter& f) {
  IntMatrix m(exts.size(), exts.size());
  for (std::size_t p = 0; p < exts.size(); ++p) m(p, exts.index_of(apply_filter(f, exts[p]))) = 1;
  return m;
}

std::string format_filter(const Poset& poset, const Filter& f) {
  std::string s;
  const auto sets = f.floor_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += " | ";
    s += "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      if (j) s += ",";
      s += poset.names()[static_cast<std::size_t>(sets[i][j])];
    }
    s += "}";
  }
  return s;
}

std::vector<MergerTerm> merger_terms(const Poset& poset, const Composition& comp) {
  const std::size_t boundaries = comp.parts.empty() ? 0 : comp.parts.size() - 1;
  std::vector<MergerTerm> terms;
  for (unsigned merged = 0; merged < (1u << boundaries); ++merged) {
    MergerTerm t;
    t.composition.parts.push_back(comp.parts[0]);
    for (std::size_t b = 0; b < boundaries; ++b) {
      if (merged >> b & 1) {
        t.composition.parts.back() += comp.parts[b + 1];
        ++t.mergers;
      } else {
        t.composition.parts.push_back(comp.parts[b + 1]);
      }
    }
    t.sign = (t.mergers % 2) ? -1 : 1;
    terms.push_back(std::move(t));
  }
  std::stable_sort(terms.begin(), terms.end(), [](const MergerTerm& a, const MergerTerm& b) { return a.mergers < b.mergers; });
  for (auto& t : terms) t.filters = enumerate_filters(poset, t.composition);
  return terms;
}

IntMatrix signed_filter_sum(const ExtensionSet& exts, const std::vector<MergerTerm>& terms) {
  IntMatrix sum(exts.size(), exts.size());
  for (const auto& t : terms) {
    for (const auto& f : t.filters) {
      for (std::size_t p = 0; p < exts.size(); ++p) sum(p, exts.index_of(apply_filter(f, exts[p]))) += t.sign;
    }
  }
  return sum;
}

Decomposition b_decomposition(const PedestalMatrix& pm, const EpsilonMask& mask) {
  if (mask.length() != std::max(pm.n() - 1, 0)) throw Error(ErrorKind::MismatchedPoset, "mask length must be n-1");
  Decomposition d;
  d.mask = mask;
  d.realized = pm.find_mask(mask).has_value();
  d.terms = merger_terms(pm.poset(), composition_of(mask));
  if (!d.realized) return d;
  if (!(signed_filter_sum(pm.extensions(), d.terms) == b_matrix(pm, mask)))
    throw Error(ErrorKind::DecompositionMismatch, "signed filter sum differs from B for " + mask.name());
  d.verified = true;
  return d;
}

}  // namespace intspec
