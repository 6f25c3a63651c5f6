#include "intspec/poset.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <numeric>
#include <unordered_map>

#include "intspec/error.hpp"

namespace intspec {

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& relations,
                         std::vector<std::string>* warnings) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + names[i] + "' appears twice");
  }
  std::vector<std::pair<int, int>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + b + "'");
    if (ia->second == ib->second) {
      std::string msg = "ignoring reflexive pair (" + a + "," + b + ")";
      if (warnings) {
        warnings->push_back(msg);
      } else {
        std::clog << "warning: " << msg << '\n';
      }
      continue;
    }
    rel.emplace_back(ia->second, ib->second);
  }
  Poset p;
  p.n_ = static_cast<int>(names.size());
  p.names_ = std::move(names);
  p.finish_from_relation(rel);
  return p;
}

Poset Poset::from_relation(int n, const std::vector<std::pair<int, int>>& relations) {
  Poset p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.names_.push_back(std::to_string(i + 1));
  for (const auto& [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::UnknownLabel, "element index out of range");
  }
  std::vector<std::pair<int, int>> rel;
  for (const auto& r : relations)
    if (r.first != r.second) rel.push_back(r);
  p.finish_from_relation(rel);
  return p;
}

void Poset::finish_from_relation(const std::vector<std::pair<int, int>>& relations) {
  const auto n = static_cast<std::size_t>(n_);
  closure_.assign(n * n, 0);
  for (const auto& [a, b] : relations) closure_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k * n + j]) closure_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (closure_[i * n + i]) throw Error(ErrorKind::CycleDetected, "relation through '" + names_[i] + "' is cyclic");

  covers_.clear();
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool reducible = false;
      for (int c = 0; c < n_ && !reducible; ++c) reducible = less(a, c) && less(c, b);
      if (!reducible) covers_.emplace_back(a, b);
    }
  }
}

Poset Poset::from_partition(std::span<const int> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyShape, "partition has no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw Error(ErrorKind::NotWeaklyDecreasing, "parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorKind::NotWeaklyDecreasing, "parts must be weakly decreasing");
  }
  Poset p;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      p.cells_.emplace_back(static_cast<int>(r), c);
      p.names_.push_back("(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    }
  }
  p.n_ = static_cast<int>(p.cells_.size());
  p.shape_.assign(parts.begin(), parts.end());
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < p.n_; ++a) {
    for (int b = 0; b < p.n_; ++b) {
      const auto [ra, ca] = p.cells_[static_cast<std::size_t>(a)];
      const auto [rb, cb] = p.cells_[static_cast<std::size_t>(b)];
      if (a != b && ra <= rb && ca <= cb) rel.emplace_back(a, b);
    }
  }
  p.finish_from_relation(rel);
  return p;
}

Poset Poset::from_chain_product(std::span<const int> dims) {
  if (dims.empty()) throw Error(ErrorKind::EmptyDims, "box needs at least one dimension");
  for (int d : dims)
    if (d < 1) throw Error(ErrorKind::EmptyDims, "box dimensions must be positive");

  // Odometer over the box in lexicographic tuple order.
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(dims.size(), 0);
  for (bool more = true; more;) {
    tuples.push_back(t);
    more = false;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++t[k] < dims[k]) {
        more = true;
        break;
      }
      t[k] = 0;
    }
  }
  Poset p;
  p.n_ = static_cast<int>(tuples.size());
  for (const auto& tup : tuples) {
    std::string name = "(";
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(tup[i] + 1);
    }
    p.names_.push_back(name + ")");
  }
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < p.n_; ++a) {
    for (int b = 0; b < p.n_; ++b) {
      if (a == b) continue;
      const auto& ta = tuples[static_cast<std::size_t>(a)];
      const auto& tb = tuples[static_cast<std::size_t>(b)];
      bool le = true;
      for (std::size_t i = 0; i < ta.size(); ++i) le = le && ta[i] <= tb[i];
      if (le) rel.emplace_back(a, b);
    }
  }
  p.finish_from_relation(rel);
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return from_relation(n, rel);
}

Poset Poset::antichain(int n) { return from_relation(n, {}); }

LinearExtension LinearExtension::from_order(std::vector<int> order) {
  LinearExtension e;
  e.rank.assign(order.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int el = order[k];
    if (el < 0 || static_cast<std::size_t>(el) >= order.size() || e.rank[static_cast<std::size_t>(el)] != -1)
      throw Error(ErrorKind::MismatchedPoset, "order sequence is not a permutation");
    e.rank[static_cast<std::size_t>(el)] = static_cast<int>(k);
  }
  e.order = std::move(order);
  return e;
}

LinearExtension LinearExtension::from_ranks(std::span<const int> ranks_one_based) {
  std::vector<int> order(ranks_one_based.size(), -1);
  for (std::size_t e = 0; e < ranks_one_based.size(); ++e) {
    const int r = ranks_one_based[e] - 1;
    if (r < 0 || static_cast<std::size_t>(r) >= order.size() || order[static_cast<std::size_t>(r)] != -1)
      throw Error(ErrorKind::MismatchedPoset, "ranks are not a permutation of 1..n");
    order[static_cast<std::size_t>(r)] = static_cast<int>(e);
  }
  return from_order(std::move(order));
}

bool is_linear_extension(const Poset& poset, const LinearExtension& ext) {
  if (ext.size() != poset.size()) return false;
  for (int a = 0; a < poset.size(); ++a)
    for (int b = 0; b < poset.size(); ++b)
      if (poset.less(a, b) && ext.rank[static_cast<std::size_t>(a)] >= ext.rank[static_cast<std::size_t>(b)])
        return false;
  return true;
}

namespace {

struct ExtensionWalker {
  const Poset& poset;
  std::size_t cap;
  std::vector<int> pending;  // unplaced lower covers per element
  std::vector<char> placed;
  std::vector<int> order;
  std::vector<LinearExtension> out;

  void run() {
    const int n = poset.size();
    if (static_cast<int>(order.size()) == n) {
      if (out.size() >= cap)
        throw Error(ErrorKind::SizeCapExceeded, "more than " + std::to_string(cap) + " linear extensions");
      out.push_back(LinearExtension::from_order(order));
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (placed[static_cast<std::size_t>(e)] || pending[static_cast<std::size_t>(e)] != 0) continue;
      place(e, +1);
      order.push_back(e);
      run();
      order.pop_back();
      place(e, -1);
    }
  }

  void place(int e, int dir) {
    placed[static_cast<std::size_t>(e)] = dir > 0;
    for (const auto& [a, b] : poset.covers())
      if (a == e) pending[static_cast<std::size_t>(b)] -= dir;
  }
};

}  // namespace

std::vector<LinearExtension> linear_extensions(const Poset& poset, std::size_t cap) {
  const auto n = static_cast<std::size_t>(poset.size());
  ExtensionWalker w{poset, cap, std::vector<int>(n, 0), std::vector<char>(n, 0), {}, {}};
  for (const auto& [a, b] : poset.covers()) ++w.pending[static_cast<std::size_t>(b)];
  w.order.reserve(n);
  w.run();
  return std::move(w.out);
}

ExtensionSet::ExtensionSet(const Poset& poset, std::size_t cap) : items_(linear_extensions(poset, cap)) {
  for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(items_[i].order, i);
}

std::size_t ExtensionSet::index_of_order(const std::vector<int>& order) const {
  auto it = index_.find(order);
  if (it == index_.end()) throw Error(ErrorKind::MismatchedPoset, "order is not a linear extension of this poset");
  return it->second;
}

std::size_t ExtensionSet::index_of(const LinearExtension& ext) const { return index_of_order(ext.order); }

std::uint64_t count_posets(int n) {
  if (n < 0) throw Error(ErrorKind::TooLarge, "n must be nonnegative");
  if (n > 5) throw Error(ErrorKind::TooLarge, "brute-force poset count supports n <= 5");
  // Candidate relations are subsets of the n(n-1) off-diagonal pairs; each is
  // held as per-element successor bitmasks.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t count = 0;
  std::vector<unsigned> succ(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(succ.begin(), succ.end(), 0u);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) succ[static_cast<std::size_t>(pairs[i].first)] |= 1u << pairs[i].second;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      const unsigned s = succ[static_cast<std::size_t>(a)];
      for (int b = 0; b < n && ok; ++b) {
        if (!(s >> b & 1)) continue;
        const unsigned sb = succ[static_cast<std::size_t>(b)];
        if (sb >> a & 1) ok = false;        // antisymmetry
        else if ((sb & ~s) != 0) ok = false;  // transitivity
      }
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::vector<int> parse_partition(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::EmptyShape, "empty partition string");
  return parse_int_list(text, ',', "partition");
}

std::vector<int> parse_box(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::EmptyDims, "empty box string");
  return parse_int_list(text, 'x', "box");
}

std::vector<int> hook_lengths(std::span<const int> parts) {
  std::vector<int> hooks;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++below;
      hooks.push_back(parts[r] - c - 1 + below + 1);
    }
  }
  return hooks;
}

}  // namespace intspec
