#pragma once

// Brute-force reference implementations. None of these share code with the
// library: relations are closed by DFS, extensions come from filtering all
// permutations, filters from all maps into {0..k-1}, and the characteristic
// polynomial from the Faddeev-LeVerrier recursion.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

struct Relation {
  int n = 0;
  std::vector<std::vector<char>> lt;  // lt[a][b]: a strictly below b

  bool less(int a, int b) const { return lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
};

inline Relation close(int n, const std::vector<std::pair<int, int>>& pairs) {
  Relation r{n, std::vector<std::vector<char>>(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0))};
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : pairs) adj[static_cast<std::size_t>(a)].push_back(b);
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack(adj[static_cast<std::size_t>(s)].begin(), adj[static_cast<std::size_t>(s)].end());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (r.lt[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]) continue;
      r.lt[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = 1;
      for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
  }
  return r;
}

/// Young diagram cells row-major; (r,c) <= (r',c') iff r<=r' and c<=c'.
inline Relation partition_relation(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(parts.size()); ++r)
    for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(cells.size()); ++a)
    for (int b = 0; b < static_cast<int>(cells.size()); ++b)
      if (a != b && cells[static_cast<std::size_t>(a)].first <= cells[static_cast<std::size_t>(b)].first &&
          cells[static_cast<std::size_t>(a)].second <= cells[static_cast<std::size_t>(b)].second)
        pairs.emplace_back(a, b);
  return close(static_cast<int>(cells.size()), pairs);
}

/// Every permutation (as an order sequence) compatible with the relation, in
/// lexicographic order.
inline std::vector<std::vector<int>> extensions(const Relation& r) {
  std::vector<int> perm(static_cast<std::size_t>(r.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < r.n && ok; ++i)
      for (int j = i + 1; j < r.n && ok; ++j)
        if (r.less(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(i)])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Labeled posets counted by inserting element m into every poset on 0..m-1
/// with a compatible (down-set, up-set) pair.
inline std::uint64_t count_posets(int n) {
  std::function<std::uint64_t(std::vector<std::vector<char>>&, int)> grow = [&](std::vector<std::vector<char>>& lt,
                                                                               int m) -> std::uint64_t {
    if (m == n) return 1;
    std::uint64_t total = 0;
    for (unsigned down = 0; down < (1u << m); ++down) {
      bool closed = true;
      for (int a = 0; a < m && closed; ++a)
        for (int b = 0; b < m && closed; ++b)
          if ((down >> b & 1) && lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && !(down >> a & 1)) closed = false;
      if (!closed) continue;
      for (unsigned up = 0; up < (1u << m); ++up) {
        if (up & down) continue;
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
          for (int b = 0; b < m && ok; ++b) {
            if ((up >> a & 1) && lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && !(up >> b & 1)) ok = false;
            if ((down >> a & 1) && (up >> b & 1) && !lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) ok = false;
          }
        if (!ok) continue;
        auto next = lt;
        for (auto& row : next) row.push_back(0);
        next.emplace_back(static_cast<std::size_t>(m) + 1, 0);
        for (int a = 0; a < m; ++a) {
          if (down >> a & 1) next[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] = 1;
          if (up >> a & 1) next[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)] = 1;
        }
        total += grow(next, m + 1);
      }
    }
    return total;
  };
  std::vector<std::vector<char>> empty;
  return grow(empty, 0);
}

/// eps(k) = 1 iff Q's k-th element comes after its (k+1)-th in P.
inline std::vector<int> epsilon(const std::vector<int>& p_order, const std::vector<int>& q_order) {
  std::vector<int> pos(p_order.size());
  for (std::size_t k = 0; k < p_order.size(); ++k) pos[static_cast<std::size_t>(p_order[k])] = static_cast<int>(k);
  std::vector<int> eps;
  for (std::size_t k = 0; k + 1 < q_order.size(); ++k)
    eps.push_back(pos[static_cast<std::size_t>(q_order[k])] > pos[static_cast<std::size_t>(q_order[k + 1])] ? 1 : 0);
  return eps;
}

/// All surjective order-preserving maps onto {0..k-1}, any k, as floor vectors.
inline std::vector<std::vector<int>> filters(const Relation& r) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= r.n; ++k) {
    std::vector<int> f(static_cast<std::size_t>(r.n), 0);
    while (true) {
      std::vector<char> hit(static_cast<std::size_t>(k), 0);
      for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
      bool ok = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
      for (int a = 0; a < r.n && ok; ++a)
        for (int b = 0; b < r.n && ok; ++b)
          if (r.less(a, b) && f[static_cast<std::size_t>(a)] > f[static_cast<std::size_t>(b)]) ok = false;
      if (ok) out.push_back(f);
      int i = 0;
      while (i < r.n && ++f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i++)] = 0;
      if (i == r.n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Refines `outer` by `inner`: the classes of (outer, inner), numbered in lex order.
inline std::vector<int> product(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<std::pair<int, int>> keys;
  for (std::size_t e = 0; e < outer.size(); ++e) keys.emplace_back(outer[e], inner[e]);
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  for (const auto& k : keys) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  return out;
}

/// #{monotone p : X -> N, sum p = k} for k <= T by exhaustive enumeration.
inline std::vector<std::int64_t> monotone_counts(const Relation& r, int t) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(t) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(r.n), 0);
  std::function<void(int, int)> rec = [&](int e, int sum) {
    if (e == r.n) {
      for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b)
          if (r.less(a, b) && p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) return;
      ++counts[static_cast<std::size_t>(sum)];
      return;
    }
    for (int v = 0; sum + v <= t; ++v) {
      p[static_cast<std::size_t>(e)] = v;
      rec(e + 1, sum + v);
    }
  };
  rec(0, 0);
  return counts;
}

/// Number of partitions of k into parts of size <= n, for k <= T.
inline std::vector<std::int64_t> bounded_partitions(int n, int t) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(t) + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= t; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - part)];
  return c;
}

/// det(xI - A) coefficients, lowest degree first (Faddeev-LeVerrier, exact).
inline std::vector<mpz_class> charpoly(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  using M = std::vector<std::vector<mpq_class>>;
  auto mul = [&](const M& x, const M& y) {
    M z(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  M am(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) am[i][j] = static_cast<long>(a[i][j]);
  std::vector<mpq_class> c(n + 1, 0);
  c[n] = 1;
  M mk(n, std::vector<mpq_class>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    M next = mul(am, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = next;
    const M amk = mul(am, mk);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<mpz_class> out;
  for (const auto& x : c) out.push_back(x.get_num());
  return out;
}

/// Random strict order on n elements: a random DAG under a random labeling.
inline std::vector<std::pair<int, int>> random_order_pairs(std::mt19937_64& rng, int n, double density) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return pairs;
}

}  // namespace oracle
