#include "intspec/genfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "intspec/error.hpp"

namespace intspec {

TruncatedSeries::TruncatedSeries(int truncation, std::span<const std::int64_t> poly) : TruncatedSeries(truncation) {
  for (std::size_t k = 0; k < poly.size() && k < coeffs_.size(); ++k) coeffs_[k] = static_cast<long>(poly[k]);
}

TruncatedSeries TruncatedSeries::one(int truncation) {
  TruncatedSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  const int t = std::min(truncation(), other.truncation());
  TruncatedSeries out(t);
  for (int i = 0; i <= t; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= t; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] += coeffs_[static_cast<std::size_t>(i)] * other.coeffs_[static_cast<std::size_t>(j)];
  }
  return out;
}

TruncatedSeries& TruncatedSeries::divide_by_one_minus_power(int k) {
  for (std::size_t i = static_cast<std::size_t>(k); i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - static_cast<std::size_t>(k)];
  return *this;
}

std::string TruncatedSeries::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

std::string polynomial_string(std::span<const std::int64_t> coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0 || (c != 1 && c != -1)) term = std::to_string(c < 0 ? -c : c);
    if (k >= 1) term += (term.empty() ? "" : " ") + std::string("t") + (k > 1 ? "^" + std::to_string(k) : "");
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

void check_truncation(int t) {
  if (t < 0 || t > kMaxTruncation)
    throw Error(ErrorKind::TruncationTooLarge, "truncation must lie in [0, " + std::to_string(kMaxTruncation) + "]");
}

constexpr std::size_t kMemoCap = std::size_t{1} << 18;

class MonotoneCounter {
 public:
  MonotoneCounter(const Poset& poset, int truncation) : poset_(poset), t_(truncation) {
    const int n = poset.size();
    // First extension in canonical order (smallest available element first).
    std::vector<int> pending(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : poset.covers()) ++pending[static_cast<std::size_t>(b)];
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      int e = 0;
      while (done[static_cast<std::size_t>(e)] || pending[static_cast<std::size_t>(e)]) ++e;
      done[static_cast<std::size_t>(e)] = 1;
      order_.push_back(e);
      for (const auto& [a, b] : poset.covers())
        if (a == e) --pending[static_cast<std::size_t>(b)];
    }
    active_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      for (int k = 0; k < i; ++k) {
        const int a = order_[static_cast<std::size_t>(k)];
        bool needed = false;
        for (int j = i; j < n && !needed; ++j) needed = poset.less(a, order_[static_cast<std::size_t>(j)]);
        if (needed) active_[static_cast<std::size_t>(i)].push_back(a);
      }
    }
    successors_.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
      for (int b = 0; b < n; ++b)
        if (poset.less(e, b)) ++successors_[static_cast<std::size_t>(e)];
    values_.assign(static_cast<std::size_t>(n), 0);
    memo_.resize(static_cast<std::size_t>(n) + 1);
  }

  TruncatedSeries run() { return solve(0); }

 private:
  TruncatedSeries solve(int i) {
    const int n = poset_.size();
    if (i == n) return TruncatedSeries::one(t_);
    std::vector<int> key;
    for (int a : active_[static_cast<std::size_t>(i)]) key.push_back(values_[static_cast<std::size_t>(a)]);
    auto& table = memo_[static_cast<std::size_t>(i)];
    if (auto it = table.find(key); it != table.end()) return it->second;

    const int e = order_[static_cast<std::size_t>(i)];
    int lo = 0;
    for (int a = 0; a < n; ++a)
      if (poset_.less(a, e)) lo = std::max(lo, values_[static_cast<std::size_t>(a)]);
    const int weight = 1 + successors_[static_cast<std::size_t>(e)];

    TruncatedSeries out(t_);
    for (int x = lo; x * weight <= t_; ++x) {
      values_[static_cast<std::size_t>(e)] = x;
      const TruncatedSeries rest = solve(i + 1);
      for (int v = 0; v + x <= t_; ++v) out[static_cast<std::size_t>(v + x)] += rest[static_cast<std::size_t>(v)];
    }
    values_[static_cast<std::size_t>(e)] = 0;
    if (stored_ < kMemoCap) {
      table.emplace(std::move(key), out);
      ++stored_;
    }
    return out;
  }

  const Poset& poset_;
  int t_;
  std::vector<int> order_;
  std::vector<std::vector<int>> active_;
  std::vector<int> successors_;
  std::vector<int> values_;
  std::vector<std::map<std::vector<int>, TruncatedSeries>> memo_;
  std::size_t stored_ = 0;
};

}  // namespace

TruncatedSeries chain_series(int n, int truncation) {
  check_truncation(truncation);
  TruncatedSeries s = TruncatedSeries::one(truncation);
  for (int l = 1; l <= n; ++l) s.divide_by_one_minus_power(l);
  return s;
}

TruncatedSeries gen_monotone(const Poset& poset, int truncation) {
  check_truncation(truncation);
  return MonotoneCounter(poset, truncation).run();
}

TruncatedSeries macmahon(const Poset& poset, int truncation) {
  if (!poset.is_partition_shape()) throw Error(ErrorKind::NotAPartitionShape, "hook lengths need a partition shape");
  check_truncation(truncation);
  TruncatedSeries s = TruncatedSeries::one(truncation);
  for (int h : hook_lengths(poset.shape())) s.divide_by_one_minus_power(h);
  return s;
}

std::string hook_product_string(const Poset& poset) {
  if (!poset.is_partition_shape()) throw Error(ErrorKind::NotAPartitionShape, "hook lengths need a partition shape");
  auto hooks = hook_lengths(poset.shape());
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  std::string s = "1/(";
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (i) s += " ";
    s += hooks[i] == 1 ? "(1-t)" : "(1-t^" + std::to_string(hooks[i]) + ")";
  }
  return s + ")";
}

IdentityReport pedestal_identity_check(const PedestalMatrix& pm, int truncation) {
  check_truncation(truncation);
  IdentityReport rep;
  rep.truncation = truncation;
  const PedestalPolynomial pp = pedestal_polynomial(pm);
  rep.pedestal_poly = pp.coeffs;
  rep.monotone = gen_monotone(pm.poset(), truncation);
  rep.product = TruncatedSeries(truncation, pp.coeffs) * chain_series(pm.n(), truncation);
  rep.holds = rep.monotone == rep.product;

  auto substitute = [&](auto weight) {
    std::vector<std::int64_t> poly;
    for (const auto& [mask, c] : pp.row_sum) {
      const auto w = static_cast<std::size_t>(weight(mask));
      if (poly.size() <= w) poly.resize(w + 1, 0);
      poly[w] += c;
    }
    return poly;
  };
  rep.literal_substitution = substitute(index_weight);
  rep.reversed_substitution = substitute(volume_weight);
  rep.literal_matches = rep.literal_substitution == rep.pedestal_poly;
  rep.reversed_matches = rep.reversed_substitution == rep.pedestal_poly;

  if (pm.poset().is_partition_shape()) {
    rep.has_macmahon = true;
    rep.macmahon_matches = macmahon(pm.poset(), truncation) == rep.monotone;
  }
  if (!rep.holds)
    throw Error(ErrorKind::IdentityViolated, "monotone-function series differs from Pi_X(t) prod 1/(1-t^l)");
  return rep;
}

std::vector<int> monotone_from_pedestal(const LinearExtension& q, const Pedestal& ped, std::span<const int> pi) {
  if (pi.size() != q.order.size() || ped.values.size() != q.order.size())
    throw Error(ErrorKind::MismatchedPoset, "pedestal, partition and order must have length n");
  std::vector<int> p(q.order.size());
  for (std::size_t k = 0; k < q.order.size(); ++k) {
    const auto e = static_cast<std::size_t>(q.order[k]);
    p[e] = ped.values[e] + pi[k];
  }
  return p;
}

namespace {

// Non-decreasing sequences of length n with sum <= budget.
void for_each_partition(int n, int budget, std::vector<int>& pi, int at, int sum,
                        const std::function<void(const std::vector<int>&, int)>& visit) {
  if (at == n) {
    visit(pi, sum);
    return;
  }
  const int lo = at == 0 ? 0 : pi[static_cast<std::size_t>(at - 1)];
  for (int v = lo; sum + v * (n - at) <= budget; ++v) {
    pi[static_cast<std::size_t>(at)] = v;
    for_each_partition(n, budget, pi, at + 1, sum + v, visit);
  }
}

}  // namespace

BijectionReport bijection_check(const PedestalMatrix& pm, std::size_t base_index, int truncation) {
  check_truncation(truncation);
  if (base_index >= pm.dim()) throw Error(ErrorKind::MismatchedPoset, "base extension index out of range");
  const Poset& poset = pm.poset();
  const int n = poset.size();
  const LinearExtension& base = pm.extensions()[base_index];

  BijectionReport rep;
  rep.base_index = base_index;
  rep.truncation = truncation;
  rep.image_counts.assign(static_cast<std::size_t>(truncation) + 1, 0);
  std::set<std::vector<int>> seen;
  std::vector<int> pi(static_cast<std::size_t>(n), 0);

  for (const auto& q : pm.extensions().items()) {
    const Pedestal ped = pedestal(base, q);
    if (ped.volume > truncation) continue;
    for_each_partition(n, truncation - ped.volume, pi, 0, 0, [&](const std::vector<int>& part, int part_sum) {
      const auto p = monotone_from_pedestal(q, ped, part);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (poset.less(a, b) && p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)])
            throw Error(ErrorKind::BijectionFailure, "image is not monotone on the poset");
      int vol = 0;
      for (int x : p) vol += x;
      if (vol != ped.volume + part_sum) throw Error(ErrorKind::BijectionFailure, "volume not preserved");
      if (!seen.insert(p).second) throw Error(ErrorKind::BijectionFailure, "two inputs share an image");
      ++rep.image_counts[static_cast<std::size_t>(vol)];
    });
  }
  rep.images = seen.size();
  const TruncatedSeries g = gen_monotone(poset, truncation);
  for (int k = 0; k <= truncation; ++k)
    if (g[static_cast<std::size_t>(k)] != static_cast<long>(rep.image_counts[static_cast<std::size_t>(k)]))
      throw Error(ErrorKind::BijectionFailure, "image count differs from g_" + std::to_string(k));
  rep.passed = true;
  return rep;
}

}  // namespace intspec
