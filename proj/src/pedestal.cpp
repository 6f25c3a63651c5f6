#include "intspec/pedestal.hpp"

#include <algorithm>

#include "intspec/error.hpp"

namespace intspec {

EpsilonMask EpsilonMask::parse(const std::string& bitstring) {
  EpsilonMask m;
  for (char c : bitstring) {
    if (c != '0' && c != '1') throw Error(ErrorKind::ParseError, "mask must be a bit string: '" + bitstring + "'");
    m.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return m;
}

int EpsilonMask::weight() const noexcept {
  int w = 0;
  for (auto b : bits) w += b;
  return w;
}

std::string EpsilonMask::bitstring() const {
  std::string s;
  for (auto b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string EpsilonMask::name() const { return bits.empty() ? "a_∅" : "a_" + bitstring(); }

void add_term(LinearForm& form, const EpsilonMask& mask, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = form.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) form.erase(it);
  }
}

std::string to_string(const LinearForm& form) {
  if (form.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mask, c] : form) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag) + " ";
    s += mask.name();
    first = false;
  }
  return s;
}

int MonomialVector::degree() const noexcept {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

std::string MonomialVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i + 1);
    if (exponents[i] != 1) s += "^" + std::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

void check_same_size(const LinearExtension& p, const LinearExtension& q) {
  if (p.size() != q.size() || p.size() == 0)
    throw Error(ErrorKind::MismatchedPoset, "extensions of different posets");
}

}  // namespace

EpsilonMask epsilon(const LinearExtension& p, const LinearExtension& q) {
  check_same_size(p, q);
  const int n = p.size();
  EpsilonMask m = EpsilonMask::zeros(n);
  for (int k = 0; k + 1 < n; ++k) {
    const int here = q.order[static_cast<std::size_t>(k)];
    const int next = q.order[static_cast<std::size_t>(k + 1)];
    m.bits[static_cast<std::size_t>(k)] = p.rank[static_cast<std::size_t>(here)] > p.rank[static_cast<std::size_t>(next)];
  }
  return m;
}

Pedestal pedestal(const LinearExtension& p, const LinearExtension& q) {
  const EpsilonMask m = epsilon(p, q);
  Pedestal out;
  out.values.assign(static_cast<std::size_t>(p.size()), 0);
  int running = 0;
  for (int k = 0; k < q.size(); ++k) {
    if (k > 0 && m.bits[static_cast<std::size_t>(k - 1)]) ++running;
    out.values[static_cast<std::size_t>(q.order[static_cast<std::size_t>(k)])] = running;
    out.volume += running;
  }
  return out;
}

MonomialVector monomial_of(const EpsilonMask& mask) {
  const int n = mask.length() + 1;
  MonomialVector m;
  m.exponents.assign(static_cast<std::size_t>(n), 0);
  // Disagreement locations l (1-based in Q) are k+1 for eps(k) = 1.
  int prev = 1;
  std::size_t var = 0;
  for (int k = 1; k <= mask.length(); ++k) {
    if (!mask.bits[static_cast<std::size_t>(k - 1)]) continue;
    const int l = k + 1;
    m.exponents[var++] = l - prev;
    prev = l;
  }
  m.exponents[var] = n - prev + 1;
  return m;
}

MonomialVector monomial(const LinearExtension& p, const LinearExtension& q) { return monomial_of(epsilon(p, q)); }

int volume_weight(const EpsilonMask& mask) {
  const int n = mask.length() + 1;
  int v = 0;
  for (int k = 1; k <= mask.length(); ++k) v += (n - k) * mask.bits[static_cast<std::size_t>(k - 1)];
  return v;
}

int index_weight(const EpsilonMask& mask) {
  int v = 0;
  for (int k = 1; k <= mask.length(); ++k) v += k * mask.bits[static_cast<std::size_t>(k - 1)];
  return v;
}

PedestalMatrix::PedestalMatrix(Poset poset, std::size_t cap) : poset_(std::move(poset)), extensions_(poset_, cap) {
  const std::size_t d = extensions_.size();
  std::vector<EpsilonMask> raw;
  raw.reserve(d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) raw.push_back(epsilon(extensions_[p], extensions_[q]));
  masks_ = raw;
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  entries_.reserve(raw.size());
  for (const auto& m : raw)
    entries_.push_back(static_cast<std::size_t>(std::lower_bound(masks_.begin(), masks_.end(), m) - masks_.begin()));
}

std::optional<std::size_t> PedestalMatrix::find_mask(const EpsilonMask& mask) const {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) return std::nullopt;
  return static_cast<std::size_t>(it - masks_.begin());
}

IntMatrix PedestalMatrix::specialize(const std::vector<std::int64_t>& values) const {
  if (values.size() != masks_.size()) throw Error(ErrorKind::MismatchedPoset, "one value per realized mask expected");
  IntMatrix m(dim(), dim());
  for (std::size_t p = 0; p < dim(); ++p)
    for (std::size_t q = 0; q < dim(); ++q) m(p, q) = values[mask_index(p, q)];
  return m;
}

IntMatrix b_matrix(const PedestalMatrix& pm, const EpsilonMask& mask) {
  IntMatrix b(pm.dim(), pm.dim());
  const auto idx = pm.find_mask(mask);
  if (!idx) return b;
  for (std::size_t p = 0; p < pm.dim(); ++p)
    for (std::size_t q = 0; q < pm.dim(); ++q)
      if (pm.mask_index(p, q) == *idx) b(p, q) = 1;
  return b;
}

PedestalPolynomial pedestal_polynomial(const PedestalMatrix& pm) {
  PedestalPolynomial out;
  for (std::size_t p = 0; p < pm.dim(); ++p) {
    std::vector<std::int64_t> coeffs;
    LinearForm form;
    for (std::size_t q = 0; q < pm.dim(); ++q) {
      const int v = pedestal(pm.extensions()[p], pm.extensions()[q]).volume;
      if (coeffs.size() <= static_cast<std::size_t>(v)) coeffs.resize(static_cast<std::size_t>(v) + 1, 0);
      ++coeffs[static_cast<std::size_t>(v)];
      add_term(form, pm.entry(p, q), 1);
    }
    if (p == 0) {
      out.coeffs = std::move(coeffs);
      out.row_sum = std::move(form);
    } else if (coeffs != out.coeffs || form != out.row_sum) {
      throw Error(ErrorKind::RowMismatch, "row " + std::to_string(p) + " differs from row 0");
    }
  }
  return out;
}

MultiPolynomial h_polynomial(const PedestalMatrix& pm, std::size_t p) {
  MultiPolynomial h;
  for (std::size_t q = 0; q < pm.dim(); ++q) ++h[pm.monomial_entry(p, q).exponents];
  return h;
}

std::vector<LegendEntry> legend(const PedestalMatrix& pm) {
  std::vector<LegendEntry> out;
  for (const auto& m : pm.masks()) out.push_back({"", m, monomial_of(m)});
  std::sort(out.begin(), out.end(), [](const LegendEntry& a, const LegendEntry& b) { return a.monomial > b.monomial; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = "a" + std::to_string(i + 1);
  return out;
}

}  // namespace intspec
