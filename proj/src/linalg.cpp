#include "intspec/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace intspec {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
  a -= b;
  return a;
}

BigIntMatrix to_bigint(const IntMatrix& m) {
  BigIntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<long>(m(i, j));
  return out;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<long>(m(i, j));
  return out;
}

bool is_upper_triangular(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i && j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_strictly_upper_triangular(const RationalMatrix& m) {
  if (!is_upper_triangular(m)) return false;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i)
    if (m(i, i) != 0) return false;
  return true;
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rational scale = 1 / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (m(col, j) != 0) m(r, j) -= f * m(col, j);
        if (inv(col, j) != 0) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

BigInt determinant(BigIntMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m_ij <- (m_kk m_ij - m_ik m_kj) / prev, division exact by Sylvester's identity
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

// det(xI - H) mod p after reduction to upper Hessenberg form, ascending coefficients.
std::vector<u64> charpoly_mod(std::vector<u64> h, std::size_t n, u64 p) {
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    const u64 inv = pow_mod(at(m, m - 1), p - 2, p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 u = mul_mod(at(i, m - 1), inv, p);
      if (u == 0) continue;
      for (std::size_t j = m - 1; j < n; ++j) at(i, j) = sub_mod(at(i, j), mul_mod(u, at(m, j), p), p);
      for (std::size_t r = 0; r < n; ++r) at(r, m) = add_mod(at(r, m), mul_mod(u, at(r, i), p), p);
    }
  }
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<u64> next(m + 2, 0);
    for (std::size_t i = 0; i <= m; ++i) {
      next[i + 1] = add_mod(next[i + 1], polys[m][i], p);
      next[i] = sub_mod(next[i], mul_mod(at(m, m), polys[m][i], p), p);
    }
    u64 t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = mul_mod(t, at(i + 1, i), p);
      const u64 c = mul_mod(t, at(i, m), p);
      if (c == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k) next[k] = sub_mod(next[k], mul_mod(c, polys[i][k], p), p);
    }
    polys[m + 1] = std::move(next);
  }
  return polys[n];
}

}  // namespace

std::vector<BigInt> characteristic_polynomial(const BigIntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  if (n == 0) return {BigInt(1)};

  // Every coefficient is a signed sum of principal minors, so
  // |c_k| <= prod_i (1 + sum_j |a_ij|).
  BigInt bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 1;
    for (std::size_t j = 0; j < n; ++j) row += abs(a(i, j));
    bound *= row;
  }
  const BigInt needed = 2 * bound + 1;

  std::vector<BigInt> result(n + 1, BigInt(0));
  BigInt modulus = 1;
  BigInt prime = BigInt(1) << 62;
  std::vector<u64> reduced(n * n);
  while (modulus < needed) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = mpz_get_ui(prime.get_mpz_t());
    BigInt r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_fdiv_r_ui(r.get_mpz_t(), a(i, j).get_mpz_t(), p);
        reduced[i * n + j] = mpz_get_ui(r.get_mpz_t());
      }
    const std::vector<u64> residues = charpoly_mod(reduced, n, p);
    // CRT: x = result + modulus * ((c - result) * modulus^-1 mod p)
    BigInt inv, pz = BigInt(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      BigInt delta = BigInt(static_cast<unsigned long>(residues[k])) - result[k];
      delta *= inv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), pz.get_mpz_t());
      result[k] += modulus * delta;
    }
    modulus *= pz;
  }
  const BigInt half = modulus / 2;
  for (auto& c : result)
    if (c > half) c -= modulus;
  return result;
}

std::vector<BigInt> polynomial_from_roots(std::span<const BigInt> roots) {
  std::vector<BigInt> p{BigInt(1)};
  for (const BigInt& r : roots) {
    std::vector<BigInt> next(p.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * r;
    }
    p = std::move(next);
  }
  return p;
}

std::vector<Rational> IncrementalRowSpace::reduce(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalRowSpace: dimension mismatch");
  std::vector<Rational> w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) w[i] = static_cast<long>(v[i]);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (w[p] == 0) continue;
    const Rational f = w[p];
    const auto& row = rows_[r];
    for (std::size_t j = p; j < dim_; ++j)
      if (row[j] != 0) w[j] -= f * row[j];
  }
  return w;
}

bool IncrementalRowSpace::contains(std::span<const std::int64_t> v) const {
  for (const Rational& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool IncrementalRowSpace::try_add(std::span<const std::int64_t> v) {
  std::vector<Rational> w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace intspec
