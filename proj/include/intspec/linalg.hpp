#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace intspec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix& operator+=(const Matrix& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigIntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);

BigIntMatrix to_bigint(const IntMatrix& m);
RationalMatrix to_rational(const IntMatrix& m);

bool is_upper_triangular(const RationalMatrix& m);
bool is_strictly_upper_triangular(const RationalMatrix& m);

/// Gauss-Jordan inverse over Q. Throws std::domain_error when singular.
RationalMatrix inverse(RationalMatrix m);
std::size_t rank(RationalMatrix m);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(BigIntMatrix m);

/// Coefficients c_0..c_N of det(xI - A), lowest degree first.
///
/// Hessenberg reduction modulo word-sized primes, combined by CRT until the
/// modulus exceeds twice the coefficient bound; the result is exact.
std::vector<BigInt> characteristic_polynomial(const BigIntMatrix& a);

/// Coefficients of prod (x - r) over the given roots, lowest degree first.
std::vector<BigInt> polynomial_from_roots(std::span<const BigInt> roots);

/// Row space over Q grown one vector at a time; used as an exact rank oracle.
class IncrementalRowSpace {
 public:
  explicit IncrementalRowSpace(std::size_t dim) : dim_(dim) {}

  /// Adds `v` if it is independent of the vectors already held.
  bool try_add(std::span<const std::int64_t> v);
  bool contains(std::span<const std::int64_t> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<Rational> reduce(std::span<const std::int64_t> v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace intspec
