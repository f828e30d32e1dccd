#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drackn/cyc_surd.hpp"
#include "drackn/cyclotomic.hpp"
#include "drackn/number_theory.hpp"

namespace drackn {

// Scalar domain hooks. Every exact scalar type provides these overloads so the
// matrix kernels below stay generic. `like` carries field context (root order).

inline Rational scalar_from(const Rational& /*like*/, const Rational& value) { return value; }
inline bool scalar_is_zero(const Rational& v) { return sgn(v) == 0; }
inline Rational scalar_inverse(const Rational& v) {
  if (sgn(v) == 0) throw std::domain_error("division by zero");
  return 1 / v;
}
inline Rational scalar_conj(const Rational& v) { return v; }

inline CycNum scalar_from(const CycNum& like, const Rational& value) { return CycNum(like.root_order(), value); }
inline bool scalar_is_zero(const CycNum& v) { return v.is_zero(); }
inline CycNum scalar_inverse(const CycNum& v) { return v.inverse(); }
inline CycNum scalar_conj(const CycNum& v) { return v.conj(); }

inline CycSurd scalar_from(const CycSurd& like, const Rational& value) {
  return CycSurd(CycNum(like.root_order(), value));
}
inline bool scalar_is_zero(const CycSurd& v) { return v.is_zero(); }
inline CycSurd scalar_inverse(const CycSurd& v) { return v.inverse(); }
inline CycSurd scalar_conj(const CycSurd& v) { return v.conj(); }

/// Dense row-major matrix over an exact scalar domain.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& like) {
    Matrix out(n, n, scalar_from(like, Rational(0)));
    const T one = scalar_from(like, Rational(1));
    for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <class F>
  auto map(F&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, fn(data_.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    throw std::invalid_argument("matrix product: empty operand");
  const T zero = scalar_from(a(0, 0), Rational(0));
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (scalar_is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (scalar_is_zero(b(k, j))) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
Matrix<T> conjugate_transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = scalar_conj(a(i, j));
  return out;
}

template <class T>
bool is_hermitian(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) != scalar_conj(a(j, i))) return false;
  return true;
}

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("trace: matrix must be square and non-empty");
  T out = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) out += a(i, i);
  return out;
}

/// True iff sum_i coeffs[i] * M^i is the zero matrix (coeffs in increasing degree).
template <class T>
bool mat_poly_check(const Matrix<T>& m, std::span<const Rational> coeffs) {
  if (!m.is_square()) throw std::invalid_argument("mat_poly_check: matrix is not square");
  if (m.rows() == 0) return true;
  const T& like = m(0, 0);
  const std::size_t n = m.rows();
  Matrix<T> power = Matrix<T>::identity(n, like);
  Matrix<T> acc(n, n, scalar_from(like, Rational(0)));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = power * m;
    if (sgn(coeffs[i]) != 0) acc = acc + scaled(power, scalar_from(like, coeffs[i]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!scalar_is_zero(acc(i, j))) return false;
  return true;
}

template <class T>
bool mat_poly_check(const Matrix<T>& m, std::initializer_list<Rational> coeffs) {
  std::vector<Rational> c(coeffs);
  return mat_poly_check(m, std::span<const Rational>(c));
}

/// Rank by Gaussian elimination over the scalar field; exact.
template <class T>
std::size_t mat_rank_exact(Matrix<T> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && scalar_is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const T inv = scalar_inverse(m(rank, col));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (scalar_is_zero(m(i, col))) continue;
      const T factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) {
        if (scalar_is_zero(m(rank, j))) continue;
        m(i, j) -= factor * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace drackn
