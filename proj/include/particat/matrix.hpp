#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace particat {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundsError("integer matrix overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundsError("integer matrix overflow");
  return r;
}

}  // namespace detail

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;
using RatMatrix = DenseMatrix<mpq_class>;

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ArityError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(x, b(k, j)));
    }
  return c;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw ArityError("matrix product: inner dimensions differ");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpq_class& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

template <class T>
DenseMatrix<T> operator+(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArityError("matrix sum: shapes differ");
  DenseMatrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
DenseMatrix<T> operator-(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArityError("matrix difference: shapes differ");
  DenseMatrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

inline IntMatrix scaled(const IntMatrix& a, std::int64_t s) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = detail::checked_mul(a(i, j), s);
  return c;
}

inline RatMatrix scaled(const RatMatrix& a, const mpq_class& s) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

template <class T>
DenseMatrix<T> kronecker(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          c(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return c;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = mpq_class(static_cast<long>(a(i, j)));
  return c;
}

// sum_ij a_ij b_ij = trace(b^T a)
inline std::int64_t frobenius(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArityError("frobenius: shapes differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s = detail::checked_add(s, detail::checked_mul(a(i, j), b(i, j)));
  return s;
}

template <class T>
T trace(const DenseMatrix<T>& a) {
  T s = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

// Fraction-free (Bareiss) elimination; exact rank over Q.
inline std::size_t rank(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<mpz_class> w(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = static_cast<long>(a(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && sgn(at(piv, col)) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(r, j));
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(at(i, col)) == 0 && sgn(prev) != 0) {
        for (std::size_t j = col + 1; j < n; ++j) {
          at(i, j) *= at(r, col);
          mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(r, col) - at(i, col) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    ++r;
  }
  return r;
}

// Gaussian elimination to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const mpq_class inv = 1 / a(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, col)) == 0) continue;
      const mpq_class f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix a) { return row_reduce(a).size(); }

// Orthogonal projection onto the column space of a: B (B^T B)^{-1} B^T over pivot columns B.
inline RatMatrix column_space_projection(const RatMatrix& a, std::size_t max_entries) {
  const std::size_t n = a.rows();
  if (n * n > max_entries || n * a.cols() > max_entries)
    throw BoundsError("projection solve exceeds " + std::to_string(max_entries) + " rational entries");
  RatMatrix reduced = a;
  const auto pivots = row_reduce(reduced);
  const std::size_t r = pivots.size();
  if (r == 0) return RatMatrix(n, n);
  RatMatrix b(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r; ++c) b(i, c) = a(i, pivots[c]);
  const RatMatrix bt = b.transpose();
  const RatMatrix gram = bt * b;
  RatMatrix aug(r, r + n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = gram(i, j);
    for (std::size_t j = 0; j < n; ++j) aug(i, r + j) = bt(i, j);
  }
  row_reduce(aug);
  RatMatrix x(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = aug(i, r + j);
  return b * x;
}

}  // namespace particat
