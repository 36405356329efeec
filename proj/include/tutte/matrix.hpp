#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Dense row-major matrix over an exact scalar (Rational or MultiPoly).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  explicit Matrix(std::size_t dim) : Matrix(dim, dim) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix from an entry function f(i, j).
  template <typename F>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& f) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f(i, j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::OutOfRange, "matrix index out of range");
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::OutOfRange, "matrix index out of range");
    return (*this)(i, j);
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  /// Entrywise map into another scalar type.
  template <typename F>
  auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_scalar(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero_scalar(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v = s * v;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  static bool is_zero_scalar(const T& v) { return v.is_zero(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

inline RatMatrix evaluate(const PolyMatrix& m, const Assignment& a) {
  return m.map([&](const MultiPoly& p) { return evaluate(p, a); });
}

/// Invertible P, Q and rank r with P·M·Q = [[I_r, 0], [0, 0]].
struct RankDecomposition {
  RatMatrix P;
  RatMatrix Q;
  std::size_t rank = 0;
};

/// Full-pivot Gauss-Jordan elimination. The pivot at step k is the nonzero
/// entry of the trailing submatrix with the smallest row index, ties broken by
/// the smallest column index, which makes every derived result reproducible.
inline RankDecomposition rank_decomposition(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RatMatrix a = m;
  RatMatrix p = RatMatrix::identity(rows);
  RatMatrix q = RatMatrix::identity(cols);
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!a(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    a.swap_rows(k, pr);
    p.swap_rows(k, pr);
    a.swap_cols(k, pc);
    q.swap_cols(k, pc);

    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t j = 0; j < cols; ++j) a(k, j) *= inv;
    for (std::size_t j = 0; j < rows; ++j) p(k, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = k; j < cols; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < rows; ++j)
        if (!p(k, j).is_zero()) p(i, j) -= f * p(k, j);
    }
    // Column k is now e_k, so column operations only touch row k of a.
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (a(k, j).is_zero()) continue;
      const Rational f = a(k, j);
      a(k, j) = Rational(0);
      for (std::size_t i = 0; i < cols; ++i)
        if (!q(i, k).is_zero()) q(i, j) -= f * q(i, k);
    }
  }
  return {std::move(p), std::move(q), k};
}

inline std::size_t rank(const RatMatrix& m) {
  // Plain forward elimination; cheaper than the full decomposition.
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  RatMatrix a = m;
  Rational det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      a.swap_rows(c, piv);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  auto dec = rank_decomposition(m);
  if (dec.rank < m.rows())
    throw Error(ErrorCode::Singular, "matrix of size " + std::to_string(m.rows()) + " has rank " +
                                         std::to_string(dec.rank));
  // P·M·Q = I  =>  M^{-1} = Q·P.
  return dec.Q * dec.P;
}

/// Q·[[I_r, 0], [0, F]]·P for a free block F of size (m-r)x(m-r). Every such
/// matrix B satisfies M·B·M = M.
inline RatMatrix one_inverse_with_free_block(const RankDecomposition& dec, const RatMatrix& free_block) {
  const std::size_t m = dec.P.rows();
  const std::size_t r = dec.rank;
  if (free_block.rows() != m - r || free_block.cols() != m - r)
    throw Error(ErrorCode::DimensionMismatch, "free block must be " + std::to_string(m - r) + "x" +
                                                  std::to_string(m - r));
  RatMatrix middle(m);
  for (std::size_t i = 0; i < r; ++i) middle(i, i) = Rational(1);
  for (std::size_t i = 0; i < m - r; ++i)
    for (std::size_t j = 0; j < m - r; ++j) middle(r + i, r + j) = free_block(i, j);
  return dec.Q * middle * dec.P;
}

/// Deterministic {1}-inverse: a B with M·B·M = M. Equals M^{-1} when M is
/// invertible.
inline RatMatrix one_inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "{1}-inverse of a non-square matrix");
  auto dec = rank_decomposition(m);
  return one_inverse_with_free_block(dec, RatMatrix(m.rows() - dec.rank));
}

inline bool is_one_inverse(const RatMatrix& m, const RatMatrix& b) { return m * b * m == m; }

/// Dimension of the affine space {B : M·B·M = M}, which is m^2 - rank^2.
inline std::size_t solution_space_dim(const RatMatrix& m) {
  const std::size_t r = rank(m);
  return m.rows() * m.rows() - r * r;
}

}  // namespace tutte
