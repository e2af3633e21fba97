// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pviforge/numerics/scalar.hpp"

namespace pviforge {

// Small dense row-major matrix over an exact or high-precision field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, zero_like<T>()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like<T>();
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const {
    T s = zero_like<T>();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v;
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  T det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square");
    Matrix m(*this);
    T d = one_like<T>();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = m.pivot_row(c, c);
      if (is_zero(m(p, c))) return zero_like<T>();
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d *= m(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (is_zero(m(r, c))) continue;
        T f = m(r, c) / m(c, c);
        for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
      }
    }
    return d;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square");
    std::size_t n = rows_;
    Matrix m(*this);
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = m.pivot_row(c, c);
      if (is_zero(m(p, c))) throw std::domain_error("Matrix: singular");
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      T s = one_like<T>() / m(c, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(c, k) *= s;
        inv(c, k) *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || is_zero(m(r, c))) continue;
        T f = m(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          m(r, k) -= f * m(c, k);
          inv(r, k) -= f * inv(c, k);
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t pivot_row(std::size_t c, std::size_t start) const {
    std::size_t best = start;
    auto bm = magnitude((*this)(start, c));
    for (std::size_t r = start + 1; r < rows_; ++r) {
      auto m = magnitude((*this)(r, c));
      if (m > bm) {
        bm = m;
        best = r;
      }
    }
    return best;
  }

  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using CMatrix = Matrix<BigComplex>;
using QMatrix = Matrix<Rational>;

template <class T>
CMatrix to_complex(const Matrix<T>& m) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

// Largest entry modulus.
Real max_abs(const CMatrix& m);
Real max_abs_diff(const CMatrix& a, const CMatrix& b);

// Coefficients c0..cn (low to high) of det(x I - m), via Faddeev-LeVerrier.
std::vector<BigComplex> char_poly(const CMatrix& m);
std::vector<BigComplex> eigenvalues(const CMatrix& m);

// Numerical rank by complete pivoting with relative tolerance.
std::size_t numerical_rank(const CMatrix& m, const Real& rel_tol);
// Null vectors of m (relative tolerance), one per free column.
std::vector<std::vector<BigComplex>> null_space(const CMatrix& m, const Real& rel_tol);

CMatrix mat_exp(const CMatrix& m);

}  // namespace pviforge
