// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/numerics/matrix.hpp"

#include <numeric>

#include "pviforge/numerics/poly.hpp"

namespace pviforge {

Real max_abs(const CMatrix& m) {
  Real best = 0;
  for (const auto& x : m.data()) {
    Real a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

Real max_abs_diff(const CMatrix& a, const CMatrix& b) { return max_abs(a - b); }

std::vector<BigComplex> char_poly(const CMatrix& a) {
  std::size_t n = a.rows();
  std::vector<BigComplex> c(n + 1, BigComplex(0));
  c[n] = BigComplex(1);
  CMatrix m(n, n);
  CMatrix id = CMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() / BigComplex(static_cast<long>(k));
  }
  return c;
}

std::vector<BigComplex> eigenvalues(const CMatrix& m) { return poly_roots(CPoly(char_poly(m))); }

namespace {

struct Elimination {
  CMatrix m;
  std::vector<std::size_t> col_order;
  std::size_t rank = 0;
};

Elimination eliminate(const CMatrix& input, const Real& rel_tol) {
  Elimination e{input, {}, 0};
  CMatrix& m = e.m;
  std::size_t rows = m.rows(), cols = m.cols();
  e.col_order.resize(cols);
  std::iota(e.col_order.begin(), e.col_order.end(), 0);
  Real scale = max_abs(m);
  if (scale == 0) return e;
  Real thresh = rel_tol * scale;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = step, pc = step;
    Real best = -1;
    for (std::size_t i = step; i < rows; ++i)
      for (std::size_t j = step; j < cols; ++j) {
        Real a = abs(m(i, e.col_order[j]));
        if (a > best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (best <= thresh) break;
    m.swap_rows(pr, step);
    std::swap(e.col_order[pc], e.col_order[step]);
    std::size_t c = e.col_order[step];
    for (std::size_t i = step + 1; i < rows; ++i) {
      if (m(i, c).is_exact_zero()) continue;
      BigComplex f = m(i, c) / m(step, c);
      for (std::size_t j = step; j < cols; ++j) {
        std::size_t cj = e.col_order[j];
        m(i, cj) -= f * m(step, cj);
      }
    }
    ++e.rank;
  }
  return e;
}

}  // namespace

std::size_t numerical_rank(const CMatrix& m, const Real& rel_tol) { return eliminate(m, rel_tol).rank; }

std::vector<std::vector<BigComplex>> null_space(const CMatrix& input, const Real& rel_tol) {
  Elimination e = eliminate(input, rel_tol);
  std::size_t cols = input.cols();
  std::vector<std::vector<BigComplex>> basis;
  for (std::size_t f = e.rank; f < cols; ++f) {
    std::vector<BigComplex> v(cols, BigComplex(0));
    v[e.col_order[f]] = BigComplex(1);
    for (std::size_t s = e.rank; s-- > 0;) {
      std::size_t c = e.col_order[s];
      BigComplex acc(0);
      for (std::size_t j = s + 1; j < cols; ++j) {
        std::size_t cj = e.col_order[j];
        acc += e.m(s, cj) * v[cj];
      }
      v[c] = -acc / e.m(s, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CMatrix mat_exp(const CMatrix& a) {
  std::size_t n = a.rows();
  Real norm = max_abs(a) * n;
  int squarings = 0;
  while (norm > Real(0.5)) {
    norm /= 2;
    ++squarings;
  }
  CMatrix s = a * BigComplex(pow2(-squarings));
  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  Real eps = pow2(-static_cast<long>(working_precision()) - 4);
  for (long k = 1; k < 10000; ++k) {
    term = term * s * BigComplex(Rational(1, k));
    result += term;
    if (max_abs(term) < eps) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace pviforge
