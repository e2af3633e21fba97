// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/killing_bjl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pviforge/errors.hpp"

namespace pviforge {

namespace {

template <class T>
Real size_of(const T& x) {
  return abs(to_complex(x));
}

template <class T>
Real max_entry(const Matrix<T>& m) {
  Real s = 0;
  for (const auto& x : m.data()) s = std::max(s, size_of(x));
  return s;
}

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument(std::string(what) + ": square matrix required");
}

template <class T>
T diagonal_t2(const Matrix<T>& u, std::size_t i, const char* what) {
  T t2 = one_like<T>() + u(i, i);
  if (near_zero(t2)) throw DegenerateDiagonal(std::string(what) + ": 1 + u_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 0");
  return t2;
}

}  // namespace

template <class T>
Matrix<T> ReflectionTuple<T>::reflection(std::size_t i) const {
  std::size_t n = e.rows();
  Matrix<T> r = Matrix<T>::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r(a, b) += e(a, i) * alpha(i, b);
  return r;
}

template <class T>
std::vector<Matrix<T>> ReflectionTuple<T>::reflections() const {
  std::vector<Matrix<T>> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(reflection(i));
  return out;
}

template <class T>
Matrix<T> ReflectionTuple<T>::product() const {
  Matrix<T> p = Matrix<T>::identity(e.rows());
  for (std::size_t i = 0; i < size(); ++i) p = reflection(i) * p;
  return p;
}

template <class T>
ReflectionTuple<T> reflection_tuple(const std::vector<Matrix<T>>& r) {
  if (r.empty()) throw std::invalid_argument("reflection_tuple: empty tuple");
  std::size_t n = r[0].rows();
  ReflectionTuple<T> rt{Matrix<T>(n, r.size()), Matrix<T>(r.size(), n)};
  for (std::size_t i = 0; i < r.size(); ++i) {
    Matrix<T> d = r[i] - Matrix<T>::identity(n);
    std::size_t col = 0;
    Real best = -1;
    for (std::size_t c = 0; c < n; ++c) {
      Real s = 0;
      for (std::size_t a = 0; a < n; ++a) s += size_of(d(a, c));
      if (s > best) {
        best = s;
        col = c;
      }
    }
    if (best == 0)
      throw DegenerateError("reflection_tuple: r_" + std::to_string(i + 1) + " is the identity");
    std::size_t k = 0;
    for (std::size_t a = 1; a < n; ++a)
      if (size_of(d(a, col)) > size_of(d(k, col))) k = a;
    for (std::size_t a = 0; a < n; ++a) rt.e(a, i) = d(a, col);
    for (std::size_t b = 0; b < n; ++b) rt.alpha(i, b) = d(k, b) / d(k, col);
  }
  return rt;
}

template <class T>
Matrix<T> u_from_reflections(const ReflectionTuple<T>& rt) {
  return rt.alpha * rt.e;
}

template <class T>
Matrix<T> KillingFactors<T>::recompose() const {
  return u_minus.inverse() * t2 * u_plus;
}

template <class T>
KillingFactors<T> killing_factorize(const Matrix<T>& u) {
  require_square(u, "killing_factorize");
  std::size_t n = u.rows();
  KillingFactors<T> f{Matrix<T>::identity(n), Matrix<T>(n, n), Matrix<T>::identity(n)};
  for (std::size_t i = 0; i < n; ++i) f.t2(i, i) = diagonal_t2(u, i, "killing_factorize");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) f.u_plus(i, j) = u(i, j) / f.t2(i, i);
      if (i > j) f.u_minus(i, j) = -u(i, j);
    }
  return f;
}

template <class T>
Matrix<T> reflection_product_in_e_basis(const Matrix<T>& u) {
  require_square(u, "reflection_product_in_e_basis");
  std::size_t n = u.rows();
  Matrix<T> p = Matrix<T>::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<T> r = Matrix<T>::identity(n);
    for (std::size_t j = 0; j < n; ++j) r(i, j) += u(i, j);
    p = r * p;
  }
  return p;
}

template <class T>
Matrix<T> recompose(const Matrix<T>& u) {
  return killing_factorize(u).recompose();
}

template <class T>
Matrix<T> u_from_bigcell(const Matrix<T>& a) {
  require_square(a, "u_from_bigcell");
  std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> l = Matrix<T>::identity(n);
  Real scale = max_entry(a);
  for (std::size_t k = 0; k < n; ++k) {
    if (near_zero(m(k, k), scale))
      throw NotInBigCell("u_from_bigcell: leading minor " + std::to_string(k + 1) + " vanishes");
    for (std::size_t r = k + 1; r < n; ++r) {
      T f = m(r, k) / m(k, k);
      l(r, k) = f;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  // m = t2 u_plus and l = u_minus^-1
  return m - l.inverse();
}

template <class T>
Matrix<T> bjl_shift(const Matrix<T>& u, const T& h) {
  require_square(u, "bjl_shift");
  if (near_zero(h)) throw DegenerateDiagonal("bjl_shift: h = 0");
  T h2 = h * h;
  std::size_t n = u.rows();
  Matrix<T> out = u;
  for (std::size_t i = 0; i < n; ++i) {
    T t2 = diagonal_t2(u, i, "bjl_shift");
    out(i, i) = h2 * t2 - one_like<T>();
    for (std::size_t j = i + 1; j < n; ++j) out(i, j) = h2 * u(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) diagonal_t2(out, i, "bjl_shift");
  return out;
}

template <class T>
ReflectionTuple<T> bjl_shift_tuple(const ReflectionTuple<T>& rt, const T& h) {
  if (rt.e.rows() != rt.size()) throw std::invalid_argument("bjl_shift_tuple: the e_i must be a basis");
  Real s = 1;
  for (std::size_t k = 0; k < rt.size(); ++k) s *= std::max(Real(1), max_entry(rt.e));
  if (near_zero(rt.e.det(), s)) throw DegenerateError("bjl_shift_tuple: the e_i are linearly dependent");
  // u = alpha e, so the shifted covectors are u~ e^-1
  return {rt.e, bjl_shift(u_from_reflections(rt), h) * rt.e.inverse()};
}

template <class T>
Matrix<T> braid_on_u(const Matrix<T>& u, std::size_t i) {
  require_square(u, "braid_on_u");
  std::size_t n = u.rows();
  if (i + 1 >= n) throw std::invalid_argument("braid_on_u: generator index out of range");
  std::size_t a = i, b = i + 1;
  T t2 = diagonal_t2(u, a, "braid_on_u");
  Matrix<T> v = u;
  v(a, a) = u(b, b);
  v(b, b) = u(a, a);
  v(a, b) = t2 * u(b, a);
  v(b, a) = u(a, b) / t2;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == a || j == b) continue;
    v(a, j) = u(b, j) + u(b, a) * u(a, j);
    v(j, a) = u(j, b) - u(j, a) * u(a, b) / t2;
    v(b, j) = u(a, j);
    v(j, b) = u(j, a);
  }
  return v;
}

template <class T>
ReflectionTuple<T> braid_on_tuple(const ReflectionTuple<T>& rt, std::size_t i) {
  std::size_t n = rt.e.rows();
  if (i + 1 >= rt.size()) throw std::invalid_argument("braid_on_tuple: generator index out of range");
  std::size_t a = i, b = i + 1;
  T t2 = one_like<T>();
  for (std::size_t k = 0; k < n; ++k) t2 += rt.alpha(a, k) * rt.e(k, a);
  if (near_zero(t2)) throw DegenerateDiagonal("braid_on_tuple: 1 + alpha_i(e_i) = 0");
  T alpha_b_of_e_a = zero_like<T>(), alpha_a_of_e_b = zero_like<T>();
  for (std::size_t k = 0; k < n; ++k) {
    alpha_b_of_e_a += rt.alpha(b, k) * rt.e(k, a);
    alpha_a_of_e_b += rt.alpha(a, k) * rt.e(k, b);
  }
  ReflectionTuple<T> out = rt;
  for (std::size_t k = 0; k < n; ++k) {
    out.e(k, b) = rt.e(k, a);
    // r_a^-1 = 1 - e_a (x) alpha_a / t2
    out.e(k, a) = rt.e(k, b) - rt.e(k, a) * alpha_a_of_e_b / t2;
    out.alpha(b, k) = rt.alpha(a, k);
    out.alpha(a, k) = rt.alpha(b, k) + alpha_b_of_e_a * rt.alpha(a, k);
  }
  return out;
}

template <class T>
Matrix<T> braid_on_bigcell(const Matrix<T>& a, std::size_t i) {
  require_square(a, "braid_on_bigcell");
  std::size_t n = a.rows();
  if (i + 1 >= n) throw std::invalid_argument("braid_on_bigcell: generator index out of range");
  KillingFactors<T> f = killing_factorize(u_from_bigcell(a));
  Matrix<T> xi = Matrix<T>::identity(n), xi_inv = Matrix<T>::identity(n), p = Matrix<T>::identity(n);
  xi(i, i + 1) = f.u_plus(i, i + 1);
  xi_inv(i, i + 1) = -f.u_plus(i, i + 1);
  p(i, i) = p(i + 1, i + 1) = zero_like<T>();
  p(i, i + 1) = p(i + 1, i) = one_like<T>();
  return p * xi * a * xi_inv * p;
}

template <class T>
ReflectionTuple<T> reflections_from_u(const Matrix<T>& u) {
  require_square(u, "reflections_from_u");
  Real scale = max_entry(u);
  Real s = 1;
  for (std::size_t k = 0; k < u.rows(); ++k) s *= (scale < 1 ? Real(1) : scale);
  if (near_zero(u.det(), s)) throw SingularU("reflections_from_u: det u = 0");
  return {Matrix<T>::identity(u.rows()), u};
}

SemisimplifyResult semisimplify_to_sl2(const ReflectionTuple<BigComplex>& rt, const std::array<BigComplex, 3>& t,
                                       const BigComplex& n1) {
  if (rt.size() != 3 || rt.e.rows() != 3) throw std::invalid_argument("semisimplify_to_sl2: a triple in dimension 3 is required");
  Real tol = pow2(-static_cast<long>(working_precision()) / 2);
  auto r = rt.reflections();
  CMatrix id = CMatrix::identity(3);
  std::size_t span = numerical_rank(rt.e, tol);
  SemisimplifyResult out;
  CMatrix basis(3, 3);
  bool block_first;
  if (span == 3) {
    CMatrix k = rt.product() - id;
    auto kernel = null_space(k, tol);
    if (kernel.empty()) throw NoUnitEigenvalue("semisimplify_to_sl2: 1 is not an eigenvalue of r3 r2 r1");
    const auto& v = kernel[0];
    Real vs = 0;
    for (const auto& x : v) vs = std::max(vs, abs(x));
    for (const auto& ri : r) {
      CMatrix col(3, 1, v);
      CMatrix moved = ri * col - col;
      if (max_abs(moved) > tol * 64 * vs * (1 + max_abs(ri)))
        throw IrreducibleError("semisimplify_to_sl2: the fixed vector of r3 r2 r1 is not fixed by every r_i");
    }
    std::size_t big = 0;
    for (std::size_t a = 1; a < 3; ++a)
      if (abs(v[a]) > abs(v[big])) big = a;
    std::size_t c = 1;
    for (std::size_t a = 0; a < 3; ++a) {
      basis(a, 0) = v[a];
      if (a == big) continue;
      basis(a, c++) = BigComplex(1);
    }
    block_first = false;
  } else if (span == 2) {
    // two independent e_i, completed by the standard vector that keeps the basis best conditioned
    Real best = -1;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        for (std::size_t s = 0; s < 3; ++s) {
          CMatrix m(3, 3);
          for (std::size_t k = 0; k < 3; ++k) {
            m(k, 0) = rt.e(k, a);
            m(k, 1) = rt.e(k, b);
          }
          m(s, 2) = BigComplex(1);
          Real d = abs(m.det());
          if (d > best) {
            best = d;
            basis = m;
          }
        }
    out.span_deficient = true;
    block_first = true;
  } else {
    throw IrreducibleError("semisimplify_to_sl2: the e_i span at most a line");
  }
  CMatrix binv = basis.inverse();
  std::array<CMatrix, 3> m;
  std::size_t off = block_first ? 0 : 1;
  for (int i = 0; i < 3; ++i) {
    CMatrix g = binv * r[i] * basis;
    CMatrix block(2, 2, {g(off, off), g(off, off + 1), g(off + 1, off), g(off + 1, off + 1)});
    m[i] = block * (n1 / t[i]);
  }
  out.triple = {m[0], m[1], m[2]};
  return out;
}

#define PVIFORGE_INSTANTIATE(T)                                                   \
  template struct ReflectionTuple<T>;                                             \
  template struct KillingFactors<T>;                                              \
  template ReflectionTuple<T> reflection_tuple<T>(const std::vector<Matrix<T>>&); \
  template Matrix<T> u_from_reflections<T>(const ReflectionTuple<T>&);            \
  template KillingFactors<T> killing_factorize<T>(const Matrix<T>&);              \
  template Matrix<T> reflection_product_in_e_basis<T>(const Matrix<T>&);          \
  template Matrix<T> recompose<T>(const Matrix<T>&);                              \
  template Matrix<T> u_from_bigcell<T>(const Matrix<T>&);                         \
  template Matrix<T> bjl_shift<T>(const Matrix<T>&, const T&);                    \
  template ReflectionTuple<T> bjl_shift_tuple<T>(const ReflectionTuple<T>&, const T&); \
  template Matrix<T> braid_on_u<T>(const Matrix<T>&, std::size_t);               \
  template ReflectionTuple<T> braid_on_tuple<T>(const ReflectionTuple<T>&, std::size_t); \
  template Matrix<T> braid_on_bigcell<T>(const Matrix<T>&, std::size_t);         \
  template ReflectionTuple<T> reflections_from_u<T>(const Matrix<T>&);

PVIFORGE_INSTANTIATE(Rational)
PVIFORGE_INSTANTIATE(BigComplex)

#undef PVIFORGE_INSTANTIATE

}  // namespace pviforge
