// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "pviforge/char_variety.hpp"
#include "pviforge/numerics/matrix.hpp"

namespace pviforge {

// r_i = 1 + e_i (x) alpha_i: e holds the e_i as columns, alpha holds the alpha_i as rows.
template <class T>
struct ReflectionTuple {
  Matrix<T> e;
  Matrix<T> alpha;

  std::size_t size() const { return e.cols(); }
  Matrix<T> reflection(std::size_t i) const;
  std::vector<Matrix<T>> reflections() const;
  // r_n ... r_1 in the standard basis.
  Matrix<T> product() const;
};

// Rank one factorization of each r_i - 1: e_i is the column of largest norm, alpha_i(e_i-component) = 1.
template <class T>
ReflectionTuple<T> reflection_tuple(const std::vector<Matrix<T>>& r);

// u_ij = alpha_i(e_j).
template <class T>
Matrix<T> u_from_reflections(const ReflectionTuple<T>& rt);

// u = t2 u_plus - u_minus with u_plus (u_minus) upper (lower) unipotent and t2 = diag(1 + u_ii).
template <class T>
struct KillingFactors {
  Matrix<T> u_minus;
  Matrix<T> t2;
  Matrix<T> u_plus;

  // u_minus^-1 t2 u_plus
  Matrix<T> recompose() const;
};

template <class T>
KillingFactors<T> killing_factorize(const Matrix<T>& u);

// The matrix of r_n ... r_1 in the e basis, where r_i e_j = e_j + u_ij e_i.
template <class T>
Matrix<T> reflection_product_in_e_basis(const Matrix<T>& u);

// u_minus^-1 t2 u_plus for the factors of u.
template <class T>
Matrix<T> recompose(const Matrix<T>& u);

// The inverse of recompose: the big-cell factorization a = L D U read back as u = D U - L^-1.
template <class T>
Matrix<T> u_from_bigcell(const Matrix<T>& a);

// h^2 t2 u_plus - u_minus.
template <class T>
Matrix<T> bjl_shift(const Matrix<T>& u, const T& h);

// gamma_i on u (0-based i, acting on positions i and i + 1).
template <class T>
Matrix<T> braid_on_u(const Matrix<T>& u, std::size_t i);

// gamma_i on the lifted data (e, alpha): positions i + 1, i become e_i, r_i^-1 e_{i+1} and alpha_i, alpha_{i+1} r_i.
template <class T>
ReflectionTuple<T> braid_on_tuple(const ReflectionTuple<T>& rt, std::size_t i);

// P_i xi_i(u_plus) a xi_i(u_plus)^-1 P_i.
template <class T>
Matrix<T> braid_on_bigcell(const Matrix<T>& a, std::size_t i);

// The tuple with the same e_i whose u is bjl_shift(u, h); the e_i must be a basis.
template <class T>
ReflectionTuple<T> bjl_shift_tuple(const ReflectionTuple<T>& rt, const T& h);

// r_i = 1 + e_i (x) (row i of u) in the standard basis.
template <class T>
ReflectionTuple<T> reflections_from_u(const Matrix<T>& u);

struct SemisimplifyResult {
  Sl2Triple triple;
  bool span_deficient = false;  // the e_i span a proper invariant subspace
};

// The rank two part of the semisimplification of a reducible triple, rescaled by n1 / t_i into SL2.
SemisimplifyResult semisimplify_to_sl2(const ReflectionTuple<BigComplex>& rt, const std::array<BigComplex, 3>& t,
                                       const BigComplex& n1 = BigComplex(1));

}  // namespace pviforge
