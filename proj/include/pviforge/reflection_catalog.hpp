// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pviforge/char_variety.hpp"

namespace pviforge {

// a + b*sqrt(-7) with rational a, b.
struct QI7 {
  Rational a = 0, b = 0;

  QI7() = default;
  QI7(const Rational& x, const Rational& y = 0) : a(x), b(y) {}  // NOLINT
  QI7(long v) : a(v), b(0) {}                                    // NOLINT

  QI7& operator+=(const QI7& o);
  QI7& operator-=(const QI7& o);
  QI7& operator*=(const QI7& o);
  QI7& operator/=(const QI7& o);
  QI7 operator-() const { return {-a, -b}; }
  friend QI7 operator+(QI7 x, const QI7& y) { return x += y; }
  friend QI7 operator-(QI7 x, const QI7& y) { return x -= y; }
  friend QI7 operator*(QI7 x, const QI7& y) { return x *= y; }
  friend QI7 operator/(QI7 x, const QI7& y) { return x /= y; }
  friend bool operator==(const QI7& x, const QI7& y) { return x.a == y.a && x.b == y.b; }

  QI7 conj() const { return {a, -b}; }
  Rational norm() const { return a * a + 7 * b * b; }
  BigComplex eval() const;
};

inline bool is_zero(const QI7& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }
inline Rational magnitude(const QI7& x) { return x.norm(); }
template <>
inline QI7 zero_like<QI7>() { return QI7(0); }
template <>
inline QI7 one_like<QI7>() { return QI7(1); }
inline BigComplex to_complex(const QI7& x) { return x.eval(); }

struct PseudoReflectionTriple {
  std::array<CMatrix, 3> r;  // r1, r2, r3
  std::string group;
  std::vector<int> exponents;
  int coxeter_h = 0;
  std::optional<std::array<Matrix<QI7>, 3>> exact;
  std::optional<CMatrix> bilinear_form;
  bool degenerate = false;
};

std::array<Matrix<QI7>, 3> klein_generators_exact();
PseudoReflectionTriple klein_generators();
PseudoReflectionTriple dm_reflections(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3);
Sl2Triple dm_unipotent_triple(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3);
// m = 2 + x1 x2 x3 - (x1^2 + x2^2 + x3^2)
BigComplex dm_m(const BigComplex& x1, const BigComplex& x2, const BigComplex& x3);
// The explicit SU2 triple generating the branch-0 Klein data.
Sl2Triple klein_su2_triple();

// Square root with argument in [0, pi), i.e. exp(i pi mu) for w = exp(2 pi i mu), 0 <= mu < 1.
BigComplex half_turn_sqrt(const BigComplex& w);

// Eigenvalues of r3 r2 r1 are sorted by argument in [0, 2pi); n_i is the root of the
// mu_order[i]-th one. sqrt_choice holds signs for (t1, t2, t3, n1, n2, n3).
ReflectionData3 reflection_data(const PseudoReflectionTriple& T, const std::array<int, 3>& mu_order = {0, 1, 2},
                                const std::array<int, 6>& sqrt_choice = {1, 1, 1, 1, 1, 1});
// Same, with explicitly supplied t_i and n_i (checked against det r_i and the spectrum of r3 r2 r1).
ReflectionData3 reflection_data_with_roots(const PseudoReflectionTriple& T, const std::array<BigComplex, 3>& t,
                                           const std::array<BigComplex, 3>& n);

// Binary dihedral group of order 4d: zeta^k or tau zeta^k, zeta of order 2d, tau^2 = zeta^d.
struct BinaryDihedralElement {
  bool has_tau = false;
  int exponent = 0;
  int d = 2;

  friend bool operator==(const BinaryDihedralElement& x, const BinaryDihedralElement& y) {
    return x.has_tau == y.has_tau && x.exponent == y.exponent && x.d == y.d;
  }
};

BinaryDihedralElement bd_mul(const BinaryDihedralElement& x, const BinaryDihedralElement& y);
BinaryDihedralElement bd_inv(const BinaryDihedralElement& x);
// Canonical key of the conjugacy class of a single element.
int bd_class_key(const BinaryDihedralElement& x);

// Triples are stored in the paper's order (x, y, z) = (M3, M2, M1).
using BdTriple = std::array<BinaryDihedralElement, 3>;
enum class PGen { P1, P2 };
BdTriple dihedral_p_action(const BdTriple& t, PGen which);
// Canonical representative of the simultaneous conjugacy class.
BdTriple bd_canonical(const BdTriple& t);
// Multiplicative order of zeta^k in the cyclic group of order 2d.
int bd_order(int k, int d);

struct DihedralOrbitRow {
  int d = 0;
  BdTriple representative;
  std::size_t size = 0;
  std::vector<int> p1_cycles;
  std::vector<int> p2_cycles;
  bool flagged = false;
};

struct DihedralScanSummary {
  int d = 0;
  std::size_t classes = 0;
  std::size_t orbits = 0;
  std::size_t max_orbit = 0;
  std::size_t orbits_size7 = 0;
  std::size_t orbits_with_6cycle = 0;
  std::size_t flagged = 0;
};

struct DihedralScanReport {
  std::vector<DihedralScanSummary> per_d;
  std::vector<DihedralOrbitRow> rows;  // orbits of size 7, plus all orbits when keep_all is set
  std::size_t flagged = 0;
};

DihedralScanReport dihedral_orbit_scan(int d_max, bool keep_all = false, unsigned threads = 0);

struct GenusResult {
  int genus = 0;
  std::size_t group_order = 0;
  Perm p_inf;
};

GenusResult genus_from_permutations(const Perm& p1, const Perm& p2);

bool denominator7_obstruction(const Theta& theta);

// Minimal polynomial (low degree first, monic, integer) of a value given as a polynomial in a primitive
// N-th root of unity; with eigen set, of (tau + sqrt(tau^2 - 4))/2 instead.
std::vector<Integer> galois_minpoly_numeric(const std::vector<Rational>& value_poly, int root_order,
                                            bool eigen = false);

}  // namespace pviforge
