// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pviforge/errors.hpp"

namespace pviforge {

namespace {

template <class T>
T from_q(const Rational& q) {
  return T(q);
}

template <class T>
Real size_of(const T& x) {
  return abs(to_complex(x));
}

// The unique (up to scale) kernel vector of a square matrix of corank one.
template <class T>
std::vector<T> kernel_vector(Matrix<T> m) {
  std::size_t n = m.rows();
  Real scale = 0;
  for (const auto& x : m.data()) scale = std::max(scale, size_of(x));
  std::vector<std::size_t> pivot_col;
  std::vector<bool> used(n, false);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t best = row;
    Real bm = -1;
    for (std::size_t r = row; r < n; ++r)
      if (size_of(m(r, c)) > bm) {
        bm = size_of(m(r, c));
        best = r;
      }
    if (near_zero(m(best, c), scale)) continue;
    m.swap_rows(best, row);
    T inv = from_q<T>(1) / m(row, c);
    for (std::size_t k = 0; k < n; ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      T f = m(r, c);
      for (std::size_t k = 0; k < n; ++k) m(r, k) -= f * m(row, k);
    }
    pivot_col.push_back(c);
    used[c] = true;
    ++row;
  }
  if (pivot_col.size() + 1 != n) throw DegenerateError("kernel_vector: corank is not one");
  std::size_t free = 0;
  while (used[free]) ++free;
  std::vector<T> v(n, from_q<T>(0));
  v[free] = from_q<T>(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m(r, free);
  return v;
}

}  // namespace

template <class T>
Rational JMSystem<T>::k1() const {
  return (theta[3] - theta[0] - theta[1] - theta[2]) / 2;
}

template <class T>
Rational JMSystem<T>::k2() const {
  return (-theta[3] - theta[0] - theta[1] - theta[2]) / 2;
}

template <class T>
std::array<Matrix<T>, 3> JMSystem<T>::residues() const {
  auto make = [](const T& z, const Rational& th, const T& q) {
    T a = z + from_q<T>(th);
    return Matrix<T>(2, 2, {a, -q * z, a / q, -z});
  };
  return {make(z1, theta[0], u), make(z2, theta[1], w), make(z3, theta[2], v)};
}

template <class T>
T JMSystem<T>::gauge() const {
  return (t + from_q<T>(1)) * u * z1 + t * v * z3 + w * z2;
}

template <class T>
T x_from_y(const T& y, const T& yprime, const T& t, const Theta& theta) {
  T one = from_q<T>(1);
  if (near_zero(y) || near_zero(y - one) || near_zero(y - t))
    throw SingularPointError("x_from_y: y is at 0, 1 or t");
  if (near_zero(t) || near_zero(t - one)) throw SingularPointError("x_from_y: t is at 0 or 1");
  T first = t * (t - one) * yprime / (y * (y - one) * (y - t));
  T s = first - from_q<T>(theta[0]) / y - from_q<T>(theta[2]) / (y - one) -
        from_q<T>(theta[1] + 1) / (y - t);
  return s / from_q<T>(2);
}

template <class T>
JMSystem<T> jm_from_xy(const T& x, const T& y, const T& t, const Theta& theta) {
  T one = from_q<T>(1);
  if (sgn(theta[3]) == 0) throw DegenerateParameters("jm_from_xy: theta4 = 0");
  if (near_zero(t) || near_zero(t - one)) throw DegenerateParameters("jm_from_xy: t is at 0 or 1");
  if (near_zero(y) || near_zero(y - one) || near_zero(y - t))
    throw DegenerateParameters("jm_from_xy: y is at 0, 1 or t");
  JMSystem<T> s;
  s.t = t;
  s.theta = theta;
  T th2 = from_q<T>(theta[1]), th3 = from_q<T>(theta[2]), th4 = from_q<T>(theta[3]);
  T k1 = from_q<T>(s.k1()), k2 = from_q<T>(s.k2());
  T e = y * (y - one) * (y - t) * x * x +
        (th3 * (y - t) + t * th2 * (y - one) - from_q<T>(2) * k2 * (y - one) * (y - t)) * x + k2 * k2 * y -
        k2 * (th3 + t * th2);
  s.z1 = y * (e - k2 * k2 * (t + one)) / (t * th4);
  s.z2 = (y - t) * (e + t * th4 * (y - one) * x - k2 * k2 - t * k1 * k2) / (t * (t - one) * th4);
  s.z3 = -(y - one) * (e + th4 * (y - t) * x - k2 * k2 * t - k1 * k2) / ((t - one) * th4);
  if (near_zero(s.z1) || near_zero(s.z2) || near_zero(s.z3))
    throw DegenerateParameters("jm_from_xy: some z_i vanishes, the gauge is undefined");
  s.u = y / (t * s.z1);
  s.v = -(y - one) / ((t - one) * s.z3);
  s.w = (y - t) / (t * (t - one) * s.z2);
  return s;
}

template <class T>
T jm_y(const JMSystem<T>& s) {
  T lin = (s.t + from_q<T>(1)) * s.u * s.z1 + s.w * s.z2 + s.t * s.v * s.z3;
  if (near_zero(lin)) throw ConstantPolynomialError("jm_y: the (1,2) entry is constant");
  return s.t * s.u * s.z1 / lin;
}

template <class T>
T jm_x(const JMSystem<T>& s) {
  T y = jm_y(s), one = from_q<T>(1);
  return s.z1 / y + s.z2 / (y - s.t) + s.z3 / (y - one);
}

template <class T>
BTraces<T> traces_of(const std::array<Matrix<T>, 3>& b) {
  return {(b[0] * b[1]).trace(), (b[1] * b[2]).trace(), (b[0] * b[2]).trace(), (b[2] * b[1] * b[0]).trace()};
}

template <class T>
BTraces<T> b_traces_from_jm(const JMSystem<T>& sys) {
  return traces_of(sys.residues());
}

template <class T>
FuchsianSystem3<T> assemble_B(const BTraces<T>& tr, const std::array<T, 3>& lambda, const T& t) {
  if (near_zero(tr.t321)) throw GaugeDegenerateError("assemble_B: Tr(B3B2B1) = 0");
  T one = from_q<T>(1);
  FuchsianSystem3<T> s;
  s.t = t;
  s.lambda = lambda;
  for (auto& m : s.B) m = Matrix<T>(3, 3);
  s.B[0](0, 0) = lambda[0];
  s.B[0](0, 1) = tr.t12;
  s.B[0](0, 2) = tr.t321;
  s.B[1](1, 0) = one;
  s.B[1](1, 1) = lambda[1];
  s.B[1](1, 2) = tr.t23;
  s.B[2](2, 0) = tr.t13 / tr.t321;
  s.B[2](2, 1) = one;
  s.B[2](2, 2) = lambda[2];
  return s;
}

template <class T>
FuchsianSystem3<T> fuchsian_from_jm(const JMSystem<T>& sys, const Rational& shift) {
  std::array<T, 3> lambda{from_q<T>(sys.theta[0] + shift), from_q<T>(sys.theta[1] + shift),
                          from_q<T>(sys.theta[2] + shift)};
  FuchsianSystem3<T> f = assemble_B(b_traces_from_jm(sys), lambda, sys.t);
  f.mu = std::array<T, 3>{from_q<T>(shift), from_q<T>(shift - sys.k1()), from_q<T>(shift - sys.k2())};
  return f;
}

template <class T>
FuchsianSystem3<T> scalar_shift_residues(const FuchsianSystem3<T>& sys, const T& lam) {
  Matrix<T> f(3, 3);
  for (int i = 0; i < 3; ++i) {
    const Matrix<T>& b = sys.B[i];
    std::size_t best = 0;
    Real bm = -1;
    for (std::size_t j = 0; j < 3; ++j) {
      Real m = 0;
      for (std::size_t r = 0; r < 3; ++r) m += size_of(b(r, j));
      if (m > bm) {
        bm = m;
        best = j;
      }
    }
    for (std::size_t r = 0; r < 3; ++r) f(r, i) = b(r, best);
  }
  Real scale = 1;
  for (const auto& x : f.data()) scale = std::max(scale, size_of(x));
  if (near_zero(f.det(), scale * scale * scale)) throw DependentImagesError("scalar_shift_residues: images of B_i are dependent");
  Matrix<T> finv = f.inverse();
  FuchsianSystem3<T> out = sys;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) out.B[i](r, c) += lam * f(r, i) * finv(i, c);
    out.lambda[i] = sys.lambda[i] + lam;
  }
  if (sys.mu) out.mu = std::array<T, 3>{(*sys.mu)[0] + lam, (*sys.mu)[1] + lam, (*sys.mu)[2] + lam};
  return out;
}

template <class T>
T y_from_B(const FuchsianSystem3<T>& sys) {
  if (!sys.mu) throw DegenerateError("y_from_B: eigenvalue order of the residue sum is not recorded");
  Matrix<T> total = sys.sum();
  Matrix<T> p(3, 3);
  for (int j = 0; j < 3; ++j) {
    Matrix<T> m = total - Matrix<T>::identity(3) * (*sys.mu)[j];
    std::vector<T> v = kernel_vector(m);
    for (std::size_t r = 0; r < 3; ++r) p(r, j) = v[r];
  }
  Matrix<T> pinv = p.inverse();
  std::array<T, 3> e;
  for (int i = 0; i < 3; ++i) e[i] = (pinv * sys.B[i] * p)(1, 2);
  T one = from_q<T>(1);
  T lin = (one + sys.t) * e[0] + e[1] + sys.t * e[2];
  Real scale = 0;
  for (const auto& x : e) scale = std::max(scale, size_of(x));
  if (near_zero(lin, scale))
    throw ConstantPolynomialError("y_from_B: the (2,3) entry has no linear term");
  return sys.t * e[0] / lin;
}

template <class T>
FuchsianSystem3<BigComplex> to_complex(const FuchsianSystem3<T>& sys) {
  FuchsianSystem3<BigComplex> out;
  for (int i = 0; i < 3; ++i) {
    out.B[i] = to_complex(sys.B[i]);
    out.lambda[i] = to_complex(sys.lambda[i]);
  }
  out.t = to_complex(sys.t);
  if (sys.mu) out.mu = std::array<BigComplex, 3>{to_complex((*sys.mu)[0]), to_complex((*sys.mu)[1]),
                                                 to_complex((*sys.mu)[2])};
  return out;
}

ParamPoint param_point(const RationalParameterization& p, const Rational& s) {
  auto at = [&s](const RationalFunction& f, const char* what) {
    if (sgn(f.den().eval(s)) == 0) throw SingularPointError(std::string("param_point: pole of ") + what);
    return f.eval(s);
  };
  ParamPoint out;
  out.t = at(p.t, "t");
  out.y = at(p.y, "y");
  Rational dt = at(p.t.derivative(), "dt/ds");
  if (sgn(dt) == 0) throw SingularPointError("param_point: dt/ds = 0");
  out.yprime = at(p.y.derivative(), "dy/ds") / dt;
  return out;
}

FuchsianSystem3<Rational> reconstruct_at(const RationalParameterization& p, const Theta& theta, const Rational& s,
                                         const Rational& shift) {
  ParamPoint pt = param_point(p, s);
  Rational x = x_from_y(pt.y, pt.yprime, pt.t, theta);
  return fuchsian_from_jm(jm_from_xy(x, pt.y, pt.t, theta), shift);
}

namespace {

// Taylor continuation of q(z) Phi' = N(z) Phi with q = z(z-1)(z-t) and N quadratic.
class Continuation {
 public:
  Continuation(const FuchsianSystem3<BigComplex>& sys, const MonodromyLoopOptions& opts)
      : t_(sys.t), opts_(opts), tol_(opts.local_tol) {
    s_ = sys.sum();
    l_ = sys.B[0] * (BigComplex(1) + t_) + sys.B[1] + sys.B[2] * t_;
    b1t_ = sys.B[0] * t_;
    poles_ = {BigComplex(0), t_, BigComplex(1)};
  }

  const std::array<BigComplex, 3>& poles() const { return poles_; }
  long steps() const { return steps_; }

  Real distance(const BigComplex& z) const {
    Real d = abs(z - poles_[0]);
    for (int i = 1; i < 3; ++i) d = std::min(d, abs(z - poles_[i]));
    return d;
  }

  void segment(CMatrix& phi, BigComplex& z, const BigComplex& to) {
    while (true) {
      Real hmax = distance(z) / 4;
      BigComplex rest = to - z;
      Real len = abs(rest);
      if (len <= hmax) {
        step(phi, z, rest);
        z = to;
        return;
      }
      BigComplex h = rest * BigComplex(hmax / len);
      step(phi, z, h);
      z += h;
    }
  }

  // Arc of the circle |z - c| = r from angle a0 to a1 (radians, any direction).
  void arc(CMatrix& phi, BigComplex& z, const BigComplex& c, const Real& r, const Real& a0, const Real& a1) {
    Real a = a0;
    Real dir = a1 > a0 ? Real(1) : Real(-1);
    while (true) {
      Real hmax = distance(z) / 4;
      Real ratio = hmax / (2 * r);
      Real delta = ratio >= 1 ? Real(1) : Real(2 * boost::multiprecision::asin(ratio));
      bool last = boost::multiprecision::abs(a1 - a) <= delta;
      Real next = last ? a1 : a + dir * delta;
      BigComplex target = c + BigComplex::polar(r, next);
      step(phi, z, target - z);
      z = target;
      a = next;
      if (last) return;
    }
  }

 private:
  void step(CMatrix& phi, const BigComplex& c, const BigComplex& h) {
    if (++steps_ > opts_.max_steps) throw StepFailure("numeric_monodromy: step budget exhausted");
    BigComplex one(1), two(2), three(3);
    BigComplex q0 = c * (c - one) * (c - t_);
    BigComplex q1 = three * c * c - two * (one + t_) * c + t_;
    BigComplex q2 = three * c - (one + t_);
    CMatrix N0 = s_ * (c * c) - l_ * c + b1t_;
    CMatrix N1 = s_ * (two * c) - l_;
    // scaled coefficients for psi_k = Phi_k h^k
    std::array<CMatrix, 3> n{N0 * h, N1 * (h * h), s_ * (h * h * h)};
    std::array<BigComplex, 4> q{q0, q1 * h, q2 * h * h, h * h * h};
    BigComplex q0inv = one / q0;
    std::vector<CMatrix> psi{phi};
    CMatrix sum = phi;
    Real scale = max_abs(phi);
    int small = 0;
    for (int k = 0; k < opts_.max_terms; ++k) {
      CMatrix acc(3, 3);
      for (int j = 0; j < 3 && j <= k; ++j) acc += n[j] * psi[k - j];
      for (int j = 1; j <= 3 && j <= k; ++j) acc -= psi[k + 1 - j] * (q[j] * BigComplex(static_cast<long>(k + 1 - j)));
      CMatrix next = acc * (q0inv / BigComplex(static_cast<long>(k + 1)));
      sum += next;
      Real m = max_abs(next);
      psi.push_back(std::move(next));
      small = m < tol_ * scale ? small + 1 : 0;
      if (small >= 3) {
        phi = sum;
        return;
      }
    }
    throw StepFailure("numeric_monodromy: Taylor series did not reach the local tolerance");
  }

  BigComplex t_;
  MonodromyLoopOptions opts_;
  Real tol_;
  CMatrix s_, l_, b1t_;
  std::array<BigComplex, 3> poles_;
  long steps_ = 0;
};

Real min_gap(const std::array<BigComplex, 3>& p) {
  return std::min({abs(p[0] - p[1]), abs(p[1] - p[2]), abs(p[0] - p[2])});
}

}  // namespace

std::array<CMatrix, 3> pure_braid_move(const std::array<CMatrix, 3>& r, int generator) {
  int i = generator > 0 ? generator : -generator;
  if (i != 1 && i != 2) throw std::invalid_argument("pure_braid_move: generator must be +-1 or +-2");
  std::size_t a = i - 1, b = i;
  CMatrix c = r[b] * r[a];
  CMatrix ci = c.inverse();
  std::array<CMatrix, 3> out = r;
  if (generator > 0) {
    out[a] = ci * r[a] * c;
    out[b] = ci * r[b] * c;
  } else {
    out[a] = c * r[a] * ci;
    out[b] = c * r[b] * ci;
  }
  return out;
}

MonodromyReport numeric_monodromy(const FuchsianSystem3<BigComplex>& sys, const MonodromyLoopOptions& opts) {
  Continuation cont(sys, opts);
  const auto& poles = cont.poles();
  Real r = min_gap(poles) / 3;
  if (r == 0) throw DegenerateParameters("numeric_monodromy: coincident poles");
  if (cont.distance(opts.base) <= r) throw DegenerateParameters("numeric_monodromy: base point too close to a pole");
  Real pi = real_pi();
  MonodromyReport rep;
  for (int i = 0; i < 3; ++i) {
    CMatrix phi = CMatrix::identity(3);
    BigComplex z = opts.base;
    Real a0 = opts.approach_above ? pi / 2 : -pi / 2;
    BigComplex top = poles[i] + BigComplex::polar(r, a0);
    cont.segment(phi, z, top);
    cont.arc(phi, z, poles[i], r, a0, a0 + 2 * pi);
    z = top;
    cont.segment(phi, z, opts.base);
    rep.straight[i] = phi;
  }
  rep.r = rep.straight;
  for (int g : opts.pure_braid) rep.r = pure_braid_move(rep.r, g);
  {
    BigComplex center = (poles[0] + poles[1] + poles[2]) / BigComplex(3);
    Real big = abs(opts.base - center);
    for (const auto& p : poles)
      if (abs(p - center) + r >= big) throw DegenerateParameters("numeric_monodromy: base point inside the pole hull");
    Real a0 = arg(opts.base - center);
    CMatrix phi = CMatrix::identity(3);
    BigComplex z = opts.base;
    cont.arc(phi, z, center, big, a0, a0 - 2 * pi);
    rep.r_inf = phi;
  }
  rep.steps = cont.steps();
  for (int i = 0; i < 3; ++i) {
    rep.trace[i] = rep.r[i].trace();
    rep.det[i] = rep.r[i].det();
  }
  rep.t12 = (rep.r[0] * rep.r[1]).trace();
  rep.t23 = (rep.r[1] * rep.r[2]).trace();
  rep.t13 = (rep.r[0] * rep.r[2]).trace();
  CMatrix prod = rep.r[2] * rep.r[1] * rep.r[0];
  rep.product_eigenvalues = eigenvalues(prod);
  auto key = [&pi](const BigComplex& z) {
    Real a = arg(z);
    if (a < 0) a += 2 * pi;
    return a;
  };
  std::sort(rep.product_eigenvalues.begin(), rep.product_eigenvalues.end(),
            [&key](const BigComplex& a, const BigComplex& b) { return key(a) < key(b); });
  rep.infinity_residual = max_abs_diff(prod * rep.r_inf, CMatrix::identity(3));
  return rep;
}

#define PVIFORGE_INSTANTIATE(T)                                                                          \
  template struct JMSystem<T>;                                                                           \
  template T x_from_y<T>(const T&, const T&, const T&, const Theta&);                                    \
  template JMSystem<T> jm_from_xy<T>(const T&, const T&, const T&, const Theta&);                        \
  template T jm_y<T>(const JMSystem<T>&);                                                                \
  template T jm_x<T>(const JMSystem<T>&);                                                                \
  template BTraces<T> traces_of<T>(const std::array<Matrix<T>, 3>&);                                     \
  template BTraces<T> b_traces_from_jm<T>(const JMSystem<T>&);                                           \
  template FuchsianSystem3<T> assemble_B<T>(const BTraces<T>&, const std::array<T, 3>&, const T&);       \
  template FuchsianSystem3<T> fuchsian_from_jm<T>(const JMSystem<T>&, const Rational&);                  \
  template FuchsianSystem3<T> scalar_shift_residues<T>(const FuchsianSystem3<T>&, const T&);             \
  template T y_from_B<T>(const FuchsianSystem3<T>&);                                                     \
  template FuchsianSystem3<BigComplex> to_complex<T>(const FuchsianSystem3<T>&);

PVIFORGE_INSTANTIATE(Rational)
PVIFORGE_INSTANTIATE(BigComplex)

#undef PVIFORGE_INSTANTIATE

}  // namespace pviforge
