#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace guplab {

using Complex = std::complex<double>;

// Value and first three derivatives of a function at one point.  All operator
// applications in this library are exact jet transports: P multiplies by an
// analytic symbol, X consumes one derivative.  No numerical differentiation
// happens anywhere in the operator path.
struct Jet {
  Complex f{0.0, 0.0};
  Complex d1{0.0, 0.0};
  Complex d2{0.0, 0.0};
  Complex d3{0.0, 0.0};

  Jet operator+(const Jet& o) const { return {f + o.f, d1 + o.d1, d2 + o.d2, d3 + o.d3}; }
  Jet operator-(const Jet& o) const { return {f - o.f, d1 - o.d1, d2 - o.d2, d3 - o.d3}; }

  // Leibniz product to third order.
  Jet operator*(const Jet& o) const {
    return {f * o.f,
            d1 * o.f + f * o.d1,
            d2 * o.f + 2.0 * d1 * o.d1 + f * o.d2,
            d3 * o.f + 3.0 * d2 * o.d1 + 3.0 * d1 * o.d2 + f * o.d3};
  }

  Jet operator*(const Complex& c) const { return {c * f, c * d1, c * d2, c * d3}; }
  Jet operator*(double c) const { return {c * f, c * d1, c * d2, c * d3}; }

  // Jet of the derivative: trades away one trusted order.  The d3 slot of the
  // result is not meaningful; callers track trusted order separately.
  Jet shifted() const { return {d1, d2, d3, {0.0, 0.0}}; }
};

inline Jet operator*(double c, const Jet& j) { return j * c; }
inline Jet operator*(const Complex& c, const Jet& j) { return j * c; }

// Identity jet at p.
inline Jet jet_var(double p) { return {{p, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}; }

inline Jet jet_const(Complex c) { return {c, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}; }

// Composition u(g) by Faa di Bruno, where u is given by its derivatives at
// g.f.  u0..u3 are u, u', u'', u''' evaluated at the inner value.
inline Jet jet_compose(const Complex& u0, const Complex& u1, const Complex& u2,
                       const Complex& u3, const Jet& g) {
  Jet out;
  out.f = u0;
  out.d1 = u1 * g.d1;
  out.d2 = u2 * g.d1 * g.d1 + u1 * g.d2;
  out.d3 = u3 * g.d1 * g.d1 * g.d1 + 3.0 * u2 * g.d1 * g.d2 + u1 * g.d3;
  return out;
}

inline Jet jet_exp(const Jet& g) {
  const Complex e = std::exp(g.f);
  return jet_compose(e, e, e, e, g);
}

// g^a for real exponent a; the inner value must avoid the branch cut
// (inner values in this library are real and positive).
inline Jet jet_pow(const Jet& g, double a) {
  const Complex u0 = std::pow(g.f, a);
  const Complex u1 = a * std::pow(g.f, a - 1.0);
  const Complex u2 = a * (a - 1.0) * std::pow(g.f, a - 2.0);
  const Complex u3 = a * (a - 1.0) * (a - 2.0) * std::pow(g.f, a - 3.0);
  return jet_compose(u0, u1, u2, u3, g);
}

// arcsin(s*p) as a jet in p, for real |s*p| < 1.
inline Jet jet_arcsin_scaled(double p, double s) {
  const double u = s * p;
  const double c2 = 1.0 - u * u;
  const double c = std::sqrt(c2);
  const double f0 = std::asin(u);
  const double f1 = 1.0 / c;
  const double f2 = u / (c2 * c);
  const double f3 = (1.0 + 2.0 * u * u) / (c2 * c2 * c);
  return {{f0, 0.0}, {s * f1, 0.0}, {s * s * f2, 0.0}, {s * s * s * f3, 0.0}};
}

// 1 - beta p^2 as a jet in p.
inline Jet jet_envelope(double p, double beta) {
  return {{1.0 - beta * p * p, 0.0}, {-2.0 * beta * p, 0.0}, {-2.0 * beta, 0.0}, {0.0, 0.0}};
}

// sqrt(1 - beta p^2) as a jet in p.
inline Jet jet_sqrt_envelope(double p, double beta) {
  return jet_pow(jet_envelope(p, beta), 0.5);
}

}  // namespace guplab
