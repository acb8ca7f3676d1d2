#pragma once

#include <cmath>

#include "pathtrack/multiprec.hpp"

namespace pathtrack {

// Complex scalar over any of the three real precision modes.
template <class Real>
struct Complex {
  Real re{};
  Real im{};

  constexpr Complex() = default;
  constexpr Complex(Real r) : re(r) {}
  constexpr Complex(Real r, Real i) : re(r), im(i) {}
};

template <class Real>
inline Complex<Real> operator-(const Complex<Real>& a) {
  return {-a.re, -a.im};
}

template <class Real>
inline Complex<Real> operator+(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re + b.re, a.im + b.im};
}

template <class Real>
inline Complex<Real> operator-(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re - b.re, a.im - b.im};
}

template <class Real>
inline Complex<Real> operator*(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class Real>
inline Complex<Real> operator*(const Complex<Real>& a, const Real& s) {
  return {a.re * s, a.im * s};
}

template <class Real>
inline Complex<Real> operator*(const Real& s, const Complex<Real>& a) {
  return a * s;
}

template <class Real>
inline Complex<Real> scale(const Complex<Real>& a, double s) {
  return {a.re * Real(s), a.im * Real(s)};
}

// Division with the denominator scaled by its larger component (Smith),
// so |ratio| <= 1 and squaring cannot overflow prematurely.
template <class Real>
inline Complex<Real> operator/(const Complex<Real>& a, const Complex<Real>& b) {
  if (std::fabs(to_double(b.re)) >= std::fabs(to_double(b.im))) {
    Real r = b.im / b.re;
    Real d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  Real r = b.re / b.im;
  Real d = b.im + b.re * r;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

template <class Real>
inline Complex<Real>& operator+=(Complex<Real>& a, const Complex<Real>& b) {
  return a = a + b;
}
template <class Real>
inline Complex<Real>& operator-=(Complex<Real>& a, const Complex<Real>& b) {
  return a = a - b;
}
template <class Real>
inline Complex<Real>& operator*=(Complex<Real>& a, const Complex<Real>& b) {
  return a = a * b;
}
template <class Real>
inline Complex<Real>& operator/=(Complex<Real>& a, const Complex<Real>& b) {
  return a = a / b;
}

template <class Real>
inline bool operator==(const Complex<Real>& a, const Complex<Real>& b) {
  return a.re == b.re && a.im == b.im;
}
template <class Real>
inline bool operator!=(const Complex<Real>& a, const Complex<Real>& b) {
  return !(a == b);
}

template <class Real>
inline Complex<Real> conj(const Complex<Real>& a) {
  return {a.re, -a.im};
}

template <class Real>
inline Real norm_sqr(const Complex<Real>& a) {
  return a.re * a.re + a.im * a.im;
}

template <class Real>
inline Real modulus(const Complex<Real>& a) {
  using pathtrack::sqrt;
  using std::sqrt;
  return sqrt(norm_sqr(a));
}

/// |a| rounded through plain binary64, as used by all norm tests.
template <class Real>
inline double modulus_double(const Complex<Real>& a) {
  return std::hypot(to_double(a.re), to_double(a.im));
}

template <class Real>
inline bool is_finite(const Complex<Real>& a) {
  return is_finite(a.re) && is_finite(a.im);
}

/// Principal square root; needed to solve the witness quadratics.
template <class Real>
inline Complex<Real> sqrt(const Complex<Real>& z) {
  using pathtrack::abs;
  using pathtrack::sqrt;
  using std::abs;
  using std::sqrt;
  Real m = modulus(z);
  if (to_double(m) == 0.0) return {};
  Real u = sqrt((m + abs(z.re)) * Real(0.5));
  if (to_double(z.re) >= 0.0) return {u, z.im / (u + u)};
  Real v = to_double(z.im) >= 0.0 ? u : -u;
  return {abs(z.im) / (u + u), v};
}

/// The point e^{i*theta} on the unit circle, constructed through the
/// tan-half-angle parametrization so |result| = 1 to working precision
/// in every mode (binary64 sin/cos would be 1e-17 off, visible in DD/QD).
template <class Real>
inline Complex<Real> unit_complex(double theta) {
  double t = std::tan(0.5 * theta);
  if (!std::isfinite(t)) return {Real(-1.0), Real(0.0)};
  Real tt = Real(t) * Real(t);
  Real den = Real(1.0) + tt;
  return {(Real(1.0) - tt) / den, (Real(t) + Real(t)) / den};
}

template <class Real>
inline Complex<Real> complex_from(double re, double im = 0.0) {
  return {Real(re), Real(im)};
}

template <class Real>
using Point = std::vector<Complex<Real>>;

}  // namespace pathtrack
