#pragma once

#include <array>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

// Software double-double and quad-double arithmetic built on error-free
// floating-point transformations.  All algorithms assume IEEE-754 binary64
// with round-to-nearest-even and no extended intermediate precision; call
// assert_ieee_environment() once at program start.
//
// Error bounds promised (relative, against exact arithmetic, barring
// intermediate under/overflow):
//   DD:  2^-104 for +,-,*     2^-102 for /, sqrt
//   QD:  2^-209 for +,-,*     2^-206 for /, sqrt

static_assert(FLT_EVAL_METHOD == 0, "extended intermediate precision breaks error-free transforms");

namespace pathtrack {

enum class PrecisionMode { D, DD, QD };  // totally ordered: D < DD < QD

const char* to_string(PrecisionMode mode);
PrecisionMode parse_precision(std::string_view text);  // "d" | "dd" | "qd"

// Verifies round-to-nearest and SSE-style binary64 evaluation at runtime.
// Throws std::runtime_error on a hostile FP environment.
void assert_ieee_environment();

namespace eft {

/// s = fl(a+b), s + e = a + b exactly.  No precondition beyond finiteness.
inline double two_sum(double a, double b, double& e) {
  double s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
  return s;
}

/// Branchless variant requiring |a| >= |b| (or a == 0).
inline double fast_two_sum(double a, double b, double& e) {
  double s = a + b;
  e = b - (s - a);
  return s;
}

inline void split(double a, double& hi, double& lo) {
  constexpr double splitter = 134217729.0;  // 2^27 + 1
  double t = splitter * a;
  hi = t - (t - a);
  lo = a - hi;
}

/// p = fl(a*b), p + e = a*b exactly, via Dekker splitting.
inline double two_prod_split(double a, double b, double& e) {
  double p = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
  return p;
}

/// p = fl(a*b), p + e = a*b exactly, via fused multiply-add.
inline double two_prod_fma(double a, double b, double& e) {
  double p = a * b;
  e = std::fma(a, b, -p);
  return p;
}

inline double two_prod(double a, double b, double& e) {
#if defined(FP_FAST_FMA)
  return two_prod_fma(a, b, e);
#else
  return two_prod_split(a, b, e);
#endif
}

}  // namespace eft

// ---------------------------------------------------------------------------
// DoubleDouble: value is exactly hi + lo, with |lo| <= 1/2 ulp(hi).
// ---------------------------------------------------------------------------

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h) {}
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

inline DoubleDouble dd_norm(double h, double l) {
  if (!std::isfinite(h)) return {h, 0.0};
  double e;
  double s = eft::fast_two_sum(h, l, e);
  return {s, e};
}

}  // namespace detail

inline DoubleDouble renormalize(DoubleDouble a) { return detail::dd_norm(a.hi, a.lo); }

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  double s2, t2;
  double s1 = eft::two_sum(a.hi, b.hi, s2);
  double t1 = eft::two_sum(a.lo, b.lo, t2);
  s2 += t1;
  s1 = eft::fast_two_sum(s1, s2, s2);
  s2 += t2;
  return detail::dd_norm(s1, s2);
}

inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  double e;
  double p = eft::two_prod(a.hi, b.hi, e);
  e += (a.hi * b.lo + a.lo * b.hi) + a.lo * b.lo;
  return detail::dd_norm(p, e);
}

inline DoubleDouble operator*(DoubleDouble a, double b) {
  double e;
  double p = eft::two_prod(a.hi, b, e);
  e += a.lo * b;
  return detail::dd_norm(p, e);
}

inline DoubleDouble operator*(double a, DoubleDouble b) { return b * a; }

// Quotient by iterated refinement: binary64 quotient estimates against the
// leading limb, residual recomputed in full precision each round.
inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  double q1 = a.hi / b.hi;
  if (!std::isfinite(q1)) return {q1, 0.0};
  DoubleDouble r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  double e;
  double s = eft::fast_two_sum(q1, q2, e);
  return DoubleDouble{s, e} + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DoubleDouble a, DoubleDouble b) { return !(a == b); }
inline bool operator<(DoubleDouble a, DoubleDouble b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DoubleDouble a, DoubleDouble b) { return b < a; }
inline bool operator<=(DoubleDouble a, DoubleDouble b) { return !(b < a); }
inline bool operator>=(DoubleDouble a, DoubleDouble b) { return !(a < b); }

inline double to_double(DoubleDouble a) { return a.hi; }
inline bool is_finite(DoubleDouble a) { return std::isfinite(a.hi); }

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DoubleDouble sqrt(DoubleDouble a) {
  if (a.hi == 0.0 && a.lo == 0.0) return {0.0, 0.0};
  if (a.hi < 0.0) throw std::domain_error("sqrt of negative double-double");
  // Newton refinement of the binary64 seed; two rounds leave headroom
  // below the promised 4-ulp bound.
  double x = 1.0 / std::sqrt(a.hi);
  double half_x = 0.5 * x;
  DoubleDouble s(a.hi * x);
  DoubleDouble r = a - s * s;
  s += DoubleDouble(r.hi * half_x);
  r = a - s * s;
  s += DoubleDouble(r.hi * half_x);
  return s;
}

// ---------------------------------------------------------------------------
// QuadDouble: value is exactly c[0] + c[1] + c[2] + c[3], components
// non-overlapping with decreasing magnitude.
// ---------------------------------------------------------------------------

struct QuadDouble {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  constexpr QuadDouble() = default;
  constexpr QuadDouble(double x) : c{x, 0.0, 0.0, 0.0} {}
  constexpr QuadDouble(double c0, double c1, double c2, double c3) : c{c0, c1, c2, c3} {}
};

namespace detail {

// Compresses five roughly ordered components to a canonical four-component
// expansion.  two_sum is used throughout (unconditionally exact), so mild
// ordering violations in the input cost nothing.
inline QuadDouble qd_renorm5(double c0, double c1, double c2, double c3, double c4) {
  if (!std::isfinite(c0)) return {c0, 0.0, 0.0, 0.0};
  double s0, s1, s2 = 0.0, s3 = 0.0;
  s0 = eft::two_sum(c3, c4, c4);
  s0 = eft::two_sum(c2, s0, c3);
  s0 = eft::two_sum(c1, s0, c2);
  c0 = eft::two_sum(c0, s0, c1);
  s0 = c0;
  s1 = c1;
  if (s1 != 0.0) {
    s1 = eft::two_sum(s1, c2, s2);
    if (s2 != 0.0) {
      s2 = eft::two_sum(s2, c3, s3);
      if (s3 != 0.0)
        s3 += c4;
      else
        s2 = eft::two_sum(s2, c4, s3);
    } else {
      s1 = eft::two_sum(s1, c3, s2);
      if (s2 != 0.0)
        s2 = eft::two_sum(s2, c4, s3);
      else
        s1 = eft::two_sum(s1, c4, s2);
    }
  } else {
    s0 = eft::two_sum(s0, c2, s1);
    if (s1 != 0.0) {
      s1 = eft::two_sum(s1, c3, s2);
      if (s2 != 0.0)
        s2 = eft::two_sum(s2, c4, s3);
      else
        s1 = eft::two_sum(s1, c4, s2);
    } else {
      s0 = eft::two_sum(s0, c3, s1);
      if (s1 != 0.0)
        s1 = eft::two_sum(s1, c4, s2);
      else
        s0 = eft::two_sum(s0, c4, s1);
    }
  }
  return {s0, s1, s2, s3};
}

// Builds a QuadDouble from addends whose exact sum is the intended value.
// Strategy: order by magnitude, run two bottom-up compensation sweeps
// (two_sum networks preserve the exact total), fold the tail, renormalize.
// The only information loss is the final truncation, far below 2^-209.
template <std::size_t Cap>
inline QuadDouble qd_distill(std::array<double, Cap>& m, int k) {
  // insertion sort by decreasing magnitude; k is small and bounded by Cap
  for (int i = 1; i < k; ++i) {
    double v = m[i];
    double av = std::fabs(v);
    int j = i - 1;
    while (j >= 0 && std::fabs(m[j]) < av) {
      m[j + 1] = m[j];
      --j;
    }
    m[j + 1] = v;
  }
  if (!std::isfinite(m[0])) return {m[0], 0.0, 0.0, 0.0};
  for (int pass = 0; pass < 2; ++pass)
    for (int i = k - 1; i >= 1; --i) m[i - 1] = eft::two_sum(m[i - 1], m[i], m[i]);
  double tail = 0.0;
  for (int i = k - 1; i >= 4; --i) tail += m[i];
  double c0 = k > 0 ? m[0] : 0.0;
  double c1 = k > 1 ? m[1] : 0.0;
  double c2 = k > 2 ? m[2] : 0.0;
  double c3 = k > 3 ? m[3] : 0.0;
  return qd_renorm5(c0, c1, c2, c3, tail);
}

}  // namespace detail

inline QuadDouble renormalize(const QuadDouble& a) {
  std::array<double, 4> m{a.c[0], a.c[1], a.c[2], a.c[3]};
  return detail::qd_distill(m, 4);
}

inline QuadDouble operator-(const QuadDouble& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }

inline QuadDouble operator+(const QuadDouble& a, const QuadDouble& b) {
  std::array<double, 8> m{a.c[0], a.c[1], a.c[2], a.c[3], b.c[0], b.c[1], b.c[2], b.c[3]};
  return detail::qd_distill(m, 8);
}

inline QuadDouble operator-(const QuadDouble& a, const QuadDouble& b) { return a + (-b); }

inline QuadDouble operator*(const QuadDouble& a, const QuadDouble& b) {
  // Exact partial products for component pairs down to 2^-159 relative,
  // plain products for the 2^-208 band, everything below is dropped.
  std::array<double, 23> m;
  int k = 0;
  double e;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j + i <= 3; ++j) {
      m[k++] = eft::two_prod(a.c[i], b.c[j], e);
      m[k++] = e;
    }
  m[k++] = a.c[1] * b.c[3];
  m[k++] = a.c[2] * b.c[2];
  m[k++] = a.c[3] * b.c[1];
  return detail::qd_distill(m, k);
}

inline QuadDouble operator*(const QuadDouble& a, double b) {
  std::array<double, 8> m;
  int k = 0;
  double e;
  for (int i = 0; i <= 3; ++i) {
    m[k++] = eft::two_prod(a.c[i], b, e);
    m[k++] = e;
  }
  return detail::qd_distill(m, k);
}

inline QuadDouble operator*(double a, const QuadDouble& b) { return b * a; }

inline QuadDouble operator/(const QuadDouble& a, const QuadDouble& b) {
  double q0 = a.c[0] / b.c[0];
  if (!std::isfinite(q0)) return {q0, 0.0, 0.0, 0.0};
  std::array<double, 5> q;
  QuadDouble r = a;
  for (int i = 0; i < 5; ++i) {
    q[i] = r.c[0] / b.c[0];
    r = r - b * q[i];
  }
  return detail::qd_distill(q, 5);
}

inline QuadDouble& operator+=(QuadDouble& a, const QuadDouble& b) { return a = a + b; }
inline QuadDouble& operator-=(QuadDouble& a, const QuadDouble& b) { return a = a - b; }
inline QuadDouble& operator*=(QuadDouble& a, const QuadDouble& b) { return a = a * b; }
inline QuadDouble& operator/=(QuadDouble& a, const QuadDouble& b) { return a = a / b; }

inline bool operator==(const QuadDouble& a, const QuadDouble& b) { return a.c == b.c; }
inline bool operator!=(const QuadDouble& a, const QuadDouble& b) { return !(a == b); }
inline bool operator<(const QuadDouble& a, const QuadDouble& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] < b.c[i]) return true;
    if (a.c[i] > b.c[i]) return false;
  }
  return false;
}
inline bool operator>(const QuadDouble& a, const QuadDouble& b) { return b < a; }
inline bool operator<=(const QuadDouble& a, const QuadDouble& b) { return !(b < a); }
inline bool operator>=(const QuadDouble& a, const QuadDouble& b) { return !(a < b); }

inline double to_double(const QuadDouble& a) { return a.c[0]; }
inline bool is_finite(const QuadDouble& a) { return std::isfinite(a.c[0]); }

inline QuadDouble abs(const QuadDouble& a) {
  return a.c[0] < 0.0 || (a.c[0] == 0.0 && a.c[1] < 0.0) ? -a : a;
}

inline QuadDouble sqrt(const QuadDouble& a) {
  if (a.c[0] == 0.0 && a.c[1] == 0.0 && a.c[2] == 0.0 && a.c[3] == 0.0) return {};
  if (a.c[0] < 0.0) throw std::domain_error("sqrt of negative quad-double");
  // reciprocal square root iteration: division-free, quadratic convergence
  QuadDouble x(1.0 / std::sqrt(a.c[0]));
  const QuadDouble one(1.0);
  for (int i = 0; i < 3; ++i) x = x + x * ((one - a * (x * x)) * 0.5);
  return a * x;
}

// double overloads so generic code can use unqualified calls uniformly
inline double to_double(double a) { return a; }
inline bool is_finite(double a) { return std::isfinite(a); }
inline double renormalize(double a) { return a; }

// ---------------------------------------------------------------------------
// Traits tying the three precision modes together.
// ---------------------------------------------------------------------------

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
  static constexpr PrecisionMode mode = PrecisionMode::D;
  static constexpr int limbs = 1;
  static constexpr double epsilon = 0x1p-52;
  static constexpr double newton_tolerance = 1e-8;
  static constexpr const char* name = "d";
  static std::array<double, 1> components(double a) { return {a}; }
  static double from_components(const double* limbs_, int count) {
    return count > 0 ? limbs_[0] : 0.0;
  }
};

template <>
struct RealTraits<DoubleDouble> {
  static constexpr PrecisionMode mode = PrecisionMode::DD;
  static constexpr int limbs = 2;
  static constexpr double epsilon = 0x1p-104;
  static constexpr double newton_tolerance = 1e-20;
  static constexpr const char* name = "dd";
  static std::array<double, 2> components(DoubleDouble a) { return {a.hi, a.lo}; }
  static DoubleDouble from_components(const double* limbs_, int count) {
    DoubleDouble r;
    for (int i = 0; i < count && i < 2; ++i) r += DoubleDouble(limbs_[i]);
    return r;
  }
};

template <>
struct RealTraits<QuadDouble> {
  static constexpr PrecisionMode mode = PrecisionMode::QD;
  static constexpr int limbs = 4;
  static constexpr double epsilon = 0x1p-209;
  static constexpr double newton_tolerance = 1e-44;
  static constexpr const char* name = "qd";
  static std::array<double, 4> components(const QuadDouble& a) {
    return {a.c[0], a.c[1], a.c[2], a.c[3]};
  }
  static QuadDouble from_components(const double* limbs_, int count) {
    std::array<double, 4> m{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < count && i < 4; ++i) m[i] = limbs_[i];
    return detail::qd_distill(m, count < 4 ? count : 4);
  }
};

/// Integer power by binary exponentiation (e >= 0).
template <class Real>
Real powi(Real base, unsigned e) {
  Real result(1.0);
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

}  // namespace pathtrack
