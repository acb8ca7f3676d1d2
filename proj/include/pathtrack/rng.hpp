#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "pathtrack/complex.hpp"

namespace pathtrack {

// Seeded random source.  All distributions are derived from the raw 64-bit
// stream by fixed arithmetic so that runs are bit-reproducible everywhere
// (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform angle in [0, 2*pi).
  double angle() { return 2.0 * std::numbers::pi * uniform01(); }

  /// Random complex with re, im uniform in [-1, 1).
  template <class Real>
  Complex<Real> box() {
    double re = uniform(-1.0, 1.0);
    double im = uniform(-1.0, 1.0);
    return complex_from<Real>(re, im);
  }

  /// Random point on the unit circle, |result| = 1 to mode precision.
  template <class Real>
  Complex<Real> unit() {
    return unit_complex<Real>(angle());
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pathtrack
