#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathtrack/complex.hpp"
#include "pathtrack/multiprec.hpp"

// Bit-exact textual exchange of extended-precision values: each real number
// is an array of hex-encoded binary64 components, e.g. "#(3ff0000000000000)"
// for 1.0 in double or "#(4000000000000000 0000000000000000)" in DD.

namespace pathtrack {

std::string hex_encode_limb(double value);
double hex_decode_limb(std::string_view text);  // exactly 16 hex digits

std::string hex_limbs(std::span<const double> limbs);

// Parses "#(h1 h2 ...)"; throws std::invalid_argument on malformed input.
std::vector<double> parse_hex_limbs(std::string_view text);

template <class Real>
std::string hex_real(const Real& value) {
  auto limbs = RealTraits<Real>::components(value);
  return hex_limbs(std::span<const double>(limbs.data(), limbs.size()));
}

template <class Real>
Real real_from_limbs(std::span<const double> limbs) {
  return RealTraits<Real>::from_components(limbs.data(), static_cast<int>(limbs.size()));
}

template <class Real>
std::string hex_complex(const Complex<Real>& value) {
  return hex_real(value.re) + "+i" + hex_real(value.im);
}

}  // namespace pathtrack
