#include <cfenv>
#include <stdexcept>
#include <string>

#include "pathtrack/multiprec.hpp"

namespace pathtrack {

const char* to_string(PrecisionMode mode) {
  switch (mode) {
    case PrecisionMode::D:
      return "d";
    case PrecisionMode::DD:
      return "dd";
    case PrecisionMode::QD:
      return "qd";
  }
  return "?";
}

PrecisionMode parse_precision(std::string_view text) {
  if (text == "d") return PrecisionMode::D;
  if (text == "dd") return PrecisionMode::DD;
  if (text == "qd") return PrecisionMode::QD;
  throw std::invalid_argument("unknown precision mode '" + std::string(text) +
                              "' (expected d, dd, or qd)");
}

namespace {

// volatile blocks constant folding of the probes below
volatile double v_one = 1.0;
volatile double v_eps = 0x1p-53;

}  // namespace

void assert_ieee_environment() {
  if (std::fegetround() != FE_TONEAREST)
    throw std::runtime_error("rounding mode is not round-to-nearest-even");
  double sum = v_one + v_eps;  // 1 + 2^-53 ties to even: exactly 1.0
  if (sum != 1.0) throw std::runtime_error("binary64 addition is not rounding to nearest");
  double tie = v_one + 3.0 * v_eps;  // 1 + 3*2^-53 ties away from 1.0
  if (tie <= 1.0) throw std::runtime_error("binary64 addition lost the tie probe");
}

}  // namespace pathtrack
