#include "pathtrack/hexio.hpp"

#include <cstring>
#include <stdexcept>

namespace pathtrack {

namespace {

constexpr char kDigits[] = "0123456789abcdef";

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string hex_encode_limb(double value) {
  std::uint64_t bits;
  std::memcpy(&bits, &value, sizeof bits);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[bits & 0xf];
    bits >>= 4;
  }
  return out;
}

double hex_decode_limb(std::string_view text) {
  if (text.size() != 16) throw std::invalid_argument("hex limb must be 16 digits");
  std::uint64_t bits = 0;
  for (char c : text) {
    int v = nibble(c);
    if (v < 0) throw std::invalid_argument("invalid hex digit in limb");
    bits = (bits << 4) | static_cast<std::uint64_t>(v);
  }
  double value;
  std::memcpy(&value, &bits, sizeof value);
  return value;
}

std::string hex_limbs(std::span<const double> limbs) {
  std::string out = "#(";
  for (std::size_t i = 0; i < limbs.size(); ++i) {
    if (i) out += ' ';
    out += hex_encode_limb(limbs[i]);
  }
  out += ')';
  return out;
}

std::vector<double> parse_hex_limbs(std::string_view text) {
  if (text.size() < 4 || text.substr(0, 2) != "#(" || text.back() != ')')
    throw std::invalid_argument("hex limb array must look like #(...)");
  std::vector<double> out;
  std::size_t i = 2;
  const std::size_t end = text.size() - 1;
  while (i < end) {
    while (i < end && text[i] == ' ') ++i;
    if (i >= end) break;
    if (end - i < 16) throw std::invalid_argument("truncated hex limb");
    out.push_back(hex_decode_limb(text.substr(i, 16)));
    i += 16;
  }
  if (out.empty()) throw std::invalid_argument("empty hex limb array");
  return out;
}

}  // namespace pathtrack
