#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fullerene {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt to_big(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value) : value;
  BigInt out = static_cast<std::uint64_t>(magnitude >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-out) : out;
}

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline double to_double(const BigInt& value) { return value.convert_to<double>(); }

/// Natural logarithm of a positive big integer without overflowing a double.
inline double log_of(const BigInt& value) {
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 1000) return std::log(value.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace fullerene
