#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ternrec/modarith.hpp"

namespace ternrec {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt to_big(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  BigInt out = static_cast<u64>(mag >> 64);
  out <<= 64;
  out += static_cast<u64>(mag);
  return neg ? BigInt(-out) : out;
}

/// Least non-negative residue of an arbitrary-precision integer.
inline u64 reduce(const BigInt& v, u64 m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<u64>();
}

}  // namespace ternrec
