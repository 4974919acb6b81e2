#pragma once

#include <cstdint>
#include <stdexcept>

#include "pellcf/bigint.hpp"

namespace pellcf {

/// x + y*sqrt(d) with d carried alongside. Used for exact powers of units.
struct QuadraticInt {
  BigInt x;
  BigInt y;
  BigInt d;

  BigInt norm() const { return x * x - d * y * y; }

  friend QuadraticInt operator*(const QuadraticInt& lhs, const QuadraticInt& rhs) {
    if (lhs.d != rhs.d) throw std::logic_error("multiplying elements of different quadratic rings");
    return {lhs.x * rhs.x + lhs.d * lhs.y * rhs.y, lhs.x * rhs.y + rhs.x * lhs.y, lhs.d};
  }

  friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;
};

inline QuadraticInt pow(QuadraticInt base, std::uint64_t exponent) {
  QuadraticInt result{1, 0, base.d};
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

/// (u + v*sqrt(D)) / 2 with u = v (mod 2) and D = k^2 + 4s for some k.
/// Products stay in this set, so every halving below is exact.
struct HalfQuadratic {
  BigInt u;
  BigInt v;
  BigInt disc;

  friend HalfQuadratic operator*(const HalfQuadratic& lhs, const HalfQuadratic& rhs) {
    if (lhs.disc != rhs.disc) throw std::logic_error("multiplying elements of different quadratic rings");
    BigInt u2 = lhs.u * rhs.u + lhs.disc * lhs.v * rhs.v;
    BigInt v2 = lhs.u * rhs.v + rhs.u * lhs.v;
    if (u2 % 2 != 0 || v2 % 2 != 0) throw std::logic_error("half-integer product is not exact");
    return {u2 / 2, v2 / 2, lhs.disc};
  }
};

inline HalfQuadratic pow(HalfQuadratic base, std::uint64_t exponent) {
  HalfQuadratic result{2, 0, base.disc};
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace pellcf
