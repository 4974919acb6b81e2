#pragma once

#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pellcf/error.hpp"

namespace pellcf {

// Expression templates off: values, not lazy expressions, flow through auto
// and the conditional operator.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using u128 = unsigned __int128;

/// Integer square root: the largest r with r*r <= n.
///
/// Newton's iteration from an initial guess above the root decreases
/// monotonically to floor(sqrt(n)); a final correction step makes the
/// result exact even if the loop stops one short.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::out_of_domain, "isqrt of a negative number");
  if (n < 2) return n;
  const auto bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// Native-width integer square root. The floating-point value is only a
/// seed; the integer correction loops make the result exact.
template <std::unsigned_integral U>
constexpr U isqrt(U n) {
  if (n < 2) return n;
  U x = static_cast<U>(std::sqrt(static_cast<long double>(n)));
  const auto sq = [](U v) { return static_cast<u128>(v) * v; };
  while (sq(x) > n) --x;
  while (sq(x + 1) <= n) ++x;
  return x;
}

inline u128 isqrt(u128 n) {
  if (n < 2) return n;
  // Seeding from long double leaves at most a few units of error below 2^126.
  u128 x = static_cast<u128>(sqrtl(static_cast<long double>(n)));
  while (x > 0 && x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt r = isqrt(n);
  return r * r == n;
}

/// Parses a signed decimal integer; rejects anything else.
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(Errc::out_of_domain, "expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(Errc::out_of_domain, "expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value{std::string(digits)};
  return text.front() == '-' ? BigInt(-value) : value;
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace pellcf
