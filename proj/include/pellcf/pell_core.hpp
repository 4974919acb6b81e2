#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/cf_engine.hpp"
#include "pellcf/error.hpp"
#include "pellcf/quadratic.hpp"
#include "pellcf/solution.hpp"

namespace pellcf {

/// True iff x^2 - d*y^2 == n exactly.
inline bool verify(const BigInt& d, const BigInt& n, const BigInt& x, const BigInt& y) {
  return x * x - d * y * y == n;
}

inline bool verify(const BigInt& d, Rhs rhs, const PellSolution& s) { return verify(d, value(rhs), s.x, s.y); }

/// Minimal positive solution of x^2 - d*y^2 = 1: the convergent at index
/// m-1 when the period length m is even, 2m-1 when it is odd.
inline PellSolution fundamental_unit(const BigInt& d) {
  const CFExpansion cf = cf_expand_sqrt(d);
  const std::size_t m = cf.m();
  const std::size_t index = (m % 2 == 0) ? m - 1 : 2 * m - 1;
  auto conv = convergents(cf, index + 1);
  return {std::move(conv.back().p), std::move(conv.back().q)};
}

/// x^2 - d*y^2 = -1 is solvable iff the period of sqrt(d) is odd, in which
/// case (p_{m-1}, q_{m-1}) is the fundamental solution.
inline Verdict fundamental_neg_one(const BigInt& d) {
  const CFExpansion cf = cf_expand_sqrt(d);
  const std::size_t m = cf.m();
  if (m % 2 == 0) return Verdict::unsolvable(Reason::even_period);
  auto conv = convergents(cf, m);
  return Verdict::solvable({std::move(conv.back().p), std::move(conv.back().q)});
}

namespace detail {

inline BigInt mod4(const BigInt& d) { return d % 4; }

/// Integer root of x^3 - 3x = t, if any (t > 0).
inline std::optional<BigInt> depressed_cubic_root(const BigInt& t) {
  // Real root lies just above cbrt(t); bracket it and bisect.
  BigInt lo = 0, hi = 2;
  while (hi * hi * hi - 3 * hi < t) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid - 3 * mid < t) lo = mid + 1;
    else hi = mid;
  }
  if (lo * lo * lo - 3 * lo == t) return lo;
  return std::nullopt;
}

/// Odd primes p = 3 (mod 4) make -4 a non-residue modulo p; d = 0 (mod 16)
/// would force (x/2)^2 + 1 = 0 (mod 4). Only small factors are tested.
inline bool neg_four_obstructed(const BigInt& d) {
  if (d % 16 == 0) return true;
  static constexpr std::array<int, 12> kSmallPrimes = {3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79};
  for (int p : kSmallPrimes) {
    if (d % p == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Minimal positive solution of x^2 - d*y^2 = 4.
///
///  - d = 0 (mod 4): x is even, so (x/2)^2 - (d/4)y^2 = 1 and the answer is
///    (2x1, y1) from the unit equation of d/4.
///  - d = 2, 3 (mod 4): both coordinates are forced even; answer (2x1, 2y1).
///  - d = 1 (mod 4): odd-coordinate solutions may be smaller. Such a solution
///    (x, y) gives the unit e = (x + y*sqrt d)/2, and then e^3 = x1 + y1*sqrt d,
///    so x satisfies x^3 - 3x = 2*x1. We solve that cubic exactly instead of
///    searching up to 2*x1.
inline PellSolution solve_four(const BigInt& d) {
  require_nonsquare(d);
  const BigInt r = detail::mod4(d);
  if (r == 0) {
    PellSolution half = fundamental_unit(d / 4);
    return {2 * half.x, std::move(half.y)};
  }
  PellSolution unit = fundamental_unit(d);
  if (r == 1) {
    if (auto x = detail::depressed_cubic_root(2 * unit.x); x && *x % 2 != 0) {
      const BigInt y_sq = (*x * *x - 4) / d;
      if (y_sq * d == *x * *x - 4 && is_perfect_square(y_sq)) {
        return {*x, isqrt(y_sq)};
      }
    }
  }
  return {2 * unit.x, 2 * unit.y};
}

/// Fundamental solution of x^2 - d*y^2 = -4, if any.
///
///  - d = 2, 3 (mod 4): both coordinates must be even, so solutions are
///    exactly twice those of x^2 - d*y^2 = -1.
///  - d = 0 (mod 4): x is even; reduce to (x/2)^2 - (d/4)y^2 = -1 and lift.
///  - d = 1 (mod 4): if e = (x + y*sqrt d)/2 has norm -1 then e^2 is the
///    fundamental solution (X, Y) of the +4 equation, whence X = x^2 + 2.
///    So x = sqrt(X - 2) when that is an integer and yields an integral y.
inline Verdict solve_neg_four(const BigInt& d) {
  require_nonsquare(d);
  if (detail::neg_four_obstructed(d)) return Verdict::unsolvable(Reason::modular_obstruction);
  const BigInt r = detail::mod4(d);
  if (r == 2 || r == 3) {
    Verdict minus_one = fundamental_neg_one(d);
    if (!minus_one.is_solvable()) return Verdict::unsolvable(Reason::reduction);
    return Verdict::solvable({2 * minus_one.fundamental->x, 2 * minus_one.fundamental->y}, Reason::reduction);
  }
  if (r == 0) {
    Verdict quarter = fundamental_neg_one(d / 4);
    if (!quarter.is_solvable()) return Verdict::unsolvable(Reason::reduction);
    return Verdict::solvable({2 * quarter.fundamental->x, quarter.fundamental->y}, Reason::reduction);
  }
  const PellSolution plus_four = solve_four(d);
  const BigInt t = plus_four.x - 2;
  const BigInt x = isqrt(t);
  if (x == 0 || x * x != t) return Verdict::unsolvable(Reason::reduction);
  const BigInt y_sq = (t + 4) / d;
  if (y_sq * d != t + 4 || !is_perfect_square(y_sq)) return Verdict::unsolvable(Reason::reduction);
  return Verdict::solvable({x, isqrt(y_sq)}, Reason::reduction);
}

/// Fundamental-solution verdict for any supported right-hand side.
inline Verdict fundamental(const BigInt& d, Rhs rhs) {
  switch (rhs) {
    case Rhs::one: return Verdict::solvable(fundamental_unit(d));
    case Rhs::neg_one: return fundamental_neg_one(d);
    case Rhs::four: return Verdict::solvable(solve_four(d));
    case Rhs::neg_four: return solve_neg_four(d);
  }
  throw Error(Errc::out_of_domain, "unsupported right-hand side");
}

/// The power and the power-of-two divisor that produce the n-th solution:
/// N=1: f^n; N=-1: f^(2n-1); N=4: f^n / 2^(n-1); N=-4: f^(2n-1) / 2^(2n-2).
struct IterationTerm {
  QuadraticInt numerator;
  std::uint64_t shift = 0;
};

inline IterationTerm iteration_term(const BigInt& d, Rhs rhs, const PellSolution& fund, std::uint64_t n) {
  if (n == 0) throw Error(Errc::out_of_domain, "solution index starts at 1");
  const QuadraticInt base{fund.x, fund.y, d};
  switch (rhs) {
    case Rhs::one: return {pow(base, n), 0};
    case Rhs::neg_one: return {pow(base, 2 * n - 1), 0};
    case Rhs::four: return {pow(base, n), n - 1};
    case Rhs::neg_four: return {pow(base, 2 * n - 1), 2 * n - 2};
  }
  throw Error(Errc::out_of_domain, "unsupported right-hand side");
}

/// Divides both coordinates by 2^shift, failing loudly if the division is
/// not exact.
inline PellSolution exact_halve(const IterationTerm& term) {
  const BigInt divisor = BigInt(1) << term.shift;
  if (term.numerator.x % divisor != 0 || term.numerator.y % divisor != 0) {
    throw std::logic_error("iteration numerator is not divisible by 2^" + std::to_string(term.shift));
  }
  return {term.numerator.x / divisor, term.numerator.y / divisor};
}

/// The n-th positive solution (n >= 1) in increasing order.
inline PellSolution iterate_solutions(const BigInt& d, Rhs rhs, std::uint64_t n) {
  const Verdict v = fundamental(d, rhs);
  if (!v.is_solvable()) {
    throw Error(Errc::not_solvable, "x^2 - " + to_decimal(d) + "y^2 = " + std::to_string(value(rhs)) + " has no solutions");
  }
  return exact_halve(iteration_term(d, rhs, *v.fundamental, n));
}

/// First `count` positive solutions, generated by repeated multiplication
/// with the smallest unit that maps solutions to solutions.
inline std::vector<PellSolution> enumerate_solutions(const BigInt& d, Rhs rhs, std::size_t count) {
  const Verdict v = fundamental(d, rhs);
  if (!v.is_solvable()) {
    throw Error(Errc::not_solvable, "x^2 - " + to_decimal(d) + "y^2 = " + std::to_string(value(rhs)) + " has no solutions");
  }
  std::vector<PellSolution> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(*v.fundamental);
  if (rhs == Rhs::one || rhs == Rhs::neg_one) {
    const PellSolution step = rhs == Rhs::one ? *v.fundamental : fundamental_unit(d);
    const QuadraticInt unit{step.x, step.y, d};
    QuadraticInt cur{v.fundamental->x, v.fundamental->y, d};
    while (out.size() < count) {
      cur = cur * unit;
      out.push_back({cur.x, cur.y});
    }
  } else {
    // Solutions of +-4 are the units (x + y sqrt d)/2; the step is the
    // fundamental +4 unit in the same half-integer form.
    const PellSolution step = rhs == Rhs::four ? *v.fundamental : solve_four(d);
    const HalfQuadratic unit{step.x, step.y, d};
    HalfQuadratic cur{v.fundamental->x, v.fundamental->y, d};
    while (out.size() < count) {
      cur = cur * unit;
      out.push_back({cur.u, cur.v});
    }
  }
  return out;
}

enum class Sign { plus, minus };

/// Combines a solution (g, h) of x^2 - d*y^2 = N with a unit (r, s) into
/// (g*r +- d*h*s, g*s +- h*r), which solves the same equation.
inline PellSolution compose(const BigInt& g, const BigInt& h, const BigInt& r, const BigInt& s, const BigInt& d,
                            Sign sign) {
  if (!verify(d, 1, r, s)) {
    throw Error(Errc::bad_unit, "(" + to_decimal(r) + "," + to_decimal(s) + ") does not solve x^2 - " +
                                    to_decimal(d) + "y^2 = 1");
  }
  BigInt x = sign == Sign::plus ? g * r + d * h * s : g * r - d * h * s;
  BigInt y = sign == Sign::plus ? g * s + h * r : g * s - h * r;
  return {abs(x), abs(y)};
}

}  // namespace pellcf
