#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/cf_engine.hpp"
#include "pellcf/error.hpp"
#include "pellcf/lucas_seq.hpp"
#include "pellcf/pell_core.hpp"
#include "pellcf/solution.hpp"

// Closed forms for d = a^2 + 2a = (a+1)^2 - 1:
//   sqrt(d) = [a; 1, 2a, 1, 2a, ...]
//   x^2 - d y^2 = 1   : (a+1, 1) fundamental, n-th = (V_n/2, U_n) with (k,s) = (2a+2, -1)
//   x^2 - d y^2 = -1  : never solvable (period 2)
//   x^2 - d y^2 = 4   : (2a+2, 2) fundamental, n-th = (V_n, 2 U_n)
//   x^2 - d y^2 = -4  : never solvable once a > 2

#ifndef PELLCF_VERIFY_OUTPUTS
#ifdef NDEBUG
#define PELLCF_VERIFY_OUTPUTS 0
#else
#define PELLCF_VERIFY_OUTPUTS 1
#endif
#endif

namespace pellcf {

class FamilyParam {
 public:
  explicit FamilyParam(BigInt a) : a_(std::move(a)) {
    if (a_ < 1) throw Error(Errc::out_of_domain, "family parameter a must be at least 1, got " + to_decimal(a_));
    d_ = a_ * a_ + 2 * a_;
  }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& d() const noexcept { return d_; }

 private:
  BigInt a_;
  BigInt d_;
};

/// The a with d = a^2 + 2a, if d belongs to the family.
inline std::optional<BigInt> family_parameter(const BigInt& d) {
  if (d < 3) return std::nullopt;
  BigInt a = isqrt(d + 1) - 1;
  if (a >= 1 && a * a + 2 * a == d) return a;
  return std::nullopt;
}

namespace detail {

inline void check_family_output(const FamilyParam& fam, Rhs rhs, const PellSolution& s) {
  if constexpr (PELLCF_VERIFY_OUTPUTS) {
    if (!verify(fam.d(), rhs, s)) {
      throw std::logic_error("closed form " + s.str() + " fails x^2 - " + to_decimal(fam.d()) + "y^2 = " +
                             std::to_string(value(rhs)));
    }
  }
}

inline void require_index(std::uint64_t n) {
  if (n == 0) throw Error(Errc::out_of_domain, "solution index starts at 1");
}

inline SequenceParams family_sequence(const FamilyParam& fam) { return SequenceParams(2 * fam.a() + 2, -1); }

}  // namespace detail

inline CFExpansion family_cf(const FamilyParam& fam) { return {fam.d(), fam.a(), {1, 2 * fam.a()}}; }

inline PellSolution family_fundamental(const FamilyParam& fam) {
  PellSolution s{fam.a() + 1, 1};
  detail::check_family_output(fam, Rhs::one, s);
  return s;
}

/// x_{n+1} = (a+1) x_n + d y_n,  y_{n+1} = x_n + (a+1) y_n.
inline PellSolution family_nth_unit(const FamilyParam& fam, std::uint64_t n) {
  detail::require_index(n);
  const BigInt c = fam.a() + 1;
  BigInt x = c, y = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt nx = c * x + fam.d() * y;
    BigInt ny = x + c * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  PellSolution s{std::move(x), std::move(y)};
  detail::check_family_output(fam, Rhs::one, s);
  return s;
}

/// Terms of the finite continued fraction [a; (1, 2a) x (n-1), 1].
inline std::vector<BigInt> family_unit_cf_terms(const FamilyParam& fam, std::uint64_t n) {
  detail::require_index(n);
  std::vector<BigInt> terms;
  terms.reserve(2 * n);
  terms.push_back(fam.a());
  for (std::uint64_t i = 1; i < n; ++i) {
    terms.push_back(1);
    terms.push_back(2 * fam.a());
  }
  terms.push_back(1);
  return terms;
}

/// The n-th unit read off as numerator/denominator of the finite continued
/// fraction [a; (1, 2a) repeated n-1 times, 1].
inline PellSolution family_nth_unit_cf(const FamilyParam& fam, std::uint64_t n) {
  const std::vector<BigInt> terms = family_unit_cf_terms(fam, n);
  const Rational value = evaluate_cf(terms);
  PellSolution s{value.numerator(), value.denominator()};
  detail::check_family_output(fam, Rhs::one, s);
  return s;
}

inline PellSolution family_nth_unit_lucas(const FamilyParam& fam, std::uint64_t n) {
  detail::require_index(n);
  const LucasPair uv = lucas_pair(detail::family_sequence(fam), n);
  if (uv.v % 2 != 0) throw std::logic_error("V_n(2a+2,-1) is odd for n=" + std::to_string(n));
  PellSolution s{uv.v / 2, uv.u};
  detail::check_family_output(fam, Rhs::one, s);
  return s;
}

inline Verdict family_neg_one(const FamilyParam&) { return Verdict::unsolvable(Reason::even_period); }

inline PellSolution family_four_fundamental(const FamilyParam& fam) {
  PellSolution s{2 * fam.a() + 2, 2};
  detail::check_family_output(fam, Rhs::four, s);
  return s;
}

inline PellSolution family_nth_four(const FamilyParam& fam, std::uint64_t n) {
  detail::require_index(n);
  const LucasPair uv = lucas_pair(detail::family_sequence(fam), n);
  PellSolution s{uv.v, 2 * uv.u};
  detail::check_family_output(fam, Rhs::four, s);
  return s;
}

/// True when the closed-form unsolvability of x^2 - d y^2 = -4 applies (a > 2).
inline bool family_neg_four_covered(const FamilyParam& fam) { return fam.a() > 2; }

/// For a > 2: odd a gives d = 3 (mod 4), which reduces to the -1 equation;
/// even a = 2k reduces to (x/2)^2 - (k^2+k) y^2 = -1, and sqrt(k^2+k) has
/// period 2 for k > 1. Both are unsolvable. a = 1, 2 go to the general solver.
inline Verdict family_neg_four(const FamilyParam& fam) {
  if (!family_neg_four_covered(fam)) return solve_neg_four(fam.d());
  return Verdict::unsolvable(Reason::reduction);
}

/// sqrt(k^2 + k) = [1; 2, 2, ...] for k = 1 and [k; 2, 2k, 2, 2k, ...] for k > 1.
inline CFExpansion cf_k_squared_plus_k(const BigInt& k) {
  if (k < 1) throw Error(Errc::out_of_domain, "k must be at least 1, got " + to_decimal(k));
  const BigInt d = k * k + k;
  if (k == 1) return {d, 1, {2}};
  return {d, k, {2, 2 * k}};
}

}  // namespace pellcf
