#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/error.hpp"

namespace pellcf {

/// Throws unless d is an integer >= 2 that is not a perfect square.
inline void require_nonsquare(const BigInt& d) {
  if (d <= 1) throw Error(Errc::out_of_domain, "d must be at least 2, got " + to_decimal(d));
  if (is_perfect_square(d)) throw Error(Errc::perfect_square, to_decimal(d) + " is a perfect square");
}

/// Continued fraction of sqrt(d): [a0; period...] with the period repeating
/// forever. The period is minimal and ends in 2*a0.
struct CFExpansion {
  BigInt d;
  BigInt a0;
  std::vector<BigInt> period;

  std::size_t m() const noexcept { return period.size(); }

  /// Partial quotient a_k, continuing the period cyclically for k > m.
  const BigInt& term(std::size_t k) const { return k == 0 ? a0 : period[(k - 1) % period.size()]; }

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

struct ConvergentPair {
  BigInt p;
  BigInt q;
  std::int64_t index = 0;

  friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

/// Nonnegative rational kept in lowest terms, so equality is structural.
class Rational {
 public:
  Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) throw Error(Errc::out_of_domain, "rational denominator must be positive");
    if (num_ < 0) throw Error(Errc::out_of_domain, "rational numerator must be nonnegative");
    const BigInt g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  std::string str() const { return to_decimal(num_) + "/" + to_decimal(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  BigInt num_;
  BigInt den_;
};

/// Expands sqrt(d) with the integer (P, Q) recurrence
///   a_i = floor((a0 + P_i) / Q_i), P_{i+1} = a_i Q_i - P_i, Q_{i+1} = (d - P_{i+1}^2) / Q_i
/// starting from (P, Q) = (0, 1). The period closes at the first repeated
/// state, which is always the state that followed a0.
inline CFExpansion cf_expand_sqrt(const BigInt& d) {
  require_nonsquare(d);
  CFExpansion cf{d, isqrt(d), {}};

  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  BigInt p = cf.a0;  // state after emitting a0: P_1 = a0, Q_1 = d - a0^2
  BigInt q = d - cf.a0 * cf.a0;
  for (std::size_t i = 1;; ++i) {
    auto [it, fresh] = seen.try_emplace({p, q}, i);
    if (!fresh) {
      if (it->second != 1) throw std::logic_error("continued fraction of sqrt(d) is not purely periodic");
      break;
    }
    BigInt a = (cf.a0 + p) / q;
    BigInt next_p = a * q - p;
    BigInt next_q = (d - next_p * next_p) / q;
    cf.period.push_back(std::move(a));
    p = std::move(next_p);
    q = std::move(next_q);
  }
  return cf;
}

/// (p_k, q_k) for k = 0 .. count-1, seeded with p_{-2}=0, p_{-1}=1,
/// q_{-2}=1, q_{-1}=0.
inline std::vector<ConvergentPair> convergents(const CFExpansion& cf, std::size_t count) {
  if (count == 0) throw Error(Errc::out_of_domain, "convergent count must be positive");
  std::vector<ConvergentPair> out;
  out.reserve(count);
  BigInt p_prev2 = 0, p_prev = 1, q_prev2 = 1, q_prev = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const BigInt& a = cf.term(k);
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back({std::move(p), std::move(q), static_cast<std::int64_t>(k)});
  }
  return out;
}

inline ConvergentPair convergent_seed(std::int64_t index) {
  if (index == -2) return {0, 1, -2};
  if (index == -1) return {1, 0, -1};
  throw Error(Errc::out_of_domain, "seed convergents exist only at indices -2 and -1");
}

/// Exact value of the finite continued fraction [t0; t1, ..., tn].
inline Rational evaluate_cf(std::span<const BigInt> terms) {
  if (terms.empty()) throw Error(Errc::out_of_domain, "continued fraction needs at least one term");
  if (terms.front() < 0) throw Error(Errc::out_of_domain, "leading term must be nonnegative");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < 1) throw Error(Errc::out_of_domain, "terms after the first must be positive");
  }
  BigInt num = terms.back();
  BigInt den = 1;
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    BigInt next = terms[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return Rational(std::move(num), std::move(den));
}

inline Rational evaluate_cf(std::initializer_list<BigInt> terms) {
  return evaluate_cf(std::span<const BigInt>(terms.begin(), terms.size()));
}

}  // namespace pellcf
