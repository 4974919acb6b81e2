#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pellcf/bigint.hpp"
#include "pellcf/error.hpp"
#include "pellcf/quadratic.hpp"

namespace pellcf {

/// Parameters (k, s) of U_{n+1} = k U_n + s U_{n-1}; requires k, s nonzero
/// and a positive discriminant k^2 + 4s.
class SequenceParams {
 public:
  SequenceParams(BigInt k, BigInt s) : k_(std::move(k)), s_(std::move(s)), disc_(k_ * k_ + 4 * s_) {
    if (k_ == 0 || s_ == 0) throw Error(Errc::invalid_params, "Lucas parameters k and s must be nonzero");
    if (disc_ <= 0) {
      throw Error(Errc::invalid_params, "k^2 + 4s must be positive, got " + to_decimal(disc_));
    }
  }

  const BigInt& k() const noexcept { return k_; }
  const BigInt& s() const noexcept { return s_; }
  const BigInt& discriminant() const noexcept { return disc_; }

  /// alpha = (k + sqrt(D)) / 2 as an exact half-integer pair.
  HalfQuadratic alpha() const { return {k_, 1, disc_}; }
  HalfQuadratic beta() const { return {k_, -1, disc_}; }

 private:
  BigInt k_;
  BigInt s_;
  BigInt disc_;
};

struct LucasPair {
  BigInt u;
  BigInt v;

  friend bool operator==(const LucasPair&, const LucasPair&) = default;
};

namespace detail {

inline constexpr std::uint64_t kLinearThreshold = 64;

inline LucasPair lucas_linear(const SequenceParams& p, std::uint64_t n) {
  BigInt u0 = 0, u1 = 1, v0 = 2, v1 = p.k();
  if (n == 0) return {u0, v0};
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt u2 = p.k() * u1 + p.s() * u0;
    BigInt v2 = p.k() * v1 + p.s() * v0;
    u0 = std::exchange(u1, std::move(u2));
    v0 = std::exchange(v1, std::move(v2));
  }
  return {u1, v1};
}

// With q = -s:  U_2n = U_n V_n,  V_2n = V_n^2 - 2 q^n,
//               U_{n+1} = (k U_n + V_n)/2,  V_{n+1} = (D U_n + k V_n)/2.
inline LucasPair lucas_doubling(const SequenceParams& p, std::uint64_t n) {
  const BigInt q = -p.s();
  BigInt u = 0, v = 2, qn = 1;
  for (int bit = 63; bit >= 0; --bit) {
    BigInt u2 = u * v;
    BigInt v2 = v * v - 2 * qn;
    u = std::move(u2);
    v = std::move(v2);
    qn *= qn;
    if ((n >> bit) & 1U) {
      BigInt u3 = (p.k() * u + v) / 2;
      BigInt v3 = (p.discriminant() * u + p.k() * v) / 2;
      u = std::move(u3);
      v = std::move(v3);
      qn *= q;
    }
  }
  return {u, v};
}

}  // namespace detail

/// (U_n, V_n) from the seeds U_0=0, U_1=1, V_0=2, V_1=k. Small n walk the
/// recurrence; larger n use the doubling identities.
inline LucasPair lucas_pair(const SequenceParams& params, std::uint64_t n) {
  return n < detail::kLinearThreshold ? detail::lucas_linear(params, n) : detail::lucas_doubling(params, n);
}

/// (U_n, V_n) via Binet: with alpha^n = (A + B sqrt D)/2 and beta the
/// conjugate, V_n = alpha^n + beta^n = A and U_n = (alpha^n - beta^n)/(alpha - beta) = B.
/// Shares no code with lucas_pair.
inline LucasPair binet_pair(const SequenceParams& params, std::uint64_t n) {
  const HalfQuadratic an = pow(params.alpha(), n);
  return {an.v, an.u};
}

}  // namespace pellcf
