#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/error.hpp"
#include "pellcf/solution.hpp"

// Exhaustive search for solutions of x^2 - d*y^2 = N. Deliberately naive:
// apart from isqrt it uses nothing from the continued fraction or solver
// code, so it can serve as ground truth for them.

namespace pellcf::oracle {

struct SearchBound {
  std::uint64_t y_max;

  explicit SearchBound(std::uint64_t y) : y_max(y) {
    if (y == 0) throw Error(Errc::out_of_domain, "search bound must be at least 1");
  }
};

inline constexpr std::uint64_t kDefaultYMax = 10'000;

namespace detail {

// Ranges smaller than this are not worth a thread.
inline constexpr std::uint64_t kParallelChunk = 1u << 20;

inline bool fits_native(const BigInt& d, const BigInt& n, std::uint64_t y_max) {
  const BigInt top = d * BigInt(y_max) * BigInt(y_max) + abs(n);
  return d > 0 && abs(n) <= BigInt(INT64_MAX) && boost::multiprecision::msb(top) < 124;
}

inline u128 to_u128(const BigInt& v) {
  const std::uint64_t lo = static_cast<std::uint64_t>(v & UINT64_MAX);
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  return (static_cast<u128>(hi) << 64) | lo;
}

/// Scans y in [y_lo, y_hi] using 128-bit arithmetic. The caller guarantees
/// d*y_hi^2 + |n| < 2^124. Stops after the first hit when `first_only` is set.
inline std::vector<PellSolution> scan_native(u128 d, std::int64_t n, std::uint64_t y_lo, std::uint64_t y_hi,
                                             bool first_only) {
  std::vector<PellSolution> hits;
  for (std::uint64_t y = y_lo; y <= y_hi; ++y) {
    const u128 dy2 = d * y * y;
    if (n < 0 && dy2 < static_cast<u128>(-n)) continue;
    const u128 target = n < 0 ? dy2 - static_cast<u128>(-n) : dy2 + static_cast<u128>(n);
    if (target == 0) continue;
    const u128 x = isqrt(target);
    if (x * x == target) {
      hits.push_back({BigInt(x), BigInt(y)});
      if (first_only) break;
    }
    if (y == y_hi) break;
  }
  return hits;
}

inline std::vector<PellSolution> scan_big(const BigInt& d, const BigInt& n, std::uint64_t y_lo, std::uint64_t y_hi,
                                          bool first_only) {
  std::vector<PellSolution> hits;
  for (std::uint64_t y = y_lo; y <= y_hi; ++y) {
    const BigInt by(y);
    const BigInt target = n + d * by * by;
    if (target > 0) {
      BigInt x = isqrt(target);
      if (x * x == target) {
        hits.push_back({std::move(x), by});
        if (first_only) break;
      }
    }
    if (y == y_hi) break;
  }
  return hits;
}

inline std::vector<PellSolution> scan(const BigInt& d, const BigInt& n, std::uint64_t y_lo, std::uint64_t y_hi,
                                      bool first_only) {
  if (fits_native(d, n, y_hi)) {
    return scan_native(to_u128(d), n.convert_to<std::int64_t>(), y_lo, y_hi, first_only);
  }
  return scan_big(d, n, y_lo, y_hi, first_only);
}

inline std::vector<PellSolution> search(const BigInt& d, const BigInt& n, SearchBound bound, bool first_only) {
  if (d < 2) throw Error(Errc::out_of_domain, "d must be at least 2");
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || bound.y_max < 2 * kParallelChunk || abs(n) > BigInt(INT64_MAX)) {
    return scan(d, n, 1, bound.y_max, first_only);
  }
  // Disjoint y ranges in ascending order; concatenating keeps the order.
  const std::uint64_t span = (bound.y_max + workers - 1) / workers;
  std::vector<std::future<std::vector<PellSolution>>> parts;
  for (std::uint64_t lo = 1; lo <= bound.y_max; lo += span) {
    const std::uint64_t hi = std::min(bound.y_max, lo + span - 1);
    parts.push_back(std::async(std::launch::async, [&d, &n, lo, hi, first_only] { return scan(d, n, lo, hi, first_only); }));
    if (hi == bound.y_max) break;
  }
  std::vector<PellSolution> all;
  for (auto& part : parts) {
    auto hits = part.get();
    all.insert(all.end(), std::make_move_iterator(hits.begin()), std::make_move_iterator(hits.end()));
  }
  if (first_only && all.size() > 1) all.resize(1);
  return all;
}

}  // namespace detail

/// All (x, y) with 1 <= y <= y_max, x >= 1 and x^2 - d*y^2 = n, ascending in y.
inline std::vector<PellSolution> brute_solve(const BigInt& d, const BigInt& n, SearchBound bound) {
  return detail::search(d, n, bound, false);
}

/// Smallest-y solution within the bound, or search_exhausted carrying the bound.
inline Verdict first_solution(const BigInt& d, const BigInt& n, SearchBound bound) {
  auto hits = detail::search(d, n, bound, true);
  if (hits.empty()) return Verdict::unsolvable(Reason::search_exhausted, BigInt(bound.y_max));
  return Verdict::solvable(std::move(hits.front()));
}

}  // namespace pellcf::oracle
