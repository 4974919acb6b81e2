#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pellcf/bigint.hpp"
#include "pellcf/error.hpp"

namespace pellcf {

struct PellSolution {
  BigInt x;
  BigInt y;

  std::string str() const { return "(" + to_decimal(x) + "," + to_decimal(y) + ")"; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Right-hand sides the solvers handle.
enum class Rhs : int { one = 1, neg_one = -1, four = 4, neg_four = -4 };

inline constexpr std::array<Rhs, 4> kAllRhs = {Rhs::one, Rhs::neg_one, Rhs::four, Rhs::neg_four};

constexpr int value(Rhs rhs) noexcept { return static_cast<int>(rhs); }

inline Rhs to_rhs(const BigInt& n) {
  if (n == 1) return Rhs::one;
  if (n == -1) return Rhs::neg_one;
  if (n == 4) return Rhs::four;
  if (n == -4) return Rhs::neg_four;
  throw Error(Errc::out_of_domain, "N must be one of 1, -1, 4, -4; got " + to_decimal(n));
}

enum class Status { solvable, unsolvable };

enum class Reason { even_period, modular_obstruction, search_exhausted, reduction };

constexpr std::string_view to_string(Reason reason) noexcept {
  switch (reason) {
    case Reason::even_period: return "even_period";
    case Reason::modular_obstruction: return "modular_obstruction";
    case Reason::search_exhausted: return "search_exhausted";
    case Reason::reduction: return "reduction";
  }
  return "unknown";
}

/// Outcome of a solvability question. A solvable verdict carries the
/// fundamental solution and optionally how it was reached; an unsolvable one
/// always carries a reason, plus the search bound for search_exhausted.
struct Verdict {
  Status status = Status::unsolvable;
  std::optional<PellSolution> fundamental;
  std::optional<Reason> reason;
  std::optional<BigInt> search_bound;

  static Verdict solvable(PellSolution fundamental, std::optional<Reason> how = std::nullopt) {
    return {Status::solvable, std::move(fundamental), how, std::nullopt};
  }
  static Verdict unsolvable(Reason why, std::optional<BigInt> bound = std::nullopt) {
    return {Status::unsolvable, std::nullopt, why, std::move(bound)};
  }

  bool is_solvable() const noexcept { return status == Status::solvable; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace pellcf
