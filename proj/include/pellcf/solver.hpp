#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/pell_core.hpp"
#include "pellcf/solution.hpp"
#include "pellcf/special_family.hpp"

namespace pellcf {

enum class Route { automatic, general };

/// Which rule produced an answer.
enum class Basis {
  general,
  family_unit,            // fundamental (a+1, 1), n-th via Lucas form
  family_neg_one,         // period 2, never solvable
  family_four,            // fundamental (2a+2, 2), n-th via Lucas form
  family_neg_four,        // a > 2, never solvable
  family_neg_four_excluded,  // a in {1, 2}, answered by the general solver
};

constexpr std::string_view to_string(Basis basis) noexcept {
  switch (basis) {
    case Basis::general: return "general";
    case Basis::family_unit: return "family_unit";
    case Basis::family_neg_one: return "family_neg_one";
    case Basis::family_four: return "family_four";
    case Basis::family_neg_four: return "family_neg_four";
    case Basis::family_neg_four_excluded: return "family_neg_four_excluded";
  }
  return "unknown";
}

struct SolveResult {
  BigInt d;
  Rhs rhs = Rhs::one;
  std::optional<BigInt> family_a;
  Basis basis = Basis::general;
  Verdict verdict;
  std::vector<PellSolution> solutions;
};

/// Verdict plus the first `count` solutions. Members of the a^2 + 2a
/// family take the closed-form path unless `route` is general.
inline SolveResult solve(const BigInt& d, Rhs rhs, std::size_t count, Route route = Route::automatic) {
  require_nonsquare(d);
  SolveResult out{d, rhs, family_parameter(d), Basis::general, {}, {}};
  if (route == Route::automatic && out.family_a) {
    const FamilyParam fam(*out.family_a);
    switch (rhs) {
      case Rhs::one:
        out.basis = Basis::family_unit;
        out.verdict = Verdict::solvable(family_fundamental(fam));
        for (std::size_t n = 1; n <= count; ++n) out.solutions.push_back(family_nth_unit_lucas(fam, n));
        return out;
      case Rhs::neg_one:
        out.basis = Basis::family_neg_one;
        out.verdict = family_neg_one(fam);
        return out;
      case Rhs::four:
        out.basis = Basis::family_four;
        out.verdict = Verdict::solvable(family_four_fundamental(fam));
        for (std::size_t n = 1; n <= count; ++n) out.solutions.push_back(family_nth_four(fam, n));
        return out;
      case Rhs::neg_four:
        out.basis = family_neg_four_covered(fam) ? Basis::family_neg_four : Basis::family_neg_four_excluded;
        out.verdict = family_neg_four(fam);
        if (out.verdict.is_solvable()) out.solutions = enumerate_solutions(d, rhs, count);
        return out;
    }
  }
  out.verdict = fundamental(d, rhs);
  if (out.verdict.is_solvable()) out.solutions = enumerate_solutions(d, rhs, count);
  return out;
}

}  // namespace pellcf
