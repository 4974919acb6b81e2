#include <gtest/gtest.h>

#include "pellcf/oracle.hpp"
#include "pellcf/solver.hpp"
#include "pellcf/special_family.hpp"

using namespace pellcf;

namespace {

FamilyParam fam(int a) { return FamilyParam(BigInt(a)); }
PellSolution sol(int x, int y) { return {x, y}; }

}  // namespace

TEST(FamilyParam, Invariants) {
  for (int a = 1; a <= 200; ++a) {
    const FamilyParam f = fam(a);
    ASSERT_EQ(f.d(), (a + 1) * (a + 1) - 1);
    ASSERT_FALSE(is_perfect_square(f.d()));
    ASSERT_EQ(f.d() % 4, a % 2 == 0 ? 0 : 3);
    ASSERT_EQ(family_parameter(f.d()), BigInt(a));
  }
  EXPECT_THROW(fam(0), Error);
  EXPECT_FALSE(family_parameter(7).has_value());
  EXPECT_FALSE(family_parameter(2).has_value());
}

TEST(FamilyCf, Examples) {
  EXPECT_EQ(family_cf(fam(1)), (CFExpansion{3, 1, {1, 2}}));
  EXPECT_EQ(family_cf(fam(2)), (CFExpansion{8, 2, {1, 4}}));
  EXPECT_EQ(family_cf(fam(100)), (CFExpansion{10200, 100, {1, 200}}));
  EXPECT_EQ(family_cf(fam(100)), cf_expand_sqrt(10200));
}

TEST(FamilyFundamental, Examples) {
  EXPECT_EQ(family_fundamental(fam(3)), sol(4, 1));
  EXPECT_EQ(family_fundamental(fam(1)), sol(2, 1));
  for (int a = 1; a <= 50; ++a) EXPECT_TRUE(verify(a * a + 2 * a, 1, a + 1, 1));
}

TEST(FamilyNthUnit, Examples) {
  EXPECT_EQ(family_nth_unit(fam(1), 1), sol(2, 1));
  EXPECT_EQ(family_nth_unit(fam(1), 2), sol(7, 4));
  EXPECT_EQ(family_nth_unit(fam(1), 3), sol(26, 15));
  EXPECT_EQ(family_nth_unit(fam(3), 2), sol(31, 8));
  EXPECT_EQ(family_nth_unit(fam(9), 1), sol(10, 1));
  EXPECT_THROW(family_nth_unit(fam(1), 0), Error);
}

TEST(FamilyNthUnitCf, Examples) {
  EXPECT_EQ(family_unit_cf_terms(fam(1), 2), (std::vector<BigInt>{1, 1, 2, 1}));
  EXPECT_EQ(family_nth_unit_cf(fam(1), 1), sol(2, 1));
  EXPECT_EQ(family_nth_unit_cf(fam(1), 2), sol(7, 4));
  EXPECT_EQ(family_nth_unit_cf(fam(3), 2), sol(31, 8));
}

TEST(FamilyNthUnitLucas, Examples) {
  EXPECT_EQ(family_nth_unit_lucas(fam(1), 3), sol(26, 15));
  EXPECT_EQ(family_nth_unit_lucas(fam(3), 1), sol(4, 1));
  EXPECT_EQ(family_nth_unit_lucas(fam(2), 2), sol(17, 6));
}

TEST(FamilyForms, ThreeWayAgreementSmall) {
  for (int a = 1; a <= 25; ++a) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const PellSolution r = family_nth_unit(fam(a), n);
      ASSERT_EQ(family_nth_unit_cf(fam(a), n), r);
      ASSERT_EQ(family_nth_unit_lucas(fam(a), n), r);
      ASSERT_EQ(iterate_solutions(fam(a).d(), Rhs::one, n), r);
    }
  }
}

TEST(FamilyLucas, VIsEven) {
  for (int a = 1; a <= 60; ++a) {
    const SequenceParams p(2 * a + 2, -1);
    for (std::uint64_t n = 0; n <= 40; ++n) ASSERT_EQ(lucas_pair(p, n).v % 2, 0);
  }
}

TEST(FamilyNegOne, AlwaysUnsolvable) {
  for (int a : {1, 2, 7}) EXPECT_EQ(family_neg_one(fam(a)), Verdict::unsolvable(Reason::even_period));
  EXPECT_TRUE(oracle::brute_solve(8, -1, oracle::SearchBound(10'000)).empty());
}

TEST(FamilyFour, Examples) {
  EXPECT_EQ(family_four_fundamental(fam(1)), sol(4, 2));
  EXPECT_EQ(family_four_fundamental(fam(3)), sol(8, 2));
  EXPECT_EQ(family_nth_four(fam(1), 2), sol(14, 8));
  EXPECT_EQ(family_nth_four(fam(3), 2), sol(62, 16));
  for (int a = 1; a <= 40; ++a) {
    EXPECT_EQ(family_nth_four(fam(a), 1), sol(2 * a + 2, 2));
    EXPECT_EQ(family_four_fundamental(fam(a)), solve_four(fam(a).d()));
  }
}

TEST(FamilyNegFour, Examples) {
  EXPECT_FALSE(family_neg_four(fam(3)).is_solvable());
  const Verdict two = family_neg_four(fam(2));
  ASSERT_TRUE(two.is_solvable());
  EXPECT_EQ(*two.fundamental, sol(2, 1));
  EXPECT_FALSE(family_neg_four(fam(1)).is_solvable());
  EXPECT_FALSE(family_neg_four_covered(fam(2)));
  EXPECT_TRUE(family_neg_four_covered(fam(3)));
}

TEST(FamilyEvenReduction, HalfFamilyUnit) {
  // a = 2k: the unit of k^2+k is (2k+1, 2), and doubling x gives (2a+2, 2).
  for (int k = 1; k <= 60; ++k) {
    const PellSolution half = fundamental_unit(k * k + k);
    ASSERT_EQ(half, sol(2 * k + 1, 2));
    ASSERT_EQ((PellSolution{2 * half.x, half.y}), family_four_fundamental(fam(2 * k)));
  }
}

TEST(CfKSquaredPlusK, Examples) {
  EXPECT_EQ(cf_k_squared_plus_k(1), (CFExpansion{2, 1, {2}}));
  EXPECT_EQ(cf_k_squared_plus_k(2), (CFExpansion{6, 2, {2, 4}}));
  EXPECT_EQ(cf_k_squared_plus_k(10), (CFExpansion{110, 10, {2, 20}}));
  for (int k = 1; k <= 300; ++k) ASSERT_EQ(cf_k_squared_plus_k(k), cf_expand_sqrt(k * k + k));
  EXPECT_THROW(cf_k_squared_plus_k(0), Error);
}

TEST(Solver, FamilyAndGeneralRoutesAgree) {
  for (int a = 1; a <= 30; ++a) {
    const BigInt d = fam(a).d();
    for (Rhs rhs : kAllRhs) {
      const SolveResult fast = solve(d, rhs, 5);
      const SolveResult slow = solve(d, rhs, 5, Route::general);
      ASSERT_NE(fast.basis, Basis::general);
      ASSERT_EQ(slow.basis, Basis::general);
      ASSERT_EQ(fast.verdict.is_solvable(), slow.verdict.is_solvable()) << a << " " << value(rhs);
      ASSERT_EQ(fast.verdict.fundamental, slow.verdict.fundamental);
      ASSERT_EQ(fast.solutions, slow.solutions);
    }
  }
}

TEST(Solver, NonFamilyUsesGeneralPath) {
  const SolveResult r = solve(5, Rhs::neg_four, 2);
  EXPECT_EQ(r.basis, Basis::general);
  EXPECT_EQ(r.solutions, (std::vector<PellSolution>{sol(1, 1), sol(4, 2)}));
  EXPECT_THROW(solve(9, Rhs::one, 1), Error);
}
