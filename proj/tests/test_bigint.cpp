#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "pellcf/bigint.hpp"

using pellcf::BigInt;
using pellcf::isqrt;

TEST(Isqrt, SmallValues) {
  EXPECT_EQ(isqrt(BigInt(0)), 0);
  EXPECT_EQ(isqrt(BigInt(1)), 1);
  EXPECT_EQ(isqrt(BigInt(15)), 3);
  EXPECT_EQ(isqrt(BigInt(16)), 4);
  EXPECT_EQ(isqrt(BigInt(17)), 4);
}

TEST(Isqrt, ExactPowerOfTen) {
  const BigInt n = boost::multiprecision::pow(BigInt(10), 100);
  EXPECT_EQ(isqrt(n), boost::multiprecision::pow(BigInt(10), 50));
  EXPECT_EQ(isqrt(BigInt(n - 1)), boost::multiprecision::pow(BigInt(10), 50) - 1);
}

TEST(Isqrt, NegativeRejected) { EXPECT_THROW(isqrt(BigInt(-1)), pellcf::Error); }

TEST(Isqrt, BracketsRandomBigValues) {
  std::mt19937_64 rng(20131);
  for (int i = 0; i < 500; ++i) {
    BigInt n = 0;
    const int limbs = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < limbs; ++j) n = (n << 64) + rng();
    const BigInt r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
}

TEST(Isqrt, NativeMatchesBigAroundSquares) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t base = rng() >> (rng() % 40);
    for (std::int64_t delta : {-1, 0, 1}) {
      const pellcf::u128 sq = static_cast<pellcf::u128>(base) * base;
      const pellcf::u128 n = sq + static_cast<pellcf::u128>(delta);
      if (delta < 0 && sq == 0) continue;
      ASSERT_EQ(BigInt(isqrt(n)), isqrt(BigInt(n)));
    }
    const std::uint64_t m = rng();
    ASSERT_EQ(BigInt(isqrt(m)), isqrt(BigInt(m)));
  }
}

TEST(IsPerfectSquare, Basics) {
  EXPECT_TRUE(pellcf::is_perfect_square(BigInt(0)));
  EXPECT_TRUE(pellcf::is_perfect_square(BigInt(144)));
  EXPECT_FALSE(pellcf::is_perfect_square(BigInt(143)));
  EXPECT_FALSE(pellcf::is_perfect_square(BigInt(-4)));
}

TEST(ParseBigint, AcceptsSignedDecimal) {
  EXPECT_EQ(pellcf::parse_bigint("-4"), -4);
  EXPECT_EQ(pellcf::parse_bigint("+12"), 12);
  EXPECT_EQ(pellcf::parse_bigint("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(pellcf::parse_bigint(""), pellcf::Error);
  EXPECT_THROW(pellcf::parse_bigint("1e5"), pellcf::Error);
  EXPECT_THROW(pellcf::parse_bigint("-"), pellcf::Error);
}
