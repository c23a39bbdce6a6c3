#include <gtest/gtest.h>

#include "dml/arith.hpp"

using namespace dml;

TEST(Arith, FactorizeAndTotient) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2u);
  EXPECT_EQ(f[0].exponent, 3);
  EXPECT_EQ(f[2].value, 5u);
  EXPECT_EQ(euler_phi(360), 96u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_TRUE(factorize(1).empty());
}

TEST(Arith, MobiusAndDivisors) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
}

TEST(Arith, ModularPowersAndOrders) {
  EXPECT_EQ(pow_mod(3, 200, 1000003), pow_mod(pow_mod(3, 100, 1000003), 2, 1000003));
  EXPECT_EQ(mul_mod(~0ull, ~0ull, 1000000007ull), 114944269ull);
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(least_primitive_root(7, 1), 3u);
  EXPECT_EQ(least_primitive_root(9, 2), 2u);
  EXPECT_EQ(least_primitive_root(41, 1), 6u);
  EXPECT_EQ(residue(-1, 5), 4u);
}

TEST(Arith, PrimalityMatchesTrialDivision) {
  for (u64 n = 0; n < 2000; ++n) {
    bool expected = n >= 2;
    for (u64 d = 2; d * d <= n && expected; ++d) expected = n % d != 0;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
}
