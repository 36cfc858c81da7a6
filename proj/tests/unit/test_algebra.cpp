#include <gtest/gtest.h>

#include "dchroma/algebra.hpp"
#include "dchroma/error.hpp"
#include "oracles.hpp"

using namespace dchroma;

TEST(FiniteField, PrimeFieldIsIntegersModP) {
  const auto f = field_new(5);
  EXPECT_EQ(f.mul(2, 3), 1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 5);
      EXPECT_EQ(f.mul(a, b), (a * b) % 5);
    }
}

TEST(FiniteField, Gf4GeneratorSatisfiesItsPolynomial) {
  const auto f = field_new(4);
  const FieldElem x = f.generator();
  EXPECT_EQ(f.mul(x, x), f.add(x, 1));
}

TEST(FiniteField, RejectsNonPrimePowers) {
  for (int q : {0, 1, 6, 10, 12, 14, 15, 17, 25}) {
    try {
      field_new(q);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedOrder) << q;
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, ExhaustiveLaws) {
  const int q = GetParam();
  const auto f = field_new(q);
  for (int a = 0; a < q; ++a) {
    if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    FieldElem fr = a;
    for (int i = 0; i < f.degree(); ++i) fr = f.frobenius(fr);
    EXPECT_EQ(fr, a);
    EXPECT_EQ(f.frobenius(a), f.pow(a, f.characteristic()));
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      }
  }
}

INSTANTIATE_TEST_SUITE_P(AllSupported, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 13, 16));

TEST(FiniteField, MultiplicativeGroupIsCyclic) {
  for (int q : {4, 8, 9, 16}) {
    const auto f = field_new(q);
    bool found = false;
    for (int g = 2; g < q && !found; ++g) {
      std::set<int> powers;
      for (int e = 0; e < q - 1; ++e) powers.insert(f.pow(g, e));
      found = static_cast<int>(powers.size()) == q - 1;
    }
    EXPECT_TRUE(found) << q;
  }
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  // Pascal oracle
  std::vector<std::vector<BigInt>> pascal(30, std::vector<BigInt>(30, 0));
  for (unsigned n = 0; n < 30; ++n) {
    pascal[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : BigInt(0));
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]) << n << " " << k;
  }
  EXPECT_EQ(binomial(9, 4), 126);
}

TEST(Combinatorics, PartitionCountMatchesEnumeration) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(2), 2);
  EXPECT_EQ(partition_count(6), 11);
  for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(partition_count(n), oracle::brute_partitions(n, n)) << n;
  EXPECT_EQ(partition_count(100), BigInt("190569292"));
}

TEST(Combinatorics, LeastPrimeDivisor) {
  EXPECT_EQ(least_prime_divisor(336), 2u);
  EXPECT_EQ(least_prime_divisor(5616), 2u);
  EXPECT_EQ(least_prime_divisor(15), 3u);
  EXPECT_EQ(least_prime_divisor(BigInt(1000003)), 1000003u);
  EXPECT_THROW(least_prime_divisor(1), Error);
}

TEST(Combinatorics, FactorialAndPower) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(9), 362880);
  EXPECT_EQ(ipow(2, 25), 33554432);
  EXPECT_EQ(prime_power(16), std::make_pair(2, 4));
  EXPECT_FALSE(prime_power(12));
}

TEST(Rational, RoundTrips) {
  for (int a = -5; a <= 5; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = 1; d <= 5; ++d) {
          const BigRational x(a, b), y(c, d);
          EXPECT_EQ((x + y) - y, x);
        }
  EXPECT_EQ(to_decimal(BigRational(1, 3), 4), "0.3333");
}

TEST(Subsets, ColexOrderAndRank) {
  const auto s = ksubsets_colex(5, 2);
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s[0], 0b00011u);
  EXPECT_EQ(s[1], 0b00101u);
  EXPECT_EQ(s[2], 0b00110u);
  EXPECT_EQ(s[3], 0b01001u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(colex_rank(s[i]), i);
  const auto t = ksubsets_colex(9, 4);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_EQ(colex_rank(t[i]), i);
}
