#include <gtest/gtest.h>

#include <numeric>

#include "xnf/error.hpp"
#include "xnf/intarith.hpp"

using namespace xnf;

namespace {

Nat slow_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
  return 0;
}

}  // namespace

TEST(Intarith, FactorizeSmall) {
  Factorization f = factorize(6056);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].prime, 2);
  EXPECT_EQ(f[0].exponent, 3u);
  EXPECT_EQ(f[1].prime, 757);
  EXPECT_EQ(f[1].exponent, 1u);
  EXPECT_TRUE(factorize(1).empty());
}

TEST(Intarith, FactorizeRoundTrip) {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    Factorization f = factorize(n);
    EXPECT_EQ(expand(f), n);
    for (const auto& pe : f) EXPECT_TRUE(is_prime(pe.prime)) << pe.prime;
  }
}

TEST(Intarith, FactorizeNeedsRho) {
  // Two primes just above the trial-division limit, then a 128-bit product.
  const Nat a("1000003"), b("1000033");
  Factorization f = factorize(a * b);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].prime, a);
  EXPECT_EQ(f[1].prime, b);
  const Nat c("1034150930241911"), d("15199221608544481");
  f = factorize(c * d);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].prime, c);
  EXPECT_EQ(f[1].prime, d);
}

TEST(Intarith, PowerMinusOne) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    for (unsigned k = 1; k <= 30; ++k) {
      const Nat v = ipow(q, k) - 1;
      Factorization f = factorize_power_minus_one(q, k);
      EXPECT_EQ(expand(f), v) << q << "^" << k;
      for (const auto& pe : f) EXPECT_TRUE(is_prime(pe.prime));
    }
  }
}

TEST(Intarith, Primality) {
  int count = 0;
  for (std::uint64_t n = 0; n < 10000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    EXPECT_EQ(is_prime(n), trial) << n;
    count += trial;
  }
  EXPECT_EQ(count, 1229);
  EXPECT_TRUE(is_prime(Nat("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_prime(Nat("3317044064679887385961981")));                // strong pseudoprime to the first 12 prime bases
}

TEST(Intarith, RadicalValuationPhi) {
  EXPECT_EQ(radical(36488), 9122);
  EXPECT_EQ(radical(1), 1);
  EXPECT_EQ(valuation(2, 36488), 3u);
  EXPECT_EQ(valuation(3, 40), 0u);
  for (std::uint64_t n = 1; n < 500; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), phi) << n;
  }
}

TEST(Intarith, Divisors) {
  const std::vector<Nat> d = divisors(Nat(40));
  const std::vector<Nat> want{1, 2, 4, 5, 8, 10, 20, 40};
  EXPECT_EQ(d, want);
  EXPECT_EQ(divisors(Nat(1)), std::vector<Nat>{1});
}

TEST(Intarith, CoprimePart) {
  EXPECT_EQ(coprime_part(40, 2), 5);
  EXPECT_EQ(coprime_part(36488, 6), 4561);
  EXPECT_EQ(coprime_part(7, 1), 7);
}

TEST(Intarith, MultOrder) {
  EXPECT_EQ(mult_order(2, 73), 9);
  EXPECT_EQ(mult_order(2, 151), 15);
  EXPECT_EQ(mult_order(3, 5), 4);
  for (std::uint64_t m = 2; m < 300; ++m) {
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 9ull}) {
      if (std::gcd(a, m) != 1) continue;
      EXPECT_EQ(mult_order(a, m), slow_order(a, m)) << a << " mod " << m;
    }
  }
}

TEST(Intarith, PrimePowerForm) {
  auto pp = as_prime_power(9);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->p, 3);
  EXPECT_EQ(pp->s, 2u);
  EXPECT_FALSE(as_prime_power(12));
  EXPECT_FALSE(as_prime_power(1));
}

TEST(Intarith, ValidPair) {
  EXPECT_NO_THROW(require_valid_pair(73, 2));
  EXPECT_THROW(require_valid_pair(12, 9), UsageError);
  EXPECT_THROW(require_valid_pair(5, 6), UsageError);
  EXPECT_THROW(require_valid_pair(0, 2), UsageError);
}
