#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xnf/error.hpp"

namespace xnf {

using Nat = boost::multiprecision::cpp_int;

struct PrimePower {
  Nat prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Ascending by prime, exponents >= 1. The empty list is the factorization of 1.
using Factorization = std::vector<PrimePower>;

struct FactorBudget {
  std::uint64_t trial_limit = 1'000'000;
  // Per rho attempt; several attempts with different constants are made.
  std::uint64_t rho_iterations = 1ull << 28;
};

Factorization factorize(const Nat& n, const FactorBudget& budget = {});

// q^k - 1, split along cyclotomic values first so the pieces stay small.
Factorization factorize_power_minus_one(const Nat& q, unsigned k,
                                        const FactorBudget& budget = {});

Factorization merge(const Factorization& a, const Factorization& b);
Nat expand(const Factorization& f);

bool is_prime(const Nat& n);

Nat radical(const Nat& n);
unsigned valuation(const Nat& p, Nat n);
Nat euler_phi(const Nat& n);
std::vector<Nat> divisors(const Factorization& f);
std::vector<Nat> divisors(const Nat& n);

// Largest divisor of m coprime to x.
Nat coprime_part(Nat m, const Nat& x);

Nat ipow(const Nat& base, unsigned e);
Nat gcd(const Nat& a, const Nat& b);
Nat lcm(const Nat& a, const Nat& b);

// Order of a in (Z/m)^*. Requires gcd(a, m) == 1; mult_order(a, 1) == 1.
Nat mult_order(const Nat& a, const Nat& m);
// Same, with a known multiple of the order and its factorization.
Nat mult_order(const Nat& a, const Nat& m, const Factorization& exponent);

// q == p^s with p prime and s >= 1.
struct PrimePowerForm {
  Nat p;
  unsigned s = 0;
};
std::optional<PrimePowerForm> as_prime_power(const Nat& q);

// Checks n >= 1, q a prime power and gcd(n, q) == 1; UsageError otherwise.
PrimePowerForm require_valid_pair(const Nat& n, const Nat& q);

std::uint64_t to_u64(const Nat& x);
std::string to_string(const Nat& x);

}  // namespace xnf
