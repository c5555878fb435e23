#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "xnf/polyring.hpp"

namespace xnf {

// q-cyclotomic cosets of Z/n, each listed from its smallest member as
// a, aq, aq^2, ...; cosets ordered by that smallest member.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, const Nat& q);
Nat count_by_cosets(const Nat& n, const Nat& q);

struct OracleBudget {
  unsigned max_prime_degree = 64;  // s * ord_n(q)
  unsigned max_bits = 128;         // log2 of the splitting field size
  FactorBudget factoring;
};

struct OracleFactor {
  Poly poly;
  std::uint64_t leader = 0;
};

struct OracleFactorization {
  Tower tower;     // splitting field F_{q^D} of x^n - 1
  unsigned D = 1;  // ord_n(q)
  std::vector<OracleFactor> factors;  // canonical order
};

struct OracleSkip {
  std::string reason;
};

std::variant<OracleFactorization, OracleSkip> factor_by_cosets(const Nat& n, const Nat& q,
                                                               const OracleBudget& budget = {});

}  // namespace xnf
