#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xnf/polyring.hpp"

namespace xnf {

enum class CaseKind {
  Order1A,
  Order1B,
  OrderW2A,
  OrderW2B,
  Order4,
  OrderW1W2A,
  OrderW1W2B,
  Order2W,
  Unsupported,
};

// Shape of d = ord_{rad(n)}(q). The _B variants apply when q = 3 mod 4 and 8 | n.
struct CaseTag {
  CaseKind kind = CaseKind::Unsupported;
  Nat order;
  std::uint64_t w = 0;   // W2 and 2W
  std::uint64_t w1 = 0;  // W1W2, w1 < w2
  std::uint64_t w2 = 0;

  bool supported() const { return kind != CaseKind::Unsupported; }
  bool doubled() const;
  // 1, w^2, 4, w1*w2 or 2w; the order d itself.
  unsigned level_degree() const;
  // Primes of d that need care when placing n's prime factors into levels.
  std::vector<std::uint64_t> special_primes() const;
  std::string name() const;
  bool operator==(const CaseTag&) const = default;
};

CaseTag classify(const Nat& n, const Nat& q);

// Prime-power parts of n grouped by ord_p(q); special primes reported as "v_<p>".
std::map<std::string, Nat> decompose(const Nat& n, const Nat& q, const CaseTag& tag);

// One family of irreducible factors: conjugate products of zeta^(u * g_top / g_level),
// zeta of order g_top, with x replaced by x^t, t | m[range_key].
struct Family {
  std::string name;
  unsigned level = 1;
  std::string range_key;
  bool odd_t_only = false;
  // Levels j whose subfield the element must avoid: (q^level-1)/(q^j-1) does not divide u*l_level.
  std::vector<unsigned> excluded_levels;
  // Nonzero: this power of two must not divide u.
  std::uint64_t pow2_excluded = 0;
  // Use the element's own Frobenius orbit instead of requiring length == level.
  bool actual_orbit = false;
};

struct CaseParams {
  Nat n;
  Nat q;
  CaseTag tag;
  unsigned tower_degree = 1;  // degree of the working field over F_q
  unsigned r = 0;             // min(v2(n/2), v2(q+1)) in the _B cases
  std::map<std::string, Nat> buckets;
  std::map<std::string, Nat> m;
  std::map<unsigned, Nat> g;  // gcd(n, q^j - 1)
  std::map<unsigned, Nat> l;  // (q^j - 1) / g_j
  std::optional<Nat> A;       // W2 _B count coefficient
  std::optional<Nat> B;       // W1W2 _B count coefficient
  std::vector<Family> families;
};

CaseParams compute_params(const Nat& n, const Nat& q, const CaseTag& tag);

struct IndexSet {
  std::string family;
  Nat t;
  std::uint64_t modulus = 0;  // g_level; residue 0 is read as modulus
  std::vector<std::uint64_t> members;
  std::vector<unsigned> orbit_lengths;
};

IndexSet enum_index_set(const CaseParams& params, const Family& family, const Nat& t);

enum class FormKind { Binomial, Trinomial, ConjugateProduct };
std::string to_string(FormKind k);

struct FactorForm {
  FormKind kind = FormKind::Binomial;
  std::string family;
  Nat t;
  std::uint64_t u = 0;
  unsigned level = 1;
  unsigned orbit = 1;
};

struct IrreducibleFactor {
  Poly poly;
  FactorForm form;
};

struct ClosedFormFactorization {
  CaseParams params;
  Tower tower;
  std::vector<IrreducibleFactor> factors;  // canonical order
};

struct OracleFallback {
  CaseTag tag;
};

std::variant<ClosedFormFactorization, OracleFallback> factor_closed_form(const Nat& n, const Nat& q,
                                                                         unsigned threads = 1);

// Closed-form factor count; nullopt for unsupported orders.
std::optional<Nat> count_closed_form(const Nat& n, const Nat& q);
// Independent count as a sum over intermediate fields F_{q^i}, i | K.
std::optional<Nat> count_by_levels(const Nat& n, const Nat& q);

// Criterion for x^t - eta to be irreducible over the field of eta.
bool check_binomial_irreducible(const Nat& t, const FieldElem& eta);

}  // namespace xnf
