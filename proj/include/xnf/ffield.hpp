#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "xnf/intarith.hpp"

namespace xnf {

using Digit = std::uint32_t;

class NotInSubfieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FieldElem;

// F_p, or a simple extension base[X]/(f) of another FieldCtx.
// An element is dim() digits in [0, p): degree() base-field coefficients,
// constant term first, each occupying base()->dim() digits.
class FieldCtx {
 public:
  using Ptr = std::shared_ptr<const FieldCtx>;

  static Ptr prime_field(std::uint64_t p);
  // Modulus: first monic irreducible of degree k in canonical order.
  static Ptr extension(Ptr base, unsigned k, const FactorBudget& budget = {});

  std::uint32_t characteristic() const { return p_; }
  unsigned dim() const { return dim_; }
  unsigned degree() const { return k_; }
  bool is_prime() const { return base_ == nullptr; }
  const FieldCtx* base() const { return base_.get(); }
  const Nat& order() const { return order_; }
  // Factors |F|-1 on first use; may throw ResourceError for large fields.
  const Factorization& unit_order_factorization() const;
  // Monic, degree()+1 base elements flattened. Empty for a prime field.
  const std::vector<Digit>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem primitive() const;
  FieldElem adjoined_root() const;
  FieldElem from_digits(std::vector<Digit> digits) const;
  FieldElem from_int(std::uint64_t v) const;
  // Canonical integer code: sum code(c_i) * |base|^i.
  FieldElem from_code(const Nat& code) const;
  FieldElem embed(const FieldElem& base_elem) const;

  // Kernels on raw digit arrays of length dim(). out may alias a or b.
  void add(const Digit* a, const Digit* b, Digit* out) const;
  void sub(const Digit* a, const Digit* b, Digit* out) const;
  void neg(const Digit* a, Digit* out) const;
  void mul(const Digit* a, const Digit* b, Digit* out) const;
  void inv(const Digit* a, Digit* out) const;
  bool is_zero(const Digit* a) const;
  bool is_one(const Digit* a) const;
  Nat code(const Digit* a) const;
  // Orders by canonical code.
  int compare(const Digit* a, const Digit* b) const;

  bool same_field(const FieldCtx& other) const;

  FieldCtx(std::uint32_t p, Ptr base, unsigned k, std::vector<Digit> modulus);

 private:
  void mul_over_prime(const Digit* a, const Digit* b, Digit* out) const;
  void mul_over_ext(const Digit* a, const Digit* b, Digit* out) const;
  void mul_generic(const Digit* a, const Digit* b, Digit* out) const;
  void find_primitive() const;

  std::uint32_t p_;
  Ptr base_;
  unsigned k_;
  unsigned dim_;
  std::vector<Digit> modulus_;
  // Nonzero lower coefficients of the modulus, for reduction over F_p.
  std::vector<std::pair<unsigned, Digit>> sparse_modulus_;
  // Two-level case: nonzero modulus coefficients (index, base digits).
  std::vector<std::pair<unsigned, std::vector<Digit>>> ext_modulus_;
  bool lazy_accumulate_ = false;
  Nat order_;
  FactorBudget budget_;
  mutable std::once_flag unit_once_, primitive_once_;
  mutable Factorization unit_factors_;
  mutable std::vector<Digit> primitive_;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx& ctx, std::vector<Digit> digits);

  const FieldCtx& ctx() const { return *ctx_; }
  std::span<const Digit> digits() const { return d_; }
  const Digit* data() const { return d_.data(); }
  bool is_zero() const { return ctx_->is_zero(d_.data()); }
  bool is_one() const { return ctx_->is_one(d_.data()); }
  Nat code() const { return ctx_->code(d_.data()); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<Digit> d_;
};

FieldElem pow(const FieldElem& x, const Nat& e);
FieldElem inverse(const FieldElem& x);
Nat elem_order(const FieldElem& x);
// Generator of the subfield of the given cardinality (primitive^((|F|-1)/(Q-1))).
FieldElem subfield_generator(const FieldCtx& ctx, const Nat& subfield_order);
// An element of order exactly d, which must divide |F|-1: x^((|F|-1)/d) for the
// first x in code order that gives full order. Only d is factored.
FieldElem root_of_unity(const FieldCtx& ctx, const Nat& d);
// x^(q^k)
FieldElem frobenius(const FieldElem& x, const Nat& q, unsigned k);
bool in_subfield(const FieldElem& x, const Nat& q, unsigned k);
// Constant coefficient of x over ctx.base(); throws if x is not in the base field.
FieldElem project_to_base(const FieldElem& x);

// F_q for a prime power q, built over F_p. Memoized, so equal q share a context.
FieldCtx::Ptr galois_field(const Nat& q);

// F_p -> F_q -> F_{q^K}; top == fq when K == 1.
struct Tower {
  FieldCtx::Ptr fq;
  FieldCtx::Ptr top;
  Nat q;
  unsigned K = 1;

  FieldElem project_to_q(const FieldElem& x) const;
  // Generator of F_{q^j} inside top; j must divide K.
  FieldElem level_generator(unsigned j) const;
};

Tower make_tower(const Nat& q, unsigned K, const FactorBudget& budget = {});

namespace detail {

// Dense polynomials over a field ctx: coefficient i occupies digits
// [i*dim, (i+1)*dim). Kept trimmed; the zero polynomial is empty.
using Dense = std::vector<Digit>;

void trim(const FieldCtx& F, Dense& a);
long degree(const FieldCtx& F, const Dense& a);
Dense add(const FieldCtx& F, const Dense& a, const Dense& b);
Dense sub(const FieldCtx& F, const Dense& a, const Dense& b);
Dense mul(const FieldCtx& F, const Dense& a, const Dense& b);
// Requires b != 0.
void divrem(const FieldCtx& F, const Dense& a, const Dense& b, Dense* quot, Dense* rem);
Dense gcd(const FieldCtx& F, Dense a, Dense b);  // monic, or empty if both zero
Dense make_monic(const FieldCtx& F, const Dense& a);
Dense powmod(const FieldCtx& F, const Dense& a, const Nat& e, const Dense& m);
// Rabin test relative to a ground field of cardinality F.order().
bool is_irreducible(const FieldCtx& F, const Dense& f);
// Ben-Or test; rejects most reducible inputs after a few Frobenius steps.
bool is_irreducible_early_exit(const FieldCtx& F, const Dense& f);

}  // namespace detail

}  // namespace xnf
