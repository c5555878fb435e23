#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xnf/ffield.hpp"

namespace xnf {

// Dense univariate polynomial over a FieldCtx. The zero polynomial has no
// coefficients; asking for its degree is an error.
class Poly {
 public:
  explicit Poly(const FieldCtx& F) : F_(&F) {}
  Poly(const FieldCtx& F, detail::Dense coeffs);
  static Poly from_coeffs(const FieldCtx& F, const std::vector<FieldElem>& coeffs);
  static Poly monomial(const FieldCtx& F, std::size_t deg, const FieldElem& c);
  static Poly constant(const FieldElem& c) { return monomial(c.ctx(), 0, c); }
  // x^n - 1
  static Poly x_pow_minus_one(const FieldCtx& F, std::size_t n);

  const FieldCtx& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const;
  std::size_t size() const { return c_.size() / F_->dim(); }
  FieldElem coeff(std::size_t i) const;
  FieldElem leading() const { return coeff(degree()); }
  const detail::Dense& raw() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  const FieldCtx* F_;
  detail::Dense c_;
};

Poly mul(const Poly& a, const Poly& b);
// Balanced product tree; the empty product is 1.
Poly product(const FieldCtx& F, const std::vector<Poly>& factors);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& a, const Nat& e, const Poly& m);
Poly gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& a);
// Irreducible over a.field().
bool is_irreducible(const Poly& f);

// prod_{k<m} (x^t - c^(q^k)) for c in tower.top, returned over F_q.
// Throws NotInSubfieldError when a coefficient falls outside F_q.
Poly conjugate_product(std::size_t t, const FieldElem& c, unsigned m, const Tower& tower);

// Ascending degree, then coefficients compared constant term first by code.
bool canonical_less(const Poly& a, const Poly& b);

// Coefficients as lists of digits, constant term first.
std::vector<std::vector<Digit>> encode(const Poly& f);
// "c0 + c1*x + ... + x^d", zero terms omitted.
std::string to_text(const Poly& f);
std::string to_text(const FieldElem& c);

}  // namespace xnf
