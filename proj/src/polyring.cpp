#include "xnf/polyring.hpp"

#include <sstream>

namespace xnf {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (&a.field() != &b.field()) throw UsageError("polynomials over different fields");
}

}  // namespace

Poly::Poly(const FieldCtx& F, detail::Dense coeffs) : F_(&F), c_(std::move(coeffs)) {
  if (c_.size() % F.dim() != 0) throw UsageError("coefficient data not a multiple of the field dimension");
  detail::trim(F, c_);
}

Poly Poly::from_coeffs(const FieldCtx& F, const std::vector<FieldElem>& coeffs) {
  detail::Dense d;
  d.reserve(coeffs.size() * F.dim());
  for (const auto& c : coeffs) {
    if (&c.ctx() != &F) throw UsageError("coefficient from a different field");
    d.insert(d.end(), c.digits().begin(), c.digits().end());
  }
  return Poly(F, std::move(d));
}

Poly Poly::monomial(const FieldCtx& F, std::size_t deg, const FieldElem& c) {
  if (&c.ctx() != &F) throw UsageError("coefficient from a different field");
  detail::Dense d((deg + 1) * F.dim(), 0);
  std::copy(c.digits().begin(), c.digits().end(), d.begin() + deg * F.dim());
  return Poly(F, std::move(d));
}

Poly Poly::x_pow_minus_one(const FieldCtx& F, std::size_t n) {
  if (n == 0) return Poly(F);
  detail::Dense d((n + 1) * F.dim(), 0);
  F.neg(F.one().data(), d.data());
  d[n * F.dim()] = 1;
  return Poly(F, std::move(d));
}

std::size_t Poly::degree() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
  return size() - 1;
}

FieldElem Poly::coeff(std::size_t i) const {
  const unsigned d = F_->dim();
  if (i >= size()) return F_->zero();
  return FieldElem(*F_, std::vector<Digit>(c_.begin() + i * d, c_.begin() + (i + 1) * d));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  return Poly(*a.F_, detail::add(*a.F_, a.c_, b.c_));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  return Poly(*a.F_, detail::sub(*a.F_, a.c_, b.c_));
}

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

bool operator==(const Poly& a, const Poly& b) { return a.F_->same_field(*b.F_) && a.c_ == b.c_; }

Poly mul(const Poly& a, const Poly& b) {
  require_same(a, b);
  return Poly(a.field(), detail::mul(a.field(), a.raw(), b.raw()));
}

Poly product(const FieldCtx& F, const std::vector<Poly>& factors) {
  if (factors.empty()) return Poly::constant(F.one());
  std::vector<Poly> level = factors;
  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(mul(level[i], level[i + 1]));
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same(a, b);
  detail::Dense q, r;
  detail::divrem(a.field(), a.raw(), b.raw(), &q, &r);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly pow_mod(const Poly& a, const Nat& e, const Poly& m) {
  require_same(a, m);
  return Poly(a.field(), detail::powmod(a.field(), a.raw(), e, m.raw()));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  return Poly(a.field(), detail::gcd(a.field(), a.raw(), b.raw()));
}

Poly make_monic(const Poly& a) { return Poly(a.field(), detail::make_monic(a.field(), a.raw())); }

bool is_irreducible(const Poly& f) { return detail::is_irreducible(f.field(), f.raw()); }

Poly conjugate_product(std::size_t t, const FieldElem& c, unsigned m, const Tower& tower) {
  if (t == 0 || m == 0) throw UsageError("conjugate_product: t and m must be positive");
  const FieldCtx& T = *tower.top;
  if (&c.ctx() != &T) throw UsageError("conjugate_product: element not in the top field");
  // Polynomial in y = x^t over the top field, built one root at a time.
  std::vector<FieldElem> y{T.one()};
  FieldElem root = c;
  for (unsigned k = 0; k < m; ++k) {
    std::vector<FieldElem> next(y.size() + 1, T.zero());
    for (std::size_t i = 0; i < y.size(); ++i) {
      next[i + 1] = next[i + 1] + y[i];
      next[i] = next[i] - root * y[i];
    }
    y = std::move(next);
    root = pow(root, tower.q);
  }
  const FieldCtx& Fq = *tower.fq;
  detail::Dense out((m * t + 1) * Fq.dim(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    FieldElem a = tower.project_to_q(y[i]);
    std::copy(a.digits().begin(), a.digits().end(), out.begin() + i * t * Fq.dim());
  }
  return Poly(Fq, std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const FieldCtx& F = a.field();
  const unsigned d = F.dim();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = F.compare(a.raw().data() + i * d, b.raw().data() + i * d);
    if (c) return c < 0;
  }
  return false;
}

std::vector<std::vector<Digit>> encode(const Poly& f) {
  std::vector<std::vector<Digit>> out;
  const unsigned d = f.field().dim();
  for (std::size_t i = 0; i < f.size(); ++i) out.emplace_back(f.raw().begin() + i * d, f.raw().begin() + (i + 1) * d);
  return out;
}

std::string to_text(const FieldElem& c) {
  if (c.ctx().dim() == 1) return std::to_string(c.digits()[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.digits().size(); ++i) os << (i ? "," : "") << c.digits()[i];
  os << ']';
  return os.str();
}

std::string to_text(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    FieldElem c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << to_text(c);
      continue;
    }
    if (!c.is_one()) os << to_text(c) << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace xnf
