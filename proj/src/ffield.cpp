#include "xnf/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace xnf {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;

u64 pow_mod_p(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void require_same(const FieldElem& a, const FieldElem& b) {
  if (&a.ctx() != &b.ctx()) throw UsageError("field elements from different contexts");
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, Ptr base, unsigned k, std::vector<Digit> modulus)
    : p_(p), base_(std::move(base)), k_(k), modulus_(std::move(modulus)) {
  dim_ = base_ ? base_->dim() * k_ : 1;
  order_ = base_ ? ipow(base_->order(), k_) : Nat(p_);
  if (base_ && base_->is_prime()) {
    for (unsigned j = 0; j < k_; ++j) {
      if (modulus_[j] != 0) sparse_modulus_.emplace_back(j, modulus_[j]);
    }
    // k products of size < p^2 must fit in 64 bits.
    unsigned __int128 worst = static_cast<unsigned __int128>(p_ - 1) * (p_ - 1) * (2 * k_);
    lazy_accumulate_ = worst < (static_cast<unsigned __int128>(1) << 63);
  } else if (base_ && base_->base()->is_prime()) {
    const unsigned s = base_->dim();
    for (unsigned j = 0; j < k_; ++j) {
      const Digit* mj = modulus_.data() + j * s;
      if (!base_->is_zero(mj)) ext_modulus_.emplace_back(j, std::vector<Digit>(mj, mj + s));
    }
    // Each accumulator takes at most k*s product terms and k*|modulus|*s reduction terms.
    unsigned __int128 terms = static_cast<unsigned __int128>(k_) * s * (1 + ext_modulus_.size());
    unsigned __int128 worst = static_cast<unsigned __int128>(p_ - 1) * (p_ - 1) * terms;
    lazy_accumulate_ = worst < (static_cast<unsigned __int128>(1) << 63);
  }
}

FieldCtx::Ptr FieldCtx::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31)) throw ResourceError("characteristic above 2^31 is not supported");
  if (!xnf::is_prime(Nat(p))) throw UsageError("not a prime: " + std::to_string(p));
  auto ctx = std::make_shared<FieldCtx>(static_cast<std::uint32_t>(p), nullptr, 1, std::vector<Digit>{});
  return ctx;
}

FieldCtx::Ptr FieldCtx::extension(Ptr base, unsigned k, const FactorBudget& budget) {
  if (!base || k == 0) throw UsageError("extension: need a base field and k >= 1");
  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, unsigned>, Ptr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({base.get(), k});
    if (it != cache.end()) return it->second;
  }
  const FieldCtx& B = *base;
  const unsigned bd = B.dim();
  // Monic degree-k candidates in canonical order of their lower coefficients.
  std::vector<Digit> f;
  for (Nat code = 0;; ++code) {
    f.assign(static_cast<std::size_t>(k + 1) * bd, 0);
    Nat c = code;
    for (unsigned i = 0; i < k; ++i) {
      FieldElem a = B.from_code(c % B.order());
      c /= B.order();
      std::copy(a.digits().begin(), a.digits().end(), f.begin() + i * bd);
    }
    if (c != 0) throw InternalError("no irreducible polynomial found");
    f[k * bd] = 1;
    if (k > 1 && B.is_zero(f.data())) continue;
    if (detail::is_irreducible_early_exit(B, f)) break;
  }
  auto ctx = std::make_shared<FieldCtx>(B.characteristic(), base, k, f);
  ctx->budget_ = budget;
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(base.get(), k), ctx).first->second;
}

const Factorization& FieldCtx::unit_order_factorization() const {
  std::call_once(unit_once_, [this] {
    unit_factors_ = is_prime() ? factorize(order_ - 1, budget_) : factorize_power_minus_one(base_->order(), k_, budget_);
  });
  return unit_factors_;
}

void FieldCtx::find_primitive() const {
  const Nat units = order_ - 1;
  for (Nat code = 1; code < order_; ++code) {
    FieldElem x = from_code(code);
    bool full = true;
    for (const auto& pe : unit_order_factorization()) {
      if (pow(x, units / pe.prime).is_one()) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_.assign(x.digits().begin(), x.digits().end());
      return;
    }
  }
  throw InternalError("no primitive element found");
}

FieldElem FieldCtx::zero() const { return FieldElem(*this, std::vector<Digit>(dim_, 0)); }

FieldElem FieldCtx::one() const {
  std::vector<Digit> d(dim_, 0);
  d[0] = 1;
  return FieldElem(*this, std::move(d));
}

FieldElem FieldCtx::primitive() const {
  std::call_once(primitive_once_, [this] { find_primitive(); });
  return FieldElem(*this, primitive_);
}

FieldElem FieldCtx::adjoined_root() const {
  if (is_prime()) throw UsageError("a prime field has no adjoined root");
  std::vector<Digit> d(dim_, 0);
  if (k_ == 1) {
    // X == -f_0 in a degree-one extension.
    base_->neg(modulus_.data(), d.data());
  } else {
    d[base_->dim()] = 1;
  }
  return FieldElem(*this, std::move(d));
}

FieldElem FieldCtx::from_digits(std::vector<Digit> digits) const {
  if (digits.size() != dim_) throw UsageError("wrong number of digits for field element");
  for (Digit d : digits) {
    if (d >= p_) throw UsageError("digit out of range");
  }
  return FieldElem(*this, std::move(digits));
}

FieldElem FieldCtx::from_int(std::uint64_t v) const {
  std::vector<Digit> d(dim_, 0);
  d[0] = static_cast<Digit>(v % p_);
  return FieldElem(*this, std::move(d));
}

FieldElem FieldCtx::from_code(const Nat& code) const {
  if (code < 0 || code >= order_) throw UsageError("element code out of range");
  std::vector<Digit> d(dim_, 0);
  // Canonical code is base-p positional over the flattened digits.
  Nat c = code;
  for (unsigned i = 0; i < dim_; ++i) {
    d[i] = static_cast<Digit>(static_cast<u64>(c % p_));
    c /= p_;
  }
  return FieldElem(*this, std::move(d));
}

FieldElem FieldCtx::embed(const FieldElem& base_elem) const {
  if (is_prime() || &base_elem.ctx() != base_.get()) throw UsageError("embed: not a base element");
  std::vector<Digit> d(dim_, 0);
  std::copy(base_elem.digits().begin(), base_elem.digits().end(), d.begin());
  return FieldElem(*this, std::move(d));
}

void FieldCtx::add(const Digit* a, const Digit* b, Digit* out) const {
  for (unsigned i = 0; i < dim_; ++i) {
    Digit s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FieldCtx::sub(const Digit* a, const Digit* b, Digit* out) const {
  for (unsigned i = 0; i < dim_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

void FieldCtx::neg(const Digit* a, Digit* out) const {
  for (unsigned i = 0; i < dim_; ++i) out[i] = a[i] ? p_ - a[i] : 0;
}

void FieldCtx::mul(const Digit* a, const Digit* b, Digit* out) const {
  if (is_prime()) {
    out[0] = static_cast<Digit>(static_cast<u64>(a[0]) * b[0] % p_);
  } else if (base_->is_prime()) {
    mul_over_prime(a, b, out);
  } else if (base_->base()->is_prime()) {
    mul_over_ext(a, b, out);
  } else {
    mul_generic(a, b, out);
  }
}

void FieldCtx::mul_over_prime(const Digit* a, const Digit* b, Digit* out) const {
  thread_local std::vector<u64> acc;
  const unsigned k = k_;
  const u64 p = p_;
  acc.assign(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    const u64 ai = a[i];
    if (ai == 0) continue;
    if (lazy_accumulate_) {
      for (unsigned j = 0; j < k; ++j) acc[i + j] += ai * b[j];
    } else {
      for (unsigned j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
    }
  }
  for (auto& v : acc) v %= p;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const u64 c = acc[i];
    if (c == 0) continue;
    const u64 nc = p - c;
    for (const auto& [j, m] : sparse_modulus_) acc[i - k + j] = (acc[i - k + j] + nc * m) % p;
  }
  for (unsigned i = 0; i < k; ++i) out[i] = static_cast<Digit>(acc[i]);
}

// F_p[y]/(h) [X]/(f): multiply as a bivariate polynomial over F_p, then
// reduce X-degrees from the top, reducing each coefficient mod h on the way.
void FieldCtx::mul_over_ext(const Digit* a, const Digit* b, Digit* out) const {
  const FieldCtx& B = *base_;
  const unsigned s = B.dim(), k = k_, w = 2 * s - 1;
  const u64 p = p_;
  const bool lazy = lazy_accumulate_;
  thread_local std::vector<u64> acc;
  thread_local std::vector<u64> c;
  acc.assign(static_cast<std::size_t>(2 * k - 1) * w, 0);
  c.resize(w);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned al = 0; al < s; ++al) {
      const u64 x = a[i * s + al];
      if (!x) continue;
      for (unsigned j = 0; j < k; ++j) {
        u64* row = acc.data() + static_cast<std::size_t>(i + j) * w + al;
        const Digit* bj = b + j * s;
        if (lazy) {
          for (unsigned be = 0; be < s; ++be) row[be] += x * bj[be];
        } else {
          for (unsigned be = 0; be < s; ++be) row[be] = (row[be] + x * bj[be]) % p;
        }
      }
    }
  }
  const std::vector<Digit>& h = B.modulus();
  for (unsigned i = 2 * k - 1; i-- > 0;) {
    u64* row = acc.data() + static_cast<std::size_t>(i) * w;
    for (unsigned e = 0; e < w; ++e) c[e] = row[e] % p;
    for (unsigned e = w; e-- > s;) {
      if (!c[e]) continue;
      const u64 nc = p - c[e];
      for (unsigned idx = 0; idx < s; ++idx) c[e - s + idx] = (c[e - s + idx] + nc * h[idx]) % p;
    }
    if (i < k) {
      for (unsigned e = 0; e < s; ++e) out[i * s + e] = static_cast<Digit>(c[e]);
      continue;
    }
    for (const auto& [j, m] : ext_modulus_) {
      u64* dst = acc.data() + static_cast<std::size_t>(i - k + j) * w;
      for (unsigned al = 0; al < s; ++al) {
        if (!c[al]) continue;
        const u64 nc = p - c[al];
        if (lazy) {
          for (unsigned be = 0; be < s; ++be) dst[al + be] += nc * m[be];
        } else {
          for (unsigned be = 0; be < s; ++be) dst[al + be] = (dst[al + be] + nc * m[be]) % p;
        }
      }
    }
  }
}

void FieldCtx::mul_generic(const Digit* a, const Digit* b, Digit* out) const {
  const FieldCtx& B = *base_;
  const unsigned bd = B.dim(), k = k_;
  std::vector<Digit> prod(static_cast<std::size_t>(2 * k - 1) * bd, 0), t(bd);
  for (unsigned i = 0; i < k; ++i) {
    if (B.is_zero(a + i * bd)) continue;
    for (unsigned j = 0; j < k; ++j) {
      B.mul(a + i * bd, b + j * bd, t.data());
      B.add(prod.data() + (i + j) * bd, t.data(), prod.data() + (i + j) * bd);
    }
  }
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const Digit* c = prod.data() + i * bd;
    if (B.is_zero(c)) continue;
    for (unsigned j = 0; j < k; ++j) {
      B.mul(c, modulus_.data() + j * bd, t.data());
      Digit* dst = prod.data() + (i - k + j) * bd;
      B.sub(dst, t.data(), dst);
    }
  }
  std::copy(prod.begin(), prod.begin() + dim_, out);
}

void FieldCtx::inv(const Digit* a, Digit* out) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_prime()) {
    out[0] = static_cast<Digit>(pow_mod_p(a[0], p_ - 2, p_));
    return;
  }
  FieldElem x(*this, std::vector<Digit>(a, a + dim_));
  FieldElem y = pow(x, order_ - 2);
  std::copy(y.digits().begin(), y.digits().end(), out);
}

bool FieldCtx::is_zero(const Digit* a) const {
  for (unsigned i = 0; i < dim_; ++i) {
    if (a[i]) return false;
  }
  return true;
}

bool FieldCtx::is_one(const Digit* a) const {
  if (a[0] != 1) return false;
  for (unsigned i = 1; i < dim_; ++i) {
    if (a[i]) return false;
  }
  return true;
}

Nat FieldCtx::code(const Digit* a) const {
  Nat c = 0;
  for (unsigned i = dim_; i-- > 0;) c = c * p_ + a[i];
  return c;
}

int FieldCtx::compare(const Digit* a, const Digit* b) const {
  for (unsigned i = dim_; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || k_ != other.k_ || dim_ != other.dim_ || modulus_ != other.modulus_) return false;
  if (is_prime() || other.is_prime()) return is_prime() && other.is_prime();
  return base_->same_field(*other.base_);
}

FieldElem::FieldElem(const FieldCtx& ctx, std::vector<Digit> digits) : ctx_(&ctx), d_(std::move(digits)) {}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem r = a;
  a.ctx_->add(a.d_.data(), b.d_.data(), r.d_.data());
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem r = a;
  a.ctx_->sub(a.d_.data(), b.d_.data(), r.d_.data());
  return r;
}

FieldElem operator-(const FieldElem& a) {
  FieldElem r = a;
  a.ctx_->neg(a.d_.data(), r.d_.data());
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  FieldElem r = a;
  a.ctx_->mul(a.d_.data(), b.d_.data(), r.d_.data());
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.ctx_ && b.ctx_ && a.ctx_->same_field(*b.ctx_) && a.d_ == b.d_;
}

FieldElem pow(const FieldElem& x, const Nat& e) {
  if (e < 0) throw UsageError("negative exponent");
  FieldElem r = x.ctx().one();
  if (e == 0) return r;
  const FieldCtx& F = x.ctx();
  std::vector<Digit> acc(r.digits().begin(), r.digits().end());
  for (std::size_t bit = mp::msb(e) + 1; bit-- > 0;) {
    F.mul(acc.data(), acc.data(), acc.data());
    if (mp::bit_test(e, bit)) F.mul(acc.data(), x.data(), acc.data());
  }
  return FieldElem(F, std::move(acc));
}

FieldElem inverse(const FieldElem& x) {
  std::vector<Digit> out(x.ctx().dim());
  x.ctx().inv(x.data(), out.data());
  return FieldElem(x.ctx(), std::move(out));
}

Nat elem_order(const FieldElem& x) {
  if (x.is_zero()) throw std::domain_error("order of zero");
  const FieldCtx& F = x.ctx();
  Nat ord = F.order() - 1;
  for (const auto& pe : F.unit_order_factorization()) {
    for (unsigned i = 0; i < pe.exponent; ++i) {
      Nat cand = ord / pe.prime;
      if (!pow(x, cand).is_one()) break;
      ord = cand;
    }
  }
  return ord;
}

FieldElem subfield_generator(const FieldCtx& ctx, const Nat& subfield_order) {
  const Nat units = ctx.order() - 1;
  if (subfield_order < 2 || units % (subfield_order - 1) != 0) {
    throw UsageError("no subfield of order " + to_string(subfield_order));
  }
  return pow(ctx.primitive(), units / (subfield_order - 1));
}

FieldElem root_of_unity(const FieldCtx& ctx, const Nat& d) {
  const Nat units = ctx.order() - 1;
  if (d < 1 || units % d != 0) throw UsageError("no element of order " + to_string(d));
  const Factorization df = factorize(d);
  const Nat cofactor = units / d;
  for (Nat code = 1; code < ctx.order(); ++code) {
    FieldElem y = pow(ctx.from_code(code), cofactor);
    bool full = true;
    for (const auto& pe : df) {
      if (pow(y, d / pe.prime).is_one()) {
        full = false;
        break;
      }
    }
    if (full) return y;
  }
  throw InternalError("no element of order " + to_string(d));
}

FieldElem frobenius(const FieldElem& x, const Nat& q, unsigned k) {
  if (x.is_zero()) return x;
  return pow(x, mp::powm(q, Nat(k), x.ctx().order() - 1));
}

bool in_subfield(const FieldElem& x, const Nat& q, unsigned k) { return frobenius(x, q, k) == x; }

FieldElem project_to_base(const FieldElem& x) {
  const FieldCtx& F = x.ctx();
  if (F.is_prime()) throw UsageError("prime field has no base field");
  const unsigned bd = F.base()->dim();
  for (unsigned i = bd; i < F.dim(); ++i) {
    if (x.digits()[i]) throw NotInSubfieldError("element is not in the base field");
  }
  return FieldElem(*F.base(), std::vector<Digit>(x.digits().begin(), x.digits().begin() + bd));
}

FieldCtx::Ptr galois_field(const Nat& q) {
  static std::mutex mu;
  static std::map<Nat, FieldCtx::Ptr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  auto pp = as_prime_power(q);
  if (!pp) throw UsageError("not a prime power: " + to_string(q));
  FieldCtx::Ptr F = FieldCtx::prime_field(to_u64(pp->p));
  if (pp->s > 1) F = FieldCtx::extension(F, pp->s);
  std::lock_guard lock(mu);
  return cache.emplace(q, F).first->second;
}

FieldElem Tower::project_to_q(const FieldElem& x) const {
  if (&x.ctx() == fq.get()) return x;
  if (&x.ctx() != top.get()) throw UsageError("element not in this tower");
  return project_to_base(x);
}

FieldElem Tower::level_generator(unsigned j) const {
  if (j == 0 || K % j != 0) throw UsageError("level must divide the tower degree");
  return subfield_generator(*top, ipow(q, j));
}

Tower make_tower(const Nat& q, unsigned K, const FactorBudget& budget) {
  Tower t;
  t.q = q;
  t.K = K;
  t.fq = galois_field(q);
  t.top = K == 1 ? t.fq : FieldCtx::extension(t.fq, K, budget);
  return t;
}

namespace detail {

namespace {

constexpr std::size_t kKaratsubaThreshold = 48;

void add_into(const FieldCtx& F, Dense& dst, const Dense& src, std::size_t shift) {
  const unsigned d = F.dim();
  if (dst.size() < src.size() + shift * d) dst.resize(src.size() + shift * d, 0);
  for (std::size_t i = 0; i < src.size(); i += d) F.add(dst.data() + shift * d + i, src.data() + i, dst.data() + shift * d + i);
}

Dense slice(const FieldCtx& F, const Dense& a, std::size_t from, std::size_t to) {
  const unsigned d = F.dim();
  from = std::min(from * d, a.size());
  to = std::min(to * d, a.size());
  Dense r(a.begin() + from, a.begin() + to);
  trim(F, r);
  return r;
}

Dense schoolbook(const FieldCtx& F, const Dense& a, const Dense& b) {
  const unsigned d = F.dim();
  const std::size_t la = a.size() / d, lb = b.size() / d;
  if (F.is_prime()) {
    const u64 p = F.characteristic();
    std::vector<u64> acc(la + lb - 1, 0);
    const std::size_t shorter = std::min(la, lb);
    const bool lazy = static_cast<unsigned __int128>(p - 1) * (p - 1) * shorter < (static_cast<unsigned __int128>(1) << 63);
    for (std::size_t i = 0; i < la; ++i) {
      const u64 ai = a[i];
      if (!ai) continue;
      if (lazy) {
        for (std::size_t j = 0; j < lb; ++j) acc[i + j] += ai * b[j];
      } else {
        for (std::size_t j = 0; j < lb; ++j) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
      }
    }
    Dense r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<Digit>(acc[i] % p);
    trim(F, r);
    return r;
  }
  Dense r((la + lb - 1) * d, 0);
  std::vector<Digit> t(d);
  for (std::size_t i = 0; i < la; ++i) {
    if (F.is_zero(a.data() + i * d)) continue;
    for (std::size_t j = 0; j < lb; ++j) {
      F.mul(a.data() + i * d, b.data() + j * d, t.data());
      F.add(r.data() + (i + j) * d, t.data(), r.data() + (i + j) * d);
    }
  }
  trim(F, r);
  return r;
}

}  // namespace

void trim(const FieldCtx& F, Dense& a) {
  const unsigned d = F.dim();
  while (a.size() >= d && F.is_zero(a.data() + a.size() - d)) a.resize(a.size() - d);
}

long degree(const FieldCtx& F, const Dense& a) { return static_cast<long>(a.size() / F.dim()) - 1; }

Dense add(const FieldCtx& F, const Dense& a, const Dense& b) {
  Dense r = a;
  add_into(F, r, b, 0);
  trim(F, r);
  return r;
}

Dense sub(const FieldCtx& F, const Dense& a, const Dense& b) {
  const unsigned d = F.dim();
  Dense r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); i += d) F.sub(r.data() + i, b.data() + i, r.data() + i);
  trim(F, r);
  return r;
}

Dense mul(const FieldCtx& F, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  const unsigned d = F.dim();
  const std::size_t la = a.size() / d, lb = b.size() / d;
  if (std::min(la, lb) < kKaratsubaThreshold) return schoolbook(F, a, b);
  const std::size_t h = std::max(la, lb) / 2;
  if (std::min(la, lb) <= h) {
    // Unbalanced: split only the longer operand.
    const Dense& lo = la > lb ? a : b;
    const Dense& sh = la > lb ? b : a;
    Dense r = mul(F, slice(F, lo, 0, h), sh);
    Dense hi = mul(F, slice(F, lo, h, std::max(la, lb)), sh);
    add_into(F, r, hi, h);
    trim(F, r);
    return r;
  }
  Dense a0 = slice(F, a, 0, h), a1 = slice(F, a, h, la);
  Dense b0 = slice(F, b, 0, h), b1 = slice(F, b, h, lb);
  Dense z0 = mul(F, a0, b0);
  Dense z2 = mul(F, a1, b1);
  Dense z1 = sub(F, sub(F, mul(F, add(F, a0, a1), add(F, b0, b1)), z0), z2);
  Dense r = z0;
  add_into(F, r, z1, h);
  add_into(F, r, z2, 2 * h);
  trim(F, r);
  return r;
}

void divrem(const FieldCtx& F, const Dense& a, const Dense& b, Dense* quot, Dense* rem) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  const unsigned d = F.dim();
  const std::size_t la = a.size() / d, lb = b.size() / d;
  Dense r = a;
  Dense q;
  if (la >= lb) {
    q.assign((la - lb + 1) * d, 0);
    std::vector<Digit> linv(d), c(d), t(d);
    F.inv(b.data() + (lb - 1) * d, linv.data());
    for (std::size_t i = la; i-- >= lb;) {
      Digit* ri = r.data() + i * d;
      if (F.is_zero(ri)) continue;
      F.mul(ri, linv.data(), c.data());
      std::copy(c.begin(), c.end(), q.begin() + (i - lb + 1) * d);
      const std::size_t off = i - lb + 1;
      for (std::size_t j = 0; j < lb; ++j) {
        F.mul(c.data(), b.data() + j * d, t.data());
        F.sub(r.data() + (off + j) * d, t.data(), r.data() + (off + j) * d);
      }
    }
    r.resize((lb - 1) * d);
  }
  trim(F, r);
  trim(F, q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

Dense make_monic(const FieldCtx& F, const Dense& a) {
  if (a.empty()) return a;
  const unsigned d = F.dim();
  std::vector<Digit> linv(d);
  F.inv(a.data() + a.size() - d, linv.data());
  Dense r = a;
  for (std::size_t i = 0; i < r.size(); i += d) F.mul(r.data() + i, linv.data(), r.data() + i);
  return r;
}

Dense gcd(const FieldCtx& F, Dense a, Dense b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    Dense r;
    divrem(F, a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

Dense powmod(const FieldCtx& F, const Dense& a, const Nat& e, const Dense& m) {
  Dense base;
  divrem(F, a, m, nullptr, &base);
  const FieldElem one = F.one();
  Dense r(one.digits().begin(), one.digits().end());
  divrem(F, r, m, nullptr, &r);
  if (e == 0) return r;
  for (std::size_t bit = mp::msb(e) + 1; bit-- > 0;) {
    divrem(F, mul(F, r, r), m, nullptr, &r);
    if (mp::bit_test(e, bit)) divrem(F, mul(F, r, base), m, nullptr, &r);
  }
  return r;
}

bool is_irreducible(const FieldCtx& F, const Dense& f_in) {
  Dense f = f_in;
  trim(F, f);
  const long n = degree(F, f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = make_monic(F, f);
  const unsigned d = F.dim();
  Dense x(2 * d, 0);
  x[d] = 1;
  const Nat& Q = F.order();
  // h[i] = x^(Q^i) mod f
  std::vector<Dense> h{x};
  for (long i = 1; i <= n; ++i) h.push_back(powmod(F, h.back(), Q, f));
  if (h[n] != x) return false;
  for (const auto& pe : factorize(Nat(n))) {
    const long m = n / static_cast<long>(pe.prime);
    Dense g = gcd(F, sub(F, h[m], x), f);
    if (degree(F, g) > 0) return false;
  }
  return true;
}

bool is_irreducible_early_exit(const FieldCtx& F, const Dense& f_in) {
  Dense f = f_in;
  trim(F, f);
  const long n = degree(F, f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = make_monic(F, f);
  const unsigned d = F.dim();
  Dense x(2 * d, 0);
  x[d] = 1;
  Dense h = x;
  for (long i = 1; i <= n / 2; ++i) {
    h = powmod(F, h, F.order(), f);
    if (degree(F, gcd(F, sub(F, h, x), f)) > 0) return false;
  }
  return true;
}

}  // namespace detail

}  // namespace xnf
