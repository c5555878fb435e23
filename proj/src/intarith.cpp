#include "xnf/intarith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace xnf {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<u64>& primes_up_to(u64 limit) {
  static std::mutex mu;
  static std::map<u64, std::vector<u64>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(limit);
  if (it != cache.end()) return it->second;
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return cache.emplace(limit, std::move(out)).first->second;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact for every n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool miller_rabin_big(const Nat& n) {
  Nat d = n - 1;
  unsigned s = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u,
                     41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u}) {
    Nat x = mp::powm(Nat(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns 0 if the attempt failed.
u64 rho_u64(u64 n, u64 c, u64 x0, u64 cap) {
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = x0 % n, x = y, g = 1, q = 1, ys = y;
  const u64 block = 128;
  u64 r = 1, steps = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += block) {
      ys = y;
      for (u64 i = 0; i < std::min(block, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      steps += block;
    }
    r <<= 1;
    if (steps > cap) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

// Montgomery arithmetic modulo an odd n < 2^127, R = 2^128.
class Mont128 {
 public:
  explicit Mont128(u128 n) : n_(n) {
    u128 inv = n;  // Newton iteration for n^-1 mod 2^128
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    ninv_ = -inv;
  }
  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    wide(a, b, hi, lo);
    const u128 m = lo * ninv_;
    u128 mhi, mlo;
    wide(m, n_, mhi, mlo);
    const u128 sum_lo = lo + mlo;
    u128 r = hi + mhi + (sum_lo < lo ? 1 : 0);
    return r >= n_ ? r - n_ : r;
  }
  u128 add(u128 a, u128 b) const {
    u128 r = a + b;
    return r >= n_ ? r - n_ : r;
  }

 private:
  static void wide(u128 a, u128 b, u128& hi, u128& lo) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0, p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0, p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    lo = (mid << 64) | static_cast<u64>(p00);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  u128 n_;
  u128 ninv_;
};

u128 gcd128(u128 a, u128 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Same walk as rho_u64, in Montgomery form. Values stay below n < 2^127.
u128 rho_u128(u128 n, u128 c, u128 x0, u64 cap) {
  const Mont128 M(n);
  auto f = [&](u128 x) { return M.add(M.mul(x, x), c); };
  auto diff = [](u128 a, u128 b) { return a > b ? a - b : b - a; };
  u128 y = x0 % n, x = y, g = 1, q = 1, ys = y;
  const u64 block = 128;
  u64 r = 1, steps = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += block) {
      ys = y;
      for (u64 i = 0; i < std::min(block, r - k); ++i) {
        y = f(y);
        q = M.mul(q, diff(x, y));
      }
      g = gcd128(q, n);
      steps += block;
    }
    r <<= 1;
    if (steps > cap) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd128(diff(x, ys), n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

Nat rho_big(const Nat& n, unsigned c, const Nat& x0, u64 cap) {
  auto f = [&](const Nat& x) { return (x * x + c) % n; };
  Nat y = x0 % n, x = y, g = 1, q = 1, ys = y;
  const u64 block = 128;
  u64 r = 1, steps = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += block) {
      ys = y;
      for (u64 i = 0; i < std::min(block, r - k); ++i) {
        y = f(y);
        q = q * (x > y ? Nat(x - y) : Nat(y - x)) % n;
      }
      g = mp::gcd(q, n);
      steps += block;
    }
    r <<= 1;
    if (steps > cap) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = mp::gcd(x > ys ? Nat(x - ys) : Nat(ys - x), n);
    } while (g == 1);
  }
  return g == n ? Nat(0) : g;
}

Nat find_divisor(const Nat& n, const FactorBudget& budget) {
  // Deterministic: the starting point is derived from n itself.
  for (unsigned attempt = 1; attempt <= 16; ++attempt) {
    if (n <= std::numeric_limits<u64>::max()) {
      u64 m = static_cast<u64>(n);
      u64 d = rho_u64(m, attempt, 2 + (m >> 7) % 1000003 + attempt, budget.rho_iterations);
      if (d) return Nat(d);
    } else if (msb(n) < 126 && bit_test(n, 0)) {
      const u128 m = (static_cast<u128>(static_cast<u64>(n >> 64)) << 64) | static_cast<u64>(n & ~u64{0});
      u128 d = rho_u128(m, attempt, 2 + static_cast<u64>((n >> 7) % 1000003) + attempt, budget.rho_iterations);
      if (d) return Nat(static_cast<u64>(d >> 64)) << 64 | Nat(static_cast<u64>(d));
    } else {
      Nat x0 = 2 + (n >> 7) % 1000003 + attempt;
      Nat d = rho_big(n, attempt, x0, budget.rho_iterations);
      if (d != 0) return d;
    }
  }
  throw ResourceError("factoring budget exhausted for " + to_string(n));
}

void split(const Nat& n, const FactorBudget& budget, std::map<Nat, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Nat d = find_divisor(n, budget);
  split(d, budget, out);
  split(n / d, budget, out);
}

Factorization from_map(const std::map<Nat, unsigned>& m) {
  Factorization f;
  for (const auto& [p, e] : m) f.push_back({p, e});
  return f;
}

int mobius(const Factorization& f) {
  for (const auto& pe : f) {
    if (pe.exponent > 1) return 0;
  }
  return f.size() % 2 ? -1 : 1;
}

}  // namespace

std::string to_string(const Nat& x) { return x.str(); }

std::uint64_t to_u64(const Nat& x) {
  if (x < 0 || x > std::numeric_limits<u64>::max()) {
    throw ResourceError("value exceeds 64 bits: " + to_string(x));
  }
  return static_cast<u64>(x);
}

Nat ipow(const Nat& base, unsigned e) { return mp::pow(base, e); }
Nat gcd(const Nat& a, const Nat& b) { return mp::gcd(a, b); }
Nat lcm(const Nat& a, const Nat& b) { return mp::lcm(a, b); }

bool is_prime(const Nat& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return miller_rabin_u64(static_cast<u64>(n));
  for (u64 p : primes_up_to(1000)) {
    if (n % p == 0) return false;
  }
  return miller_rabin_big(n);
}

Factorization factorize(const Nat& n, const FactorBudget& budget) {
  if (n < 1) throw UsageError("factorize: argument must be positive");
  std::map<Nat, unsigned> out;
  Nat m = n;
  for (u64 p : primes_up_to(budget.trial_limit)) {
    if (Nat(p) * p > m) break;
    while (m % p == 0) {
      m /= p;
      ++out[Nat(p)];
    }
  }
  if (m > 1) {
    Nat lim = budget.trial_limit;
    if (m < lim * lim) {
      ++out[m];
    } else {
      split(m, budget, out);
    }
  }
  return from_map(out);
}

Factorization merge(const Factorization& a, const Factorization& b) {
  std::map<Nat, unsigned> m;
  for (const auto& pe : a) m[pe.prime] += pe.exponent;
  for (const auto& pe : b) m[pe.prime] += pe.exponent;
  return from_map(m);
}

Nat expand(const Factorization& f) {
  Nat r = 1;
  for (const auto& pe : f) r *= ipow(pe.prime, pe.exponent);
  return r;
}

Factorization factorize_power_minus_one(const Nat& q, unsigned k, const FactorBudget& budget) {
  if (q < 2 || k == 0) throw UsageError("factorize_power_minus_one: need q >= 2, k >= 1");
  Factorization total;
  for (const Nat& dn : divisors(Nat(k))) {
    unsigned d = static_cast<unsigned>(dn);
    Nat num = 1, den = 1;
    for (const Nat& en : divisors(dn)) {
      unsigned e = static_cast<unsigned>(en);
      int mu = mobius(factorize(Nat(d / e)));
      if (mu == 1) num *= ipow(q, e) - 1;
      if (mu == -1) den *= ipow(q, e) - 1;
    }
    total = merge(total, factorize(num / den, budget));
  }
  return total;
}

Nat radical(const Nat& n) {
  Nat r = 1;
  for (const auto& pe : factorize(n)) r *= pe.prime;
  return r;
}

unsigned valuation(const Nat& p, Nat n) {
  if (p < 2 || n == 0) throw UsageError("valuation: need p >= 2 and n != 0");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Nat euler_phi(const Nat& n) {
  Nat r = n;
  for (const auto& pe : factorize(n)) r = r / pe.prime * (pe.prime - 1);
  return r;
}

std::vector<Nat> divisors(const Factorization& f) {
  std::vector<Nat> out{1};
  for (const auto& pe : f) {
    std::size_t base = out.size();
    Nat pk = 1;
    for (unsigned e = 1; e <= pe.exponent; ++e) {
      pk *= pe.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Nat> divisors(const Nat& n) { return divisors(factorize(n)); }

Nat coprime_part(Nat m, const Nat& x) {
  for (Nat g = mp::gcd(m, x); g > 1; g = mp::gcd(m, x)) m /= g;
  return m;
}

Nat mult_order(const Nat& a, const Nat& m, const Factorization& exponent) {
  if (m == 1) return 1;
  if (mp::gcd(a, m) != 1) throw UsageError("mult_order: base not coprime to modulus");
  Nat ord = expand(exponent);
  for (const auto& pe : exponent) {
    for (unsigned i = 0; i < pe.exponent; ++i) {
      Nat cand = ord / pe.prime;
      if (mp::powm(a % m, cand, m) != 1) break;
      ord = cand;
    }
  }
  return ord;
}

Nat mult_order(const Nat& a, const Nat& m) {
  if (m < 1) throw UsageError("mult_order: modulus must be positive");
  if (m == 1) return 1;
  // Carmichael exponent, kept in factored form.
  std::map<Nat, unsigned> lam;
  auto raise = [&](const Nat& p, unsigned e) { lam[p] = std::max(lam[p], e); };
  for (const auto& pe : factorize(m)) {
    if (pe.prime == 2) {
      if (pe.exponent == 2) raise(2, 1);
      if (pe.exponent >= 3) raise(2, pe.exponent - 2);
      continue;
    }
    if (pe.exponent > 1) raise(pe.prime, pe.exponent - 1);
    for (const auto& qe : factorize(pe.prime - 1)) raise(qe.prime, qe.exponent);
  }
  return mult_order(a, m, from_map(lam));
}

std::optional<PrimePowerForm> as_prime_power(const Nat& q) {
  if (q < 2) return std::nullopt;
  Factorization f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePowerForm{f[0].prime, f[0].exponent};
}

PrimePowerForm require_valid_pair(const Nat& n, const Nat& q) {
  if (n < 1) throw UsageError("n must be a positive integer");
  auto pp = as_prime_power(q);
  if (!pp) throw UsageError("q = " + to_string(q) + " is not a prime power");
  if (n % pp->p == 0) {
    throw UsageError("gcd(n, q) != 1: n = " + to_string(n) + " and q = " + to_string(q) + " share the prime " +
                     to_string(pp->p));
  }
  return *pp;
}

}  // namespace xnf
