#pragma once

// Independent reference computations for the tests. Brute force only; keep inputs small.

#include <cstdint>
#include <map>
#include <vector>

#include "xnf/polyring.hpp"

namespace xnf::testing {

// Every monic polynomial of the given degree over F.
inline std::vector<Poly> monic_polys(const FieldCtx& F, std::size_t deg) {
  const std::uint64_t q = to_u64(F.order());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < deg; ++i) total *= q;
  std::vector<Poly> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FieldElem> c;
    std::uint64_t x = code;
    for (std::size_t i = 0; i < deg; ++i) {
      c.push_back(F.from_code(x % q));
      x /= q;
    }
    c.push_back(F.one());
    out.push_back(Poly::from_coeffs(F, c));
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..deg/2.
inline bool brute_irreducible(const Poly& f) {
  const std::size_t d = f.degree();
  if (d == 0) return false;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    for (const Poly& g : monic_polys(f.field(), k)) {
      if (divrem(f, g).second.is_zero()) return false;
    }
  }
  return true;
}

// Number of q-orbits on Z/n, by marking.
inline std::uint64_t orbit_count(std::uint64_t n, std::uint64_t q) {
  std::vector<bool> seen(n, false);
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++count;
    for (std::uint64_t x = a; !seen[x]; x = x * q % n) seen[x] = true;
  }
  return count;
}

// Orbit sizes with multiplicity: size -> how many orbits.
inline std::map<std::uint64_t, std::uint64_t> orbit_sizes(std::uint64_t n, std::uint64_t q) {
  std::vector<bool> seen(n, false);
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = a; !seen[x]; x = x * q % n) {
      seen[x] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

}  // namespace xnf::testing
