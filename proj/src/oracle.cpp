#include "xnf/oracle.hpp"

#include <algorithm>

namespace xnf {

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, const Nat& q) {
  require_valid_pair(Nat(n), q);
  const std::uint64_t qm = static_cast<std::uint64_t>(q % n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint64_t> coset;
    for (std::uint64_t x = a; !seen[x]; x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * qm % n)) {
      seen[x] = true;
      coset.push_back(x);
    }
    out.push_back(std::move(coset));
  }
  return out;
}

Nat count_by_cosets(const Nat& n, const Nat& q) {
  require_valid_pair(n, q);
  const std::uint64_t nn = to_u64(n);
  const std::uint64_t qm = static_cast<std::uint64_t>(q % nn);
  std::vector<bool> seen(nn, false);
  Nat count = 0;
  for (std::uint64_t a = 0; a < nn; ++a) {
    if (seen[a]) continue;
    ++count;
    for (std::uint64_t x = a; !seen[x]; x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * qm % nn)) {
      seen[x] = true;
    }
  }
  return count;
}

std::variant<OracleFactorization, OracleSkip> factor_by_cosets(const Nat& n, const Nat& q, const OracleBudget& budget) {
  const PrimePowerForm pp = require_valid_pair(n, q);
  const std::uint64_t nn = to_u64(n);
  const Nat D = mult_order(q % n, n);
  if (D * pp.s > budget.max_prime_degree) {
    return OracleSkip{"splitting field degree " + to_string(D * pp.s) + " over F_p exceeds " +
                      std::to_string(budget.max_prime_degree)};
  }
  const unsigned d = static_cast<unsigned>(D);
  const Nat size = ipow(q, d);
  if (boost::multiprecision::msb(size) + 1 > budget.max_bits) {
    return OracleSkip{"splitting field exceeds " + std::to_string(budget.max_bits) + " bits"};
  }
  OracleFactorization out;
  out.D = d;
  try {
    out.tower = make_tower(q, d, budget.factoring);
  } catch (const ResourceError& e) {
    return OracleSkip{e.what()};
  }
  const FieldCtx& T = *out.tower.top;
  const FieldCtx& Fq = *out.tower.fq;
  const FieldElem beta = root_of_unity(T, n);
  std::vector<FieldElem> powers{T.one()};
  powers.reserve(nn);
  for (std::uint64_t i = 1; i < nn; ++i) powers.push_back(powers.back() * beta);

  for (const auto& coset : cyclotomic_cosets(nn, q)) {
    // prod over the coset of (x - beta^i), expanded over the splitting field.
    std::vector<FieldElem> c{T.one()};
    for (std::uint64_t i : coset) {
      std::vector<FieldElem> next(c.size() + 1, T.zero());
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] = next[k + 1] + c[k];
        next[k] = next[k] - powers[i] * c[k];
      }
      c = std::move(next);
    }
    std::vector<FieldElem> coeffs;
    coeffs.reserve(c.size());
    for (const auto& a : c) coeffs.push_back(out.tower.project_to_q(a));
    out.factors.push_back({Poly::from_coeffs(Fq, coeffs), coset.front()});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const OracleFactor& a, const OracleFactor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

}  // namespace xnf
