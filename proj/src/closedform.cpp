#include "xnf/closedform.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace xnf {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;
using Rational = mp::cpp_rational;

unsigned v2(const Nat& x) { return x == 0 ? 0 : valuation(2, x); }

// prod over primes p of src (odd ones only if asked) of 1 + v_p(vals) (p-1)/p
Rational level_weight(const Nat& src, const Nat& vals, bool odd_only) {
  Rational r = 1;
  if (src == 1) return r;
  for (const auto& pe : factorize(src)) {
    if (odd_only && pe.prime == 2) continue;
    r *= 1 + Rational(Nat(valuation(pe.prime, vals)) * (pe.prime - 1), pe.prime);
  }
  return r;
}

Rational weight(const Nat& m, bool odd_only = false) { return level_weight(m, m, odd_only); }

Nat to_count(const Rational& x, const std::string& what) {
  if (mp::denominator(x) != 1) throw InternalError(what + " is not an integer: " + x.str());
  return mp::numerator(x);
}

std::vector<unsigned> divisors_of(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= k; ++i) {
    if (k % i == 0) out.push_back(i);
  }
  return out;
}

// Level of each named t-range, so that m[key] == coprime_part(m_K, g_K / g_level).
struct RangeKeys {
  std::string top, doubled_top, tri;
  std::map<unsigned, std::string> by_level;
};

RangeKeys range_keys(const CaseTag& tag) {
  const std::uint64_t w = tag.w, w1 = tag.w1, w2 = tag.w2;
  switch (tag.kind) {
    case CaseKind::Order1A:
    case CaseKind::Order1B:
      return {"m_1", "m_2", "", {{1, "m_1"}}};
    case CaseKind::OrderW2A:
    case CaseKind::OrderW2B:
      return {"m_{w^2}", "m_{2w^2}", "m_{w^2,1}^{(2)}",
              {{1, "m_{w^2,1}"}, {static_cast<unsigned>(w), "m_{w^2,2}"}, {static_cast<unsigned>(w * w), "m_{w^2}"}}};
    case CaseKind::Order4:
      return {"m_4", "", "", {{1, "m_{4,1}"}, {2, "m_{4,2}"}, {4, "m_4"}}};
    case CaseKind::OrderW1W2A:
    case CaseKind::OrderW1W2B:
      return {"m_{w1w2}", "m_{2w1w2}", "m_{w1w2,0}^{(2)}",
              {{1, "m_{w1w2,0}"},
               {static_cast<unsigned>(w1), "m_{w1w2,1}"},
               {static_cast<unsigned>(w2), "m_{w1w2,2}"},
               {static_cast<unsigned>(w1 * w2), "m_{w1w2}"}}};
    case CaseKind::Order2W:
      return {"m_{2w}", "", "",
              {{1, "m_{2w,0}"}, {2, "m_{2w,1}"}, {static_cast<unsigned>(w), "m_{2w,2}"},
               {static_cast<unsigned>(2 * w), "m_{2w}"}}};
    case CaseKind::Unsupported:
      break;
  }
  throw UsageError("no parameters for an unsupported case");
}

Family family(std::string name, unsigned level, std::string range_key, bool odd_t_only = false,
              std::vector<unsigned> excluded = {}, u64 pow2_excluded = 0, bool actual_orbit = false) {
  return {std::move(name), level, std::move(range_key), odd_t_only, std::move(excluded), pow2_excluded, actual_orbit};
}

std::vector<Family> families_for(const CaseTag& tag, const CaseParams& p) {
  const RangeKeys keys = range_keys(tag);
  const u64 pow2 = tag.doubled() ? (u64{1} << p.r) : 0;
  const unsigned K = tag.level_degree();
  switch (tag.kind) {
    case CaseKind::Order1A:
      return {family("theta", 1, "m_1")};
    case CaseKind::Order1B:
      return {family("theta", 1, "m_2", true), family("T", 2, "m_2", false, {}, pow2)};
    case CaseKind::OrderW2A:
    case CaseKind::OrderW2B: {
      const unsigned w = static_cast<unsigned>(tag.w);
      const bool B = tag.doubled();
      std::vector<Family> f{
          family("theta", 1, "m_{w^2,1}", B),
          family("S1", w, "m_{w^2,2}", B, {1}),
          family("S2", K, B ? "m_{2w^2}" : "m_{w^2}", B, {w}),
      };
      if (B) {
        f.push_back(family("R1", 2, keys.tri, false, {}, pow2));
        f.push_back(family("R2", 2 * K, "m_{2w^2}", false, {2}, pow2, true));
      }
      return f;
    }
    case CaseKind::Order4:
      return {family("theta", 1, "m_{4,1}"), family("S1", 2, "m_{4,2}", false, {1}), family("S2", 4, "m_4", false, {2})};
    case CaseKind::OrderW1W2A:
    case CaseKind::OrderW1W2B: {
      const unsigned w1 = static_cast<unsigned>(tag.w1), w2 = static_cast<unsigned>(tag.w2);
      const bool B = tag.doubled();
      std::vector<Family> f{
          family("theta", 1, "m_{w1w2,0}", B),
          family("S1", w1, "m_{w1w2,1}", B, {1}),
          family("S2", w2, "m_{w1w2,2}", B, {1}),
          family("S3", K, B ? "m_{2w1w2}" : "m_{w1w2}", B, {w1, w2}),
      };
      if (B) {
        f.push_back(family("R1", 2, keys.tri, false, {}, pow2));
        f.push_back(family("R2", 2 * K, "m_{2w1w2}", false, {2}, pow2, true));
      }
      return f;
    }
    case CaseKind::Order2W: {
      const unsigned w = static_cast<unsigned>(tag.w);
      return {family("theta", 1, "m_{2w,0}"),
              family("S1", 2, "m_{2w,1}", false, {1}),
              family("S2", w, "m_{2w,2}", false, {1}),
              family("S3", 2 * w, "m_{2w}", false, {2, w})};
    }
    case CaseKind::Unsupported:
      break;
  }
  return {};
}

FormKind form_of(unsigned orbit) {
  if (orbit == 1) return FormKind::Binomial;
  if (orbit == 2) return FormKind::Trinomial;
  return FormKind::ConjugateProduct;
}

}  // namespace

bool CaseTag::doubled() const { return kind == CaseKind::Order1B || kind == CaseKind::OrderW2B || kind == CaseKind::OrderW1W2B; }

unsigned CaseTag::level_degree() const {
  switch (kind) {
    case CaseKind::Order1A:
    case CaseKind::Order1B:
      return 1;
    case CaseKind::OrderW2A:
    case CaseKind::OrderW2B:
      return static_cast<unsigned>(w * w);
    case CaseKind::Order4:
      return 4;
    case CaseKind::OrderW1W2A:
    case CaseKind::OrderW1W2B:
      return static_cast<unsigned>(w1 * w2);
    case CaseKind::Order2W:
      return static_cast<unsigned>(2 * w);
    case CaseKind::Unsupported:
      break;
  }
  return 0;
}

std::vector<std::uint64_t> CaseTag::special_primes() const {
  switch (kind) {
    case CaseKind::OrderW2A:
    case CaseKind::OrderW2B:
      return {w};
    case CaseKind::Order4:
      return {2};
    case CaseKind::OrderW1W2A:
    case CaseKind::OrderW1W2B:
      return {w1, w2};
    case CaseKind::Order2W:
      return {2, w};
    default:
      return {};
  }
}

std::string CaseTag::name() const {
  switch (kind) {
    case CaseKind::Order1A:
      return "ORDER_1_A";
    case CaseKind::Order1B:
      return "ORDER_1_B";
    case CaseKind::OrderW2A:
      return "ORDER_W2_A";
    case CaseKind::OrderW2B:
      return "ORDER_W2_B";
    case CaseKind::Order4:
      return "ORDER_4";
    case CaseKind::OrderW1W2A:
      return "ORDER_W1W2_A";
    case CaseKind::OrderW1W2B:
      return "ORDER_W1W2_B";
    case CaseKind::Order2W:
      return "ORDER_2W";
    case CaseKind::Unsupported:
      break;
  }
  return "UNSUPPORTED(" + to_string(order) + ")";
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Binomial:
      return "binomial";
    case FormKind::Trinomial:
      return "trinomial";
    case FormKind::ConjugateProduct:
      break;
  }
  return "conjugate_product";
}

CaseTag classify(const Nat& n, const Nat& q) {
  require_valid_pair(n, q);
  CaseTag tag;
  const Nat rad = radical(n);
  tag.order = mult_order(q % rad, rad);
  const bool doubled = q % 4 == 3 && n % 8 == 0;
  if (tag.order == 1) {
    tag.kind = doubled ? CaseKind::Order1B : CaseKind::Order1A;
    return tag;
  }
  if (tag.order == 4) {
    tag.kind = CaseKind::Order4;
    return tag;
  }
  const Factorization f = factorize(tag.order);
  if (f.size() == 1 && f[0].exponent == 2 && f[0].prime != 2) {
    tag.kind = doubled ? CaseKind::OrderW2B : CaseKind::OrderW2A;
    tag.w = to_u64(f[0].prime);
  } else if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) {
    if (f[0].prime == 2) {
      tag.kind = CaseKind::Order2W;
      tag.w = to_u64(f[1].prime);
    } else {
      tag.kind = doubled ? CaseKind::OrderW1W2B : CaseKind::OrderW1W2A;
      tag.w1 = to_u64(f[0].prime);
      tag.w2 = to_u64(f[1].prime);
    }
  }
  return tag;
}

std::map<std::string, Nat> decompose(const Nat& n, const Nat& q, const CaseTag& tag) {
  require_valid_pair(n, q);
  std::map<std::string, Nat> out;
  std::map<Nat, std::string> bucket_of;
  switch (tag.kind) {
    case CaseKind::Order1A:
    case CaseKind::Order1B:
      out["n1"] = n;
      return out;
    case CaseKind::OrderW2A:
    case CaseKind::OrderW2B:
      bucket_of = {{1, "n1"}, {tag.w, "n2"}, {tag.w * tag.w, "n3"}};
      break;
    case CaseKind::Order4:
      bucket_of = {{1, "n1"}, {2, "n2"}, {4, "n3"}};
      break;
    case CaseKind::OrderW1W2A:
    case CaseKind::OrderW1W2B:
      bucket_of = {{1, "n0"}, {tag.w1, "n1"}, {tag.w2, "n2"}, {tag.w1 * tag.w2, "n3"}};
      break;
    case CaseKind::Order2W:
      bucket_of = {{1, "n0"}, {2, "n1"}, {tag.w, "n2"}, {2 * tag.w, "n3"}};
      break;
    case CaseKind::Unsupported:
      throw UsageError("decompose: unsupported case " + tag.name());
  }
  for (const auto& [ord, name] : bucket_of) out[name] = 1;
  const auto special = tag.special_primes();
  for (std::uint64_t s : special) out["v_" + std::to_string(s)] = 0;
  for (const auto& pe : factorize(n)) {
    if (std::find(special.begin(), special.end(), pe.prime) != special.end()) {
      out["v_" + to_string(pe.prime)] = pe.exponent;
      continue;
    }
    auto it = bucket_of.find(mult_order(q % pe.prime, pe.prime));
    if (it == bucket_of.end()) throw InternalError("prime of n with an order outside the case");
    out[it->second] *= ipow(pe.prime, pe.exponent);
  }
  return out;
}

CaseParams compute_params(const Nat& n, const Nat& q, const CaseTag& tag) {
  if (!tag.supported()) throw UsageError("compute_params: unsupported case " + tag.name());
  CaseParams p;
  p.n = n;
  p.q = q;
  p.tag = tag;
  p.buckets = decompose(n, q, tag);
  const unsigned K = tag.level_degree();
  const bool B = tag.doubled();
  p.tower_degree = B ? 2 * K : K;
  for (unsigned j : divisors_of(2 * K)) {
    const Nat qj = ipow(q, j) - 1;
    p.g[j] = gcd(n, qj);
    p.l[j] = qj / p.g[j];
  }
  if (B) p.r = std::min(v2(n / 2), v2(q + 1));

  const RangeKeys keys = range_keys(tag);
  const Nat mK = n / p.g[K];
  if (tag.kind == CaseKind::Order1A || tag.kind == CaseKind::Order1B) {
    p.m["m_1"] = n / p.g[1];
    if (B) p.m["m_2"] = n / p.g[2];
  } else {
    // A prime of n counts toward level j only if its full power already lies
    // in the j-th gcd; otherwise it waits for the top level.
    for (const auto& [j, key] : keys.by_level) p.m[key] = coprime_part(mK, p.g[K] / p.g[j]);
    if (B) {
      const Nat m2K = n / p.g[2 * K];
      p.m[keys.doubled_top] = m2K;
      p.m[keys.tri] = coprime_part(m2K, p.g[2 * K] / p.g[2]);
      const Nat rr = Nat(1) << (p.r - 1);
      const Nat v = v2(m2K);
      if (tag.kind == CaseKind::OrderW2B) {
        const Nat w = tag.w;
        p.A = rr * (2 + v) * (w * w - 1) + w * w - 2 * w + 1;
      } else {
        const Nat w1 = tag.w1, w2 = tag.w2;
        p.B = rr * (2 + v) * (w1 * w2 - 1) + w1 * w2 - 2 * w1 - 2 * w2 + 3;
      }
    }
  }
  p.families = families_for(tag, p);
  return p;
}

IndexSet enum_index_set(const CaseParams& params, const Family& family, const Nat& t) {
  IndexSet set;
  set.family = family.name;
  set.t = t;
  const u64 g = to_u64(params.g.at(family.level));
  const u64 tt = to_u64(t);
  set.modulus = g;
  const u64 qm = static_cast<u64>(params.q % g);
  const Nat& L = params.l.at(family.level);
  const Nat top = ipow(params.q, family.level) - 1;

  struct Exclusion {
    Nat D;
    bool small;
    u64 d64 = 0, l64 = 0;
    Nat lmod;
  };
  std::vector<Exclusion> excl;
  for (unsigned j : family.excluded_levels) {
    Exclusion e;
    e.D = top / (ipow(params.q, j) - 1);
    e.lmod = L % e.D;
    e.small = e.D <= std::numeric_limits<u64>::max();
    if (e.small) {
      e.d64 = static_cast<u64>(e.D);
      e.l64 = static_cast<u64>(e.lmod);
    }
    excl.push_back(std::move(e));
  }

  for (u64 u = 1; u <= g; ++u) {
    if (std::gcd(u, tt) != 1) continue;
    if (family.pow2_excluded && u % family.pow2_excluded == 0) continue;
    bool excluded = false;
    for (const auto& e : excl) {
      const bool divides = e.small ? static_cast<unsigned __int128>(u) * e.l64 % e.d64 == 0 : (e.lmod * u) % e.D == 0;
      if (divides) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    // Orbit under multiplication by q mod g, with residue 0 read as g.
    const u64 start = u % g;
    u64 x = start;
    unsigned len = 0;
    bool minimal = true;
    do {
      x = static_cast<u64>(static_cast<unsigned __int128>(x) * qm % g);
      ++len;
      if ((x == 0 ? g : x) < u) {
        minimal = false;
        break;
      }
    } while (x != start);
    if (!minimal) continue;
    if (!family.actual_orbit && len != family.level) {
      throw InternalError("family " + family.name + ": orbit of u=" + std::to_string(u) + " has length " +
                          std::to_string(len) + ", expected " + std::to_string(family.level));
    }
    set.members.push_back(u);
    set.orbit_lengths.push_back(len);
  }
  return set;
}

std::variant<ClosedFormFactorization, OracleFallback> factor_closed_form(const Nat& n, const Nat& q, unsigned threads) {
  const CaseTag tag = classify(n, q);
  if (!tag.supported()) return OracleFallback{tag};
  ClosedFormFactorization out;
  out.params = compute_params(n, q, tag);
  const CaseParams& P = out.params;
  out.tower = make_tower(q, P.tower_degree);
  const Tower& tower = out.tower;

  struct Cell {
    std::size_t family;
    Nat t;
    u64 u;
    unsigned orbit;
  };
  std::vector<Cell> cells;
  // All roots are powers of one element of order g_top, so only n gets factored.
  const Nat& g_top = P.g.at(P.tower_degree);
  const FieldElem zeta = root_of_unity(*tower.top, g_top);
  for (std::size_t fi = 0; fi < P.families.size(); ++fi) {
    const Family& fam = P.families[fi];
    for (const Nat& t : divisors(P.m.at(fam.range_key))) {
      if (fam.odd_t_only && t % 2 == 0) continue;
      IndexSet set = enum_index_set(P, fam, t);
      for (std::size_t i = 0; i < set.members.size(); ++i) cells.push_back({fi, t, set.members[i], set.orbit_lengths[i]});
    }
  }

  std::vector<std::optional<IrreducibleFactor>> built(cells.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < cells.size(); i += step) {
      const Cell& c = cells[i];
      const Family& fam = P.families[c.family];
      FieldElem root = pow(zeta, g_top / P.g.at(fam.level) * c.u);
      Poly f = conjugate_product(static_cast<std::size_t>(c.t), root, c.orbit, tower);
      built[i] = IrreducibleFactor{std::move(f), {form_of(c.orbit), fam.name, c.t, c.u, fam.level, c.orbit}};
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w, threads);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  out.factors.reserve(built.size());
  for (auto& b : built) out.factors.push_back(std::move(*b));
  std::sort(out.factors.begin(), out.factors.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

std::optional<Nat> count_closed_form(const Nat& n, const Nat& q) {
  const CaseTag tag = classify(n, q);
  if (!tag.supported()) return std::nullopt;
  const CaseParams P = compute_params(n, q, tag);
  const auto& m = P.m;
  const auto& g = P.g;
  const Rational two_r = Rational(Nat(1) << P.r);
  Rational total;
  switch (tag.kind) {
    case CaseKind::Order1A:
      total = weight(m.at("m_1")) * g.at(1);
      break;
    case CaseKind::Order1B: {
      const Nat& m2 = m.at("m_2");
      total = g.at(1) * (Rational(1, 2) + two_r / 4 * (2 + v2(m2))) * weight(m2, true);
      break;
    }
    case CaseKind::OrderW2A: {
      const Nat w = tag.w, K = w * w;
      total = weight(m.at("m_{w^2,1}")) * Rational(w - 1, w) * g.at(1) +
              weight(m.at("m_{w^2,2}")) * Rational(w - 1, K) * g.at(tag.w) +
              weight(m.at("m_{w^2}")) * Rational(1, K) * g.at(tag.level_degree());
      break;
    }
    case CaseKind::OrderW2B: {
      const Nat w = tag.w, K = w * w;
      const Nat& m2K = m.at("m_{2w^2}");
      total = level_weight(m.at("m_{w^2,1}"), m2K, true) * Rational(*P.A, 2 * K) * g.at(1) +
              level_weight(m.at("m_{w^2,2}"), m2K, true) * Rational(w - 1, K) * g.at(tag.w) +
              level_weight(m2K, m2K, true) * (two_r + 1 + v2(m2K) * two_r / 2) / (2 * K) * g.at(tag.level_degree());
      // Doubled-part roots at level w are counted as if they sat at level 1; move them up.
      const Rational c = (two_r - 1 + v2(m2K) * two_r / 2) / 2;
      const Rational bottom = level_weight(m.at("m_{w^2,1}"), m2K, true) * g.at(1);
      total += c * Rational(w - 1, K) * (level_weight(m.at("m_{w^2,2}"), m2K, true) * g.at(tag.w) - bottom);
      break;
    }
    case CaseKind::Order4:
      total = weight(m.at("m_{4,1}")) * Rational(g.at(1), 2) + weight(m.at("m_{4,2}")) * Rational(g.at(2), 4) +
              weight(m.at("m_4")) * Rational(g.at(4), 4);
      break;
    case CaseKind::OrderW1W2A:
    case CaseKind::Order2W: {
      const bool two_w = tag.kind == CaseKind::Order2W;
      const Nat w1 = two_w ? 2 : tag.w1, w2 = two_w ? tag.w : tag.w2, K = w1 * w2;
      const std::string s = two_w ? "2w" : "w1w2";
      total = weight(m.at("m_{" + s + ",0}")) * Rational((w1 - 1) * (w2 - 1), K) * g.at(1) +
              weight(m.at("m_{" + s + ",1}")) * Rational(w2 - 1, K) * g.at(static_cast<unsigned>(w1)) +
              weight(m.at("m_{" + s + ",2}")) * Rational(w1 - 1, K) * g.at(static_cast<unsigned>(w2)) +
              weight(m.at("m_{" + s + "}")) * Rational(1, K) * g.at(tag.level_degree());
      break;
    }
    case CaseKind::OrderW1W2B: {
      const Nat w1 = tag.w1, w2 = tag.w2, K = w1 * w2;
      const Nat& m2K = m.at("m_{2w1w2}");
      total = level_weight(m.at("m_{w1w2,0}"), m2K, true) * Rational(*P.B, 2 * K) * g.at(1) +
              level_weight(m.at("m_{w1w2,1}"), m2K, true) * Rational(w2 - 1, K) * g.at(static_cast<unsigned>(tag.w1)) +
              level_weight(m.at("m_{w1w2,2}"), m2K, true) * Rational(w1 - 1, K) * g.at(static_cast<unsigned>(tag.w2)) +
              level_weight(m2K, m2K, true) * (two_r + 1 + v2(m2K) * two_r / 2) / (2 * K) * g.at(tag.level_degree());
      const Rational c = (two_r - 1 + v2(m2K) * two_r / 2) / 2;
      const unsigned l1 = static_cast<unsigned>(w1), l2 = static_cast<unsigned>(w2);
      const Rational bottom = level_weight(m.at("m_{w1w2,0}"), m2K, true) * g.at(1);
      total += c * Rational(w2 - 1, K) * (level_weight(m.at("m_{w1w2,1}"), m2K, true) * g.at(l1) - bottom) +
               c * Rational(w1 - 1, K) * (level_weight(m.at("m_{w1w2,2}"), m2K, true) * g.at(l2) - bottom);
      break;
    }
    case CaseKind::Unsupported:
      return std::nullopt;
  }
  return to_count(total, "closed-form count");
}

std::optional<Nat> count_by_levels(const Nat& n, const Nat& q) {
  const CaseTag tag = classify(n, q);
  if (!tag.supported()) return std::nullopt;
  const unsigned K = tag.level_degree();
  const bool B = tag.doubled();
  auto g = [&](unsigned j) { return gcd(n, ipow(q, j) - 1); };
  const Nat gK = g(K), g2K = g(2 * K);
  const Nat mK = n / gK, m2K = n / g2K;
  const unsigned r = B ? std::min(v2(n / 2), v2(q + 1)) : 0;
  const Rational two_r = Rational(Nat(1) << r);
  Rational total;
  for (unsigned i : divisors_of(K)) {
    const Rational coef(euler_phi(Nat(K / i)), Nat(K));
    const Nat gi = g(i);
    const Nat Mi = coprime_part(mK, gK / gi);
    if (!B) {
      total += coef * gi * weight(Mi);
    } else {
      const Nat M2 = coprime_part(m2K, g2K / g(2 * i));
      total += coef * gi * (weight(Mi, true) + weight(M2, true) * (two_r - 1 + two_r / 2 * v2(M2)) / 2);
    }
  }
  return to_count(total, "level count");
}

bool check_binomial_irreducible(const Nat& t, const FieldElem& eta) {
  if (t < 1) throw UsageError("binomial degree must be positive");
  if (t == 1) return true;
  if (eta.is_zero()) return false;
  const Nat q = eta.ctx().order();
  const Nat e = elem_order(eta);
  const Nat cofactor = (q - 1) / e;
  for (const auto& pe : factorize(t)) {
    if (e % pe.prime != 0 || cofactor % pe.prime == 0) return false;
  }
  if (t % 4 == 0 && q % 4 != 1) return false;
  return true;
}

}  // namespace xnf
