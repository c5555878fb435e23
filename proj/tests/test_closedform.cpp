#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "xnf/closedform.hpp"
#include "xnf/oracle.hpp"

using namespace xnf;

namespace {

const ClosedFormFactorization& closed(const Nat& n, const Nat& q) {
  static std::map<std::pair<Nat, Nat>, ClosedFormFactorization> cache;
  auto it = cache.find({n, q});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(n, q), std::get<ClosedFormFactorization>(factor_closed_form(n, q))).first;
  }
  return it->second;
}

std::size_t members(const CaseParams& p, const std::string& family, const Nat& t) {
  for (const auto& f : p.families) {
    if (f.name == family) return enum_index_set(p, f, t).members.size();
  }
  ADD_FAILURE() << "no family " << family;
  return 0;
}

}  // namespace

TEST(Classify, Tags) {
  EXPECT_EQ(classify(73, 2).name(), "ORDER_W2_A");
  EXPECT_EQ(classify(40, 3).name(), "ORDER_4");
  EXPECT_EQ(classify(151, 2).name(), "ORDER_W1W2_A");
  EXPECT_EQ(classify(6056, 3).name(), "ORDER_W2_B");
  EXPECT_EQ(classify(36488, 3).name(), "ORDER_W1W2_B");
  EXPECT_EQ(classify(8, 7).name(), "ORDER_1_B");
  EXPECT_EQ(classify(4, 7).name(), "ORDER_1_A");
  EXPECT_EQ(classify(1, 2).name(), "ORDER_1_A");
  EXPECT_EQ(classify(11, 3).name(), "UNSUPPORTED(5)");
  EXPECT_EQ(classify(21, 4).name(), "UNSUPPORTED(3)");
  EXPECT_FALSE(classify(7, 2).supported());
  const CaseTag t = classify(151, 2);
  EXPECT_EQ(t.w1, 3u);
  EXPECT_EQ(t.w2, 5u);
  EXPECT_EQ(t.level_degree(), 15u);
}

TEST(Classify, OrderMatchesRadical) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (std::gcd<std::uint64_t>(n, q) != 1) continue;
      EXPECT_EQ(classify(n, q).order, mult_order(q, radical(n))) << n << "," << q;
    }
  }
}

TEST(Decompose, Buckets) {
  auto b = decompose(40, 3, classify(40, 3));
  EXPECT_EQ(b.at("n3"), 5);
  EXPECT_EQ(b.at("v_2"), 3);
  b = decompose(6056, 3, classify(6056, 3));
  EXPECT_EQ(b.at("n1"), 8);
  EXPECT_EQ(b.at("n3"), 757);
}

TEST(Decompose, BucketsMultiplyToN) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    for (std::uint64_t n = 1; n <= 600; ++n) {
      if (std::gcd<std::uint64_t>(n, q) != 1) continue;
      const CaseTag tag = classify(n, q);
      if (!tag.supported()) continue;
      Nat prod = 1;
      for (const auto& [k, v] : decompose(n, q, tag)) {
        if (k.rfind("v_", 0) == 0) {
          prod *= ipow(Nat(k.substr(2)), static_cast<unsigned>(v));
        } else {
          prod *= v;
        }
      }
      EXPECT_EQ(prod, n) << n << "," << q;
    }
  }
}

TEST(Params, RangesAreCoprimeParts) {
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t n = 1; n <= 400; ++n) {
      if (std::gcd<std::uint64_t>(n, q) != 1) continue;
      const CaseTag tag = classify(n, q);
      if (!tag.supported()) continue;
      const CaseParams p = compute_params(n, q, tag);
      for (const auto& [j, g] : p.g) {
        EXPECT_EQ(g, gcd(Nat(n), ipow(q, j) - 1));
        EXPECT_EQ(p.l.at(j) * g, ipow(q, j) - 1);
      }
      for (const auto& f : p.families) {
        const Nat& m = p.m.at(f.range_key);
        EXPECT_EQ(n % m, 0) << f.range_key;
        // Every t in range only has primes of n that are fixed at the family's level.
        EXPECT_EQ(coprime_part(m, p.g.at(f.level) * (tag.doubled() ? 2 : 1)), 1)
            << n << "," << q << " " << f.name << " " << f.range_key << "=" << m;
      }
    }
  }
}

TEST(IndexSet, ReferenceSizes) {
  const CaseParams p = compute_params(73, 2, classify(73, 2));
  EXPECT_EQ(members(p, "S2", 1), 8u);
  EXPECT_EQ(members(p, "S1", 1), 0u);
  EXPECT_EQ(members(p, "theta", 1), 1u);
  const CaseParams p40 = compute_params(40, 3, classify(40, 3));
  EXPECT_EQ(members(p40, "theta", 1), 2u);
  EXPECT_EQ(members(p40, "S1", 1), 3u);
  EXPECT_EQ(members(p40, "S2", 1), 8u);
}

TEST(IndexSet, MembersAreOrbitMinima) {
  const CaseParams p = compute_params(6056, 3, classify(6056, 3));
  for (const auto& f : p.families) {
    for (const Nat& t : divisors(p.m.at(f.range_key))) {
      const IndexSet s = enum_index_set(p, f, t);
      for (std::size_t i = 0; i < s.members.size(); ++i) {
        const std::uint64_t u = s.members[i], g = s.modulus;
        EXPECT_EQ(std::gcd<std::uint64_t>(u, to_u64(t)), 1u);
        std::uint64_t x = u % g;
        for (unsigned k = 0; k < s.orbit_lengths[i]; ++k) {
          x = x * 3 % g;
          EXPECT_GE(x == 0 ? g : x, u);
        }
        EXPECT_EQ(x, u % g);
      }
    }
  }
}

TEST(ClosedForm, ReferenceCounts) {
  EXPECT_EQ(*count_closed_form(73, 2), 9);
  EXPECT_EQ(*count_closed_form(40, 3), 13);
  EXPECT_EQ(*count_closed_form(151, 2), 11);
  EXPECT_EQ(*count_closed_form(6056, 3), 425);
  EXPECT_EQ(*count_closed_form(36488, 3), 1525);
  EXPECT_FALSE(count_closed_form(21, 4));
}

TEST(ClosedForm, FactorsOf73) {
  const auto& cf = closed(73, 2);
  ASSERT_EQ(cf.factors.size(), 9u);
  EXPECT_EQ(cf.factors[0].poly.degree(), 1u);
  for (std::size_t i = 1; i < 9; ++i) EXPECT_EQ(cf.factors[i].poly.degree(), 9u);
  std::vector<Poly> ps;
  for (const auto& f : cf.factors) {
    EXPECT_TRUE(is_irreducible(f.poly));
    ps.push_back(f.poly);
  }
  EXPECT_EQ(product(*galois_field(2), ps), Poly::x_pow_minus_one(*galois_field(2), 73));
}

TEST(ClosedForm, FactorsOf40) {
  // Over F_3: degrees come from the 3-orbits on Z/40.
  const auto& cf = closed(40, 3);
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& f : cf.factors) ++hist[f.poly.degree()];
  EXPECT_EQ(hist, xnf::testing::orbit_sizes(40, 3));
}

TEST(ClosedForm, BinomialFormsAreBinomials) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{40, 3}, {6056, 3}, {248, 7}}) {
    for (const auto& f : closed(n, q).factors) {
      if (f.form.kind != FormKind::Binomial) continue;
      const std::size_t d = f.poly.degree();
      for (std::size_t i = 1; i < d; ++i) EXPECT_TRUE(f.poly.coeff(i).is_zero()) << to_text(f.poly);
    }
  }
}

TEST(ClosedForm, ThreadCountDoesNotChangeOutput) {
  auto one = std::get<ClosedFormFactorization>(factor_closed_form(6056, 3, 1));
  auto four = std::get<ClosedFormFactorization>(factor_closed_form(6056, 3, 4));
  ASSERT_EQ(one.factors.size(), four.factors.size());
  for (std::size_t i = 0; i < one.factors.size(); ++i) {
    EXPECT_EQ(one.factors[i].poly, four.factors[i].poly);
    EXPECT_EQ(one.factors[i].form.u, four.factors[i].form.u);
  }
}

TEST(ClosedForm, UnsupportedFallsBack) {
  auto r = factor_closed_form(21, 4);
  ASSERT_TRUE(std::holds_alternative<OracleFallback>(r));
  EXPECT_EQ(std::get<OracleFallback>(r).tag.name(), "UNSUPPORTED(3)");
}

TEST(Counts, ThreeWaysAgree) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 25u}) {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      if (std::gcd<std::uint64_t>(n, q) != 1) continue;
      const auto a = count_closed_form(n, q);
      const auto b = count_by_levels(n, q);
      EXPECT_EQ(a.has_value(), b.has_value());
      const Nat c = count_by_cosets(n, q);
      EXPECT_EQ(c, xnf::testing::orbit_count(n, q)) << n << "," << q;
      if (a) {
        EXPECT_EQ(*a, c) << n << "," << q << " " << classify(n, q).name();
        EXPECT_EQ(*b, c) << n << "," << q << " " << classify(n, q).name();
      }
    }
  }
}

TEST(Counts, LargeDoubledCases) {
  // q = 3 mod 4 with 8 | n, beyond the brute-force range but with cheap orbit counting.
  for (auto [n, q] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {6056, 3}, {36488, 3}, {1144, 3}, {2664, 7}, {5624, 7}, {12584, 3}, {6696, 7}, {7448, 23}, {9288, 31}, {16, 3}, {64, 7}}) {
    const auto a = count_closed_form(n, q);
    ASSERT_TRUE(a) << n << "," << q;
    EXPECT_EQ(*a, xnf::testing::orbit_count(n, q)) << n << "," << q;
    EXPECT_EQ(*count_by_levels(n, q), *a);
  }
}

TEST(BinomialCriterion, Small) {
  const FieldCtx& F7 = *galois_field(7);
  EXPECT_TRUE(check_binomial_irreducible(3, F7.from_int(3)));   // 3 is primitive
  EXPECT_FALSE(check_binomial_irreducible(3, F7.from_int(1)));
  EXPECT_FALSE(check_binomial_irreducible(4, F7.from_int(3)));  // needs q = 1 mod 4
  EXPECT_TRUE(check_binomial_irreducible(2, F7.from_int(3)));
  EXPECT_TRUE(check_binomial_irreducible(1, F7.from_int(1)));
}
