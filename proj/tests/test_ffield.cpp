#include <gtest/gtest.h>

#include <set>

#include "xnf/ffield.hpp"

using namespace xnf;

namespace {

// Every element of F, in code order.
std::vector<FieldElem> elements(const FieldCtx& F) {
  std::vector<FieldElem> out;
  for (Nat c = 0; c < F.order(); ++c) out.push_back(F.from_code(c));
  return out;
}

}  // namespace

TEST(Ffield, PrimitiveRoots) {
  EXPECT_EQ(galois_field(2)->primitive().code(), 1);
  EXPECT_EQ(galois_field(3)->primitive().code(), 2);
  EXPECT_EQ(galois_field(7)->primitive().code(), 3);
  EXPECT_EQ(galois_field(73)->primitive().code(), 5);
}

TEST(Ffield, F9Modulus) {
  auto F9 = galois_field(9);
  ASSERT_EQ(F9->degree(), 2u);
  const std::vector<Digit> want{1, 0, 1};  // x^2 + 1
  EXPECT_EQ(F9->modulus(), want);
  EXPECT_EQ(elem_order(F9->primitive()), 8);
}

TEST(Ffield, FieldAxiomsSmall) {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    const FieldCtx& F = *galois_field(q);
    const auto all = elements(F);
    for (const auto& a : all) {
      EXPECT_EQ(a + F.zero(), a);
      EXPECT_EQ(a * F.one(), a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * inverse(a)).is_one()) << q;
      }
      for (const auto& b : all) {
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
      }
    }
    // Distributivity on a sample.
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 1; j < all.size(); j += 5) {
        for (std::size_t k = 2; k < all.size(); k += 7) {
          EXPECT_EQ(all[i] * (all[j] + all[k]), all[i] * all[j] + all[i] * all[k]);
        }
      }
    }
  }
}

TEST(Ffield, PrimitiveGeneratesUnits) {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u}) {
    const FieldCtx& F = *galois_field(q);
    FieldElem x = F.one();
    std::set<Nat> seen;
    for (unsigned i = 0; i + 1 < q; ++i) {
      seen.insert(x.code());
      x = x * F.primitive();
    }
    EXPECT_TRUE(x.is_one());
    EXPECT_EQ(seen.size(), q - 1) << q;
  }
}

TEST(Ffield, TowerMultiplicationMatchesFlat) {
  // F_{4^3} as a tower over F_4 and F_64 over F_2 have the same order and unit group.
  Tower t = make_tower(4, 3);
  const FieldCtx& T = *t.top;
  EXPECT_EQ(T.order(), 64);
  const FieldElem g = T.primitive();
  EXPECT_EQ(elem_order(g), 63);
  EXPECT_TRUE(pow(g, Nat(63)).is_one());
  // Frobenius over F_4 has order 3 on the top field.
  EXPECT_EQ(frobenius(g, 4, 3), g);
  EXPECT_NE(frobenius(g, 4, 1), g);
}

TEST(Ffield, LazyPathsAgree) {
  // Deep prime (lazy accumulation off) against the same law computed by repeated addition.
  Tower t = make_tower(9, 4);
  const FieldCtx& T = *t.top;
  const FieldElem a = T.primitive();
  FieldElem b = a;
  for (int i = 0; i < 20; ++i) b = b * a + T.one();
  FieldElem three_b = b + b + b;
  EXPECT_TRUE(three_b.is_zero());
  FieldElem sum = T.zero();
  for (int i = 0; i < 5; ++i) sum = sum + b;
  EXPECT_EQ(sum, T.from_int(5 % 3) * b);
}

TEST(Ffield, SubfieldAndProjection) {
  Tower t = make_tower(3, 4);
  const FieldElem g2 = t.level_generator(2);
  EXPECT_EQ(elem_order(g2), 8);
  EXPECT_TRUE(in_subfield(g2, 3, 2));
  const FieldElem g1 = t.level_generator(1);
  EXPECT_TRUE(in_subfield(g1, 3, 1));
  EXPECT_EQ(t.project_to_q(g1), galois_field(3)->primitive());
  EXPECT_THROW(t.project_to_q(t.top->primitive()), NotInSubfieldError);
}

TEST(Ffield, RootOfUnity) {
  Tower t = make_tower(2, 9);
  const FieldElem z = root_of_unity(*t.top, 73);
  EXPECT_EQ(elem_order(z), 73);
  EXPECT_THROW(root_of_unity(*t.top, 5), UsageError);
}

TEST(Ffield, CodeRoundTrip) {
  const FieldCtx& F = *galois_field(27);
  for (Nat c = 0; c < 27; ++c) EXPECT_EQ(F.from_code(c).code(), c);
}

TEST(Ffield, Memoized) {
  EXPECT_EQ(galois_field(9).get(), galois_field(9).get());
  EXPECT_EQ(make_tower(3, 4).top.get(), make_tower(3, 4).top.get());
}

TEST(Ffield, RejectsBadInput) {
  EXPECT_THROW(galois_field(6), UsageError);
  EXPECT_THROW(FieldCtx::prime_field(9), UsageError);
}
