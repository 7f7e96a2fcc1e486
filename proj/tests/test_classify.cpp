#include <gtest/gtest.h>

#include "support.hpp"

using namespace unicrit;

TEST(BaseIrreducible, Examples) {
  EXPECT_TRUE(base_irreducible_Q(2, BigInt(-12)));
  EXPECT_FALSE(base_irreducible_Q(3, BigInt(-8)));
  EXPECT_FALSE(base_irreducible_Q(2, BigInt(-9)));
  EXPECT_TRUE(base_irreducible_Q(2, BigInt(1)));
  EXPECT_FALSE(base_irreducible_Q(3, BigInt(8)));  // x^3 + 8 has the root -2
  EXPECT_FALSE(base_irreducible_Q(2, BigInt(0)));
  EXPECT_TRUE(base_irreducible_Q(2, Rational(-3, 4)));
  EXPECT_FALSE(base_irreducible_Q(2, Rational(-9, 4)));
  EXPECT_FALSE(base_irreducible_Q(3, Rational(8, 27)));
}

TEST(ClassifyType, Examples) {
  const TypeReport a = classify_type(2, BigInt(-12));
  EXPECT_TRUE(a.irreducible_over_Q);
  EXPECT_EQ(a.type1_witnesses, (std::vector<BigInt>{2, -2}));
  EXPECT_TRUE(a.type2_witnesses.empty());

  const TypeReport b = classify_type(2, BigInt(-3));
  EXPECT_EQ(b.type2_witnesses, (std::vector<BigInt>{1, -1}));
  EXPECT_TRUE(b.is_special());

  const TypeReport c = classify_type(3, BigInt(-504));
  EXPECT_EQ(c.type1_witnesses, (std::vector<BigInt>{2}));
  EXPECT_TRUE(c.type2_witnesses.empty());

  const TypeReport d = classify_type(2, BigInt(2));
  EXPECT_FALSE(d.is_type1());
  EXPECT_FALSE(d.is_type2());
}

TEST(ClassifyType, ZeroAndUnitWitnesses) {
  // c = 0 = s^p - s^(p^2) for s in {0, 1} (and -1 when p = 2)
  const TypeReport r = classify_type(2, BigInt(0));
  EXPECT_EQ(r.type1_witnesses, (std::vector<BigInt>{0, 1, -1}));
  EXPECT_FALSE(r.irreducible_over_Q);
  EXPECT_EQ(classify_type(3, BigInt(0)).type1_witnesses, (std::vector<BigInt>{0, 1, -1}));
}

TEST(ClassifyType, RationalCoefficients) {
  // s = 1/2: c = 1/4 - 1/16 = 3/16
  const RationalTypeReport r = classify_type(2, Rational(3, 16));
  EXPECT_EQ(r.type1_witnesses, (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
  // s = 2/3 at p = 3: 8/27 - 512/19683
  const Rational c = type1_constant(3, Rational(2, 3));
  EXPECT_EQ(classify_type(3, c).type1_witnesses, (std::vector<Rational>{Rational(2, 3)}));
  // Type II with s = 1/2: -1 - 1/4 - 1/16
  EXPECT_EQ(classify_type(2, Rational(-21, 16)).type2_witnesses,
            (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
  EXPECT_TRUE(classify_type(2, Rational(5, 7)).type1_witnesses.empty());
}

// Completeness on a window: for p = 2, |c| <= 10^4, |s| <= 10, agreement with enumeration.
TEST(ClassifyProperty, AgreesWithDirectEnumeration) {
  std::map<long, std::set<long>> t1, t2;
  for (long s = -10; s <= 10; ++s) {
    const long c1 = s * s - s * s * s * s;
    const long c2 = -1 - s * s - s * s * s * s;
    if (std::abs(c1) <= 10000) t1[c1].insert(s);
    if (std::abs(c2) <= 10000) t2[c2].insert(s);
  }
  for (long c = -10000; c <= 10000; ++c) {
    const TypeReport r = classify_type(2, BigInt(c));
    std::set<long> got1, got2;
    for (const auto& s : r.type1_witnesses) got1.insert(s.get_si());
    for (const auto& s : r.type2_witnesses) got2.insert(s.get_si());
    EXPECT_EQ(got1, t1[c]) << c;
    EXPECT_EQ(got2, t2[c]) << c;
  }
}

// Witness soundness plus the fixed-point and two-cycle properties on random witnesses.
TEST(ClassifyProperty, WitnessesAreSoundAndDynamical) {
  testkit::Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    const unsigned p = std::vector<unsigned>{2, 3, 5}[static_cast<std::size_t>(gen.range(0, 2))];
    const BigInt s = gen.big(p == 5 ? 3 : 6);
    const BigInt c = type1_constant(p, s);
    const TypeReport r = classify_type(p, c);
    ASSERT_NE(std::find(r.type1_witnesses.begin(), r.type1_witnesses.end(), s), r.type1_witnesses.end());
    for (const BigInt& w : r.type1_witnesses) {
      EXPECT_EQ(type1_constant(p, w), c);
      const BigInt fixed = ipow(w, p);
      EXPECT_EQ(ipow(fixed, p) + c, fixed);
    }
    if (p == 2) {
      const BigInt c2 = type2_constant(s);
      const TypeReport r2 = classify_type(2, c2);
      ASSERT_FALSE(r2.type2_witnesses.empty());
      // two-cycle {s^2, -(s^2 + 1)}
      for (const BigInt& w : r2.type2_witnesses) {
        const BigInt a = w * w;
        EXPECT_EQ(BigInt(a * a + c2), BigInt(-(a + 1)));
        EXPECT_EQ(BigInt((a + 1) * (a + 1) + c2), a);
      }
    }
  }
}

TEST(ClassifyProperty, WitnessListsSortedNonnegativeFirst) {
  for (long s = 2; s < 40; ++s) {
    const TypeReport r = classify_type(2, type1_constant(2, BigInt(s)));
    ASSERT_EQ(r.type1_witnesses.size(), 2U);
    EXPECT_EQ(r.type1_witnesses[0], s);
    EXPECT_EQ(r.type1_witnesses[1], -s);
  }
}

TEST(ClassifyType, HugeCoefficient) {
  const BigInt s("123456789123456789");
  const TypeReport r = classify_type(3, type1_constant(3, s));
  EXPECT_EQ(r.type1_witnesses, (std::vector<BigInt>{s}));
  EXPECT_TRUE(classify_type(3, BigInt(type1_constant(3, s) + 1)).type1_witnesses.empty());
}
