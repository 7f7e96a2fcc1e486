#include <gtest/gtest.h>

#include "support.hpp"

using namespace unicrit;

namespace {

DensePoly poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return DensePoly(std::move(c));
}

DensePoly substitute_square(const DensePoly& f) {
  std::vector<BigInt> c(2 * f.coeffs.size() - 1, BigInt(0));
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) c[2 * k] = f.coeffs[k];
  return DensePoly(std::move(c));
}

}  // namespace

TEST(PolyArith, MulAndExactDivision) {
  const DensePoly a = poly({1, 1});
  const DensePoly b = poly({-1, 1});
  EXPECT_EQ(poly_mul(a, b), poly({-1, 0, 1}));
  const auto q = divide_exact_monic(poly({-1, 0, 1}), a);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, b);
  EXPECT_FALSE(divide_exact_monic(poly({1, 0, 1}), a));
}

TEST(EvenSplit, FindsConstructedFactorization) {
  // f(y) = A^2 - y B^2 with A = y^2 + 2y + 3, B = y + 1
  const DensePoly A = poly({3, 2, 1});
  const DensePoly B = poly({1, 1});
  const DensePoly yB2 = poly_mul(poly({0, 1}), poly_mul(B, B));
  DensePoly f = poly_mul(A, A);
  for (std::size_t k = 0; k < yB2.coeffs.size(); ++k) f.coeffs[k] -= yB2.coeffs[k];
  f.normalize();
  ASSERT_EQ(f.degree(), 4);
  const auto g = even_split_factor(f);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->degree(), 4);
  EXPECT_TRUE(divide_exact_monic(substitute_square(f), *g).has_value());
}

TEST(EvenSplit, NoSplitWhenConstantNotSquare) {
  EXPECT_FALSE(even_split_factor(poly({2, 0, 0, 0, 1})));
  EXPECT_THROW(even_split_factor(poly({1, 0, 1})), DomainError);
}

// Random A, B: every constructed f(x^2) must be split; compare with root subsets.
TEST(EvenSplitProperty, RecoversRandomSplits) {
  testkit::Gen gen(41);
  for (int i = 0; i < 60; ++i) {
    const DensePoly A = poly({gen.range(-30, 30), gen.range(-30, 30), 1});
    const DensePoly B = poly({gen.range(-30, 30), gen.range(-6, 6)});
    const DensePoly yB2 = poly_mul(poly({0, 1}), poly_mul(B, B));
    DensePoly f = poly_mul(A, A);
    for (std::size_t k = 0; k < yB2.coeffs.size(); ++k) f.coeffs[k] -= yB2.coeffs[k];
    f.normalize();
    if (f.degree() != 4 || !f.is_monic()) continue;
    const auto g = even_split_factor(f);
    ASSERT_TRUE(g) << "A=" << A.coeffs[0] << "," << A.coeffs[1] << " B=" << B.coeffs[0];
    EXPECT_TRUE(divide_exact_monic(substitute_square(f), *g).has_value());
  }
}

TEST(DegreeSets, ProveIrreducibility) {
  // x^4 + x + 1 is irreducible mod 2, hence over Q
  const DegreeSetResult r = irreducible_by_degree_sets(poly({1, 1, 0, 0, 1}));
  EXPECT_TRUE(r.proven_irreducible);
  // x^4 + 1 splits into degrees {1,1,2} or {2,2} mod every prime: degree 2 survives
  const DegreeSetResult s = irreducible_by_degree_sets(poly({1, 0, 0, 0, 1}), 500);
  EXPECT_FALSE(s.proven_irreducible);
  EXPECT_EQ(s.surviving_degrees, (std::vector<std::size_t>{2}));
  EXPECT_THROW(irreducible_by_degree_sets(poly({1, 2})), DomainError);
}

TEST(RootSubsets, FindsFactors) {
  // (x^2 + 1)(x^2 - 3x + 5)
  const DensePoly f = poly_mul(poly({1, 0, 1}), poly({5, -3, 1}));
  const auto g = find_factor_by_roots(f);
  ASSERT_TRUE(g);
  EXPECT_TRUE(divide_exact_monic(f, *g).has_value());
  EXPECT_FALSE(find_factor_by_roots(poly({1, 1, 0, 0, 1})));
}

TEST(QuarticOctic, MatchingQuarticExamples) {
  // f(x + t^2) = x^4 + b x^2 + d; read b and d off the shifted quartic
  auto bd = [](long t) {
    const DensePoly g = taylor_shift(matching_quartic(BigInt(t)), BigInt(t * t));
    EXPECT_EQ(g.coeffs[1], 0);
    EXPECT_EQ(g.coeffs[3], 0);
    return std::pair<BigInt, BigInt>{g.coeffs[2], g.coeffs[0]};
  };
  const auto [b2, d2] = bd(2);
  EXPECT_EQ(BigInt(b2 * b2 - 4 * d2), 48);
  EXPECT_EQ(d2, 132);
  EXPECT_EQ(bd(3).second, 5112);
  for (long t = 2; t <= 40; ++t) {
    const auto [b, d] = bd(t);
    EXPECT_FALSE(is_square(BigInt(b * b - 4 * d))) << t;
    EXPECT_FALSE(is_square(d)) << t;
  }
  for (long t = 2; t <= 6; ++t) {
    const DensePoly f = matching_quartic(BigInt(t));
    EXPECT_EQ(f.degree(), 4);
    EXPECT_TRUE(f.is_monic());
    EXPECT_FALSE(even_split_factor(f)) << t;
  }
}

TEST(Curves, KnownPointsLieOnCurves) {
  for (const auto& id : curve_ids()) {
    const CurveSpec c = builtin_curve(id);
    EXPECT_EQ(c.id, id);
    for (const auto& p : c.known) EXPECT_TRUE(on_curve(c, p)) << id;
  }
  EXPECT_THROW(builtin_curve("X9"), UnknownCurve);
}

TEST(Curves, PointsAbove) {
  const CurveSpec E = builtin_curve("E");
  const auto pts = points_above(E, 2, 1);
  ASSERT_EQ(pts.size(), 2U);
  for (const auto& p : pts) EXPECT_TRUE(on_curve(E, p));
  EXPECT_TRUE(points_above(E, 1, 1).empty());
  EXPECT_EQ(points_above(E, -1, 1).size(), 1U);
  EXPECT_EQ(points_at_infinity(E), 1U);
  EXPECT_EQ(points_at_infinity(builtin_curve("C2")), 2U);
  EXPECT_EQ(points_at_infinity(builtin_curve("C")), 0U);
}

// Every point reported by the search lies on the curve; compare with a direct rational scan.
TEST(CurvesProperty, SearchMatchesDirectScan) {
  for (const auto& id : {std::string("E"), std::string("C2"), std::string("B1")}) {
    const CurveSpec c = builtin_curve(id);
    std::set<CurvePoint> direct;
    for (long b = 1; b <= 30; ++b) {
      for (long a = -30; a <= 30; ++a) {
        if (std::gcd(a, b) != 1) continue;
        Rational x(a, b);
        x.canonicalize();
        const Rational v = eval_rational(c.rhs, x);
        if (v < 0) continue;
        const auto num = exact_root(BigInt(v.get_num()), 2);
        const auto den = exact_root(BigInt(v.get_den()), 2);
        if (!num || !den) continue;
        Rational y(*num, *den);
        y.canonicalize();
        direct.insert({x, y});
        direct.insert({x, Rational(-y)});
      }
    }
    std::set<CurvePoint> searched;
    for (long b = 1; b <= 30; ++b) {
      for (long a = -30; a <= 30; ++a) {
        if (std::gcd(a, b) != 1) continue;
        for (const auto& p : points_above(c, a, b)) searched.insert(p);
      }
    }
    EXPECT_EQ(searched, direct) << id;
  }
}
