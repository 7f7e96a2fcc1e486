#include <gtest/gtest.h>

#include "support.hpp"

using namespace unicrit;

namespace {

GeneratorSet set_of(unsigned p, std::vector<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return make_generator_set(p, std::move(v));
}

/// Everything except wall-clock time.
void expect_same(const AuditReport& a, const AuditReport& b) {
  EXPECT_EQ(a.claim, b.claim);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.findings, b.findings);
  EXPECT_EQ(a.notes, b.notes);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t k = 0; k < a.violations.size(); ++k) {
    EXPECT_EQ(a.violations[k].fields, b.violations[k].fields);
    EXPECT_EQ(a.violations[k].note, b.violations[k].note);
  }
  ASSERT_EQ(a.subchecks.size(), b.subchecks.size());
  for (std::size_t k = 0; k < a.subchecks.size(); ++k) {
    EXPECT_EQ(a.subchecks[k].name, b.subchecks[k].name);
    EXPECT_EQ(a.subchecks[k].checked, b.subchecks[k].checked);
    EXPECT_EQ(a.subchecks[k].violations, b.subchecks[k].violations);
  }
}

AuditOptions jobs(unsigned n, std::size_t chunk) {
  AuditOptions o;
  o.jobs = n;
  o.chunk_size = chunk;
  return o;
}

}  // namespace

TEST(Sieve, OnlyMinusThreeSurvives) {
  EXPECT_EQ(mod24_sieve(), (std::vector<long>{-3}));
  EXPECT_EQ(mod24_sieve({-3, -12}).front(), -3);
}

TEST(Audit, SquareClassificationSmall) {
  const AuditReport r = audit_square_classification(BigInt(-60), BigInt(-2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.claim, "square_classification");
  EXPECT_GE(r.subchecks.size(), 3U);
  EXPECT_THROW(audit_square_classification(BigInt(-2), BigInt(-60)), DomainError);
}

TEST(Audit, RefinementLemmas) {
  const AuditReport r = audit_refinement_lemmas(15);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(audit_refinement_lemmas(151), DomainError);
}

TEST(Audit, PthClassification) {
  EXPECT_TRUE(audit_pth_classification(3, BigInt(300)).pass);
  EXPECT_TRUE(audit_pth_classification(5, BigInt(300)).pass);
}

TEST(Audit, DiophantineSuite) {
  const AuditReport r = audit_diophantine(12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.subchecks.size(), 11U);
}

TEST(Audit, CurvesAtSmallHeight) {
  for (const auto& id : curve_ids()) {
    const AuditReport r = curve_point_search(builtin_curve(id), 100);
    if (id == "B3") {
      // the printed B3 has the extra points (-1/2, +-1/4)
      EXPECT_FALSE(r.pass);
      ASSERT_FALSE(r.violations.empty());
      EXPECT_NE(r.violations.front().note.find("2t+1"), std::string::npos);
    } else {
      EXPECT_TRUE(r.pass) << id;
    }
  }
}

TEST(Audit, B3ExtraPointIsOnTheCurve) {
  const CurveSpec b3 = builtin_curve("B3");
  Rational x(-1, 2), y(1, 4);
  EXPECT_TRUE(on_curve(b3, {x, y}));
}

TEST(Audit, QuarticOctic) {
  const AuditReport r = audit_quartic_octic(12);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(audit_quartic_octic(1), DomainError);
}

TEST(Audit, WitnessBoundAndCoincidence) {
  EXPECT_TRUE(audit_witness_bound(300).pass);
  EXPECT_TRUE(audit_type_coincidence(300).pass);
}

TEST(Audit, Freeness) {
  EXPECT_TRUE(audit_freeness(set_of(2, {-12, -4}), 3).pass);
  EXPECT_TRUE(audit_freeness(set_of(3, {-504, 8, 1}), 2).pass);
}

TEST(Audit, ClaimList) {
  EXPECT_EQ(audit_claims().size(), 9U);
}

TEST(AuditProperty, ReportsIndependentOfJobsAndChunks) {
  expect_same(audit_square_classification(BigInt(-80), BigInt(-2), jobs(1, 10000)),
              audit_square_classification(BigInt(-80), BigInt(-2), jobs(3, 7)));
  expect_same(audit_pth_classification(3, BigInt(200), jobs(1, 10000)),
              audit_pth_classification(3, BigInt(200), jobs(3, 13)));
  expect_same(audit_diophantine(10, jobs(1, 10000)), audit_diophantine(10, jobs(3, 3)));
  expect_same(curve_point_search(builtin_curve("B3"), 100, jobs(1, 10000)),
              curve_point_search(builtin_curve("B3"), 100, jobs(3, 5)));
  expect_same(audit_quartic_octic(8, jobs(1, 10000)), audit_quartic_octic(8, jobs(2, 1)));
}
