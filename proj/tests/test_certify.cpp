#include <gtest/gtest.h>

#include "support.hpp"

using namespace unicrit;

namespace {

GeneratorSet set_of(unsigned p, std::vector<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return make_generator_set(p, std::move(v));
}

/// Desk-scale corpus covering every recipe case.
std::vector<GeneratorSet> corpus() {
  return {set_of(2, {2}),          set_of(2, {2, 3}),       set_of(2, {-12, -4}),  set_of(2, {-12, -72}),
          set_of(2, {-3, -21}),    set_of(2, {-12, -21}),   set_of(2, {-12, -9}),  set_of(2, {-21, -4}),
          set_of(2, {-12, -4, 5}), set_of(3, {2, 5}),       set_of(3, {-504, 8}),  set_of(3, {-504, 27}),
          set_of(3, {-504, 0}),    set_of(3, {-504, 504}), set_of(2, {-72, -9}), set_of(2, {-4, 2})};
}

}  // namespace

TEST(CaseTags, RoundTrip) {
  for (CaseTag t : {CaseTag::SingleGenerator, CaseTag::NonSpecialPhi4, CaseTag::NonSpecialPhi3,
                    CaseTag::BothSpecialEitherOr, CaseTag::TypeIPlusReducibleDistinct,
                    CaseTag::TypeIPlusMatchingReducible, CaseTag::TypeIIPlusReducible, CaseTag::OddTwoSpecial,
                    CaseTag::FLTDistinct, CaseTag::FLTZeroT, CaseTag::P3SpecialPair, CaseTag::LocalGlobalFamily}) {
    EXPECT_EQ(parse_case_tag(to_string(t)), t);
  }
  EXPECT_FALSE(parse_case_tag("Nope"));
}

TEST(PickPrefix, Examples) {
  Certificate a = pick_universal_prefix(set_of(2, {2, 3}));
  EXPECT_EQ(a.prefix, (Word{0, 0, 0, 0}));
  EXPECT_EQ(a.case_tag, CaseTag::NonSpecialPhi4);
  EXPECT_EQ(a.scope, Scope::Universal);

  Certificate b = pick_universal_prefix(set_of(2, {-12, -4}));
  EXPECT_EQ(b.prefix, (Word{0, 0, 1, 0}));
  EXPECT_EQ(b.case_tag, CaseTag::TypeIPlusMatchingReducible);

  EXPECT_THROW(pick_universal_prefix(set_of(5, {-33554400, 32})), OpenCase);
}

TEST(PickPrefix, DecisionTreeCases) {
  EXPECT_EQ(pick_universal_prefix(set_of(2, {2})).case_tag, CaseTag::SingleGenerator);
  EXPECT_EQ(pick_universal_prefix(set_of(2, {2})).prefix, Word{});
  EXPECT_EQ(pick_universal_prefix(set_of(3, {2, 5})).prefix, (Word{0, 0, 0}));
  EXPECT_EQ(pick_universal_prefix(set_of(3, {2, 5})).case_tag, CaseTag::NonSpecialPhi3);
  EXPECT_EQ(pick_universal_prefix(set_of(2, {-12, -9})).case_tag, CaseTag::TypeIPlusReducibleDistinct);
  EXPECT_EQ(pick_universal_prefix(set_of(2, {-12, -9})).prefix, (Word{0, 0, 0, 1, 0}));
  EXPECT_EQ(pick_universal_prefix(set_of(2, {-21, -4})).case_tag, CaseTag::TypeIIPlusReducible);
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 27})).case_tag, CaseTag::FLTDistinct);
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 27})).prefix, (Word{0, 0, 0, 1}));
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 0})).case_tag, CaseTag::FLTZeroT);
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 0})).prefix, (Word{0, 0, 0, 1, 1}));
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 8})).case_tag, CaseTag::P3SpecialPair);
  EXPECT_EQ(pick_universal_prefix(set_of(3, {-504, 504})).case_tag, CaseTag::OddTwoSpecial);
  EXPECT_THROW(pick_universal_prefix(set_of(2, {-4, -9})), NoIrreducibleGenerator);
}

TEST(PickPrefix, NonSpecialBeatsLongerRecipes) {
  // x^2 + 5 is non-special, so phi^4 of it (length 4) beats the length-4 matching case by index order
  const Certificate c = pick_universal_prefix(set_of(2, {-12, -4, 5}));
  EXPECT_EQ(c.prefix.size(), 4U);
  EXPECT_FALSE(c.notes.empty());
}

TEST(PickPrefix, CaseTagDeterminesShape) {
  for (const GeneratorSet& S : corpus()) {
    const Certificate c = pick_universal_prefix(S);
    ASSERT_TRUE(c.case_tag);
    const Word& g = c.prefix;
    switch (*c.case_tag) {
      case CaseTag::SingleGenerator: EXPECT_TRUE(g.empty()); break;
      case CaseTag::NonSpecialPhi4: EXPECT_EQ(g, Word::repeat(g[0], 4)); break;
      case CaseTag::NonSpecialPhi3: EXPECT_EQ(g, Word::repeat(g[0], 3)); break;
      case CaseTag::BothSpecialEitherOr:
      case CaseTag::OddTwoSpecial:
      case CaseTag::FLTDistinct:
        ASSERT_EQ(g.size(), 4U);
        EXPECT_EQ(g.prefix(3), Word::repeat(g[0], 3));
        EXPECT_NE(g[3], g[0]);
        break;
      case CaseTag::TypeIPlusReducibleDistinct:
      case CaseTag::TypeIIPlusReducible:
        ASSERT_EQ(g.size(), 5U);
        EXPECT_EQ(g, Word::repeat(g[0], 3) + (Word{g[3], g[0]}));
        break;
      case CaseTag::TypeIPlusMatchingReducible: EXPECT_EQ(g, (Word{g[0], g[0], g[2], g[0]})); break;
      case CaseTag::P3SpecialPair: EXPECT_EQ(g, (Word{g[0], g[1], g[0]})); break;
      case CaseTag::FLTZeroT: EXPECT_EQ(g.prefix(3), Word::repeat(g[0], 3)); break;
      case CaseTag::LocalGlobalFamily: ADD_FAILURE() << "family tag from pick"; break;
    }
  }
}

TEST(DecideEitherOr, Examples) {
  const EitherOrDecision a = decide_either_or({2, BigInt(-12)}, {2, BigInt(-72)});
  EXPECT_TRUE(a.first_universal);
  EXPECT_TRUE(a.choose_first);
  const EitherOrDecision b = decide_either_or({2, BigInt(-3)}, {2, BigInt(-21)});
  EXPECT_TRUE(b.first_universal);
  EXPECT_THROW(decide_either_or({2, BigInt(-12)}, {2, BigInt(-12)}), InputNotSpecial);
  EXPECT_THROW(decide_either_or({2, BigInt(-12)}, {2, BigInt(5)}), InputNotSpecial);
  EXPECT_THROW(decide_either_or({2, BigInt(-12)}, {3, BigInt(-504)}), InputNotSpecial);
}

// Obstruction oracle: phi_i^3 o phi_j universal iff no v in Obstr(phi_i) has v - c_j a p-th power.
TEST(DecideEitherOr, MatchesDirectObstructionSearch) {
  std::vector<BigInt> specials;
  for (long s = 2; s <= 12; ++s) specials.push_back(type1_constant(2, BigInt(s)));
  for (long s = 1; s <= 12; ++s) specials.push_back(type2_constant(BigInt(s)));
  auto obstructed = [](const BigInt& ci, const BigInt& cj) {
    // direct: any integer a with a^2 + c_j = +-s^2 (Type I) or +-(s^2+1) (Type II)
    const TypeReport r = classify_type(2, ci);
    std::vector<BigInt> targets;
    for (const auto& s : r.type1_witnesses) {
      targets.push_back(s * s);
      targets.push_back(-s * s);
    }
    for (const auto& s : r.type2_witnesses) {
      targets.push_back(s * s + 1);
      targets.push_back(-(s * s + 1));
    }
    for (const BigInt& v : targets) {
      for (long a = 0; a <= 1000; ++a) {  // a^2 <= |v| + |c_j| < 10^6
        if (BigInt(a) * a + cj == v) return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < specials.size(); ++i) {
    for (std::size_t j = 0; j < specials.size(); ++j) {
      if (i == j) continue;
      const EitherOrDecision d = decide_either_or({2, specials[i]}, {2, specials[j]});
      EXPECT_EQ(d.first_universal, !obstructed(specials[i], specials[j])) << specials[i] << " " << specials[j];
      EXPECT_EQ(d.second_universal, !obstructed(specials[j], specials[i]));
      EXPECT_TRUE(d.first_universal || d.second_universal);
    }
  }
}

TEST(MinimalPowerIndex, Examples) {
  EXPECT_EQ(minimal_power_index(3, BigInt(2)), 2U);
  EXPECT_EQ(minimal_power_index(3, BigInt(8)), 3U);
  EXPECT_EQ(minimal_power_index(3, BigInt(512)), 4U);
  EXPECT_EQ(minimal_power_index(2, BigInt(16)), 4U);
  EXPECT_THROW(minimal_power_index(3, BigInt(1)), DomainError);
}

// The FLT t = 0 case can exceed length 5 (recorded deviation from "prefix length <= 5").
TEST(MinimalPowerIndex, FltZeroPrefixLengthGrowsWithPowers) {
  const BigInt s(8);
  const Certificate c = pick_universal_prefix(make_generator_set(3, {type1_constant(3, s), BigInt(0)}));
  EXPECT_EQ(c.case_tag, CaseTag::FLTZeroT);
  EXPECT_EQ(c.prefix.size(), 3 + minimal_power_index(3, s));
  EXPECT_EQ(c.prefix.size(), 6U);
}

TEST(PrefixLength, AtMostFiveOutsideFltZero) {
  for (const GeneratorSet& S : corpus()) {
    const Certificate c = pick_universal_prefix(S);
    if (c.case_tag == CaseTag::FLTZeroT) continue;
    EXPECT_LE(c.prefix.size(), 5U);
  }
}

TEST(Verify, Examples) {
  const GeneratorSet S = set_of(2, {-12, -4});
  const VerifyResult a = verify_word_irreducible(S, Word{0, 0, 1, 0}, Word{1, 1});
  ASSERT_TRUE(std::holds_alternative<Certificate>(a));
  const Certificate& ca = std::get<Certificate>(a);
  EXPECT_EQ(ca.scope, Scope::PerWord);
  EXPECT_EQ(ca.power_checks(), 2U);
  EXPECT_EQ(ca.word, (Word{1, 1}));

  const VerifyResult b = verify_word_irreducible(S, Word{0}, Word{});
  ASSERT_TRUE(std::holds_alternative<Certificate>(b));
  EXPECT_EQ(std::get<Certificate>(b).power_checks(), 0U);

  const VerifyResult c = verify_word_irreducible(S, Word{0}, Word{0, 1});
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(c));
  EXPECT_EQ(std::get<Inconclusive>(c).value, 4);
  EXPECT_EQ(std::get<Inconclusive>(c).level, 2U);
}

TEST(Verify, UnjustifiedPrefix) {
  const GeneratorSet S = set_of(2, {-12, -4});
  // [1] alone is reducible (x^2 - 4), so it is neither a recipe prefix nor self-certifying
  EXPECT_THROW(verify_word_irreducible(S, Word{1}, Word{0}), PrefixNotCertified);
  VerifyOptions opt;
  opt.asserted_case = CaseTag::NonSpecialPhi4;
  EXPECT_THROW(verify_word_irreducible(S, Word{1, 1, 1, 1}, Word{0}, opt), PrefixNotCertified);
}

// Soundness of universal prefixes: every extension by |w| <= 3 passes the chain.
TEST(VerifyProperty, UniversalPrefixesNeverInconclusive) {
  for (const GeneratorSet& S : corpus()) {
    const Certificate cert = pick_universal_prefix(S);
    VerifyOptions opt;
    opt.asserted_case = cert.case_tag;
    const std::size_t depth = S.p() == 2 ? 3 : 2;
    std::vector<Word> words{Word{}};
    for (const Word& w : enumerate_words(S, depth)) words.push_back(w);
    for (const Word& w : words) {
      const VerifyResult r = verify_word_irreducible(S, cert.prefix, w, opt);
      EXPECT_TRUE(std::holds_alternative<Certificate>(r))
          << "c0=" << S.c(0) << " prefix=" << format_word(cert.prefix) << " w=" << format_word(w);
    }
  }
}

// Cross-validation with finite fields for per-word certificates of total degree <= 3^4.
// Irreducible reductions have density about 1/degree, so degree-64 words need q
// up to about 10^3; the search runs to 5000.
TEST(VerifyProperty, PerWordCertificatesHaveAnIrreducibleReduction) {
  for (const GeneratorSet& S : corpus()) {
    const Certificate cert = pick_universal_prefix(S);
    const bool exempt = is_local_global_shape(*cert.case_tag);
    std::vector<Word> words{Word{}};
    for (const Word& w : enumerate_words(S, 2)) words.push_back(w);
    for (const Word& w : words) {
      const Word full = cert.prefix + w;
      if (full.empty() || ipow(BigInt(S.p()), full.size()) > 81) continue;
      const VerifyResult r = verify_word_irreducible(S, cert.prefix, w);
      ASSERT_TRUE(std::holds_alternative<Certificate>(r));
      bool found = false;
      for (std::uint64_t q : primes_up_to(5000)) {
        if (q != S.p() && word_irreducible_Fq(S, full, q)) {
          found = true;
          break;
        }
      }
      if (exempt) {
        EXPECT_FALSE(found) << "family shape irreducible mod some q: " << format_word(full);
      } else {
        EXPECT_TRUE(found) << "no q <= 5000 for " << format_word(full) << " c0=" << S.c(0);
      }
    }
  }
}

TEST(Family, Certificates) {
  const FamilyCertificate f = local_global_family(2, BigInt(2));
  EXPECT_EQ(f.certificate.case_tag, CaseTag::LocalGlobalFamily);
  EXPECT_EQ(f.certificate.prefix, (Word{0, 0, 1, 0}));
  EXPECT_EQ(f.set.c(0), -12);
  EXPECT_EQ(f.set.c(1), -4);
  const FamilyCertificate g = local_global_family(3, BigInt(2));
  EXPECT_EQ(g.certificate.prefix, (Word{0, 1, 0}));
  EXPECT_EQ(g.set.c(0), -504);
  EXPECT_EQ(g.set.c(1), 8);
  EXPECT_THROW(local_global_family(2, BigInt(1)), DomainError);
  EXPECT_THROW(local_global_family(5, BigInt(2)), DomainError);
  const FamilyCertificate h = local_global_family(2, BigInt(3), {BigInt(7)});
  EXPECT_EQ(h.set.size(), 3U);
  std::size_t identities = 0;
  for (const auto& e : h.certificate.trail) {
    if (e.kind != TrailEntry::Kind::Identity) continue;
    ++identities;
    EXPECT_TRUE(e.ok) << e.check;
  }
  EXPECT_GE(identities, 2U);
}

TEST(Family, ExtrasMayNotRepeatMandatedCoefficients) {
  EXPECT_THROW(local_global_family(2, BigInt(2), {BigInt(-4)}), DuplicateGenerator);
}
