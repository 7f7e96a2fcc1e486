#pragma once

// The recipe engine. pick_universal_prefix walks the case analysis for S and
// returns a word g such that every g o f, f in M_S, is irreducible over Q.
// verify_word_irreducible checks one extension g o w level by level with the
// chain criterion: each composition step keeps irreducibility as long as the
// outer part evaluated at the next generator's constant is not a p-th power.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/classify.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/semigroup.hpp"
#include "unicrit/text.hpp"

namespace unicrit {

enum class CaseTag {
  SingleGenerator,
  NonSpecialPhi4,
  NonSpecialPhi3,
  BothSpecialEitherOr,
  TypeIPlusReducibleDistinct,
  TypeIPlusMatchingReducible,
  TypeIIPlusReducible,
  OddTwoSpecial,
  FLTDistinct,
  FLTZeroT,
  P3SpecialPair,
  LocalGlobalFamily,
};

inline const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SingleGenerator: return "SingleGenerator";
    case CaseTag::NonSpecialPhi4: return "NonSpecialPhi4";
    case CaseTag::NonSpecialPhi3: return "NonSpecialPhi3";
    case CaseTag::BothSpecialEitherOr: return "BothSpecialEitherOr";
    case CaseTag::TypeIPlusReducibleDistinct: return "TypeIPlusReducibleDistinct";
    case CaseTag::TypeIPlusMatchingReducible: return "TypeIPlusMatchingReducible";
    case CaseTag::TypeIIPlusReducible: return "TypeIIPlusReducible";
    case CaseTag::OddTwoSpecial: return "OddTwoSpecial";
    case CaseTag::FLTDistinct: return "FLTDistinct";
    case CaseTag::FLTZeroT: return "FLTZeroT";
    case CaseTag::P3SpecialPair: return "P3SpecialPair";
    case CaseTag::LocalGlobalFamily: return "LocalGlobalFamily";
  }
  return "?";
}

inline std::optional<CaseTag> parse_case_tag(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(CaseTag::LocalGlobalFamily); ++k) {
    const auto tag = static_cast<CaseTag>(k);
    if (name == to_string(tag)) return tag;
  }
  return std::nullopt;
}

/// Families whose prefixes are reducible mod every prime by construction.
inline bool is_local_global_shape(CaseTag tag) {
  return tag == CaseTag::TypeIPlusMatchingReducible || tag == CaseTag::P3SpecialPair ||
         tag == CaseTag::LocalGlobalFamily;
}

enum class Scope { Universal, PerWord };

inline const char* to_string(Scope s) { return s == Scope::Universal ? "Universal" : "PerWord"; }

struct TrailEntry {
  enum class Kind { Classification, Obstruction, Justification, PowerCheck, Identity };
  Kind kind = Kind::Classification;
  std::string check;
  std::optional<BigInt> value;
  bool ok = true;
  std::string outcome;
};

inline const char* to_string(TrailEntry::Kind k) {
  switch (k) {
    case TrailEntry::Kind::Classification: return "classification";
    case TrailEntry::Kind::Obstruction: return "obstruction";
    case TrailEntry::Kind::Justification: return "justification";
    case TrailEntry::Kind::PowerCheck: return "power_check";
    case TrailEntry::Kind::Identity: return "identity";
  }
  return "?";
}

struct Certificate {
  unsigned p = 2;
  std::vector<BigInt> coeffs;
  Word prefix;
  Scope scope = Scope::Universal;
  std::optional<Word> word;         // PerWord only
  std::optional<CaseTag> case_tag;  // absent when the prefix certified itself
  std::vector<TrailEntry> trail;
  std::vector<std::string> notes;

  std::size_t power_checks() const {
    return static_cast<std::size_t>(std::count_if(trail.begin(), trail.end(), [](const TrailEntry& e) {
      return e.kind == TrailEntry::Kind::PowerCheck;
    }));
  }
};

struct Inconclusive {
  std::size_t level = 0;  // 1-based chain level that hit a p-th power
  BigInt value;
  std::vector<TrailEntry> trail;
};

using VerifyResult = std::variant<Certificate, Inconclusive>;

namespace detail {

inline std::string poly_name(std::size_t i) { return "phi" + std::to_string(i); }

inline std::string power_word(unsigned p) {
  switch (p) {
    case 2: return "square";
    case 3: return "cube";
    default: return std::to_string(p) + "th power";
  }
}

/// Orbit values whose preimage under phi_j would let phi_i^3 o phi_j o f
/// produce a p-th power.
inline std::vector<BigInt> obstruction_set(const TypeReport& rep) {
  std::vector<BigInt> out;
  if (rep.p == 2) {
    for (const BigInt& s : rep.type1_witnesses) {
      out.push_back(s * s);
      out.push_back(-(s * s));
    }
    for (const BigInt& s : rep.type2_witnesses) {
      out.push_back(s * s + 1);
      out.push_back(-(s * s + 1));
    }
  } else {
    for (const BigInt& s : rep.type1_witnesses) out.push_back(ipow(s, rep.p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_special_for_recipe(const TypeReport& rep) {
  return rep.p == 2 ? rep.is_type1() || rep.is_type2() : rep.is_type1();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Either/or for two special irreducibles

struct EitherOrDecision {
  bool first_universal = false;   // phi1^3 o phi2
  bool second_universal = false;  // phi2^3 o phi1
  bool choose_first = true;
  std::vector<TrailEntry> trail;
};

namespace detail {

/// True when no integer a has phi_j(a) in Obstr(phi_i); records each membership test.
inline bool obstruction_free(const TypeReport& outer, std::size_t i, const UnicriticalPoly& inner, std::size_t j,
                             std::vector<TrailEntry>& trail) {
  bool free = true;
  for (const BigInt& v : obstruction_set(outer)) {
    const BigInt target = v - inner.c;
    const bool hit = is_pth_power(target, inner.p);
    trail.push_back({TrailEntry::Kind::Obstruction,
                     poly_name(j) + "(a) = " + to_string(v) + " in Obstr(" + poly_name(i) + ") needs a^" +
                         std::to_string(inner.p) + " = " + to_string(target),
                     target, !hit, hit ? "solvable" : "no integer a"});
    if (hit) free = false;
  }
  return free;
}

inline EitherOrDecision decide_either_or_impl(const TypeReport& r1, std::size_t i1, const TypeReport& r2,
                                              std::size_t i2) {
  EitherOrDecision d;
  d.first_universal = obstruction_free(r1, i1, {r2.p, r2.c}, i2, d.trail);
  d.second_universal = obstruction_free(r2, i2, {r1.p, r1.c}, i1, d.trail);
  if (!d.first_universal && !d.second_universal) {
    throw InternalContradiction("both " + poly_name(i1) + "^3 o " + poly_name(i2) + " and " + poly_name(i2) +
                                "^3 o " + poly_name(i1) + " are obstructed for c = " + to_string(r1.c) + ", " +
                                to_string(r2.c));
  }
  d.choose_first = d.first_universal;
  return d;
}

}  // namespace detail

inline EitherOrDecision decide_either_or(const UnicriticalPoly& phi1, const UnicriticalPoly& phi2) {
  if (phi1.p != phi2.p) throw InputNotSpecial("generators have different exponents");
  if (phi1 == phi2) throw InputNotSpecial("the two generators coincide");
  const TypeReport r1 = classify_type(phi1);
  const TypeReport r2 = classify_type(phi2);
  for (const auto* r : {&r1, &r2}) {
    if (!r->irreducible_over_Q || !detail::is_special_for_recipe(*r)) {
      throw InputNotSpecial("x^" + std::to_string(r->p) + " + " + to_string(r->c) +
                            " is not an irreducible special generator");
    }
  }
  return detail::decide_either_or_impl(r1, 0, r2, 1);
}

// ---------------------------------------------------------------------------
// Minimal power index for the t = 0 case

/// Smallest n >= 2 with s not a p^(n-1)-th power.
inline std::size_t minimal_power_index(unsigned p, const BigInt& s) {
  require_prime_exponent(p);
  if (abs(s) <= 1) throw DomainError("minimal_power_index needs |s| >= 2, got " + to_string(s));
  std::size_t n = 2;
  unsigned long exponent = p;
  while (exact_root(s, exponent).has_value()) {
    ++n;
    exponent *= p;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Candidate prefixes

struct RecipeCandidate {
  Word prefix;
  CaseTag tag;
  std::vector<TrailEntry> trail;
};

struct RecipeAnalysis {
  std::vector<TypeReport> reports;
  std::vector<RecipeCandidate> candidates;
  std::optional<std::string> open_case;  // set when a p > 3 special pair is present
};

namespace detail {

inline TrailEntry classification_entry(std::size_t i, const TypeReport& rep) {
  std::string outcome = rep.irreducible_over_Q ? "irreducible" : "reducible";
  for (const BigInt& s : rep.type1_witnesses) outcome += ", Type I s=" + to_string(s);
  for (const BigInt& s : rep.type2_witnesses) outcome += ", Type II s=" + to_string(s);
  return {TrailEntry::Kind::Classification,
          poly_name(i) + " = " + format_unicritical({rep.p, rep.c}) + "; -c a " + power_word(rep.p) + "?",
          BigInt(-rep.c), rep.irreducible_over_Q, outcome};
}

}  // namespace detail

/// Every recipe case that applies to S, each with the prefix it prescribes.
inline RecipeAnalysis analyze_recipes(const GeneratorSet& S) {
  const unsigned p = S.p();
  RecipeAnalysis out;
  for (std::size_t i = 0; i < S.size(); ++i) out.reports.push_back(classify_type(p, S.c(i)));
  const auto& rep = out.reports;

  std::vector<std::size_t> irreducible;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (rep[i].irreducible_over_Q) irreducible.push_back(i);
  }
  if (irreducible.empty()) throw NoIrreducibleGenerator("no generator of S is irreducible over Q");

  auto base_trail = [&](std::initializer_list<std::size_t> idx) {
    std::vector<TrailEntry> t;
    for (std::size_t i : idx) t.push_back(detail::classification_entry(i, rep[i]));
    return t;
  };

  if (S.size() == 1) {
    out.candidates.push_back({Word{}, CaseTag::SingleGenerator, base_trail({0})});
    return out;
  }

  // a non-special irreducible generator
  for (std::size_t i : irreducible) {
    if (detail::is_special_for_recipe(rep[i])) continue;
    if (p == 2) {
      out.candidates.push_back({Word::repeat(i, 4), CaseTag::NonSpecialPhi4, base_trail({i})});
    } else {
      out.candidates.push_back({Word::repeat(i, 3), CaseTag::NonSpecialPhi3, base_trail({i})});
    }
  }

  // two special irreducibles
  for (std::size_t a = 0; a < irreducible.size(); ++a) {
    for (std::size_t b = a + 1; b < irreducible.size(); ++b) {
      const std::size_t i = irreducible[a];
      const std::size_t j = irreducible[b];
      if (!detail::is_special_for_recipe(rep[i]) || !detail::is_special_for_recipe(rep[j])) continue;
      EitherOrDecision d = detail::decide_either_or_impl(rep[i], i, rep[j], j);
      const CaseTag tag = p == 2 ? CaseTag::BothSpecialEitherOr : CaseTag::OddTwoSpecial;
      auto trail = base_trail({i, j});
      trail.insert(trail.end(), d.trail.begin(), d.trail.end());
      if (d.first_universal) out.candidates.push_back({Word{i, i, i, j}, tag, trail});
      if (d.second_universal) out.candidates.push_back({Word{j, j, j, i}, tag, trail});
    }
  }

  // a special irreducible next to a reducible generator
  for (std::size_t i : irreducible) {
    if (!detail::is_special_for_recipe(rep[i])) continue;
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (rep[j].irreducible_over_Q) continue;
      auto trail = base_trail({i, j});
      if (p == 2) {
        const BigInt t = *exact_root(-S.c(j), 2);  // c_j = -t^2, t >= 0
        for (const BigInt& s : rep[i].type1_witnesses) {
          if (s < 0) continue;
          if (s * s != t * t) {
            auto tr = trail;
            tr.push_back({TrailEntry::Kind::Identity, "s^2 != t^2 with s=" + to_string(s) + ", t=" + to_string(t),
                          std::nullopt, true, "distinct"});
            out.candidates.push_back({Word{i, i, i, j, i}, CaseTag::TypeIPlusReducibleDistinct, tr});
          } else {
            auto tr = trail;
            tr.push_back({TrailEntry::Kind::Identity, "s^2 = t^2 with s=" + to_string(s) + ", t=" + to_string(t),
                          std::nullopt, true, "matching"});
            out.candidates.push_back({Word{i, i, j, i}, CaseTag::TypeIPlusMatchingReducible, tr});
          }
        }
        if (rep[i].is_type2()) {
          out.candidates.push_back({Word{i, i, i, j, i}, CaseTag::TypeIIPlusReducible, trail});
        }
      } else {
        const BigInt t = *perfect_pth_power(S.c(j), p);  // c_j = t^p
        for (const BigInt& s : rep[i].type1_witnesses) {
          auto tr = trail;
          if (t == 0) {
            const std::size_t n = minimal_power_index(p, s);
            tr.push_back({TrailEntry::Kind::Identity,
                          "minimal n with s=" + to_string(s) + " not a p^(n-1)-th power", BigInt(n), true,
                          "n=" + std::to_string(n)});
            out.candidates.push_back({Word::repeat(i, 3) + Word::repeat(j, n), CaseTag::FLTZeroT, tr});
          } else if (t != s) {
            tr.push_back({TrailEntry::Kind::Identity, "t != s with s=" + to_string(s) + ", t=" + to_string(t),
                          std::nullopt, true, "distinct"});
            out.candidates.push_back({Word{i, i, i, j}, CaseTag::FLTDistinct, tr});
          } else if (p == 3) {
            tr.push_back({TrailEntry::Kind::Identity, "t = s = " + to_string(s), std::nullopt, true, "special pair"});
            out.candidates.push_back({Word{i, j, i}, CaseTag::P3SpecialPair, tr});
          } else {
            out.open_case = "S contains the pair x^" + std::to_string(p) + " + t^" + std::to_string(p) + " - t^" +
                            std::to_string(p * p) + ", x^" + std::to_string(p) + " + t^" + std::to_string(p) +
                            " with t=" + to_string(t) + "; irreducibility of (x^p+t^p)^p+t^p-t^(p^2) for p > 3 "
                            "is conjectured, not proven";
          }
        }
      }
    }
  }
  return out;
}

/// Index of the chosen candidate: shortest prefix, then lexicographically lowest.
inline std::size_t choose_candidate(const std::vector<RecipeCandidate>& candidates) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    const Word& a = candidates[k].prefix;
    const Word& b = candidates[best].prefix;
    if (a.size() < b.size() || (a.size() == b.size() && a < b)) best = k;
  }
  return best;
}

inline Certificate pick_universal_prefix(const GeneratorSet& S) {
  RecipeAnalysis analysis = analyze_recipes(S);
  if (analysis.candidates.empty()) {
    if (analysis.open_case) throw OpenCase(*analysis.open_case);
    throw InternalContradiction("no recipe case applies although S has an irreducible generator");
  }
  const std::size_t k = choose_candidate(analysis.candidates);
  const RecipeCandidate& chosen = analysis.candidates[k];

  Certificate cert;
  cert.p = S.p();
  cert.coeffs.assign(S.coeffs().begin(), S.coeffs().end());
  cert.prefix = chosen.prefix;
  cert.scope = Scope::Universal;
  cert.case_tag = chosen.tag;
  cert.trail = chosen.trail;

  std::set<std::string> others;
  for (std::size_t m = 0; m < analysis.candidates.size(); ++m) {
    if (m == k) continue;
    others.insert(std::string(to_string(analysis.candidates[m].tag)) + " " +
                  format_word(analysis.candidates[m].prefix));
  }
  if (!others.empty()) {
    std::string note = "several recipe cases apply; chose the shortest prefix, then the lowest indices. Others:";
    for (const auto& o : others) note += " " + o + ";";
    note.pop_back();
    cert.notes.push_back(note);
  }
  if (analysis.open_case) cert.notes.push_back("open case present but not needed: " + *analysis.open_case);
  return cert;
}

// ---------------------------------------------------------------------------
// Per-word verification

struct VerifyOptions {
  std::optional<CaseTag> asserted_case;
  EvalLimits limits;
};

namespace detail {

/// Level checks of the chain criterion for outer o w (outer may be empty).
/// Returns the failing level, or 0 when every level passes.
inline std::size_t run_chain(const GeneratorSet& S, const Word& outer, const Word& w, const EvalLimits& limits,
                             std::vector<TrailEntry>& trail, BigInt& failing_value) {
  const unsigned p = S.p();
  for (std::size_t j = 1; j <= w.size(); ++j) {
    const std::size_t next = w[j - 1];
    const Word head = outer + w.prefix(j - 1);
    if (head.empty()) {
      const BigInt v = -S.c(next);
      const bool power = is_pth_power(v, p);
      trail.push_back({TrailEntry::Kind::PowerCheck,
                       "level 1: -c of " + poly_name(next) + " a " + power_word(p) + "?", v, !power,
                       power ? power_word(p) : "not a " + power_word(p)});
      if (power) {
        failing_value = v;
        return j;
      }
      continue;
    }
    const BigInt v = eval_word(S, head, S.c(next), limits);
    const bool power = is_pth_power(v, p);
    trail.push_back({TrailEntry::Kind::PowerCheck,
                     "level " + std::to_string(j) + ": " + format_word(head) + " at c" + std::to_string(next) +
                         " a " + power_word(p) + "?",
                     v, !power, power ? power_word(p) : "not a " + power_word(p)});
    if (power) {
      failing_value = v;
      return j;
    }
  }
  return 0;
}

}  // namespace detail

/// Why g is known irreducible, or PrefixNotCertified.
inline std::pair<std::optional<CaseTag>, TrailEntry> justify_prefix(const GeneratorSet& S, const Word& g,
                                                                   const VerifyOptions& options) {
  validate_word(S, g);
  std::optional<RecipeAnalysis> analysis;
  try {
    analysis = analyze_recipes(S);
  } catch (const NoIrreducibleGenerator&) {
  }
  if (analysis && !analysis->candidates.empty()) {
    const RecipeCandidate& chosen = analysis->candidates[choose_candidate(analysis->candidates)];
    if (!options.asserted_case && chosen.prefix == g) {
      return {chosen.tag, {TrailEntry::Kind::Justification, "prefix " + format_word(g) + " chosen by the recipe engine",
                           std::nullopt, true, to_string(chosen.tag)}};
    }
    if (options.asserted_case) {
      for (const auto& c : analysis->candidates) {
        if (c.prefix != g) continue;
        const bool family = *options.asserted_case == CaseTag::LocalGlobalFamily && is_local_global_shape(c.tag);
        if (c.tag == *options.asserted_case || family) {
          return {*options.asserted_case,
                  {TrailEntry::Kind::Justification, "prefix " + format_word(g) + " matches asserted case",
                   std::nullopt, true, to_string(*options.asserted_case)}};
        }
      }
      throw PrefixNotCertified("prefix " + format_word(g) + " does not have the shape of case " +
                               to_string(*options.asserted_case) + " for this generator set");
    }
  }
  if (g.empty()) {
    return {std::nullopt, {TrailEntry::Kind::Justification, "empty prefix; the chain starts at base irreducibility",
                           std::nullopt, true, "identity"}};
  }
  {
    // g passes the chain criterion on its own
    std::vector<TrailEntry> scratch;
    BigInt bad;
    const Word head = g.prefix(1);
    Word tail(std::vector<std::size_t>(g.begin() + 1, g.end()));
    if (detail::run_chain(S, Word{}, head, options.limits, scratch, bad) == 0 &&
        detail::run_chain(S, head, tail, options.limits, scratch, bad) == 0) {
      return {std::nullopt, {TrailEntry::Kind::Justification,
                             "prefix " + format_word(g) + " certified by its own chain (" +
                                 std::to_string(scratch.size()) + " levels)",
                             std::nullopt, true, "irreducible"}};
    }
  }
  throw PrefixNotCertified("prefix " + format_word(g) + " is neither a recipe prefix nor self-certifying");
}

inline VerifyResult verify_word_irreducible(const GeneratorSet& S, const Word& g, const Word& w,
                                            const VerifyOptions& options = {}) {
  validate_word(S, w);
  auto [tag, justification] = justify_prefix(S, g, options);
  std::vector<TrailEntry> trail{justification};
  BigInt bad;
  const std::size_t level = detail::run_chain(S, g, w, options.limits, trail, bad);
  if (level != 0) return Inconclusive{level, bad, std::move(trail)};

  Certificate cert;
  cert.p = S.p();
  cert.coeffs.assign(S.coeffs().begin(), S.coeffs().end());
  cert.prefix = g;
  cert.scope = Scope::PerWord;
  cert.word = w;
  cert.case_tag = tag;
  cert.trail = std::move(trail);
  return cert;
}

// ---------------------------------------------------------------------------
// Local-global families

struct FamilyCertificate {
  GeneratorSet set;
  Certificate certificate;
};

inline FamilyCertificate local_global_family(unsigned p, const BigInt& t, const std::vector<BigInt>& extras = {}) {
  if (p != 2 && p != 3) throw DomainError("local-global families exist for p = 2 or 3 only, got " + std::to_string(p));
  if (abs(t) <= 1) throw DomainError("t must satisfy |t| >= 2, got " + to_string(t));
  std::vector<BigInt> coeffs{type1_constant(p, t), p == 2 ? BigInt(-t * t) : BigInt(ipow(t, 3))};
  coeffs.insert(coeffs.end(), extras.begin(), extras.end());
  GeneratorSet S = make_generator_set(p, coeffs);
  const Word prefix = p == 2 ? Word{0, 0, 1, 0} : Word{0, 1, 0};

  RecipeAnalysis analysis = analyze_recipes(S);
  const CaseTag shape = p == 2 ? CaseTag::TypeIPlusMatchingReducible : CaseTag::P3SpecialPair;
  auto it = std::find_if(analysis.candidates.begin(), analysis.candidates.end(),
                         [&](const RecipeCandidate& c) { return c.prefix == prefix && c.tag == shape; });
  if (it == analysis.candidates.end()) {
    throw InternalContradiction("family prefix " + format_word(prefix) + " not produced by the recipe engine");
  }

  Certificate cert;
  cert.p = p;
  cert.coeffs = coeffs;
  cert.prefix = prefix;
  cert.scope = Scope::Universal;
  cert.case_tag = CaseTag::LocalGlobalFamily;
  cert.trail = it->trail;

  // the outer part of the prefix sends 0 to t^p, a p-th power in every F_q
  const Word outer = p == 2 ? Word{0, 0, 1} : Word{0, 1};
  const BigInt at_zero = eval_word(S, outer, 0);
  const BigInt tp = ipow(t, p);
  cert.trail.push_back({TrailEntry::Kind::Identity, format_word(outer) + " at 0 equals t^" + std::to_string(p),
                        at_zero, at_zero == tp, at_zero == tp ? "holds" : "fails"});

  // phi1 = (x + t - t^p)^p mod p
  const BigInt shift = t - tp;
  std::vector<BigInt> lhs(p + 1), rhs(p + 1);
  lhs[0] = coeffs[0];
  lhs[p] = 1;
  BigInt binom = 1;
  for (unsigned k = 0; k <= p; ++k) {
    rhs[k] = binom * ipow(shift, p - k);
    binom = binom * (p - k) / (k + 1);
  }
  bool frobenius = true;
  for (unsigned k = 0; k <= p; ++k) {
    if (mod_u64(lhs[k] - rhs[k], p) != 0) frobenius = false;
  }
  cert.trail.push_back({TrailEntry::Kind::Identity,
                        "phi0 = (x + t - t^" + std::to_string(p) + ")^" + std::to_string(p) + " mod " +
                            std::to_string(p),
                        std::nullopt, frobenius, frobenius ? "holds" : "fails"});
  if (at_zero != tp || !frobenius) throw InternalContradiction("family identity failed for t=" + to_string(t));
  cert.notes.push_back("irreducible over Q; reducible modulo every prime");
  return {std::move(S), std::move(cert)};
}

}  // namespace unicrit
