#pragma once

// How much of M_S a universal prefix certifies, counted exactly over all words
// of length 1..L. Words extending a prefix g of length k number r^(L'-k) at
// each length L' >= k, so per length the fraction is exactly r^-k; the
// cumulative fraction over 1..L is slightly below that.

#include <cstddef>
#include <string>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/certify.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/parallel.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

struct LengthCount {
  std::size_t length = 0;
  BigInt total;
  BigInt certified;
  Rational fraction;
};

struct ProportionStats {
  Certificate certificate;
  std::size_t max_len = 0;
  std::size_t r = 0;
  BigInt total_words;
  BigInt certified_words;
  Rational fraction;
  Rational bound;                        // r^-|prefix|
  Rational theorem_bound;                // r^-5
  std::vector<LengthCount> per_length;   // lengths 1..max_len
  bool enumerated = false;               // counts re-derived by walking every word
  std::size_t verify_depth = 0;          // suffixes up to this length were chain-checked
  std::size_t verified = 0;
  std::size_t inconclusive = 0;
  bool per_length_meets_bound = true;    // every length >= |prefix| hits r^-|prefix| exactly
};

inline ProportionStats proportion_stats(const GeneratorSet& S, std::size_t max_len, std::size_t verify_depth = 3,
                                        unsigned jobs = 0, const EvalLimits& limits = {}) {
  if (max_len == 0) throw DomainError("max length must be at least 1");
  ProportionStats out;
  out.certificate = pick_universal_prefix(S);
  out.max_len = max_len;
  out.r = S.size();
  const Word& g = out.certificate.prefix;
  const std::size_t k = g.size();
  out.bound = Rational(1, ipow(BigInt(static_cast<unsigned long>(out.r)), k));
  out.bound.canonicalize();
  out.theorem_bound = Rational(1, ipow(BigInt(static_cast<unsigned long>(out.r)), 5));
  out.theorem_bound.canonicalize();

  for (std::size_t len = 1; len <= max_len; ++len) {
    LengthCount row;
    row.length = len;
    row.total = ipow(BigInt(static_cast<unsigned long>(out.r)), len);
    row.certified = len >= k ? ipow(BigInt(static_cast<unsigned long>(out.r)), len - k) : BigInt(0);
    row.fraction = Rational(row.certified, row.total);
    row.fraction.canonicalize();
    if (len >= k && row.fraction != out.bound) out.per_length_meets_bound = false;
    out.total_words += row.total;
    out.certified_words += row.certified;
    out.per_length.push_back(std::move(row));
  }
  out.fraction = Rational(out.certified_words, out.total_words);
  out.fraction.canonicalize();

  // walk the words themselves when that is cheap
  if (out.total_words <= 2'000'000) {
    BigInt walked_total = 0, walked_certified = 0;
    for (const Word& w : enumerate_words(S, max_len)) {
      ++walked_total;
      if (w.starts_with(g)) ++walked_certified;
    }
    if (walked_total != out.total_words || walked_certified != out.certified_words) {
      throw InternalContradiction("prefix counting disagrees with enumeration");
    }
    out.enumerated = true;
  }

  // chain-check every extension by a short suffix
  out.verify_depth = std::min(verify_depth, max_len >= k ? max_len - k : 0);
  std::vector<Word> suffixes;
  for (const Word& w : enumerate_words(S, out.verify_depth)) suffixes.push_back(w);
  if (k <= max_len) suffixes.insert(suffixes.begin(), Word{});
  const VerifyOptions options{out.certificate.case_tag, limits};
  const auto results = parallel_map<bool>(suffixes.size(), jobs, [&](std::size_t i) {
    return std::holds_alternative<Certificate>(verify_word_irreducible(S, g, suffixes[i], options));
  });
  for (bool ok : results) {
    ++out.verified;
    if (!ok) ++out.inconclusive;
  }
  return out;
}

}  // namespace unicrit
