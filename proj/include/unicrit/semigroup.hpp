#pragma once

// Unicritical generators x^p + c, the free composition semigroup they span,
// and the two ways of looking at an element: evaluating it at a point and
// expanding it into coefficients.
//
// Word convention: indices[0] is the OUTERMOST factor, so the word [i, j]
// denotes phi_i o phi_j. A universal prefix g is then literally a prefix of
// every word g o f it certifies.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"

namespace unicrit {

/// x^p + c with p prime.
struct UnicriticalPoly {
  unsigned p = 2;
  BigInt c;

  BigInt operator()(const BigInt& x) const { return ipow(x, p) + c; }
  friend bool operator==(const UnicriticalPoly&, const UnicriticalPoly&) = default;
};

/// x^p + c with a rational constant; only used for classification queries.
struct RationalUnicriticalPoly {
  unsigned p = 2;
  Rational c;
};

inline void require_prime_exponent(unsigned p) {
  if (!is_prime(p)) throw InvalidExponent("exponent " + std::to_string(p) + " is not prime");
}

class GeneratorSet {
 public:
  unsigned p() const { return p_; }
  std::size_t size() const { return coeffs_.size(); }
  const BigInt& c(std::size_t i) const { return coeffs_.at(i); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  UnicriticalPoly generator(std::size_t i) const { return {p_, coeffs_.at(i)}; }

  friend GeneratorSet make_generator_set(unsigned p, std::vector<BigInt> coeffs);
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  GeneratorSet(unsigned p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}

  unsigned p_;
  std::vector<BigInt> coeffs_;
};

inline GeneratorSet make_generator_set(unsigned p, std::vector<BigInt> coeffs) {
  require_prime_exponent(p);
  if (coeffs.empty()) throw EmptySet("a generator set needs at least one coefficient");
  std::set<BigInt> seen;
  for (const BigInt& c : coeffs) {
    if (!seen.insert(c).second) throw DuplicateGenerator("coefficient " + digest(c) + " appears twice");
  }
  return GeneratorSet(p, std::move(coeffs));
}

struct Word {
  std::vector<std::size_t> indices;

  Word() = default;
  Word(std::initializer_list<std::size_t> list) : indices(list) {}
  explicit Word(std::vector<std::size_t> v) : indices(std::move(v)) {}

  static Word repeat(std::size_t index, std::size_t times) {
    return Word(std::vector<std::size_t>(times, index));
  }

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }
  auto begin() const { return indices.begin(); }
  auto end() const { return indices.end(); }

  Word prefix(std::size_t n) const {
    return Word(std::vector<std::size_t>(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(std::min(n, size()))));
  }
  bool starts_with(const Word& head) const {
    return head.size() <= size() && std::equal(head.begin(), head.end(), indices.begin());
  }

  friend Word operator+(Word outer, const Word& inner) {
    outer.indices.insert(outer.indices.end(), inner.indices.begin(), inner.indices.end());
    return outer;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

inline void validate_word(const GeneratorSet& S, const Word& w) {
  for (std::size_t i : w) {
    if (i >= S.size()) {
      throw InvalidWord("index " + std::to_string(i) + " out of range for " + std::to_string(S.size()) +
                        " generators");
    }
  }
}

// ---------------------------------------------------------------------------
// Evaluation

/// Orbit values above this many bits abort instead of exhausting memory.
inline constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 20;

struct EvalLimits {
  std::size_t max_bits = kDefaultMaxBits;
};

/// phi(x) with a size check before the power is formed.
inline BigInt apply_generator(unsigned p, const BigInt& c, const BigInt& x, const EvalLimits& limits = {}) {
  if (bit_length(x) * p > limits.max_bits + p) {
    throw OrbitTooLarge("orbit value of " + std::to_string(bit_length(x)) + " bits raised to the " +
                        std::to_string(p) + "th power exceeds the " + std::to_string(limits.max_bits) +
                        "-bit guard");
  }
  return ipow(x, p) + c;
}

/// Value of the composition named by w at x, innermost factor first.
inline BigInt eval_word(const GeneratorSet& S, const Word& w, BigInt x, const EvalLimits& limits = {}) {
  validate_word(S, w);
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    x = apply_generator(S.p(), S.c(*it), x, limits);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials

struct DensePoly {
  std::vector<BigInt> coeffs;  // ascending degree, no trailing zeros

  DensePoly() = default;
  explicit DensePoly(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

  static DensePoly identity() { return DensePoly({BigInt(0), BigInt(1)}); }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  const BigInt& leading() const { return coeffs.back(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

/// h(z + shift), by the quadratic in-place Horner scheme.
inline DensePoly taylor_shift(DensePoly h, const BigInt& shift) {
  if (shift == 0 || h.degree() < 1) return h;
  auto& a = h.coeffs;
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) a[j] += shift * a[j + 1];
  }
  return h;
}

/// h(x^p + c) = g(x^p) where g(z) = h(z + c).
inline DensePoly compose_unicritical(const DensePoly& h, unsigned p, const BigInt& c) {
  const DensePoly shifted = taylor_shift(h, c);
  std::vector<BigInt> out(shifted.coeffs.empty() ? 0 : (shifted.coeffs.size() - 1) * p + 1);
  for (std::size_t j = 0; j < shifted.coeffs.size(); ++j) out[j * p] = shifted.coeffs[j];
  return DensePoly(std::move(out));
}

/// p^len, or 0 once it exceeds `limit`.
inline std::size_t bounded_degree(unsigned p, std::size_t len, std::size_t limit) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (d > limit / p) return 0;
    d *= p;
  }
  return d <= limit ? d : 0;
}

inline constexpr std::size_t kDefaultDegreeCap = 4096;

/// Coefficients of the composition named by w; monic of degree p^|w|.
inline DensePoly expand_word(const GeneratorSet& S, const Word& w, std::size_t degree_cap = kDefaultDegreeCap) {
  validate_word(S, w);
  if (bounded_degree(S.p(), w.size(), degree_cap) == 0) {
    throw DegreeCapExceeded("degree " + std::to_string(S.p()) + "^" + std::to_string(w.size()) +
                            " exceeds cap " + std::to_string(degree_cap));
  }
  DensePoly h = DensePoly::identity();
  for (std::size_t index : w) h = compose_unicritical(h, S.p(), S.c(index));
  return h;
}

// ---------------------------------------------------------------------------
// Enumeration in length-then-lexicographic order

class WordRange {
 public:
  WordRange(std::size_t alphabet, std::size_t max_len) : alphabet_(alphabet), max_len_(max_len) {}

  class iterator {
   public:
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using reference = const Word&;
    using pointer = const Word*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::size_t alphabet, std::size_t max_len) : alphabet_(alphabet), max_len_(max_len) {
      done_ = alphabet_ == 0 || max_len_ == 0;
      if (!done_) current_.indices.assign(1, 0);
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      auto& idx = current_.indices;
      for (std::size_t pos = idx.size(); pos-- > 0;) {
        if (++idx[pos] < alphabet_) return *this;
        idx[pos] = 0;
      }
      if (idx.size() == max_len_) {
        done_ = true;
      } else {
        idx.assign(idx.size() + 1, 0);
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    std::size_t alphabet_ = 0;
    std::size_t max_len_ = 0;
    bool done_ = true;
    Word current_;
  };

  iterator begin() const { return iterator(alphabet_, max_len_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t alphabet_;
  std::size_t max_len_;
};

/// All nonempty words of length <= max_len over S, deterministically ordered.
inline WordRange enumerate_words(const GeneratorSet& S, std::size_t max_len) {
  return WordRange(S.size(), max_len);
}

/// r + r^2 + ... + r^max_len.
inline BigInt count_words(std::size_t r, std::size_t max_len) {
  BigInt total = 0;
  BigInt level = 1;
  for (std::size_t n = 1; n <= max_len; ++n) {
    level *= static_cast<unsigned long>(r);
    total += level;
  }
  return total;
}

}  // namespace unicrit
