#pragma once

// Irreducibility of x^p + c over Q and detection of the two special shapes:
//
//   Type I   c = s^p - s^(p^2)      (rational fixed point s^p that is a p-th power)
//   Type II  c = -1 - s^2 - s^4     (p = 2 only; a square on a rational 2-cycle)
//
// Witnesses are the rational roots of z^(p^2) - z^p + c and z^4 + z^2 + 1 + c.
// Writing s = a/b in lowest terms, the denominator of s^p - s^(p^2) is exactly
// b^(p^2), so b is an exact root of the denominator of c and a is an integer
// root of a^(p^2) - b^(p^2-p) a^p + u with u the numerator. That last
// polynomial is strictly monotone on [0, A] and [A+1, inf) where A is the
// integer part of its positive critical point, so each piece yields at most
// one root and a binary search finds it exactly.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

template <class Scalar>
struct BasicTypeReport {
  unsigned p = 2;
  Scalar c;
  bool irreducible_over_Q = false;
  std::vector<Scalar> type1_witnesses;
  std::vector<Scalar> type2_witnesses;

  bool is_type1() const { return !type1_witnesses.empty(); }
  bool is_type2() const { return !type2_witnesses.empty(); }
  /// Irreducible and of Type I, or (p = 2) of Type II.
  bool is_special() const { return irreducible_over_Q && (is_type1() || is_type2()); }
};

using TypeReport = BasicTypeReport<BigInt>;
using RationalTypeReport = BasicTypeReport<Rational>;

inline BigInt type1_constant(unsigned p, const BigInt& s) { return ipow(s, p) - ipow(s, p * p); }
inline Rational type1_constant(unsigned p, const Rational& s) { return ipow(s, p) - ipow(s, p * p); }
inline BigInt type2_constant(const BigInt& s) { return -1 - ipow(s, 2) - ipow(s, 4); }
inline Rational type2_constant(const Rational& s) {
  return Rational(-1) - ipow(s, 2) - ipow(s, 4);
}

// ---------------------------------------------------------------------------
// Irreducibility of binomials: x^p + c is reducible iff -c is a p-th power.

inline bool base_irreducible_Q(unsigned p, const BigInt& c) {
  require_prime_exponent(p);
  return !is_pth_power(-c, p);
}

inline bool base_irreducible_Q(unsigned p, const Rational& c) {
  require_prime_exponent(p);
  const Rational minus_c = -c;
  return !(is_pth_power(minus_c.get_num(), p) && is_pth_power(minus_c.get_den(), p));
}

namespace detail {

/// Nonnegative ordering: 0, 1, 2, ..., then -1, -2, ...
template <class Scalar>
void sort_witnesses(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), [](const Scalar& x, const Scalar& y) {
    const bool xn = x < 0;
    const bool yn = y < 0;
    if (xn != yn) return !xn;
    return abs(x) < abs(y);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// F(a) = a^e2 - K a^e1 + w where e2 = p^2, e1 = p.
struct TypeOnePoly {
  unsigned p;
  BigInt K;
  BigInt w;
  BigInt operator()(const BigInt& a) const { return ipow(a, p * p) - K * ipow(a, p) + w; }
};

/// Root of F on [lo, hi] where F is strictly monotone there.
inline std::optional<BigInt> monotone_root(const TypeOnePoly& F, BigInt lo, BigInt hi, bool increasing) {
  if (lo > hi) return std::nullopt;
  while (lo <= hi) {
    BigInt mid = (lo + hi) / 2;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), BigInt(lo + hi).get_mpz_t(), 1);
    const int s = sgn(F(mid));
    if (s == 0) return mid;
    if ((s < 0) == increasing) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

/// All a >= 1 with a^(p^2) - K a^p + w = 0, K >= 1.
inline std::vector<BigInt> positive_type1_roots(unsigned p, const BigInt& K, const BigInt& w) {
  const TypeOnePoly F{p, K, w};
  const BigInt A = kth_root_floor(K / p, p * p - p).root;  // real critical point lies in [A, A+1)
  const BigInt cauchy = 1 + std::max(K, BigInt(abs(w)));
  std::vector<BigInt> out;
  if (auto r = monotone_root(F, BigInt(1), A, false)) out.push_back(*r);
  if (auto r = monotone_root(F, std::max(BigInt(1), BigInt(A + 1)), cauchy, true)) out.push_back(*r);
  return out;
}

/// All integer a with a^(p^2) - K a^p + u = 0.
inline std::vector<BigInt> integer_type1_roots(unsigned p, const BigInt& K, const BigInt& u) {
  std::vector<BigInt> out;
  if (u == 0) out.push_back(0);
  for (const BigInt& a : positive_type1_roots(p, K, u)) {
    out.push_back(a);
    if (p == 2) out.push_back(-a);  // even in a
  }
  if (p != 2) {
    // F(-a) = -(a^(p^2) - K a^p - u)
    for (const BigInt& a : positive_type1_roots(p, K, -u)) out.push_back(-a);
  }
  return out;
}

/// All integer a with a^4 + a^2 b^2 + b^4 = -u.
inline std::vector<BigInt> integer_type2_roots(const BigInt& b, const BigInt& u) {
  // a^2 = (-b^2 + sqrt(-3 b^4 - 4u)) / 2
  const BigInt disc = -3 * ipow(b, 4) - 4 * u;
  std::vector<BigInt> out;
  if (disc < 0) return out;
  const auto d = exact_root(disc, 2);
  if (!d) return out;
  const BigInt twice_a2 = *d - b * b;
  if (twice_a2 < 0 || twice_a2 % 2 != 0) return out;
  if (const auto a = exact_root(twice_a2 / 2, 2)) {
    out.push_back(*a);
    if (*a != 0) out.push_back(-*a);
  }
  return out;
}

}  // namespace detail

inline TypeReport classify_type(unsigned p, const BigInt& c) {
  require_prime_exponent(p);
  TypeReport report;
  report.p = p;
  report.c = c;
  report.irreducible_over_Q = base_irreducible_Q(p, c);
  for (const BigInt& s : detail::integer_type1_roots(p, BigInt(1), c)) {
    if (type1_constant(p, s) == c) report.type1_witnesses.push_back(s);
  }
  if (p == 2) {
    for (const BigInt& s : detail::integer_type2_roots(BigInt(1), c)) {
      if (type2_constant(s) == c) report.type2_witnesses.push_back(s);
    }
  }
  detail::sort_witnesses(report.type1_witnesses);
  detail::sort_witnesses(report.type2_witnesses);
  return report;
}

inline RationalTypeReport classify_type(unsigned p, const Rational& c) {
  require_prime_exponent(p);
  RationalTypeReport report;
  report.p = p;
  report.c = c;
  report.irreducible_over_Q = base_irreducible_Q(p, c);
  const BigInt& u = c.get_num();
  const BigInt& v = c.get_den();

  auto coprime = [](const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; };

  if (const auto b = exact_root(v, p * p)) {
    const BigInt K = ipow(*b, p * p - p);
    for (const BigInt& a : detail::integer_type1_roots(p, K, u)) {
      if (!coprime(a, *b) && !(a == 0 && *b == 1)) continue;
      Rational s(a, *b);
      s.canonicalize();
      if (type1_constant(p, s) == c) report.type1_witnesses.push_back(s);
    }
  }
  if (p == 2) {
    if (const auto b = exact_root(v, 4)) {
      for (const BigInt& a : detail::integer_type2_roots(*b, u)) {
        if (!coprime(a, *b) && !(a == 0 && *b == 1)) continue;
        Rational s(a, *b);
        s.canonicalize();
        if (type2_constant(s) == c) report.type2_witnesses.push_back(s);
      }
    }
  }
  detail::sort_witnesses(report.type1_witnesses);
  detail::sort_witnesses(report.type2_witnesses);
  return report;
}

inline TypeReport classify_type(const UnicriticalPoly& phi) { return classify_type(phi.p, phi.c); }

}  // namespace unicrit
