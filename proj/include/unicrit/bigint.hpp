#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "unicrit/errors.hpp"

namespace unicrit {

/// Exact signed integer of unbounded size. GMP keeps zero canonical.
using BigInt = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

template <class Expr>
BigInt ipow(const __gmp_expr<mpz_t, Expr>& base, unsigned long exp) {
  return ipow(BigInt(base), exp);
}

inline Rational ipow(const Rational& base, unsigned long exp) {
  Rational out(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  out.canonicalize();
  return out;
}

inline std::size_t bit_length(const BigInt& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline int sign(const BigInt& n) { return sgn(n); }

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
  if (start == s.size()) throw ParseError("expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

/// Accepts "u", "u/v" with v != 0; the result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str(10) : q.get_str(10);
}

/// Decimal form, abbreviated to the first and last `keep` digits plus a digit
/// count once the value is longer than 2*keep digits.
inline std::string digest(const BigInt& n, bool full = false, std::size_t keep = 20) {
  std::string s = n.get_str(10);
  const bool negative = !s.empty() && s[0] == '-';
  const std::size_t digits = s.size() - (negative ? 1 : 0);
  if (full || digits <= 2 * keep) return s;
  const std::string body = s.substr(negative ? 1 : 0);
  return (negative ? "-" : "") + body.substr(0, keep) + "..." + body.substr(digits - keep) +
         " (" + std::to_string(digits) + " digits)";
}

inline bool fits_i64(const BigInt& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

}  // namespace unicrit
