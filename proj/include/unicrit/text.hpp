#pragma once

// Text forms used by the CLI.
//
//   poly := term (('+' | '-') term)*      e.g. "x^2 - 12", "x^4 - 24x^2 + 132"
//   term := ['-'] INT | ['-'] [INT ['*']] 'x' ['^' INT]
//   word := ['g' '='] '[' [INT (',' INT)*] ']'     e.g. "g = [0,0,1,0]"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DensePoly parse_poly(std::string_view text) {
  detail::Cursor in(text);
  std::vector<BigInt> coeffs;
  auto add = [&](std::size_t degree, const BigInt& value) {
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += value;
  };
  bool first = true;
  while (true) {
    int sgn = 1;
    if (in.accept('-')) {
      sgn = -1;
    } else if (!in.accept('+') && !first) {
      if (in.at_end()) break;
      in.fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    bool has_coeff = false;
    if (in.peek_digit()) {
      coeff = parse_bigint(in.digits());
      has_coeff = true;
    }
    const bool star = has_coeff && in.accept('*');
    if (in.accept('x')) {
      std::size_t degree = 1;
      if (in.accept('^')) degree = std::stoul(std::string(in.digits()));
      add(degree, sgn * coeff);
    } else {
      if (!has_coeff || star) in.fail("expected a term");
      add(0, sgn * coeff);
    }
    if (in.at_end()) break;
  }
  return DensePoly(std::move(coeffs));
}

inline std::string format_poly(const DensePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = f.coeffs.size(); k-- > 0;) {
    const BigInt& a = f.coeffs[k];
    if (a == 0) continue;
    const BigInt mag = abs(a);
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

/// Parses "x^p + c" (p prime) into a generator.
inline UnicriticalPoly parse_unicritical(std::string_view text) {
  const DensePoly f = parse_poly(text);
  const long d = f.degree();
  if (d < 2 || !f.is_monic()) throw ParseError("'" + std::string(text) + "' is not of the form x^p + c");
  for (long k = 1; k < d; ++k) {
    if (f.coeffs[static_cast<std::size_t>(k)] != 0) {
      throw ParseError("'" + std::string(text) + "' is not of the form x^p + c");
    }
  }
  require_prime_exponent(static_cast<unsigned>(d));
  return {static_cast<unsigned>(d), f.coeffs[0]};
}

inline std::string format_unicritical(const UnicriticalPoly& phi) {
  std::vector<BigInt> c(phi.p + 1);
  c[0] = phi.c;
  c[phi.p] = 1;
  return format_poly(DensePoly(std::move(c)));
}

inline Word parse_word(std::string_view text) {
  detail::Cursor in(text);
  if (in.accept('g')) {
    if (!in.accept('=')) in.fail("expected '=' after 'g'");
  }
  if (!in.accept('[')) in.fail("expected '['");
  Word w;
  if (!in.accept(']')) {
    do {
      w.indices.push_back(std::stoul(std::string(in.digits())));
    } while (in.accept(','));
    if (!in.accept(']')) in.fail("expected ']'");
  }
  if (!in.at_end()) in.fail("trailing characters");
  return w;
}

inline std::string format_word(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out + "]";
}

}  // namespace unicrit
