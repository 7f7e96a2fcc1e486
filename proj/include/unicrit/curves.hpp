#pragma once

// Curves Y^2 = F(X) with F in Z[X] and their rational points of bounded height.
//
// For X = a/b in lowest terms and m = deg F rounded up to even, Y is rational
// iff the integer F(a, b) * b^(m - deg F) is a square, where F(a, b) is the
// homogenization b^(deg F) F(a/b); then Y = sqrt(...) / b^(m/2).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

struct CurvePoint {
  Rational x;
  Rational y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

inline bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

struct CurveSpec {
  std::string id;
  std::string equation;          // human-readable
  DensePoly rhs;                 // F, ascending coefficients
  std::vector<CurvePoint> known; // affine points
};

inline Rational eval_rational(const DensePoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

inline bool on_curve(const CurveSpec& c, const CurvePoint& pt) { return pt.y * pt.y == eval_rational(c.rhs, pt.x); }

/// Points at infinity of the smooth model: one for odd degree, two or none
/// for even degree depending on whether the leading coefficient is a square.
inline std::size_t points_at_infinity(const CurveSpec& c) {
  if (c.rhs.degree() % 2 != 0) return 1;
  return is_square(c.rhs.leading()) ? 2 : 0;
}

namespace detail {

inline std::vector<BigInt> coeffs_of(std::initializer_list<long> ascending) {
  std::vector<BigInt> out;
  for (long v : ascending) out.emplace_back(v);
  return out;
}

inline CurvePoint pt(long xn, long xd, long yn, long yd) {
  Rational x(xn, xd), y(yn, yd);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

}  // namespace detail

inline std::vector<std::string> curve_ids() { return {"C", "E", "C1", "C2", "C3", "C4", "B1", "B2", "B3"}; }

inline CurveSpec builtin_curve(const std::string& id) {
  using detail::coeffs_of;
  using detail::pt;
  if (id == "C") {
    return {id, "Y^2 = -X^6 + 3X^5 + 3X^4 - 11X^3 + 3X^2 + 3X - 1",
            DensePoly(coeffs_of({-1, 3, 3, -11, 3, 3, -1})),
            {pt(-1, 1, 3, 1), pt(-1, 1, -3, 1), pt(2, 1, 3, 1), pt(2, 1, -3, 1), pt(1, 2, 3, 8), pt(1, 2, -3, 8)}};
  }
  if (id == "E") {
    return {id, "Y^2 = X^3 + 1", DensePoly(coeffs_of({1, 0, 0, 1})),
            {pt(0, 1, 1, 1), pt(0, 1, -1, 1), pt(-1, 1, 0, 1), pt(2, 1, 3, 1), pt(2, 1, -3, 1)}};
  }
  if (id == "C1") {
    return {id, "t^2 = s^4 - 3s^2 + 1", DensePoly(coeffs_of({1, 0, -3, 0, 1})), {pt(0, 1, 1, 1), pt(0, 1, -1, 1)}};
  }
  if (id == "C2") {
    return {id, "t^2 = s^4 - s^2 + 1", DensePoly(coeffs_of({1, 0, -1, 0, 1})),
            {pt(0, 1, 1, 1), pt(0, 1, -1, 1), pt(1, 1, 1, 1), pt(1, 1, -1, 1), pt(-1, 1, 1, 1), pt(-1, 1, -1, 1)}};
  }
  if (id == "C3") {
    return {id, "t^2 = s^4 + s^2 + 1", DensePoly(coeffs_of({1, 0, 1, 0, 1})), {pt(0, 1, 1, 1), pt(0, 1, -1, 1)}};
  }
  if (id == "C4") {
    return {id, "t^2 = 9s^4 - s^2 - 1", DensePoly(coeffs_of({-1, 0, -1, 0, 9})), {}};
  }
  // 2t(t+1) times a cubic
  auto b_curve = [&](const std::string& eq, long c0, long c1, long c2) {
    // 2t(t+1)(t^3 + c2 t^2 + c1 t + c0) = 2t^5 + 2(c2+1)t^4 + 2(c1+c2)t^3 + 2(c0+c1)t^2 + 2c0 t
    return CurveSpec{id, eq, DensePoly(coeffs_of({0, 2 * c0, 2 * (c0 + c1), 2 * (c1 + c2), 2 * (c2 + 1), 2})),
                     {pt(0, 1, 0, 1), pt(-1, 1, 0, 1)}};
  };
  if (id == "B1") return b_curve("Y^2 = 2t(t+1)(t^3 + 2t^2 + t + 1)", 1, 1, 2);
  if (id == "B2") return b_curve("Y^2 = 2t(t+1)(t^3 - t - 1)", -1, -1, 0);
  if (id == "B3") return b_curve("Y^2 = 2t(t+1)(t^3 + 2t^2 + 3t + 1)", 1, 3, 2);
  throw UnknownCurve("no built-in curve named '" + id + "'");
}

namespace detail {

using i128 = __int128;

inline bool mul_fits(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool add_fits(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

/// Quick rejection of non-squares by residues mod 64, 63, 65 and 11.
inline bool maybe_square(std::uint64_t r64, std::uint64_t r63, std::uint64_t r65, std::uint64_t r11) {
  static const auto table = [] {
    struct T {
      bool m64[64]{}, m63[63]{}, m65[65]{}, m11[11]{};
    } t;
    for (unsigned i = 0; i < 64; ++i) t.m64[(i * i) % 64] = true;
    for (unsigned i = 0; i < 63; ++i) t.m63[(i * i) % 63] = true;
    for (unsigned i = 0; i < 65; ++i) t.m65[(i * i) % 65] = true;
    for (unsigned i = 0; i < 11; ++i) t.m11[(i * i) % 11] = true;
    return t;
  }();
  return table.m64[r64] && table.m63[r63] && table.m65[r65] && table.m11[r11];
}

inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

}  // namespace detail

/// Square test of the homogenized value at (a, b) with b > 0, gcd(a, b) = 1.
/// Returns the affine points (X, +-Y) with X = a/b, or nothing.
inline std::vector<CurvePoint> points_above(const CurveSpec& c, long a, long b) {
  using detail::i128;
  const std::size_t n = static_cast<std::size_t>(c.rhs.degree());
  const std::size_t m = n + (n % 2);
  // F(a, b) * b^(m - n) = sum f_k a^k b^(m-k)
  if (m >= 16) throw DomainError("curve degree above 15 not supported");
  bool fits = true;
  i128 value = 0;
  {
    std::array<i128, 16> apow{}, bpow{};
    apow[0] = 1;
    bpow[0] = 1;
    for (std::size_t k = 1; k <= n && fits; ++k) fits = detail::mul_fits(apow[k - 1], a, apow[k]);
    for (std::size_t k = 1; k <= m && fits; ++k) fits = detail::mul_fits(bpow[k - 1], b, bpow[k]);
    for (std::size_t k = 0; k <= n && fits; ++k) {
      if (c.rhs.coeffs[k] == 0) continue;
      i128 term;
      fits = fits_i64(c.rhs.coeffs[k]) && detail::mul_fits(apow[k], bpow[m - k], term) &&
             detail::mul_fits(term, c.rhs.coeffs[k].get_si(), term) && detail::add_fits(value, term, value);
    }
  }
  BigInt big;
  if (fits) {
    if (value < 0) return {};
    const auto u = static_cast<unsigned __int128>(value);
    if (!detail::maybe_square(static_cast<std::uint64_t>(u % 64), static_cast<std::uint64_t>(u % 63),
                              static_cast<std::uint64_t>(u % 65), static_cast<std::uint64_t>(u % 11))) {
      return {};
    }
    big = detail::to_big(value);
  } else {
    for (std::size_t k = 0; k <= n; ++k) big += c.rhs.coeffs[k] * ipow(BigInt(a), k) * ipow(BigInt(b), m - k);
  }
  const auto root = detail::exact_sqrt(big);
  if (!root) return {};
  Rational x(a, b);
  Rational y(*root, ipow(BigInt(b), m / 2));
  x.canonicalize();
  y.canonicalize();
  if (y == 0) return {{x, y}};
  return {{x, y}, {x, Rational(-y)}};
}

}  // namespace unicrit
