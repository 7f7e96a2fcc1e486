#pragma once

// Irreducibility over Q for small integer polynomials, used to cross-check
// cited facts at desk scale.
//
// Two independent routes:
//   * degree sets: a factor of degree d over Q reduces to a product of
//     irreducible factors mod every good prime q, so d must be a subset sum of
//     the mod-q factor degrees. Intersecting those sets over many primes and
//     landing on {0, n} proves irreducibility exactly.
//   * root subsets: approximate complex roots, form the monic product over each
//     subset of at most n/2 roots, round to integers and confirm by exact
//     division. Finding no factor is numerical evidence only.
//
// For F(x) = f(x^2) with f an irreducible monic quartic there is a third, exact
// route: every factorization of F pairs g(x) with g(-x), so F is reducible iff
// f(y) = A(y)^2 - y B(y)^2 for monic quadratic A and linear B over Z.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/modp.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

inline DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return DensePoly(std::move(out));
}

/// Quotient when the monic d divides f exactly.
inline std::optional<DensePoly> divide_exact_monic(const DensePoly& f, const DensePoly& d) {
  if (!d.is_monic()) throw DomainError("divide_exact_monic needs a monic divisor");
  if (f.degree() < d.degree()) return f.is_zero() ? std::optional<DensePoly>(DensePoly{}) : std::nullopt;
  std::vector<BigInt> r = f.coeffs;
  const std::size_t dd = d.coeffs.size() - 1;
  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t k = r.size(); k-- > dd;) {
    const BigInt factor = r[k];
    q[k - dd] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= factor * d.coeffs[j];
  }
  for (std::size_t k = 0; k < dd; ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return DensePoly(std::move(q));
}

// ---------------------------------------------------------------------------
// Degree sets

inline std::vector<bool> subset_sums(const std::vector<std::size_t>& degrees, std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (std::size_t d : degrees) {
    for (std::size_t s = n + 1; s-- > d;) {
      if (reach[s - d]) reach[s] = true;
    }
  }
  return reach;
}

struct DegreeSetResult {
  bool proven_irreducible = false;
  std::vector<std::uint64_t> primes_used;       // primes that narrowed the set
  std::vector<std::size_t> surviving_degrees;   // possible factor degrees in (0, n)
};

/// Intersects mod-q subset-sum sets over odd primes q <= q_limit not dividing
/// the leading coefficient; f must be monic.
inline DegreeSetResult irreducible_by_degree_sets(const DensePoly& f, std::uint64_t q_limit = 2000) {
  if (!f.is_monic()) throw DomainError("degree-set test needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  DegreeSetResult out;
  std::vector<bool> possible(n + 1, true);
  auto remaining = [&] {
    std::vector<std::size_t> v;
    for (std::size_t d = 1; d < n; ++d) {
      if (possible[d]) v.push_back(d);
    }
    return v;
  };
  if (n <= 1) {
    out.proven_irreducible = n == 1;
    return out;
  }
  for (std::uint64_t q : primes_up_to(q_limit)) {
    const auto degrees = factor_degrees_Fq(FqPoly::from(f, q));
    if (!degrees) continue;  // q divides the discriminant
    const auto reach = subset_sums(*degrees, n);
    bool narrowed = false;
    for (std::size_t d = 1; d < n; ++d) {
      if (possible[d] && !reach[d]) {
        possible[d] = false;
        narrowed = true;
      }
    }
    if (narrowed) out.primes_used.push_back(q);
    if (remaining().empty()) {
      out.proven_irreducible = true;
      break;
    }
  }
  out.surviving_degrees = remaining();
  return out;
}

// ---------------------------------------------------------------------------
// Root subsets

/// All complex roots by the Aberth-Ehrlich iteration.
inline std::vector<std::complex<long double>> complex_roots(const DensePoly& f, int max_iter = 2000) {
  using C = std::complex<long double>;
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<long double> a(f.coeffs.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.coeffs[i].get_d() / f.leading().get_d();
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
  bound += 1;
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2.0L * 3.14159265358979323846L * (static_cast<long double>(k) + 0.25L) / n;
    z[k] = std::polar(bound * 0.5L + 0.1L, angle);
  }
  auto eval = [&](const C& x, C& deriv) {
    C v = 0;
    deriv = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      deriv = deriv * x + v;
      v = v * x + a[i];
    }
    return v;
  };
  for (int it = 0; it < max_iter; ++it) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      C d;
      const C v = eval(z[k], d);
      if (v == C(0)) continue;
      const C ratio = v / d;
      C sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += C(1) / (z[k] - z[j]);
      }
      const C step = ratio / (C(1) - ratio * sum);
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

/// A monic factor of degree in [1, n/2] found from root subsets, if any.
inline std::optional<DensePoly> find_factor_by_roots(const DensePoly& f) {
  using C = std::complex<long double>;
  if (!f.is_monic()) throw DomainError("root-subset search needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n > 20) throw DomainError("root-subset search limited to degree 20");
  const auto roots = complex_roots(f);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k > n / 2) continue;
    std::vector<C> prod{C(1)};
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1U << i))) continue;
      std::vector<C> next(prod.size() + 1, C(0));
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] += prod[j];
        next[j] -= prod[j] * roots[i];
      }
      prod = std::move(next);
    }
    std::vector<BigInt> coeffs(prod.size());
    bool near_integral = true;
    for (std::size_t j = 0; j < prod.size(); ++j) {
      const long double re = prod[j].real();
      const long double tol = 1e-6L * std::max<long double>(1, std::abs(re));
      if (std::abs(re) > 9e18L || std::abs(prod[j].imag()) > tol || std::abs(re - std::round(re)) > tol) {
        near_integral = false;
        break;
      }
      coeffs[j] = BigInt(std::to_string(static_cast<long long>(std::llround(re))));
    }
    if (!near_integral) continue;
    DensePoly candidate(std::move(coeffs));
    if (candidate.is_monic() && divide_exact_monic(f, candidate)) return candidate;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Even splits of f(x^2)

/// g = A(x^2) + x B(x^2) with f(x^2) = g(x) g(-x), for a monic quartic f with
/// f(0) a square; nothing when no integer split exists.
inline std::optional<DensePoly> even_split_factor(const DensePoly& f) {
  if (f.degree() != 4 || !f.is_monic()) throw DomainError("even split needs a monic quartic");
  const BigInt& f0 = f.coeffs[0];
  const BigInt& f1 = f.coeffs[1];
  const BigInt& f2 = f.coeffs[2];
  const BigInt& f3 = f.coeffs[3];
  // y^4 + (2a1 - b1^2) y^3 + (a1^2 + 2a0 - 2b0b1) y^2 + (2a0a1 - b0^2) y + a0^2
  const auto r0 = exact_root(f0, 2);
  if (!r0) return std::nullopt;
  for (const BigInt& a0 : std::vector<BigInt>{*r0, BigInt(-*r0)}) {
    // |a1| <= K from the y^2 and y coefficients, then b1^2 = 2a1 - f3
    const BigInt K = 2 * kth_root_floor(BigInt((2 + abs(f3)) * (2 * abs(a0) + abs(f1))), 2).root + 2 +
                     2 * abs(a0) + abs(f2) + 1;
    const BigInt b1_max = kth_root_floor(BigInt(2 * K + abs(f3)), 2).root + 1;
    for (BigInt b1 = -b1_max; b1 <= b1_max; ++b1) {
      const BigInt twice_a1 = f3 + b1 * b1;
      if (!mpz_even_p(twice_a1.get_mpz_t())) continue;
      const BigInt a1 = twice_a1 / 2;
      const BigInt rest = a1 * a1 + 2 * a0 - f2;  // = 2 b0 b1
      std::vector<BigInt> b0s;
      if (b1 == 0) {
        if (rest != 0) continue;
        const auto r = exact_root(BigInt(2 * a0 * a1 - f1), 2);
        if (!r) continue;
        b0s = {*r, BigInt(-*r)};
      } else {
        if (rest % (2 * b1) != 0) continue;
        b0s = {BigInt(rest / (2 * b1))};
      }
      for (const BigInt& b0 : b0s) {
        if (2 * a0 * a1 - b0 * b0 != f1) continue;
        DensePoly g({a0, b0, a1, b1, BigInt(1)});
        std::vector<BigInt> neg = g.coeffs;
        for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
        std::vector<BigInt> fx2(9);
        for (std::size_t k = 0; k <= 4; ++k) fx2[2 * k] = f.coeffs[k];
        if (poly_mul(g, DensePoly(neg)) == DensePoly(fx2)) return g;
      }
    }
  }
  return std::nullopt;
}

}  // namespace unicrit
