#pragma once

// Finite-field side. Over F_q with q != p the chain criterion is an
// equivalence, so irreducibility of a composed word mod q only needs the
// critical orbit mod q, never the expansion. The expansion-based Rabin test
// lives here too as the independent oracle.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/arith.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/parallel.hpp"
#include "unicrit/semigroup.hpp"

namespace unicrit {

inline void require_prime_modulus(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("modulus " + std::to_string(q) + " is not prime");
  if (q >= (std::uint64_t{1} << 62)) throw DomainError("modulus " + std::to_string(q) + " is too large");
}

struct FqElement {
  std::uint64_t value = 0;
  std::uint64_t q = 2;

  FqElement() = default;
  FqElement(std::uint64_t v, std::uint64_t modulus) : value(v % modulus), q(modulus) {}
  static FqElement from(const BigInt& n, std::uint64_t modulus) { return {mod_u64(n, modulus), modulus}; }
  friend bool operator==(const FqElement&, const FqElement&) = default;
};

/// True iff a = b^p for some b in F_q.
inline bool pth_power_residue(const FqElement& a, unsigned p) {
  if (a.value == 0) return true;
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(p), a.q - 1);
  return powmod(a.value, (a.q - 1) / g, a.q) == 1;
}

inline bool base_irreducible_Fq(unsigned p, const BigInt& c, std::uint64_t q) {
  require_prime_exponent(p);
  require_prime_modulus(q);
  if (q == p) return false;  // x^p + c = (x + c)^p
  return !pth_power_residue(FqElement::from(-c, q), p);
}

/// Irreducibility of the word mod q by walking the chain criterion.
inline bool word_irreducible_Fq(const GeneratorSet& S, const Word& w, std::uint64_t q) {
  require_prime_modulus(q);
  validate_word(S, w);
  if (w.empty()) throw InvalidWord("word_irreducible_Fq needs a nonempty word");
  const unsigned p = S.p();
  if (q == p) return false;
  if (!base_irreducible_Fq(p, S.c(w[0]), q)) return false;

  std::vector<std::uint64_t> cq(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) cq[i] = mod_u64(S.c(i), q);
  // outer word w[0..j-1] evaluated at c_{w[j]}
  for (std::size_t j = 1; j < w.size(); ++j) {
    std::uint64_t v = cq[w[j]];
    for (std::size_t k = j; k-- > 0;) v = (powmod(v, p, q) + cq[w[k]]) % q;
    if (pth_power_residue(FqElement(v, q), p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_q

struct FqPoly {
  std::uint64_t q = 2;
  std::vector<std::uint64_t> coeffs;  // ascending, reduced, no trailing zeros

  FqPoly() = default;
  FqPoly(std::uint64_t modulus, std::vector<std::uint64_t> c) : q(modulus), coeffs(std::move(c)) {
    for (auto& a : coeffs) a %= q;
    normalize();
  }
  static FqPoly from(const DensePoly& f, std::uint64_t modulus) {
    std::vector<std::uint64_t> c(f.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_u64(f.coeffs[i], modulus);
    return FqPoly(modulus, std::move(c));
  }
  static FqPoly x(std::uint64_t modulus) { return FqPoly(modulus, {0, 1}); }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

namespace fq {

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

inline FqPoly sub(const FqPoly& a, const FqPoly& b) {
  std::vector<std::uint64_t> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] = (out[i] + a.q - b.coeffs[i]) % a.q;
  return FqPoly(a.q, std::move(out));
}

inline FqPoly mul(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly(a.q, {});
  std::vector<std::uint64_t> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a.coeffs[i], b.coeffs[j], a.q)) % a.q;
    }
  }
  return FqPoly(a.q, std::move(out));
}

/// Quotient and remainder; m must be nonzero.
inline std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& m) {
  const std::uint64_t q = a.q;
  if (m.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<std::uint64_t> r = a.coeffs;
  const std::size_t dm = m.coeffs.size() - 1;
  if (r.size() <= dm) return {FqPoly(q, {}), a};
  std::vector<std::uint64_t> quot(r.size() - dm, 0);
  const std::uint64_t inv = inverse(m.coeffs.back(), q);
  for (std::size_t k = r.size(); k-- > dm;) {
    const std::uint64_t factor = mulmod(r[k], inv, q);
    if (factor == 0) continue;
    quot[k - dm] = factor;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::size_t idx = k - dm + j;
      r[idx] = (r[idx] + q - mulmod(factor, m.coeffs[j], q)) % q;
    }
  }
  r.resize(dm);
  return {FqPoly(q, std::move(quot)), FqPoly(q, std::move(r))};
}

inline FqPoly mod(const FqPoly& a, const FqPoly& m) { return divmod(a, m).second; }

inline FqPoly monic(FqPoly a) {
  if (a.is_zero()) return a;
  const std::uint64_t inv = inverse(a.coeffs.back(), a.q);
  for (auto& c : a.coeffs) c = mulmod(c, inv, a.q);
  return a;
}

inline FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

inline FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return mod(mul(a, b), m); }

/// base^e mod m by repeated squaring.
inline FqPoly powmod(FqPoly base, std::uint64_t e, const FqPoly& m) {
  FqPoly result(m.q, {1});
  result = mod(result, m);
  base = mod(base, m);
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1U;
    if (e != 0) base = mulmod(base, base, m);
  }
  return result;
}

inline FqPoly derivative(const FqPoly& f) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) out.push_back(unicrit::mulmod(f.coeffs[i], i % f.q, f.q));
  return FqPoly(f.q, std::move(out));
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace fq

/// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for primes l | n.
inline bool rabin_irreducible(const FqPoly& f, std::uint64_t q) {
  require_prime_modulus(q);
  if (f.q != q) throw DomainError("polynomial is over F_" + std::to_string(f.q) + ", not F_" + std::to_string(q));
  if (!f.is_monic()) throw DomainError("rabin_irreducible needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 0) throw DomainError("rabin_irreducible needs degree at least 1");
  if (n == 1) return true;

  const FqPoly x = FqPoly::x(q);
  std::vector<FqPoly> frob(n + 1);  // frob[k] = x^(q^k) mod f
  frob[0] = fq::mod(x, f);
  for (std::size_t k = 1; k <= n; ++k) frob[k] = fq::powmod(frob[k - 1], q, f);
  if (fq::sub(frob[n], frob[0]).degree() >= 0) return false;
  for (std::uint64_t l : fq::prime_factors(n)) {
    if (fq::gcd(fq::sub(frob[n / l], x), f).degree() != 0) return false;
  }
  return true;
}

/// Degrees of the irreducible factors of a squarefree monic f (with repetition),
/// by distinct-degree factorization; nullopt when f is not squarefree mod q.
inline std::optional<std::vector<std::size_t>> factor_degrees_Fq(const FqPoly& f) {
  const std::uint64_t q = f.q;
  if (!f.is_monic()) throw DomainError("factor_degrees_Fq needs a monic polynomial");
  if (fq::gcd(f, fq::derivative(f)).degree() != 0) return std::nullopt;
  std::vector<std::size_t> out;
  FqPoly rest = f;
  FqPoly h = fq::mod(FqPoly::x(q), rest);
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
    h = fq::powmod(h, q, rest);
    const FqPoly g = fq::gcd(fq::sub(h, FqPoly::x(q)), rest);
    if (g.degree() > 0) {
      for (long k = 0; k < g.degree() / static_cast<long>(d); ++k) out.push_back(d);
      rest = fq::divmod(rest, g).first;
      h = fq::mod(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back(static_cast<std::size_t>(rest.degree()));
  return out;
}

// ---------------------------------------------------------------------------
// Local-global scan

struct ScanEntry {
  std::uint64_t q = 0;
  bool irreducible = false;
};

struct ScanReport {
  unsigned p = 2;
  std::optional<BigInt> t;  // set for family scans
  std::vector<BigInt> coeffs;
  Word word;
  std::uint64_t q_max = 0;
  std::vector<ScanEntry> entries;  // ascending q
  bool all_reducible = true;
};

inline ScanReport local_global_scan(const GeneratorSet& S, const Word& w, std::uint64_t q_max, unsigned jobs = 0) {
  validate_word(S, w);
  if (w.empty()) throw InvalidWord("local_global_scan needs a nonempty word");
  const auto primes = primes_up_to(q_max);
  ScanReport report;
  report.p = S.p();
  report.coeffs.assign(S.coeffs().begin(), S.coeffs().end());
  report.word = w;
  report.q_max = q_max;
  report.entries = parallel_map<ScanEntry>(primes.size(), jobs, [&](std::size_t k) {
    return ScanEntry{primes[k], word_irreducible_Fq(S, w, primes[k])};
  });
  for (const auto& e : report.entries) {
    if (e.irreducible) report.all_reducible = false;
  }
  return report;
}

}  // namespace unicrit
