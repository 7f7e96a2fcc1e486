#pragma once

// Shared generators and naive oracles for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "unicrit/unicrit.hpp"

namespace testkit {

using unicrit::BigInt;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  /// A random integer with up to `digits` decimal digits and random sign.
  BigInt big(int digits) {
    std::string s = coin() ? "-" : "";
    const int n = static_cast<int>(range(1, digits));
    s += static_cast<char>('1' + range(0, 8));
    for (int i = 1; i < n; ++i) s += static_cast<char>('0' + range(0, 9));
    return BigInt(s);
  }

  /// Distinct small coefficients.
  std::vector<BigInt> coeffs(std::size_t r, long lo, long hi) {
    std::vector<BigInt> out;
    while (out.size() < r) {
      BigInt c(range(lo, hi));
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
  }

  unicrit::Word word(std::size_t r, std::size_t min_len, std::size_t max_len) {
    unicrit::Word w;
    const auto len = static_cast<std::size_t>(range(static_cast<long>(min_len), static_cast<long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) w.indices.push_back(static_cast<std::size_t>(range(0, static_cast<long>(r) - 1)));
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

/// Trial-division primality.
inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Floor of the k-th root by bisection on [lo, hi] using only multiplication.
inline BigInt naive_root(const BigInt& n, unsigned k) {
  BigInt lo = 0, hi = 1;
  while (unicrit::ipow(hi, k) <= n) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (unicrit::ipow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Irreducibility over F_q by trying every monic divisor of degree <= n/2.
inline bool naive_irreducible_Fq(const std::vector<std::uint64_t>& f, std::uint64_t q) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::uint64_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      unicrit::FqPoly F(q, f), G(q, g);
      if (unicrit::fq::mod(F, G).is_zero()) return false;
      std::size_t k = 0;
      while (k < d && ++g[k] == q) g[k++] = 0;
      if (k == d) break;
    }
  }
  return true;
}

}  // namespace testkit
