#pragma once

// Exact integer roots and perfect-power detection.
//
// Everything here is pure and works on immutable values, so any number of
// threads may call in concurrently. The only shared state is the memoized
// prescreen prime table, which is guarded by a mutex.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/errors.hpp"

namespace unicrit {

// ---------------------------------------------------------------------------
// Word-size modular arithmetic

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int twos = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++twos;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < twos; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t q) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(q));
}

// ---------------------------------------------------------------------------
// Roots

struct RootResult {
  BigInt root;
  bool exact = false;
};

namespace detail {

/// floor(n^(1/k)) for n >= 0 by integer Newton iteration from above.
inline BigInt nonnegative_kth_root(const BigInt& n, unsigned long k) {
  if (n < 2 || k == 1) return n;
  const std::size_t bits = bit_length(n);
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bits + k - 1) / k);  // x^k >= 2^bits > n
  const BigInt k_minus_1(k - 1);
  while (true) {
    BigInt y = (k_minus_1 * x + n / ipow(x, k - 1)) / BigInt(k);
    if (y >= x) break;
    x = std::move(y);
  }
  // Newton from above lands on the floor; the correction keeps that exact
  // even if the iterate stalls one step early.
  while (ipow(x, k) > n) --x;
  while (ipow(x + 1, k) <= n) ++x;
  return x;
}

}  // namespace detail

/// Largest r with r^k <= n. Negative n is allowed for odd k.
inline RootResult kth_root_floor(const BigInt& n, unsigned long k) {
  if (k == 0) throw DomainError("root index must be at least 1");
  if (n < 0 && k % 2 == 0) {
    throw DomainError("even root (k=" + std::to_string(k) + ") of negative " + digest(n));
  }
  if (n >= 0) {
    RootResult out{detail::nonnegative_kth_root(n, k), false};
    out.exact = ipow(out.root, k) == n;
    return out;
  }
  BigInt r = detail::nonnegative_kth_root(-n, k);
  const bool exact = ipow(r, k) == -n;
  return {exact ? BigInt(-r) : BigInt(-r - 1), exact};
}

/// r with r^k = n when one exists. Even k gives the nonnegative root.
inline std::optional<BigInt> exact_root(const BigInt& n, unsigned long k) {
  if (k == 0) throw DomainError("root index must be at least 1");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  RootResult r = kth_root_floor(n, k);
  if (!r.exact) return std::nullopt;
  return r.root;
}

inline bool is_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------------------
// Perfect p-th powers

inline constexpr std::size_t kPrescreenPrimeCount = 10;

/// The first ten primes q with q = 1 (mod p). Memoized per p.
inline std::vector<std::uint64_t> prescreen_primes(unsigned p) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = static_cast<std::uint64_t>(p) + 1; primes.size() < kPrescreenPrimeCount; q += p) {
    if (is_prime(q)) primes.push_back(q);
  }
  cache.emplace(p, primes);
  return primes;
}

/// True when n is a p-th power residue modulo q (q prime, q = 1 mod p).
inline bool residue_test(const BigInt& n, unsigned p, std::uint64_t q) {
  const std::uint64_t r = mod_u64(n, q);
  return r == 0 || powmod(r, (q - 1) / p, q) == 1;
}

/// Every true p-th power passes; most non-powers fail at least one test.
inline bool passes_power_residue_prescreen(const BigInt& n, unsigned p) {
  for (std::uint64_t q : prescreen_primes(p)) {
    if (!residue_test(n, p, q)) return false;
  }
  return true;
}

/// r with r^p = n, if it exists. For p = 2 negative n is never a power.
inline std::optional<BigInt> perfect_pth_power(const BigInt& n, unsigned p) {
  if (!is_prime(p)) throw DomainError("exponent " + std::to_string(p) + " is not prime");
  if (n < 0 && p == 2) return std::nullopt;
  if (n == 0 || n == 1) return n;
  if (n == -1) return BigInt(-1);
  if (!passes_power_residue_prescreen(n, p)) return std::nullopt;
  return exact_root(n, p);
}

inline bool is_pth_power(const BigInt& n, unsigned p) { return perfect_pth_power(n, p).has_value(); }

}  // namespace unicrit
