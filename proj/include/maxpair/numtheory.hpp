#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace maxpair {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factors with multiplicity, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// The prime p when n = p^k with k >= 1.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = prime_factors(n);
  if (f.empty() || f.front() != f.back()) return std::nullopt;
  return f.front();
}

/// k with p^k = n, assuming n is a power of p.
inline int log_base(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of k modulo m; 0 when gcd(k, m) != 1.
inline std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(k % m, m) != 1) return 0;
  std::uint64_t x = k % m, ord = 1;
  while (x != 1) {
    x = x * (k % m) % m;
    ++ord;
  }
  return ord;
}

/// Least c in [1, p) whose multiplicative order mod p is exactly q.
inline std::optional<std::uint64_t> unit_of_order(std::uint64_t q, std::uint64_t p) {
  for (std::uint64_t c = 1; c < p; ++c)
    if (multiplicative_order(c, p) == q) return c;
  return std::nullopt;
}

}  // namespace maxpair
