#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace odac {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Extended gcd on signed 64-bit values: g = gcd(a,b) >= 0 with s*a + t*b = g.
struct Xgcd {
  std::int64_t g, s, t;
};

inline Xgcd xgcd_i64(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b; b = r;
    std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
    std::int64_t t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
  return {a, s0, t0};
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  auto [g, s, t] = xgcd_i64(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m));
  (void)t;
  // caller guarantees gcd(a, m) == 1
  std::int64_t im = static_cast<std::int64_t>(m);
  std::int64_t r = s % im;
  if (r < 0) r += im;
  (void)g;
  return static_cast<std::uint64_t>(r);
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Trial-division factorization, (prime, exponent) pairs with primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace odac
