#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace hwz {

// gcd(0, n) = |n|; always nonnegative.
constexpr std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// |m'|/|m| > sqrt(3)/sqrt(2), decided exactly. Equality is impossible for
// integers with m != 0 because sqrt(3/2) is irrational.
constexpr bool steep(std::int64_t m, std::int64_t m_prime) {
  return 2 * m_prime * m_prime > 3 * m * m;
}

// Nonnegative residue of a mod n, n > 0.
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::complex<double> ipow(std::complex<double> z, std::int64_t n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  std::complex<double> out{1.0, 0.0};
  while (n > 0) {
    if (n & 1) out *= z;
    z *= z;
    n >>= 1;
  }
  return out;
}

}  // namespace hwz
