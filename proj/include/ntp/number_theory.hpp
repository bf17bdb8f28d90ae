#ifndef NTP_NUMBER_THEORY_HPP
#define NTP_NUMBER_THEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ntp {

/// Distinct prime divisors of n in increasing order (trial division).
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factors: n must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

/// Number of distinct prime divisors.
inline std::size_t prime_count(std::uint64_t n) { return prime_factors(n).size(); }

inline bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

/// True iff n = p^a with a >= 1; the prime is written to `prime`.
inline bool is_prime_power(std::uint64_t n, std::uint64_t* prime = nullptr) {
  if (n < 2) return false;
  auto ps = prime_factors(n);
  if (ps.size() != 1) return false;
  if (prime) *prime = ps.front();
  return true;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace ntp

#endif  // NTP_NUMBER_THEORY_HPP
