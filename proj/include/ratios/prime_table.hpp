#pragma once

// Smallest-prime-factor sieve with O(log n) factorization, plus the
// elementary arithmetic functions mu and Lambda built on it.

#include <cmath>
#include <cstdint>
#include <vector>

#include "ratios/core.hpp"

namespace ratios {

struct PrimePower {
  std::uint64_t p;
  int exponent;
};

class PrimeTable {
 public:
  explicit PrimeTable(std::int64_t limit) : limit_(limit) {
    if (limit < 2 || limit > 100000000)
      throw RangeError("PrimeTable limit must lie in [2, 1e8]");
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(static_cast<std::uint32_t>(i));
        for (std::int64_t j = i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }

  std::int64_t limit() const { return limit_; }

  std::uint32_t spf(std::int64_t n) const {
    check(n);
    return spf_[static_cast<std::size_t>(n)];
  }

  // Ascending list of primes <= limit.
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // Prime-power factorization, primes ascending.
  std::vector<PrimePower> factor(std::int64_t n) const {
    check(n);
    std::vector<PrimePower> out;
    while (n > 1) {
      std::uint64_t p = spf_[static_cast<std::size_t>(n)];
      int e = 0;
      while (n % static_cast<std::int64_t>(p) == 0) {
        n /= static_cast<std::int64_t>(p);
        ++e;
      }
      out.push_back({p, e});
    }
    return out;
  }

  std::vector<std::int64_t> divisors(std::int64_t n) const {
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : factor(n)) {
      std::size_t base = divs.size();
      std::int64_t pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= static_cast<std::int64_t>(p);
        for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      }
    }
    return divs;
  }

 private:
  void check(std::int64_t n) const {
    if (n < 1 || n > limit_)
      throw RangeError("argument " + std::to_string(n) +
                       " outside PrimeTable range [1, " +
                       std::to_string(limit_) + "]");
  }

  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeTable build_table(std::int64_t limit) { return PrimeTable(limit); }

inline int mobius(std::int64_t n, const PrimeTable& table) {
  if (n == 1) return 1;
  int sign = 1;
  for (const auto& [p, e] : table.factor(n)) {
    (void)p;
    if (e >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

// Lambda(n) = log p if n = p^k, else 0.
inline double von_mangoldt(std::int64_t n, const PrimeTable& table) {
  if (n == 1) return 0.0;
  auto f = table.factor(n);
  if (f.size() != 1) return 0.0;
  return std::log(static_cast<double>(f[0].p));
}

}  // namespace ratios
