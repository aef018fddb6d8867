#pragma once

// Coefficient-level objects:
//   I_{alpha,gamma}(n) = sum_{de=n} mu(e) d^{-alpha} e^{-gamma}
//                      (multiplicative; I(p^j) = p^{-alpha j}(1 - p^{alpha-gamma}))
//   r_q(h)             = sum_{d | (q,h)} d mu(q/d)        (Ramanujan sum)
//   Phi(x,q)           = prod_{p|q} (1 - p^{-x})
//   F_{alpha,gamma}(q)  multiplicative, F(p^j) = 0 for j >= 2,
//     F(p) = -p^{alpha-gamma} / (1 - p^{-1+alpha-gamma}).
// The literal divisor sums are kept alongside the prime-power fast paths as
// oracles.

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "ratios/core.hpp"
#include "ratios/prime_table.hpp"

namespace ratios {

inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Closed form I_{alpha,gamma}(p^j).
inline Cplx coeff_I_prime_power(std::uint64_t p, int j, Cplx alpha,
                                Cplx gamma) {
  if (!is_prime_u64(p)) throw RangeError("coeff_I_prime_power: p not prime");
  if (j < 0) throw RangeError("coeff_I_prime_power: j < 0");
  if (j == 0) return Cplx(1.0);
  double lp = std::log(static_cast<double>(p));
  return std::exp(-alpha * static_cast<double>(j) * lp) *
         (1.0 - std::exp((alpha - gamma) * lp));
}

// Evaluator with per-prime caching; suitable for bulk scans.
class CoeffEvaluator {
 public:
  CoeffEvaluator(Cplx alpha, Cplx gamma, const PrimeTable& table)
      : alpha_(alpha), gamma_(gamma), table_(&table) {}

  Cplx operator()(std::int64_t n) const {
    Cplx out = 1.0;
    while (n > 1) {
      std::uint32_t p = table_->spf(n);
      int j = 0;
      while (n % p == 0) {
        n /= p;
        ++j;
      }
      out *= prime_power(p, j);
      if (out == Cplx(0.0)) return out;
    }
    return out;
  }

  Cplx prime_power(std::uint32_t p, int j) const {
    if (j == 0) return Cplx(1.0);
    const auto& c = local(p);
    Cplx pw = c.p_minus_alpha;
    for (int k = 1; k < j; ++k) pw *= c.p_minus_alpha;
    return pw * c.one_minus_pag;
  }

  // I over 1..N as a flat array (index 0 unused), via the spf recursion.
  std::vector<Cplx> range(std::int64_t N) const {
    if (N > table_->limit()) throw RangeError("CoeffEvaluator::range beyond table");
    std::vector<Cplx> I(static_cast<std::size_t>(N) + 1);
    if (N >= 0) I[0] = 0.0;
    if (N >= 1) I[1] = 1.0;
    for (std::int64_t n = 2; n <= N; ++n) {
      std::uint32_t p = table_->spf(n);
      std::int64_t m = n;
      int j = 0;
      while (m % p == 0) {
        m /= p;
        ++j;
      }
      I[static_cast<std::size_t>(n)] =
          prime_power(p, j) * I[static_cast<std::size_t>(m)];
    }
    return I;
  }

  Cplx alpha() const { return alpha_; }
  Cplx gamma() const { return gamma_; }

 private:
  struct Local {
    Cplx p_minus_alpha;
    Cplx one_minus_pag;
  };

  const Local& local(std::uint32_t p) const {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    double lp = std::log(static_cast<double>(p));
    Local l{std::exp(-alpha_ * lp), 1.0 - std::exp((alpha_ - gamma_) * lp)};
    return cache_.emplace(p, l).first->second;
  }

  Cplx alpha_, gamma_;
  const PrimeTable* table_;
  mutable std::unordered_map<std::uint32_t, Local> cache_;
};

inline Cplx coeff_I(std::int64_t n, Cplx alpha, Cplx gamma,
                    const PrimeTable& table) {
  Cplx out = 1.0;
  for (const auto& [p, e] : table.factor(n))
    out *= coeff_I_prime_power(p, e, alpha, gamma);
  return out;
}

// Literal divisor-convolution oracle.
inline Cplx coeff_I_direct(std::int64_t n, Cplx alpha, Cplx gamma,
                           const PrimeTable& table) {
  Cplx sum = 0.0;
  for (std::int64_t d : table.divisors(n)) {
    std::int64_t e = n / d;
    int mu = mobius(e, table);
    if (mu == 0) continue;
    sum += static_cast<double>(mu) *
           std::exp(-alpha * std::log(static_cast<double>(d)) -
                    gamma * std::log(static_cast<double>(e)));
  }
  return sum;
}

inline std::int64_t ramanujan_sum(std::int64_t q, std::int64_t h,
                                  const PrimeTable& table) {
  if (q < 1 || h < 1) throw RangeError("ramanujan_sum: q, h must be >= 1");
  std::int64_t g = std::gcd(q, h);
  std::int64_t sum = 0;
  for (std::int64_t d : table.divisors(g)) {
    int mu = mobius(q / d, table);
    sum += static_cast<std::int64_t>(mu) * d;
  }
  return sum;
}

// Phi(x,q) = prod_{p | q} (1 - p^{-x}).
inline Cplx phi_factor(Cplx x, std::int64_t q, const PrimeTable& table) {
  Cplx out = 1.0;
  for (const auto& [p, e] : table.factor(q)) {
    (void)e;
    out *= 1.0 - std::exp(-x * std::log(static_cast<double>(p)));
  }
  return out;
}

inline Cplx F_local(std::uint64_t p, int j, Cplx alpha, Cplx gamma) {
  if (!is_prime_u64(p)) throw RangeError("F_local: p not prime");
  if (j < 0) throw RangeError("F_local: j < 0");
  if (j == 0) return Cplx(1.0);
  if (j >= 2) return Cplx(0.0);
  double lp = std::log(static_cast<double>(p));
  Cplx denom = 1.0 - std::exp((-1.0 + alpha - gamma) * lp);
  if (std::abs(denom) < 1e-12)
    throw PoleError("F_local: denominator 1 - p^{-1+alpha-gamma} vanishes");
  return -std::exp((alpha - gamma) * lp) / denom;
}

inline Cplx F(std::int64_t q, Cplx alpha, Cplx gamma, const PrimeTable& table) {
  Cplx out = 1.0;
  for (const auto& [p, e] : table.factor(q)) {
    if (e >= 2) return Cplx(0.0);
    out *= F_local(p, e, alpha, gamma);
  }
  return out;
}

// Defining double divisor sum (oracle):
//   F(q) = q^alpha sum_{d|q} mu(d) d^{1-alpha}/phi(d) sum_{e|d} mu(e) e^{alpha-1}
//          (qe/d)^{-alpha} Phi(gamma-alpha, qe/d) / Phi(1+gamma-alpha, qe/d).
inline Cplx F_direct(std::int64_t q, Cplx alpha, Cplx gamma,
                     const PrimeTable& table) {
  auto euler_phi = [&table](std::int64_t n) {
    std::int64_t out = n;
    for (const auto& [p, e] : table.factor(n)) {
      (void)e;
      out -= out / static_cast<std::int64_t>(p);
    }
    return out;
  };
  Cplx sum = 0.0;
  for (std::int64_t d : table.divisors(q)) {
    int mud = mobius(d, table);
    if (mud == 0) continue;
    Cplx outer = static_cast<double>(mud) *
                 std::exp((1.0 - alpha) * std::log(static_cast<double>(d))) /
                 static_cast<double>(euler_phi(d));
    Cplx inner = 0.0;
    for (std::int64_t e : table.divisors(d)) {
      int mue = mobius(e, table);
      if (mue == 0) continue;
      std::int64_t r = q / d * e;
      inner += static_cast<double>(mue) *
               std::exp((alpha - 1.0) * std::log(static_cast<double>(e))) *
               std::exp(-alpha * std::log(static_cast<double>(r))) *
               phi_factor(gamma - alpha, r, table) /
               phi_factor(1.0 + gamma - alpha, r, table);
    }
    sum += outer * inner;
  }
  return std::exp(alpha * std::log(static_cast<double>(q))) * sum;
}

}  // namespace ratios
