#pragma once

// Series-level objects.
//
// The Euler products (A, the singular series, the q-sum of Theorem 1) are
// evaluated exactly over p <= P and closed with an exp(sum of prime-zeta
// tails) correction obtained from the monomial expansion of log(local
// factor); first-order monomials cancel by construction, so every retained
// tail exponent has real part comfortably above 1.

#include <cstdint>
#include <string>
#include <vector>

#include "ratios/arithmetic.hpp"
#include "ratios/core.hpp"
#include "ratios/prime_table.hpp"
#include "ratios/prime_tail.hpp"
#include "ratios/special.hpp"

namespace ratios {

namespace detail {

inline void check_tail_exponents(const PExpansion& e, const char* who) {
  if (!e.empty() && e.min_re_z() <= 1.05)
    throw ConvergenceError(std::string(who) +
                           ": tail exponent Re z = " +
                           std::to_string(e.min_re_z()) +
                           " too close to 1; product not safely convergent");
}

inline Cplx cpow(double x, Cplx z) { return std::exp(z * std::log(x)); }

}  // namespace detail

// A_{alpha,beta,gamma,delta}(s) =
//   prod_p (1-p^{-s-g-d})(1 - p^{-s-b-g} - p^{-s-a-d} + p^{-s-g-d})
//          / ((1-p^{-s-b-g})(1-p^{-s-a-d})).
inline ValueWithTail A_product(Cplx s, const ShiftParams& sh,
                               const TruncationConfig& cfg,
                               const PrimeTable& table) {
  cfg.validate();
  Cplx za = s + sh.alpha + sh.delta;
  Cplx zb = s + sh.beta + sh.gamma;
  Cplx zg = s + sh.gamma + sh.delta;
  for (Cplx z : {za, zb, zg})
    if (z.real() <= 0.5)
      throw ConvergenceError("A_product: local exponent Re z <= 0.5");

  long long P = std::min<long long>(cfg.prime_cutoff, table.limit());
  Cplx head = 1.0;
  for (std::uint32_t p : table.primes()) {
    if (static_cast<long long>(p) > P) break;
    double lp = std::log(static_cast<double>(p));
    Cplx a = std::exp(-za * lp), b = std::exp(-zb * lp),
         g = std::exp(-zg * lp);
    head *= (1.0 - g) * (1.0 - b - a + g) / ((1.0 - b) * (1.0 - a));
  }

  PExpansion lg = PExpansion::mono(-1.0, zg).log1p() +
                  (PExpansion::mono(-1.0, za) + PExpansion::mono(-1.0, zb) +
                   PExpansion::mono(1.0, zg))
                      .log1p();
  PExpansion minus = PExpansion::mono(-1.0, za).log1p() +
                     PExpansion::mono(-1.0, zb).log1p();
  minus *= Cplx(-1.0);
  lg += minus;
  detail::check_tail_exponents(lg, "A_product");
  TailCorrection tc = expansion_tail(lg, P, table.primes());
  Cplx value = head * std::exp(tc.log_sum);
  return {value, std::abs(value) * (tc.bound + 1e-15)};
}

// Closed form of the Rankin-Selberg series:
//   B(s) = zeta(s+a+b) zeta(s+g+d) / (zeta(s+a+d) zeta(s+b+g)) * A(s).
inline Cplx rankin_selberg_B(Cplx s, const ShiftParams& sh,
                             const TruncationConfig& cfg,
                             const PrimeTable& table) {
  Cplx z1 = s + sh.alpha + sh.beta, z2 = s + sh.gamma + sh.delta;
  if (std::abs(z1 - 1.0) < 1e-10)
    throw PoleError("rankin_selberg_B: pole from zeta(s+alpha+beta)");
  if (std::abs(z2 - 1.0) < 1e-10)
    throw PoleError("rankin_selberg_B: pole from zeta(s+gamma+delta)");
  return zeta(z1) * zeta(z2) * inv_zeta(s + sh.alpha + sh.delta) *
         inv_zeta(s + sh.beta + sh.gamma) *
         A_product(s, sh, cfg, table).value;
}

// Direct truncated Rankin-Selberg sum (oracle):
//   sum_{n <= N} I_{a,g}(n) I_{b,d}(n) / n^s, with a crude tail bound.
inline ValueWithTail B_direct(Cplx s, const ShiftParams& sh, std::int64_t N,
                              const PrimeTable& table) {
  if (s.real() < 1.5)
    throw RangeError("B_direct: requires Re s >= 1.5 for a controlled tail");
  if (N > table.limit()) throw RangeError("B_direct: N beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(N), a2 = I2.range(N);
  Cplx sum = 0.0;
  for (std::int64_t n = 1; n <= N; ++n)
    sum += a1[static_cast<std::size_t>(n)] * a2[static_cast<std::size_t>(n)] *
           std::exp(-s * std::log(static_cast<double>(n)));
  double m2 = 2.0 * sh.max_abs();
  double lnN = std::log(static_cast<double>(N));
  double bound = std::pow(lnN, 3) *
                 std::pow(static_cast<double>(N), 1.0 - s.real() + m2) /
                 (s.real() - 1.0 - m2);
  return {sum, bound};
}

// sum_m I_{alpha,gamma}(m r) m^{-w}
//   = zeta(w+alpha) r^{-alpha} Phi(gamma-alpha,r) / (Phi(w+gamma,r) zeta(w+gamma)).
inline Cplx twisted_series(Cplx w, std::int64_t r, Cplx alpha, Cplx gamma,
                           const TruncationConfig& cfg,
                           const PrimeTable& table) {
  (void)cfg;
  if (std::abs(w - (1.0 - alpha)) < 1e-10)
    throw PoleError("twisted_series: pole at w = 1 - alpha");
  return zeta(w + alpha) *
         detail::cpow(static_cast<double>(r), -alpha) *
         phi_factor(gamma - alpha, r, table) /
         phi_factor(w + gamma, r, table) * inv_zeta(w + gamma);
}

// Truncated literal sum sum_{m <= N} I(mr) m^{-w} (oracle).  I(mr) is
// assembled from the bulk array over m with the prime factors of r patched,
// so the table only needs to cover max(N, r).
inline Cplx twisted_series_direct(Cplx w, std::int64_t r, Cplx alpha,
                                  Cplx gamma, std::int64_t N,
                                  const PrimeTable& table) {
  CoeffEvaluator I(alpha, gamma, table);
  std::vector<Cplx> arr = I.range(N);
  auto rfac = table.factor(r);
  Cplx sum = 0.0;
  for (std::int64_t m = 1; m <= N; ++m) {
    std::int64_t rest = m;
    Cplx patched = 1.0;
    for (const auto& [p, e] : rfac) {
      int vm = 0;
      while (rest % static_cast<std::int64_t>(p) == 0) {
        rest /= static_cast<std::int64_t>(p);
        ++vm;
      }
      patched *= I.prime_power(static_cast<std::uint32_t>(p), vm + e);
    }
    patched *= arr[static_cast<std::size_t>(rest)];
    sum += patched * std::exp(-w * std::log(static_cast<double>(m)));
  }
  return sum;
}

// Residue at w = 1-alpha of sum_m I_{alpha,gamma}(m) e(m/q) m^{-w}:
//   F_{alpha,gamma}(q) / (q zeta(1+gamma-alpha)).
inline Cplx residue_exponential_sum(std::int64_t q, Cplx alpha, Cplx gamma,
                                    const PrimeTable& table) {
  return F(q, alpha, gamma, table) * inv_zeta(1.0 + gamma - alpha) /
         static_cast<double>(q);
}

// Singular series sum_q r_q(h) F_{a,g}(q) F_{b,d}(q) / q^2 as an Euler
// product; exact per prime because F vanishes on p^j, j >= 2.
inline ValueWithTail singular_series(std::int64_t h, const ShiftParams& sh,
                                     const TruncationConfig& cfg,
                                     const PrimeTable& table) {
  cfg.validate();
  if (h < 1) throw RangeError("singular_series: h >= 1 required");
  long long P = std::min<long long>(cfg.prime_cutoff, table.limit());
  for (const auto& [p, e] : table.factor(h)) {
    (void)e;
    if (static_cast<long long>(p) > P)
      throw RangeError("singular_series: prime factor of h exceeds cutoff");
  }
  Cplx head = 1.0;
  for (std::uint32_t p : table.primes()) {
    if (static_cast<long long>(p) > P) break;
    double rp = (h % p == 0) ? static_cast<double>(p) - 1.0 : -1.0;
    Cplx f1 = F_local(p, 1, sh.alpha, sh.gamma);
    Cplx f2 = F_local(p, 1, sh.beta, sh.delta);
    head *= 1.0 + rp * f1 * f2 /
                      (static_cast<double>(p) * static_cast<double>(p));
  }
  // p > P (so p coprime to h):  local - 1 = -F1 F2 / p^2.
  PExpansion u = PExpansion::mono(-1.0, 2.0 + sh.gamma + sh.delta -
                                            sh.alpha - sh.beta) *
                 ((PExpansion::mono(1.0, 0.0) +
                   PExpansion::geometric(1.0 - sh.alpha + sh.gamma)) *
                  (PExpansion::mono(1.0, 0.0) +
                   PExpansion::geometric(1.0 - sh.beta + sh.delta)));
  PExpansion lg = u.log1p();
  detail::check_tail_exponents(lg, "singular_series");
  TailCorrection tc = expansion_tail(lg, P, table.primes());
  Cplx value = head * std::exp(tc.log_sum);
  return {value, std::abs(value) * (tc.bound + 1e-15)};
}

// Truncated literal q-sum (oracle).
inline Cplx singular_series_qsum(std::int64_t h, const ShiftParams& sh,
                                 std::int64_t Q, const PrimeTable& table) {
  Cplx sum = 0.0;
  for (std::int64_t q = 1; q <= Q; ++q) {
    Cplx f1 = F(q, sh.alpha, sh.gamma, table);
    if (f1 == Cplx(0.0)) continue;
    Cplx f2 = F(q, sh.beta, sh.delta, table);
    sum += static_cast<double>(ramanujan_sum(q, h, table)) * f1 * f2 /
           (static_cast<double>(q) * static_cast<double>(q));
  }
  return sum;
}

// The residue-reduced C-object of Theorem 1:
//   zeta(1-a-b-s)/(zeta(1+g-a) zeta(1+d-b)) *
//   sum_q q^{-1-a-b-s} Phi(1-a-b-s,q) F_{a,g}(q) F_{b,d}(q),
// the q-sum evaluated as zeta(1+s+g+d) * prod_p M(p) with the zeta factor
// pulled out so the tail expansion has no first-order monomial.
inline Cplx qsum_side(Cplx s, const ShiftParams& sh,
                      const TruncationConfig& cfg, const PrimeTable& table) {
  cfg.validate();
  // Degenerate shifts: the 1/zeta(1) factors force the value to 0.
  if (std::abs(sh.gamma - sh.alpha) < 1e-13 ||
      std::abs(sh.delta - sh.beta) < 1e-13)
    return Cplx(0.0);
  Cplx zpre = 1.0 - sh.alpha - sh.beta - s;   // argument of the chi-side zeta
  Cplx zq = 1.0 + s + sh.gamma + sh.delta;    // factored-out zeta argument
  if (std::abs(zpre - 1.0) < 1e-10)
    throw PoleError("qsum_side: pole from zeta(1-alpha-beta-s)");
  if (std::abs(zq - 1.0) < 1e-10)
    throw PoleError("qsum_side: pole from zeta(1+s+gamma+delta)");

  long long P = std::min<long long>(cfg.prime_cutoff, table.limit());
  Cplx head = 1.0;
  for (std::uint32_t p : table.primes()) {
    if (static_cast<long long>(p) > P) break;
    double lp = std::log(static_cast<double>(p));
    Cplx f1 = F_local(p, 1, sh.alpha, sh.gamma);
    Cplx f2 = F_local(p, 1, sh.beta, sh.delta);
    Cplx L = 1.0 + std::exp((-1.0 - sh.alpha - sh.beta - s) * lp) *
                       (1.0 - std::exp(-zpre * lp)) * f1 * f2;
    head *= (1.0 - std::exp(-zq * lp)) * L;
  }
  PExpansion Lm1 =
      (PExpansion::mono(1.0, zq) +
       PExpansion::mono(-1.0, 2.0 + sh.gamma + sh.delta - sh.alpha -
                                  sh.beta)) *
      ((PExpansion::mono(1.0, 0.0) +
        PExpansion::geometric(1.0 - sh.alpha + sh.gamma)) *
       (PExpansion::mono(1.0, 0.0) +
        PExpansion::geometric(1.0 - sh.beta + sh.delta)));
  PExpansion lg = PExpansion::mono(-1.0, zq).log1p() + Lm1.log1p();
  detail::check_tail_exponents(lg, "qsum_side");
  TailCorrection tc = expansion_tail(lg, P, table.primes());

  return zeta(zpre) * inv_zeta(1.0 + sh.gamma - sh.alpha) *
         inv_zeta(1.0 + sh.delta - sh.beta) * zeta(zq) * head *
         std::exp(tc.log_sum);
}

// The elementary identity closing the local computation; in normalized form
//   (1 - XC/A)(1 - XD/B) + XCD(1 - X/AB) = 1 - XC/A - XD/B + XCD,
// i.e. after clearing denominators
//   (A-XC)(B-XD) + XCD(AB-X) = AB - XBC - XAD + XABCD.
struct IdentityResult {
  bool ok;
  double residual;
};

inline IdentityResult local_identity_check(Cplx X, Cplx A, Cplx B, Cplx C,
                                           Cplx D) {
  Cplx lhs = (A - X * C) * (B - X * D) + X * C * D * (A * B - X);
  Cplx rhs = A * B - X * B * C - X * A * D + X * A * B * C * D;
  double residual = std::abs(lhs - rhs);
  double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
  return {residual < 1e-12 * scale, residual};
}

// Both index readings of Theorem 1 at general s (they coincide at s = 0).
struct Theorem1Report {
  Cplx s;
  Cplx qsum;               // left-hand side, residue-reduced C(s)
  Cplx reading_stated;     // B_{-beta,-alpha,gamma,delta}(s+1)
  Cplx reading_section4;   // zeta(1-a-b-s) zeta(1+s+g+d)/(zeta zeta) *
                           //   A_{-beta,-alpha-s,gamma+s,delta}(1)
  ComparisonReport vs_stated;
  ComparisonReport vs_section4;
  bool degenerate = false;
};

inline Theorem1Report theorem1_check(Cplx s, const ShiftParams& sh,
                                     const TruncationConfig& cfg,
                                     const PrimeTable& table) {
  Theorem1Report rep;
  rep.s = s;
  if (std::abs(sh.gamma - sh.alpha) < 1e-13 ||
      std::abs(sh.delta - sh.beta) < 1e-13) {
    rep.degenerate = true;
    rep.qsum = rep.reading_stated = rep.reading_section4 = 0.0;
    rep.vs_stated = ComparisonReport::of("theorem1:stated", 0.0, 0.0);
    rep.vs_section4 = ComparisonReport::of("theorem1:section4", 0.0, 0.0);
    return rep;
  }
  rep.qsum = qsum_side(s, sh, cfg, table);
  rep.reading_stated = rankin_selberg_B(s + 1.0, sh.swapped(), cfg, table);
  ShiftParams alt(-sh.beta, -sh.alpha - s, sh.gamma + s, sh.delta, true);
  rep.reading_section4 = zeta(1.0 - sh.alpha - sh.beta - s) *
                         zeta(1.0 + s + sh.gamma + sh.delta) *
                         inv_zeta(1.0 + sh.gamma - sh.alpha) *
                         inv_zeta(1.0 + sh.delta - sh.beta) *
                         A_product(1.0, alt, cfg, table).value;
  rep.vs_stated =
      ComparisonReport::of("theorem1:stated", rep.qsum, rep.reading_stated);
  rep.vs_section4 = ComparisonReport::of("theorem1:section4", rep.qsum,
                                         rep.reading_section4);
  return rep;
}

// I_{alpha,gamma}(s; X) = sum_{n <= X} I(n) n^{-s}.
inline Cplx truncated_ratio_poly(Cplx s, std::int64_t X, Cplx alpha,
                                 Cplx gamma, const PrimeTable& table) {
  if (X > table.limit())
    throw RangeError("truncated_ratio_poly: X beyond sieve limit");
  CoeffEvaluator I(alpha, gamma, table);
  std::vector<Cplx> arr = I.range(X);
  Cplx sum = 0.0;
  for (std::int64_t n = 1; n <= X; ++n)
    sum += arr[static_cast<std::size_t>(n)] *
           std::exp(-s * std::log(static_cast<double>(n)));
  return sum;
}

}  // namespace ratios
