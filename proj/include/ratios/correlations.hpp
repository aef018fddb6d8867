#pragma once

// Shifted correlation sums sum_{n <= x} I_{a,g}(n) I_{b,d}(n+h) against the
// predicted main term
//   m(x,h) = S(h) / (zeta(1+g-a) zeta(1+d-b)) * x^{1-a-b} / (1-a-b),
// S(h) the singular series.

#include <cstdint>
#include <vector>

#include "ratios/arithmetic.hpp"
#include "ratios/core.hpp"
#include "ratios/dirichlet.hpp"

namespace ratios {

struct CorrelationReport {
  std::int64_t x = 0;
  std::int64_t h = 0;
  Cplx empirical{};
  Cplx predicted{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool rel_defined = true;

  static CorrelationReport of(std::int64_t x, std::int64_t h, Cplx emp,
                              Cplx pred) {
    CorrelationReport r;
    r.x = x;
    r.h = h;
    r.empirical = emp;
    r.predicted = pred;
    r.abs_error = std::abs(emp - pred);
    r.rel_defined = std::abs(pred) > 1e-15;
    r.rel_error = r.rel_defined ? r.abs_error / std::abs(pred) : 0.0;
    return r;
  }
};

inline Cplx correlation_sum(std::int64_t x, std::int64_t h,
                            const ShiftParams& sh, const PrimeTable& table) {
  if (h < 1) throw RangeError("correlation_sum: h >= 1 required");
  if (x + h > table.limit())
    throw RangeError("correlation_sum: x + h beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(x), a2 = I2.range(x + h);
  Cplx sum = 0.0;
  for (std::int64_t n = 1; n <= x; ++n)
    sum += a1[static_cast<std::size_t>(n)] *
           a2[static_cast<std::size_t>(n + h)];
  return sum;
}

inline Cplx predicted_m(std::int64_t x, std::int64_t h, const ShiftParams& sh,
                        const TruncationConfig& cfg, const PrimeTable& table) {
  if (h < 1) throw RangeError("predicted_m: h >= 1 required");
  Cplx one_ab = 1.0 - sh.alpha - sh.beta;
  Cplx pref = inv_zeta(1.0 + sh.gamma - sh.alpha) *
              inv_zeta(1.0 + sh.delta - sh.beta);
  if (pref == Cplx(0.0)) return Cplx(0.0);  // degenerate shifts
  Cplx s = singular_series(h, sh, cfg, table).value;
  return s * pref *
         std::exp(one_ab * std::log(static_cast<double>(x))) / one_ab;
}

// Batch driver: one report per h in 1..h_max, ascending.
inline std::vector<CorrelationReport> correlation_scan(
    std::int64_t x, std::int64_t h_max, const ShiftParams& sh,
    const TruncationConfig& cfg, const PrimeTable& table) {
  if (h_max < 1) throw RangeError("correlation_scan: h_max >= 1 required");
  if (static_cast<double>(h_max) > std::sqrt(static_cast<double>(x)))
    throw RangeError("correlation_scan: h_max exceeds sqrt(x) policy");
  if (x + h_max > table.limit())
    throw RangeError("correlation_scan: x + h_max beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(x), a2 = I2.range(x + h_max);
  std::vector<CorrelationReport> out;
  out.reserve(static_cast<std::size_t>(h_max));
  for (std::int64_t h = 1; h <= h_max; ++h) {
    Cplx emp = 0.0;
    for (std::int64_t n = 1; n <= x; ++n)
      emp += a1[static_cast<std::size_t>(n)] *
             a2[static_cast<std::size_t>(n + h)];
    Cplx pred = predicted_m(x, h, sh, cfg, table);
    out.push_back(CorrelationReport::of(x, h, emp, pred));
  }
  return out;
}

}  // namespace ratios
