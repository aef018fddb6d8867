#pragma once

// The truncated mean value
//   M(T;X) = int_0^inf psi(t/T) I_{a,g}(s;X) I_{b,d}(1-s;X) dt,  s = 1/2+it,
// computed three ways: the band-limited coefficient double sum, the
// definition-level t-quadrature (oracle), and the conjectured four-term
// closed form.  The weight is a Gaussian psi(t) = exp(-(t-c)^2 / (2 sigma^2))
// with the transform convention psihat(xi) = int psi(u) e(-u xi) du, which
// makes the expanded double sum read T psihat((T/2pi) log(m/n)).

#include <cstdint>
#include <string>
#include <vector>

#include "ratios/arithmetic.hpp"
#include "ratios/core.hpp"
#include "ratios/dirichlet.hpp"
#include "ratios/quadrature.hpp"
#include "ratios/special.hpp"

namespace ratios {

struct TestFunction {
  double center = 1.0;
  double sigma = 0.05;

  TestFunction() = default;
  TestFunction(double c, double s) : center(c), sigma(s) { validate(); }

  void validate() const {
    if (!(center > 0.0) || !(sigma > 0.0))
      throw RangeError("TestFunction: center and sigma must be positive");
    // Mass on (-inf, 0] below 1e-15 of the total needs c/sigma >= 8.
    if (center / sigma < 8.0)
      throw RangeError("TestFunction: requires center/sigma >= 8");
  }
};

inline double psi(double t, const TestFunction& f) {
  double u = (t - f.center) / f.sigma;
  return std::exp(-0.5 * u * u);
}

// psihat(xi) = sigma sqrt(2 pi) exp(-2 pi^2 sigma^2 xi^2) e(-c xi).
inline Cplx psi_hat(double xi, const TestFunction& f) {
  double amp = f.sigma * std::sqrt(kTwoPi) *
               std::exp(-2.0 * kPi * kPi * f.sigma * f.sigma * xi * xi);
  return std::polar(amp, -kTwoPi * f.center * xi);
}

struct MeanValueReport {
  double T = 0.0;
  std::int64_t X = 0;
  double lambda = 0.0;
  Cplx direct{};
  Cplx conjectured{};
  Cplx diagonal{};
  double rel_error = 0.0;
  bool conjectured_gated = false;   // |gamma+delta| below the gate
  bool diagonal_dominated = false;  // lambda < 1 regime
  std::string gate_reason;
};

inline std::int64_t meanvalue_X(double T, double lambda) {
  return static_cast<std::int64_t>(std::llround(std::pow(T, lambda)));
}

namespace detail {

// Band half-width in log(m/n): psihat has decayed to e^{-40} of its peak.
inline double band_delta(double T, double sigma, double scale) {
  return scale * 2.0 * std::sqrt(20.0) / (T * sigma);
}

}  // namespace detail

// Band-limited double sum
//   T sum_{m,n <= X} I1(m) I2(n) / sqrt(mn) psihat((T/2pi) log(m/n)),
// restricted to |log(m/n)| <= Delta with psihat < e^{-40} peak outside.
// band_scale widens the band (self-test hook).
inline Cplx M_direct(double T, double lambda, const ShiftParams& sh,
                     const TestFunction& f, const PrimeTable& table,
                     double band_scale = 1.0) {
  if (T < 100.0) throw RangeError("M_direct: T >= 100 required");
  std::int64_t X = meanvalue_X(T, lambda);
  if (X > table.limit()) throw RangeError("M_direct: X beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(X), a2 = I2.range(X);
  std::vector<double> lg(static_cast<std::size_t>(X) + 1),
      rsqrt(static_cast<std::size_t>(X) + 1);
  for (std::int64_t n = 1; n <= X; ++n) {
    lg[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
    rsqrt[static_cast<std::size_t>(n)] =
        1.0 / std::sqrt(static_cast<double>(n));
  }
  double delta = detail::band_delta(T, f.sigma, band_scale);
  double lo = std::exp(-delta), hi = std::exp(delta);
  Cplx sum = 0.0;
  for (std::int64_t m = 1; m <= X; ++m) {
    auto mi = static_cast<std::size_t>(m);
    if (a1[mi] == Cplx(0.0)) continue;
    std::int64_t n0 = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(m) * lo - 1e-12));
    std::int64_t n1 = static_cast<std::int64_t>(
        std::floor(static_cast<double>(m) * hi + 1e-12));
    n0 = std::max<std::int64_t>(1, n0);
    n1 = std::min(X, n1);
    Cplx row = 0.0;
    for (std::int64_t n = n0; n <= n1; ++n) {
      auto ni = static_cast<std::size_t>(n);
      if (a2[ni] == Cplx(0.0)) continue;
      row += a2[ni] * rsqrt[ni] * psi_hat(T / kTwoPi * (lg[mi] - lg[ni]), f);
    }
    sum += a1[mi] * rsqrt[mi] * row;
  }
  return T * sum;
}

// Diagonal term T psihat(0) sum_{m <= X} I1(m) I2(m) / m.
inline Cplx M_diagonal(double T, std::int64_t X, const ShiftParams& sh,
                       const TestFunction& f, const PrimeTable& table) {
  if (X > table.limit()) throw RangeError("M_diagonal: X beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(X), a2 = I2.range(X);
  Cplx sum = 0.0;
  for (std::int64_t m = 1; m <= X; ++m)
    sum += a1[static_cast<std::size_t>(m)] * a2[static_cast<std::size_t>(m)] /
           static_cast<double>(m);
  return T * psi_hat(0.0, f) * sum;
}

// Definition-level oracle: adaptive t-quadrature of
//   psi(t/T) I_{a,g}(1/2+it;X) I_{b,d}(1/2-it;X)
// over the effective support of psi(t/T).
inline Cplx M_quadrature(double T, double lambda, const ShiftParams& sh,
                         const TestFunction& f, const PrimeTable& table,
                         double rel_tol = 1e-8) {
  std::int64_t X = meanvalue_X(T, lambda);
  if (X > table.limit())
    throw RangeError("M_quadrature: X beyond sieve limit");
  CoeffEvaluator I1(sh.alpha, sh.gamma, table);
  CoeffEvaluator I2(sh.beta, sh.delta, table);
  std::vector<Cplx> a1 = I1.range(X), a2 = I2.range(X);
  std::vector<double> lg(static_cast<std::size_t>(X) + 1);
  for (std::int64_t n = 1; n <= X; ++n) {
    double rs = 1.0 / std::sqrt(static_cast<double>(n));
    a1[static_cast<std::size_t>(n)] *= rs;
    a2[static_cast<std::size_t>(n)] *= rs;
    lg[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
  }
  auto integrand = [&](double t) {
    Cplx s1 = 0.0, s2 = 0.0;
    for (std::int64_t n = 1; n <= X; ++n) {
      auto ni = static_cast<std::size_t>(n);
      Cplx ph = std::polar(1.0, -t * lg[ni]);  // n^{-it}
      s1 += a1[ni] * ph;
      s2 += a2[ni] * std::conj(ph);
    }
    return psi(t / T, f) * s1 * s2;
  };
  double lo = std::max(0.0, T * (f.center - 10.0 * f.sigma));
  double hi = T * (f.center + 10.0 * f.sigma);
  // scale: T * psihat(0) is the natural size of M
  double abs_tol = rel_tol * T * f.sigma * std::sqrt(kTwoPi);
  int panels = std::max(8, static_cast<int>((hi - lo) * lg.back() / 4.0));
  return integrate(integrand, lo, hi, abs_tol, panels);
}

// Conjectured four-term closed form integrated against psi(t/T).
// Gated away from the removable singularity at gamma+delta = 0.
inline ValueWithTail M_conjectured(double T, double lambda,
                                   const ShiftParams& sh,
                                   const TestFunction& f,
                                   const TruncationConfig& cfg,
                                   const PrimeTable& table) {
  Cplx gd = sh.gamma + sh.delta;
  if (std::abs(gd) < 1e-3)
    throw RangeError(
        "M_conjectured: |gamma+delta| < 1e-3 (removable singularity gate)");
  std::int64_t X = meanvalue_X(T, lambda);
  Cplx ab = sh.alpha + sh.beta;
  double lX = std::log(static_cast<double>(X));

  Cplx K1 = rankin_selberg_B(1.0, sh, cfg, table);
  Cplx K2 = rankin_selberg_B(1.0, sh.swapped(), cfg, table);
  ShiftParams sh3(sh.alpha - gd, sh.beta, -sh.delta, sh.delta, true);
  Cplx K3 = -std::exp(-gd * lX) / gd *
            zeta(1.0 + ab - gd) * inv_zeta(1.0 + sh.alpha - sh.gamma) *
            inv_zeta(1.0 + sh.beta - sh.delta) *
            A_product(1.0, sh3, cfg, table).value;
  // The sign here is -1/(gamma+delta): this term is the residue at
  // s = -gamma-delta of the swapped (t/2pi)^{-alpha-beta-s} piece, mirroring
  // the X^{-gamma-delta} term, and only with this sign does the singularity
  // at gamma+delta = 0 cancel between the four terms (verified by the
  // continuity probe in the tests).
  ShiftParams sh4(-sh.beta, gd - sh.alpha, -sh.delta, sh.delta, true);
  Cplx K4 = -zeta(1.0 + gd - ab) * inv_zeta(1.0 - sh.alpha + sh.gamma) *
            inv_zeta(1.0 - sh.beta + sh.delta) / gd *
            A_product(1.0, sh4, cfg, table).value;

  auto integrand = [&](double t) {
    double l2pi = std::log(t / kTwoPi);
    Cplx swap_pow = std::exp(-ab * l2pi);
    Cplx term4 = swap_pow * std::exp(gd * (l2pi - lX));
    return psi(t / T, f) * (K1 + K2 * swap_pow + K3 + K4 * term4);
  };
  double lo = std::max(1.0, T * (f.center - 10.0 * f.sigma));
  double hi = T * (f.center + 10.0 * f.sigma);
  double abs_tol = 1e-9 * T * f.sigma;
  Cplx v = integrate(integrand, lo, hi, abs_tol, 16);
  return {v, abs_tol};
}

inline MeanValueReport compare_meanvalue(double T, double lambda,
                                         const ShiftParams& sh,
                                         const TestFunction& f,
                                         const TruncationConfig& cfg,
                                         const PrimeTable& table) {
  MeanValueReport rep;
  rep.T = T;
  rep.lambda = lambda;
  rep.X = meanvalue_X(T, lambda);
  rep.diagonal_dominated = lambda < 1.0;
  rep.direct = M_direct(T, lambda, sh, f, table);
  rep.diagonal = M_diagonal(T, rep.X, sh, f, table);
  try {
    rep.conjectured = M_conjectured(T, lambda, sh, f, cfg, table).value;
    double scale = std::abs(rep.conjectured);
    rep.rel_error =
        scale > 1e-300 ? std::abs(rep.direct - rep.conjectured) / scale : 0.0;
  } catch (const RangeError& e) {
    rep.conjectured_gated = true;
    rep.gate_reason = e.what();
  } catch (const PoleError& e) {
    rep.conjectured_gated = true;
    rep.gate_reason = e.what();
  }
  return rep;
}

// Mellin-chi identity of the off-diagonal analysis:
//   int_0^inf (psihat(v) + psihat(-v)) v^{A-1} dv
//     = chi(1-A) int_0^inf psi(t) t^{-A} dt,
// both sides by quadrature (left side on a log grid).  The +/- pairing is
// forced: the off-diagonal sum carries both signs of h, and with the e(-u xi)
// convention only the symmetrized transform satisfies the identity (the
// one-sided version picks up a spurious -i tan(pi A/2) component).
inline ComparisonReport mellin_chi_check(Cplx A, const TestFunction& f) {
  if (!(A.real() > 0.0 && A.real() < 1.0))
    throw RangeError("mellin_chi_check: requires 0 < Re A < 1");
  f.validate();
  double vmax = std::sqrt(23.0) / (kPi * f.sigma);
  double x1 = std::log(vmax);
  // below x0 the integrand magnitude integrates to < 1e-13 * sigma sqrt(2pi)
  double x0 = std::log(1e-13 * A.real()) / A.real();
  auto left_int = [&](double x) {
    double v = std::exp(x);
    return (psi_hat(v, f) + psi_hat(-v, f)) * std::exp(A * x);
  };
  int panels = std::max(16, static_cast<int>((x1 - x0) / 8.0));
  Cplx lhs = integrate(left_int, x0, x1, 1e-11, panels);
  auto right_int = [&](double t) {
    return psi(t, f) * std::exp(-A * std::log(t));
  };
  double lo = std::max(f.center - 10.0 * f.sigma, 1e-8);
  Cplx rhs = chi(1.0 - A) *
             integrate(right_int, lo, f.center + 10.0 * f.sigma, 1e-13, 16);
  return ComparisonReport::of("mellin_chi", lhs, rhs);
}

}  // namespace ratios
