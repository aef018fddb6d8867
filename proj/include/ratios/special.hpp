#pragma once

// zeta, Gamma and the functional-equation factor chi on the complex plane.
//
// zeta uses Euler-Maclaurin with Bernoulli corrections for Re s >= 0 and the
// functional equation zeta(s) = chi(s) zeta(1-s) below that.  Gamma is the
// Lanczos approximation (g = 7, 9 terms), evaluated in log space so chi stays
// finite at heights where sin(pi s/2) and Gamma(1-s) individually overflow.

#include <array>
#include <cmath>
#include <complex>

#include "ratios/core.hpp"

namespace ratios {

namespace detail {

// Lanczos g = 7, n = 9 coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(z) for Re z >= 0.5 (principal-ish branch; only used under exp
// or in differences where a 2 pi i ambiguity is harmless).
inline Cplx log_gamma_half_plane(Cplx z) {
  z -= 1.0;
  Cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i));
  Cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

// log sin(z), stable for large |Im z|.  Branch only consistent up to 2 pi i.
inline Cplx log_sin(Cplx z) {
  if (std::abs(z.imag()) > 20.0) {
    // Factor out the growing exponential e^{-u}, u = i sgn(Im z) z, so the
    // remaining log argument is O(1).  The overall sign ambiguity is a 2 pi i
    // branch shift, harmless to consumers.
    double sgn = z.imag() > 0 ? 1.0 : -1.0;
    Cplx u = Cplx(0.0, sgn) * z;  // Re u = -|Im z| < 0
    // sin z = -sgn * e^{-u} (1 - e^{2u}) / (2i)
    return -u + std::log((1.0 - std::exp(2.0 * u)) / Cplx(0.0, -2.0 * sgn));
  }
  return std::log(std::sin(z));
}

inline Cplx log_cos(Cplx z) { return log_sin(z + kPi / 2.0); }

inline double dist_to_nonpositive_int(Cplx z) {
  double re = z.real(), im = z.imag();
  if (re > 0.5) return std::hypot(re, im);  // >= 0.5, never flagged
  double nearest = std::round(re);
  if (nearest > 0.0) nearest = 0.0;
  return std::hypot(re - nearest, im);
}

}  // namespace detail

// log Gamma(z) with reflection for Re z < 0.5.  Branch is only consistent up
// to 2 pi i; all consumers exponentiate or take real parts of differences.
inline Cplx log_gamma(Cplx z) {
  if (z.real() >= 0.5) return detail::log_gamma_half_plane(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(Cplx(kPi)) - detail::log_sin(kPi * z) -
         detail::log_gamma_half_plane(1.0 - z);
}

inline Cplx gamma_fn(Cplx s) {
  if (detail::dist_to_nonpositive_int(s) < 1e-12)
    throw PoleError("gamma_fn: s within 1e-12 of a non-positive integer");
  return std::exp(log_gamma(s));
}

// chi(s) from zeta(s) = chi(s) zeta(1-s).  Two equivalent closed forms are
// used so that neither sin nor Gamma is evaluated at a singularity:
//   Re s <= 0.5:  chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s)
//   Re s >  0.5:  chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s/2))
// Genuine poles of chi sit at odd integers s >= 1.
inline Cplx chi(Cplx s) {
  if (s.real() > 0.5) {
    if (std::abs(s.imag()) < 1.0) {
      double nearest_odd = 2.0 * std::round((s.real() - 1.0) / 2.0) + 1.0;
      if (nearest_odd >= 1.0 &&
          std::hypot(s.real() - nearest_odd, s.imag()) < 1e-12)
        throw PoleError("chi: s within pole tolerance of an odd integer");
    }
    return std::exp(s * std::log(2.0 * kPi) - std::log(2.0) -
                    log_gamma(s) - detail::log_cos(kPi * s / 2.0));
  }
  Cplx sn = std::sin(kPi * s / 2.0);
  if (std::abs(sn) < 1e-300) return Cplx(0.0);  // trivial zero (s even <= 0)
  return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                  detail::log_sin(kPi * s / 2.0) +
                  log_gamma(1.0 - s));
}

namespace detail {

// B_{2k} / (2k)! for the Euler-Maclaurin correction, k = 1..15.
inline constexpr std::array<double, 15> kBernoulliOverFact = {
    8.3333333333333333e-02,  -1.3888888888888889e-03,
    3.3068783068783069e-05,  -8.2671957671957672e-07,
    2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13,
    8.5860620562778446e-15,  -2.1748686985580619e-16,
    5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23,
    2.2679524523376831e-24};

inline Cplx zeta_euler_maclaurin(Cplx s) {
  double at = std::abs(s.imag());
  long long N = std::max<long long>(25, static_cast<long long>(1.3 * at) + 1);
  Cplx sum = 0.0;
  for (long long n = N - 1; n >= 1; --n)  // ascending magnitude
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  double lnN = std::log(static_cast<double>(N));
  Cplx Ns = std::exp(-s * lnN);  // N^{-s}
  sum += Ns * static_cast<double>(N) / (s - 1.0);
  sum += 0.5 * Ns;
  // correction terms: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
  Cplx rising = s;          // s(s+1)...(s+2k-2), starts at k=1 with just s
  double Npow = 1.0 / N;    // N^{1-2k} accumulates
  for (std::size_t k = 0; k < kBernoulliOverFact.size(); ++k) {
    Cplx term = kBernoulliOverFact[k] * rising * Ns * Npow;
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    rising *= (s + static_cast<double>(2 * k + 1)) *
              (s + static_cast<double>(2 * k + 2));
    Npow /= static_cast<double>(N) * static_cast<double>(N);
  }
  return sum;
}

}  // namespace detail

inline Cplx zeta(Cplx s, const EvalOptions& opts = {}) {
  if (std::abs(s - 1.0) < 1e-12) throw PoleError("zeta: pole at s = 1");
  if (std::abs(s.imag()) > opts.max_imag)
    throw RangeError("zeta: |Im s| exceeds validated range");
  if (s.real() < 0.0) return chi(s) * detail::zeta_euler_maclaurin(1.0 - s);
  return detail::zeta_euler_maclaurin(s);
}

// 1/zeta(s); the limit value 0 at the pole s = 1, so degenerate zero-shift
// predictions evaluate cleanly.
inline Cplx inv_zeta(Cplx s, const EvalOptions& opts = {}) {
  if (std::abs(s - 1.0) < 1e-12) return Cplx(0.0);
  Cplx z = zeta(s, opts);
  if (std::abs(z) < 1e-10)
    throw PoleError("inv_zeta: s within tolerance of a zeta zero");
  return 1.0 / z;
}

}  // namespace ratios
