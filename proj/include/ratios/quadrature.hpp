#pragma once

// Adaptive Gauss-Kronrod (7,15) quadrature for complex-valued integrands on
// a real interval.  Bisection-based, deterministic evaluation order.

#include <cmath>
#include <functional>

#include "ratios/core.hpp"

namespace ratios {

namespace detail {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit at
// the odd-indexed abscissae.
inline constexpr double kGKx[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGKwk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGKwg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GKResult {
  Cplx integral;
  double error;
};

template <typename F>
GKResult gk15(F&& f, double a, double b) {
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  Cplx resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (i == 7) {
      Cplx v = f(c);
      resk += kGKwk[7] * v;
      resg += kGKwg[3] * v;
      break;
    }
    Cplx v1 = f(c - h * kGKx[i]);
    Cplx v2 = f(c + h * kGKx[i]);
    resk += kGKwk[i] * (v1 + v2);
    if (i % 2 == 1) resg += kGKwg[i / 2] * (v1 + v2);
  }
  return {resk * h, std::abs(resk - resg) * std::abs(h)};
}

template <typename F>
Cplx adapt(F&& f, double a, double b, double tol, int depth, int max_depth) {
  auto r = gk15(f, a, b);
  if (r.error <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b)))
    return r.integral;
  if (depth >= max_depth)
    throw ConvergenceError("adaptive quadrature: subdivision limit reached");
  double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Integrate f over [a, b] to absolute tolerance abs_tol (the per-interval
// budget is split on bisection, so the final absolute error is ~abs_tol).
template <typename F>
Cplx integrate(F&& f, double a, double b, double abs_tol,
               int initial_panels = 8, int max_depth = 48) {
  if (!(b > a)) return Cplx(0.0);
  Cplx total = 0.0;
  double w = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i)
    total += detail::adapt(f, a + i * w, a + (i + 1) * w,
                           abs_tol / initial_panels, 0, max_depth);
  return total;
}

}  // namespace ratios
