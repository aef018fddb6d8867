#pragma once

// Shared value types and error taxonomy for the ratios library.

#include <complex>
#include <stdexcept>
#include <string>

namespace ratios {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

// Proximity to a pole of a meromorphic quantity (zeta at 1, gamma at
// non-positive integers, twisted series at w = 1 - alpha, ...).
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Argument outside a declared working range (sieve limit, |Im s| ceiling).
struct RangeError : std::out_of_range {
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// A series or product evaluated outside its convergence domain, or a
// quadrature that failed to reach its target.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// The four shifts (alpha, beta, gamma, delta).  The default bound |.| < 1/4
// keeps every Euler product and residue formula downstream inside its
// absolute-convergence domain; allow_large disables the check for internal
// shift combinations (e.g. alpha - gamma - delta) that arise in closed forms.
struct ShiftParams {
  Cplx alpha, beta, gamma, delta;

  ShiftParams(Cplx a, Cplx b, Cplx g, Cplx d, bool allow_large = false)
      : alpha(a), beta(b), gamma(g), delta(d) {
    if (!allow_large) {
      for (Cplx v : {a, b, g, d}) {
        if (std::abs(v) >= 0.25)
          throw RangeError("shift magnitude " + std::to_string(std::abs(v)) +
                           " >= 1/4");
      }
    }
  }

  double max_abs() const {
    double m = std::abs(alpha);
    m = std::max(m, std::abs(beta));
    m = std::max(m, std::abs(gamma));
    return std::max(m, std::abs(delta));
  }

  // (alpha,beta,gamma,delta) -> (-beta,-alpha,gamma,delta), the swap
  // appearing on the right-hand side of Theorem 1.
  ShiftParams swapped() const {
    return ShiftParams(-beta, -alpha, gamma, delta, true);
  }
};

// Evaluation controls for zeta/gamma/chi.
struct EvalOptions {
  double tolerance = 1e-12;   // target absolute error
  double max_imag = 1e4;      // validated working height

  EvalOptions() = default;
  explicit EvalOptions(double tol) : tolerance(tol) {
    if (tol < 1e-15 || tol > 1e-6)
      throw RangeError("EvalOptions tolerance outside [1e-15, 1e-6]");
  }
};

// Truncation policy for Euler products, Dirichlet sums and q-sums.
struct TruncationConfig {
  long long prime_cutoff = 100000;     // P
  long long series_cutoff = 1000000;   // N
  long long modulus_cutoff = 10000;    // Q
  double tail_tolerance = 1e-8;

  void validate() const {
    if (prime_cutoff < 100 || series_cutoff < 100 || modulus_cutoff < 100)
      throw RangeError("TruncationConfig cutoffs must be >= 100");
    if (tail_tolerance < 1e-14 || tail_tolerance > 1e-4)
      throw RangeError("TruncationConfig tolerance outside [1e-14, 1e-4]");
  }
};

// A value carrying an a-posteriori bound on the truncation error.
struct ValueWithTail {
  Cplx value;
  double tail_bound = 0.0;
};

// Paired (computed, predicted) values with discrepancy metadata.
struct ComparisonReport {
  std::string label;
  Cplx lhs{};
  Cplx rhs{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool rel_defined = true;

  static ComparisonReport of(std::string label, Cplx lhs, Cplx rhs) {
    ComparisonReport r;
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    double scale = std::abs(rhs);
    r.rel_defined = scale > 1e-15;
    r.rel_error = r.rel_defined ? r.abs_error / scale : 0.0;
    return r;
  }
};

inline bool is_finite(Cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace ratios
