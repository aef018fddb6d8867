#pragma once

// Tail machinery for absolutely convergent Euler products.
//
// A local factor L(p) built from powers p^{-z} is handled exactly for p <= P
// and via log L(p) = sum_k c_k p^{-z_k} for p > P, where the monomial
// expansion is truncated at Re z > zmax.  Each monomial tail
// sum_{p > P} p^{-z} is the prime zeta function minus a finite sum, and the
// prime zeta function comes from log zeta via Moebius inversion:
//   P(z) = sum_{k >= 1} mu(k)/k * log zeta(k z),  Re z > 1.

#include <cmath>
#include <cstdint>
#include <vector>

#include "ratios/core.hpp"
#include "ratios/special.hpp"

namespace ratios {

// Truncated sum of monomials c * p^{-z}, closed under multiplication.
class PExpansion {
 public:
  struct Term {
    Cplx coeff;
    Cplx z;  // exponent of p^{-z}
  };

  PExpansion() = default;
  explicit PExpansion(double zmax) : zmax_(zmax) {}

  static PExpansion mono(Cplx coeff, Cplx z, double zmax = 6.5) {
    PExpansion e(zmax);
    e.push(coeff, z);
    e.normalize();
    return e;
  }

  // sum_{k >= 1} p^{-k z}, i.e. p^{-z} / (1 - p^{-z}) truncated.
  static PExpansion geometric(Cplx z, double zmax = 6.5) {
    PExpansion e(zmax);
    for (int k = 1; k * z.real() <= zmax; ++k)
      e.push(1.0, static_cast<double>(k) * z);
    e.normalize();
    return e;
  }

  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  double zmax() const { return zmax_; }

  PExpansion& operator+=(const PExpansion& o) {
    for (const auto& t : o.terms_) push(t.coeff, t.z);
    normalize();
    return *this;
  }

  PExpansion& operator*=(Cplx c) {
    for (auto& t : terms_) t.coeff *= c;
    return *this;
  }

  friend PExpansion operator+(PExpansion a, const PExpansion& b) {
    a += b;
    return a;
  }

  friend PExpansion operator*(const PExpansion& a, const PExpansion& b) {
    PExpansion out(a.zmax_);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) out.push(ta.coeff * tb.coeff, ta.z + tb.z);
    out.normalize();
    return out;
  }

  // log(1 + u) for u = *this (requires min Re z > 0).
  PExpansion log1p() const {
    PExpansion out(zmax_);
    PExpansion pw = *this;
    double sign = 1.0;
    for (int k = 1; !pw.empty(); ++k) {
      PExpansion contrib = pw;
      contrib *= Cplx(sign / k);
      out += contrib;
      pw = pw * (*this);
      sign = -sign;
    }
    return out;
  }

  // Numeric evaluation at a concrete prime (oracle use).
  Cplx eval(double p) const {
    Cplx s = 0.0;
    double lp = std::log(p);
    for (const auto& t : terms_) s += t.coeff * std::exp(-t.z * lp);
    return s;
  }

  double min_re_z() const {
    double m = 1e300;
    for (const auto& t : terms_) m = std::min(m, t.z.real());
    return m;
  }

 private:
  void push(Cplx coeff, Cplx z) {
    if (z.real() > zmax_) return;
    terms_.push_back({coeff, z});
  }

  void normalize() {
    std::vector<Term> merged;
    for (const auto& t : terms_) {
      bool found = false;
      for (auto& m : merged) {
        if (std::abs(m.z - t.z) < 1e-9) {
          m.coeff += t.coeff;
          found = true;
          break;
        }
      }
      if (!found) merged.push_back(t);
    }
    terms_.clear();
    for (const auto& m : merged)
      if (std::abs(m.coeff) > 1e-13) terms_.push_back(m);
  }

  std::vector<Term> terms_;
  double zmax_ = 6.5;
};

// Prime zeta P(z) = sum_p p^{-z}, Re z > 1.
inline Cplx prime_zeta(Cplx z, const EvalOptions& opts = {}) {
  if (z.real() <= 1.02)
    throw ConvergenceError("prime_zeta: Re z too close to 1 (got " +
                           std::to_string(z.real()) + ")");
  auto mu_small = [](int n) {
    int sign = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
  };
  Cplx sum = 0.0;
  for (int k = 1; k <= 64; ++k) {
    int mu = mu_small(k);
    if (mu == 0) continue;
    Cplx kz = static_cast<double>(k) * z;
    // stay inside zeta's validated height; the dropped orders are 2^{-k Re z}
    if (k > 1 && std::abs(kz.imag()) > 9000.0) break;
    if (std::pow(2.0, -kz.real()) < 1e-19 * (1.0 + std::abs(sum))) break;
    Cplx lz = std::log(zeta(kz, opts));
    sum += static_cast<double>(mu) / static_cast<double>(k) * lz;
  }
  return sum;
}

// sum_{p > P} p^{-z} over primes, via prime zeta minus the finite head.
inline Cplx prime_tail_power_sum(Cplx z, long long P,
                                 const std::vector<std::uint32_t>& primes,
                                 const EvalOptions& opts = {}) {
  Cplx head = 0.0;
  for (std::uint32_t p : primes) {
    if (static_cast<long long>(p) > P) break;
    head += std::exp(-z * std::log(static_cast<double>(p)));
  }
  return prime_zeta(z, opts) - head;
}

// sum_{p > P} of an expansion of log L(p); returns the correction together
// with a crude bound from the highest-order retained band.
struct TailCorrection {
  Cplx log_sum;
  double bound;  // residual estimate from truncated orders
};

inline TailCorrection expansion_tail(const PExpansion& e, long long P,
                                     const std::vector<std::uint32_t>& primes,
                                     const EvalOptions& opts = {}) {
  TailCorrection out{0.0, 0.0};
  double top_band = 0.0;
  for (const auto& t : e.terms()) {
    Cplx s = prime_tail_power_sum(t.z, P, primes, opts);
    out.log_sum += t.coeff * s;
    if (t.z.real() > e.zmax() - 1.0) top_band += std::abs(t.coeff * s);
  }
  // Orders beyond zmax shrink by ~P per unit of Re z; the retained top band
  // dominates what was dropped.
  out.bound = top_band / static_cast<double>(P) + 1e-15;
  return out;
}

}  // namespace ratios
