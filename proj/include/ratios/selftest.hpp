#pragma once

// Named property suites, each checking one identity or invariant of the
// library end to end and reporting its worst residual against a threshold.
// Randomized suites draw from a caller-supplied seed so a run is fully
// reproducible; a tolerance override (if positive) replaces every per-suite
// default, which deliberately breaks the suites when set unattainably small.

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratios/arithmetic.hpp"
#include "ratios/core.hpp"
#include "ratios/dirichlet.hpp"
#include "ratios/prime_table.hpp"
#include "ratios/report_io.hpp"
#include "ratios/special.hpp"

namespace ratios {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;      // worst residual observed
  double threshold = 0.0;  // residual bound applied
  std::string detail;      // what was measured
};

namespace detail {

inline SuiteResult make_result(std::string name, double worst,
                               double default_threshold, double tol_override,
                               std::string detail_str) {
  SuiteResult r;
  r.name = std::move(name);
  r.threshold = tol_override > 0.0 ? tol_override : default_threshold;
  r.worst = worst;
  r.pass = worst < r.threshold;
  r.detail = std::move(detail_str);
  return r;
}

// 200-point grid in the critical strip's neighborhood, kept off the real
// axis (no zeta pole, no chi pole/zero at integers).
inline std::vector<Cplx> strip_grid() {
  std::vector<Cplx> g;
  for (int i = 0; i < 20; ++i) {
    double re = -1.0 + 3.0 * i / 19.0;
    for (int k = 0; k < 10; ++k) {
      double im = (11.0 + 9.0 * k) * (k % 2 ? -1.0 : 1.0);
      g.emplace_back(re, im);
    }
  }
  return g;
}

inline Cplx rand_shift(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  double re = u(rng);
  double im = u(rng);
  return Cplx(re, im);
}

}  // namespace detail

// zeta(s) = chi(s) zeta(1-s) across the strip.
inline SuiteResult suite_functional_equation(double tol_override = 0.0) {
  double worst = 0.0;
  for (Cplx s : detail::strip_grid()) {
    Cplx lhs = zeta(s);
    Cplx rhs = chi(s) * zeta(1.0 - s);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  return detail::make_result("functional_equation", worst, 1e-10, tol_override,
                             "zeta(s) vs chi(s) zeta(1-s), 200-point grid");
}

// chi(s) chi(1-s) = 1.
inline SuiteResult suite_chi_reflection(double tol_override = 0.0) {
  double worst = 0.0;
  for (Cplx s : detail::strip_grid())
    worst = std::max(worst, std::abs(chi(s) * chi(1.0 - s) - 1.0));
  return detail::make_result("chi_reflection", worst, 1e-10, tol_override,
                             "chi(s) chi(1-s) = 1, 200-point grid");
}

// zeta against the defining series with an Euler-Maclaurin capped tail.
inline SuiteResult suite_zeta_series(double tol_override = 0.0) {
  const std::int64_t N = 100000;
  double worst = 0.0;
  for (Cplx s : {Cplx(2.0), Cplx(2.5), Cplx(3.0, 1.0), Cplx(2.0, 3.0),
                 Cplx(4.0, -2.0)}) {
    Cplx sum = 0.0;
    for (std::int64_t n = 1; n <= N; ++n)
      sum += std::exp(-s * std::log(static_cast<double>(n)));
    double Nd = static_cast<double>(N);
    Cplx tail = std::exp((1.0 - s) * std::log(Nd)) / (s - 1.0) -
                0.5 * std::exp(-s * std::log(Nd)) +
                s * std::exp(-(s + 1.0) * std::log(Nd)) / 12.0;
    worst = std::max(worst, std::abs(zeta(s) - (sum + tail)));
  }
  return detail::make_result("zeta_series", worst, 1e-10, tol_override,
                             "zeta vs partial sum + corrected tail, Re s >= 2");
}

// (A-XC)(B-XD) + XCD(AB-X) = AB - XBC - XAD + XABCD on random tuples.
inline SuiteResult suite_local_identity(std::uint64_t seed,
                                        double tol_override = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Cplx X(u(rng), u(rng)), A(u(rng), u(rng)), B(u(rng), u(rng)),
        C(u(rng), u(rng)), D(u(rng), u(rng));
    worst = std::max(worst, local_identity_check(X, A, B, C, D).residual);
  }
  return detail::make_result("local_identity", worst, 1e-11, tol_override,
                             "closing polynomial identity, 1000 random tuples");
}

// I_{a,g}(n) = n^r I_{a+r,g+r}(n).
inline SuiteResult suite_homogeneity(const PrimeTable& table,
                                     std::uint64_t seed,
                                     double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 1);
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    Cplx a = detail::rand_shift(rng, 0.1), g = detail::rand_shift(rng, 0.1),
         r = detail::rand_shift(rng, 0.1);
    CoeffEvaluator I0(a, g, table), Ir(a + r, g + r, table);
    for (std::int64_t n = 1; n <= 10000; n += 37) {
      Cplx lhs = I0(n);
      Cplx rhs = std::exp(r * std::log(static_cast<double>(n))) * Ir(n);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
  }
  return detail::make_result("homogeneity", worst, 1e-12, tol_override,
                             "I_{a,g}(n) = n^r I_{a+r,g+r}(n), n <= 1e4");
}

// -d/d(alpha) I_{alpha,0}(n) at alpha = 0 is Lambda(n), by finite difference.
inline SuiteResult suite_von_mangoldt(const PrimeTable& table,
                                      double tol_override = 0.0) {
  const double eps = 1e-6;
  CoeffEvaluator Ie(Cplx(eps), Cplx(0.0), table);
  CoeffEvaluator I0(Cplx(0.0), Cplx(0.0), table);
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    double fd = -((Ie(n) - I0(n)) / eps).real();
    worst = std::max(worst, std::abs(fd - von_mangoldt(n, table)));
  }
  return detail::make_result("von_mangoldt_difference", worst, 1e-4,
                             tol_override,
                             "finite difference of I recovers Lambda(n)");
}

// Prime-power closed form vs the literal divisor convolution, n <= 1e5.
inline SuiteResult suite_coeff_oracle(const PrimeTable& table,
                                      std::uint64_t seed,
                                      double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 2);
  Cplx a = detail::rand_shift(rng, 0.2), g = detail::rand_shift(rng, 0.2);
  CoeffEvaluator I(a, g, table);
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 100000; ++n) {
    Cplx direct = coeff_I_direct(n, a, g, table);
    worst = std::max(worst,
                     std::abs(I(n) - direct) / (1.0 + std::abs(direct)));
  }
  return detail::make_result("coeff_oracle", worst, 1e-12, tol_override,
                             "multiplicative I vs divisor sum, n <= 1e5");
}

// Multiplicative F vs the defining double divisor sum, q <= 1e4.
inline SuiteResult suite_F_oracle(const PrimeTable& table, std::uint64_t seed,
                                  double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 3);
  Cplx a = detail::rand_shift(rng, 0.2), g = detail::rand_shift(rng, 0.2);
  double worst = 0.0;
  for (std::int64_t q = 1; q <= 10000; ++q) {
    Cplx direct = F_direct(q, a, g, table);
    worst = std::max(
        worst, std::abs(F(q, a, g, table) - direct) / (1.0 + std::abs(direct)));
  }
  return detail::make_result("F_oracle", worst, 1e-12, tol_override,
                             "closed-form F vs double divisor sum, q <= 1e4");
}

// F(q1 q2) = F(q1) F(q2) on coprime moduli.
inline SuiteResult suite_F_multiplicativity(const PrimeTable& table,
                                            std::uint64_t seed,
                                            double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 4);
  std::uniform_int_distribution<std::int64_t> qd(1, 100);
  Cplx a = detail::rand_shift(rng, 0.15), g = detail::rand_shift(rng, 0.15);
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    std::int64_t q1 = qd(rng), q2 = qd(rng);
    if (std::gcd(q1, q2) != 1) continue;
    Cplx lhs = F(q1 * q2, a, g, table);
    Cplx rhs = F(q1, a, g, table) * F(q2, a, g, table);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    ++done;
  }
  return detail::make_result("F_multiplicativity", worst, 1e-12, tol_override,
                             "F(q1 q2) = F(q1) F(q2), coprime q <= 100");
}

// r_{q1 q2}(h) = r_{q1}(h) r_{q2}(h) on coprime moduli (exact integers).
inline SuiteResult suite_ramanujan_multiplicativity(const PrimeTable& table,
                                                    std::uint64_t seed,
                                                    double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 5);
  std::uniform_int_distribution<std::int64_t> qd(1, 1000), hd(1, 100);
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    std::int64_t q1 = qd(rng), q2 = qd(rng), h = hd(rng);
    if (std::gcd(q1, q2) != 1) continue;
    std::int64_t lhs = ramanujan_sum(q1 * q2, h, table);
    std::int64_t rhs = ramanujan_sum(q1, h, table) * ramanujan_sum(q2, h, table);
    worst = std::max(worst, static_cast<double>(std::abs(lhs - rhs)));
    ++done;
  }
  return detail::make_result("ramanujan_multiplicativity", worst, 0.5,
                             tol_override,
                             "r_q(h) multiplicative in q, 200 coprime pairs");
}

// Convolution lemma: with a = b * c, b(m) = m^{-alpha}, c(m) = mu(m)m^{-gamma},
//   sum_m a(mr) m^{-w}
//     = sum_{r = r1 r2} [sum_m b(m r1) m^{-w}] [sum_{(m,r1)=1} c(m r2) m^{-w}],
// all sums truncated at 1e5, w = 2.5, r <= 100.
inline SuiteResult suite_convolution_lemma(const PrimeTable& table,
                                           std::uint64_t seed,
                                           double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 6);
  Cplx a = detail::rand_shift(rng, 0.1), g = detail::rand_shift(rng, 0.1);
  const Cplx w(2.5);
  const std::int64_t N = 100000;
  std::vector<int> mu(static_cast<std::size_t>(N) + 1);
  std::vector<Cplx> cm(static_cast<std::size_t>(N) + 1);
  Cplx bsum = 0.0;
  for (std::int64_t m = 1; m <= N; ++m) {
    mu[static_cast<std::size_t>(m)] = mobius(m, table);
    double lm = std::log(static_cast<double>(m));
    cm[static_cast<std::size_t>(m)] =
        static_cast<double>(mu[static_cast<std::size_t>(m)]) *
        std::exp(-(g + w) * lm);
    bsum += std::exp(-(a + w) * lm);
  }
  double worst = 0.0;
  for (std::int64_t r = 1; r <= 100; ++r) {
    Cplx lhs = twisted_series_direct(w, r, a, g, N, table);
    Cplx rhs = 0.0;
    for (std::int64_t r1 : table.divisors(r)) {
      std::int64_t r2 = r / r1;
      int mur2 = mobius(r2, table);
      Cplx bpart =
          std::exp(-a * std::log(static_cast<double>(r1))) * bsum;
      Cplx cpart = 0.0;
      if (mur2 != 0) {
        for (std::int64_t m = 1; m <= N; ++m) {
          if (std::gcd(m, r1 * r2) != 1) continue;
          cpart += cm[static_cast<std::size_t>(m)];
        }
        cpart *= static_cast<double>(mur2) *
                 std::exp(-g * std::log(static_cast<double>(r2)));
      }
      rhs += bpart * cpart;
    }
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  return detail::make_result("convolution_lemma", worst, 1e-5, tol_override,
                             "twisted sum vs convolution split, r <= 100");
}

// sum_{h <= H} r_q(h) h^{-A} -> q^{1-A} Phi(1-A,q) zeta(A).
inline SuiteResult suite_hsum_evaluation(const PrimeTable& table,
                                         double tol_override = 0.0) {
  const std::int64_t H = 200000;
  double worst = 0.0;
  for (Cplx A : {Cplx(2.0), Cplx(2.0, 0.5)}) {
    std::vector<Cplx> pw(static_cast<std::size_t>(H) + 1);
    for (std::int64_t h = 1; h <= H; ++h)
      pw[static_cast<std::size_t>(h)] =
          std::exp(-A * std::log(static_cast<double>(h)));
    for (std::int64_t q = 1; q <= 50; ++q) {
      // r_q(h) depends only on gcd(h,q); precompute per divisor
      std::vector<std::int64_t> divs = table.divisors(q);
      std::vector<std::pair<std::int64_t, double>> rq;
      for (std::int64_t gdiv : divs) {
        std::int64_t v = 0;
        for (std::int64_t d : table.divisors(gdiv))
          v += static_cast<std::int64_t>(mobius(q / d, table)) * d;
        rq.emplace_back(gdiv, static_cast<double>(v));
      }
      Cplx lhs = 0.0;
      for (std::int64_t h = 1; h <= H; ++h) {
        std::int64_t gg = std::gcd(h, q);
        double val = 0.0;
        for (const auto& [gdiv, v] : rq)
          if (gdiv == gg) {
            val = v;
            break;
          }
        lhs += val * pw[static_cast<std::size_t>(h)];
      }
      Cplx rhs = std::exp((1.0 - A) * std::log(static_cast<double>(q))) *
                 phi_factor(1.0 - A, q, table) * zeta(A);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return detail::make_result("hsum_evaluation", worst, 5e-4, tol_override,
                             "sum r_q(h) h^{-A} vs q^{1-A} Phi(1-A,q) zeta(A)");
}

// Euler-product closed form of the Rankin-Selberg series vs its direct sum.
inline SuiteResult suite_rankin_selberg_duality(const PrimeTable& table,
                                                std::uint64_t seed,
                                                double tol_override = 0.0) {
  if (table.limit() < 1000000)
    throw RangeError("suite_rankin_selberg_duality: table limit < 1e6");
  std::mt19937_64 rng(seed + 7);
  TruncationConfig cfg;
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    ShiftParams sh(detail::rand_shift(rng, 0.07), detail::rand_shift(rng, 0.07),
                   detail::rand_shift(rng, 0.07),
                   detail::rand_shift(rng, 0.07));
    Cplx closed = rankin_selberg_B(2.0, sh, cfg, table);
    Cplx direct = B_direct(2.0, sh, 1000000, table).value;
    worst = std::max(worst, std::abs(closed - direct) / std::abs(closed));
  }
  return detail::make_result("rankin_selberg_duality", worst, 1e-6,
                             tol_override,
                             "closed form vs direct sum at s = 2, N = 1e6");
}

// Singular-series Euler product vs the literal q-sum.
inline SuiteResult suite_singular_duality(const PrimeTable& table,
                                          std::uint64_t seed,
                                          double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 8);
  std::uniform_int_distribution<std::int64_t> hd(1, 50);
  TruncationConfig cfg;
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    ShiftParams sh(detail::rand_shift(rng, 0.08), detail::rand_shift(rng, 0.08),
                   detail::rand_shift(rng, 0.08),
                   detail::rand_shift(rng, 0.08));
    std::int64_t h = hd(rng);
    Cplx prod = singular_series(h, sh, cfg, table).value;
    Cplx qsum = singular_series_qsum(h, sh, 30000, table);
    worst = std::max(worst, std::abs(prod - qsum) / (1.0 + std::abs(prod)));
  }
  return detail::make_result("singular_duality", worst, 5e-3, tol_override,
                             "Euler product vs q-sum to 3e4, 20 draws");
}

// Residue-reduced q-sum side equals the swapped closed form at s = 0.
inline SuiteResult suite_theorem1_s0(const PrimeTable& table,
                                     std::uint64_t seed,
                                     double tol_override = 0.0) {
  std::mt19937_64 rng(seed + 9);
  TruncationConfig cfg;
  double worst = 0.0;
  int done = 0;
  while (done < 10) {
    ShiftParams sh(detail::rand_shift(rng, 0.1), detail::rand_shift(rng, 0.1),
                   detail::rand_shift(rng, 0.1), detail::rand_shift(rng, 0.1));
    if (std::abs(sh.gamma - sh.alpha) < 1e-3 ||
        std::abs(sh.delta - sh.beta) < 1e-3)
      continue;
    auto rep = theorem1_check(0.0, sh, cfg, table);
    worst = std::max(worst, rep.vs_stated.rel_error);
    ++done;
  }
  return detail::make_result("theorem1_s0", worst, 1e-8, tol_override,
                             "q-sum side vs swapped closed form, 10 draws");
}

// Report serialization is byte-stable for a fixed table.
inline SuiteResult suite_report_determinism(double tol_override = 0.0) {
  auto build = [] {
    ReportTable t;
    t.add_meta("suite", std::string("determinism"));
    t.add_meta("value", 1.0 / 3.0);
    t.columns = {"name", "z", "x", "n", "flag"};
    t.rows.push_back({std::string("row0"), Cplx(0.1, -0.3),
                      0.12345678901234567, static_cast<long long>(42), true});
    t.rows.push_back({std::string("row1"), Cplx(-2.0, 1e-12), 1e300,
                      static_cast<long long>(-7), false});
    std::ostringstream csv, json;
    write_csv(csv, t);
    write_json(json, t);
    return csv.str() + "\x1f" + json.str();
  };
  double worst = build() == build() ? 0.0 : 1.0;
  return detail::make_result("report_determinism", worst, 0.5, tol_override,
                             "identical bytes across repeated serialization");
}

// Full battery.  The table must cover 1e6.
inline std::vector<SuiteResult> run_selftest(const PrimeTable& table,
                                             std::uint64_t seed,
                                             double tol_override = 0.0) {
  std::vector<SuiteResult> out;
  out.push_back(suite_functional_equation(tol_override));
  out.push_back(suite_chi_reflection(tol_override));
  out.push_back(suite_zeta_series(tol_override));
  out.push_back(suite_local_identity(seed, tol_override));
  out.push_back(suite_homogeneity(table, seed, tol_override));
  out.push_back(suite_von_mangoldt(table, tol_override));
  out.push_back(suite_coeff_oracle(table, seed, tol_override));
  out.push_back(suite_F_oracle(table, seed, tol_override));
  out.push_back(suite_F_multiplicativity(table, seed, tol_override));
  out.push_back(suite_ramanujan_multiplicativity(table, seed, tol_override));
  out.push_back(suite_convolution_lemma(table, seed, tol_override));
  out.push_back(suite_hsum_evaluation(table, tol_override));
  out.push_back(suite_rankin_selberg_duality(table, seed, tol_override));
  out.push_back(suite_singular_duality(table, seed, tol_override));
  out.push_back(suite_theorem1_s0(table, seed, tol_override));
  out.push_back(suite_report_determinism(tol_override));
  return out;
}

inline bool all_pass(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace ratios
