#include <catch2/catch_amalgamated.hpp>

#include "ratios/prime_table.hpp"
#include "ratios/prime_tail.hpp"

using namespace ratios;

TEST_CASE("prime zeta at 2 matches direct prime sum") {
  PrimeTable t = build_table(10000000);
  // direct sum over p <= 1e7 plus integral-size remainder bound
  double direct = 0.0;
  for (auto it = t.primes().rbegin(); it != t.primes().rend(); ++it)
    direct += 1.0 / (static_cast<double>(*it) * static_cast<double>(*it));
  double pz = prime_zeta(Cplx(2.0)).real();
  CHECK(pz > direct);
  CHECK(pz - direct < 2.0 / 1e7);  // tail of sum 1/p^2 beyond 1e7
  CHECK(pz == Catch::Approx(0.4522474200410654985).epsilon(1e-12));
}

TEST_CASE("prime zeta rejects arguments near 1") {
  CHECK_THROWS_AS(prime_zeta(Cplx(1.01)), ConvergenceError);
}

TEST_CASE("prime tail power sum") {
  PrimeTable t = build_table(100000);
  Cplx z(2.0, 0.5);
  Cplx head = 0.0;
  for (std::uint32_t p : t.primes())
    if (p <= 1000) head += std::exp(-z * std::log(static_cast<double>(p)));
  Cplx tail = prime_tail_power_sum(z, 1000, t.primes());
  CHECK(std::abs(head + tail - prime_zeta(z)) < 1e-13);
}

TEST_CASE("expansion multiplication and eval agree") {
  PExpansion a = PExpansion::mono(2.0, Cplx(1.5)) +
                 PExpansion::mono(Cplx(0.0, 1.0), Cplx(2.25));
  PExpansion b = PExpansion::mono(-1.0, Cplx(1.75));
  PExpansion prod = a * b;
  for (double p : {2.0, 3.0, 97.0}) {
    CHECK(std::abs(prod.eval(p) - a.eval(p) * b.eval(p)) < 1e-14);
  }
}

TEST_CASE("geometric expansion is the truncated geometric series") {
  PExpansion g = PExpansion::geometric(Cplx(1.6));
  // retained orders: k = 1..4 (4 * 1.6 = 6.4 <= 6.5)
  CHECK(g.terms().size() == 4);
  double p = 5.0;
  double exact = std::pow(p, -1.6) / (1.0 - std::pow(p, -1.6));
  CHECK(std::abs(g.eval(p).real() - exact) < std::pow(p, -5 * 1.6) * 2.0);
}

TEST_CASE("log1p expansion matches log of eval") {
  PExpansion u = PExpansion::mono(0.3, Cplx(1.8)) +
                 PExpansion::mono(-0.2, Cplx(2.6));
  PExpansion lg = u.log1p();
  for (double p : {2.0, 11.0}) {
    Cplx exact = std::log(1.0 + u.eval(p));
    // truncation error ~ p^{-zmax}; loose at p = 2
    CHECK(std::abs(lg.eval(p) - exact) < 4.0 * std::pow(p, -6.5));
  }
}

TEST_CASE("expansion tail reproduces a product tail") {
  // prod_{p > P} (1 + p^{-2})  vs  exp(sum of expanded logs)
  PrimeTable t = build_table(2000000);
  long long P = 1000;
  double direct = 0.0;
  for (std::uint32_t p : t.primes())
    if (p > P)
      direct += std::log1p(1.0 / (static_cast<double>(p) * static_cast<double>(p)));
  PExpansion lg = PExpansion::mono(1.0, Cplx(2.0)).log1p();
  TailCorrection tc = expansion_tail(lg, P, t.primes());
  // direct misses p > 2e6: bounded by 1/2e6
  CHECK(std::abs(tc.log_sum.real() - direct) < 1e-6);
  CHECK(tc.bound < 1e-6);
}
