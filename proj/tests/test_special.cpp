#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ratios/special.hpp"

using namespace ratios;
using Catch::Approx;

TEST_CASE("gamma at classical points") {
  CHECK(std::abs(gamma_fn(Cplx(1.0)) - 1.0) < 1e-13);
  CHECK(std::abs(gamma_fn(Cplx(0.5)) - std::sqrt(kPi)) < 1e-13);
  CHECK(std::abs(gamma_fn(Cplx(5.0)) - 24.0) < 1e-11);
  CHECK(std::abs(gamma_fn(Cplx(-0.5)) - (-2.0 * std::sqrt(kPi))) < 1e-12);
}

TEST_CASE("gamma recurrence and pole") {
  Cplx z(0.3, 2.0);
  CHECK(std::abs(gamma_fn(z + 1.0) - z * gamma_fn(z)) <
        1e-12 * std::abs(gamma_fn(z + 1.0)));
  CHECK_THROWS_AS(gamma_fn(Cplx(0.0)), PoleError);
  CHECK_THROWS_AS(gamma_fn(Cplx(-3.0, 1e-14)), PoleError);
}

TEST_CASE("gamma twelve digits at moderate height") {
  // |Gamma(1/2 + 30i)| = sqrt(pi / cosh(30 pi))
  Cplx g = gamma_fn(Cplx(0.5, 30.0));
  double expect = std::sqrt(kPi / std::cosh(30.0 * kPi));
  CHECK(std::abs(g) == Approx(expect).epsilon(1e-12));
}

TEST_CASE("zeta classical values") {
  CHECK(std::abs(zeta(Cplx(2.0)) - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(zeta(Cplx(0.0)) - (-0.5)) < 1e-12);
  CHECK(std::abs(zeta(Cplx(-1.0)) - (-1.0 / 12.0)) < 1e-12);
  CHECK(std::abs(zeta(Cplx(4.0)) - kPi * kPi * kPi * kPi / 90.0) < 1e-12);
  CHECK_THROWS_AS(zeta(Cplx(1.0, 1e-14)), PoleError);
  CHECK_THROWS_AS(zeta(Cplx(0.5, 2e4)), RangeError);
}

TEST_CASE("zeta matches direct Dirichlet series for Re s >= 2") {
  for (Cplx s : {Cplx(2.0, 0.0), Cplx(2.5, 10.0), Cplx(3.0, -4.0)}) {
    Cplx direct = 0.0;
    for (int n = 1000000; n >= 1; --n)
      direct += std::exp(-s * std::log(static_cast<double>(n)));
    CHECK(std::abs(zeta(s) - direct) < 2e-6);  // truncation tail bound
  }
}

TEST_CASE("chi at s = 1/2 is 1") {
  CHECK(std::abs(chi(Cplx(0.5)) - 1.0) < 1e-12);
}

TEST_CASE("chi functional equation consistency at s = 2") {
  CHECK(std::abs(chi(Cplx(2.0)) * zeta(Cplx(-1.0)) - zeta(Cplx(2.0))) <
        1e-12);
}

TEST_CASE("chi pole at odd integers") {
  CHECK_THROWS_AS(chi(Cplx(1.0)), PoleError);
  CHECK_THROWS_AS(chi(Cplx(3.0)), PoleError);
}

TEST_CASE("functional equation on a grid") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(-1.0, 2.0), im(-100.0, 100.0);
  for (int i = 0; i < 60; ++i) {
    Cplx s(re(rng), im(rng));
    if (std::abs(s - 1.0) < 0.05 || std::abs(s) < 0.05) continue;
    Cplx z = zeta(s), fe = chi(s) * zeta(1.0 - s);
    CHECK(std::abs(z - fe) / (1.0 + std::abs(z)) < 1e-10);
  }
}

TEST_CASE("chi reflection chi(s) chi(1-s) = 1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-1.0, 2.0), im(-100.0, 100.0);
  for (int i = 0; i < 60; ++i) {
    Cplx s(re(rng), im(rng));
    if (std::abs(s.imag()) < 0.3) continue;  // avoid real-axis poles/zeros
    CHECK(std::abs(chi(s) * chi(1.0 - s) - 1.0) < 1e-10);
  }
}

TEST_CASE("inv_zeta basics") {
  CHECK(inv_zeta(Cplx(1.0)) == Cplx(0.0));
  CHECK(std::abs(inv_zeta(Cplx(2.0)) - 6.0 / (kPi * kPi)) < 1e-12);
  CHECK_THROWS_AS(inv_zeta(Cplx(0.5, 14.134725141734694)), PoleError);
}

TEST_CASE("inv_zeta(3) equals the Moebius series") {
  // sum mu(n)/n^3 truncated; independent trial-division mobius
  auto mu = [](std::int64_t n) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return n > 1 ? -sign : sign;
  };
  double series = 0.0;
  for (std::int64_t n = 1; n <= 100000; ++n)
    series += mu(n) / std::pow(static_cast<double>(n), 3.0);
  CHECK(std::abs(inv_zeta(Cplx(3.0)) - series) < 1e-9);
}

// Locate the first critical zero via sign changes of the rotated zeta
// Z(t) = e^{i theta(t)} zeta(1/2 + it), theta from log Gamma.
static double riemann_siegel_theta(double t) {
  Cplx lg = log_gamma(Cplx(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

static double hardy_Z(double t) {
  Cplx v = std::exp(Cplx(0.0, riemann_siegel_theta(t))) * zeta(Cplx(0.5, t));
  REQUIRE(std::abs(v.imag()) < 1e-9 * (1.0 + std::abs(v)));
  return v.real();
}

TEST_CASE("first zero located by sign change, |zeta| small there") {
  double a = 14.0, b = 14.2;
  REQUIRE(hardy_Z(a) * hardy_Z(b) < 0.0);
  for (int i = 0; i < 60; ++i) {
    double m = 0.5 * (a + b);
    (hardy_Z(a) * hardy_Z(m) <= 0.0 ? b : a) = m;
  }
  double rho = 0.5 * (a + b);
  CHECK(std::abs(zeta(Cplx(0.5, rho))) < 1e-5);
}
