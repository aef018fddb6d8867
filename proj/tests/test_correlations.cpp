#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "ratios/correlations.hpp"

using namespace ratios;

namespace {
const PrimeTable& table() {
  static PrimeTable t = build_table(2000000);
  return t;
}
}  // namespace

TEST_CASE("correlation sum matches a brute-force divisor-sum evaluation") {
  ShiftParams sh(Cplx(0.1, 0.02), Cplx(-0.05), Cplx(0.05, 0.01), Cplx(0.08));
  std::int64_t x = 200, h = 3;
  Cplx brute = 0.0;
  for (std::int64_t n = 1; n <= x; ++n)
    brute += coeff_I_direct(n, sh.alpha, sh.gamma, table()) *
             coeff_I_direct(n + h, sh.beta, sh.delta, table());
  CHECK(std::abs(correlation_sum(x, h, sh, table()) - brute) < 1e-11);
}

TEST_CASE("zero shifts: both sides vanish") {
  ShiftParams sh(0.0, 0.0, 0.0, 0.0);
  CHECK(std::abs(correlation_sum(1000, 2, sh, table())) < 1e-15);
  CHECK(predicted_m(1000, 2, sh, {}, table()) == Cplx(0.0));
}

TEST_CASE("prediction prefactor and growth") {
  // doubling x scales m(x,h) by 2^{1-a-b}
  ShiftParams sh(Cplx(0.1), Cplx(0.1), Cplx(0.2), Cplx(0.2));
  Cplx m1 = predicted_m(100000, 2, sh, {}, table());
  Cplx m2 = predicted_m(200000, 2, sh, {}, table());
  CHECK(std::abs(m2 / m1 - std::pow(2.0, 0.8)) < 1e-9);
}

TEST_CASE("scan equals pointwise evaluation") {
  ShiftParams sh(Cplx(0.08), Cplx(-0.03), Cplx(0.06), Cplx(0.04));
  auto scan = correlation_scan(5000, 10, sh, {}, table());
  REQUIRE(scan.size() == 10);
  for (const auto& r : scan) {
    CHECK(std::abs(r.empirical - correlation_sum(5000, r.h, sh, table())) <
          1e-11);
    CHECK(std::abs(r.predicted - predicted_m(5000, r.h, sh, {}, table())) <
          1e-12);
  }
}

TEST_CASE("domain policy") {
  ShiftParams sh(Cplx(0.1), Cplx(0.1), Cplx(0.2), Cplx(0.2));
  CHECK_THROWS_AS(correlation_scan(100, 50, sh, {}, table()), RangeError);
  CHECK_THROWS_AS(correlation_sum(100, 0, sh, table()), RangeError);
}

TEST_CASE("median agreement at moderate x") {
  ShiftParams sh(Cplx(0.1), Cplx(0.1), Cplx(0.2), Cplx(0.2));
  std::int64_t x = 100000;
  auto scan = correlation_scan(x, 50, sh, {}, table());
  std::vector<double> errs;
  double floor_scale = std::pow(static_cast<double>(x), 0.6);
  for (const auto& r : scan)
    errs.push_back(r.abs_error /
                   std::max(std::abs(r.predicted), floor_scale));
  std::nth_element(errs.begin(), errs.begin() + errs.size() / 2, errs.end());
  CHECK(errs[errs.size() / 2] < 0.10);
}
