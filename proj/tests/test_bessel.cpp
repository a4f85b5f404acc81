#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "reference_values.hpp"
#include "synge/bessel.hpp"
#include "synge/bessel_oracle.hpp"

using namespace synge;
using Catch::Matchers::WithinRel;

TEST_CASE("K_j matches frozen reference values", "[bessel]") {
  for (const auto& row : ref::kBessel) {
    for (int j = 0; j < 5; ++j) {
      INFO("gamma = " << row.gamma << ", j = " << j);
      CHECK_THAT(bessel_k(BesselOrder(j), row.gamma), WithinRel(row.k[j], 1e-14));
    }
  }
}

TEST_CASE("ratios match frozen values", "[bessel]") {
  for (const auto& row : ref::kBessel) {
    CHECK_THAT(ratio_h(0, row.gamma), WithinRel(row.k[0] / row.k[1], 1e-14));
    CHECK_THAT(ratio_h(1, row.gamma), WithinRel(row.k[1] / row.k[2], 1e-14));
  }
}

TEST_CASE("every representation agrees with the quadrature oracle", "[bessel][oracle]") {
  // straddle both cutoffs so each branch is exercised
  const double xs[] = {0.01, 0.5, 1.9, 2.1, 5.0, 19.5, 20.5, 60.0, 250.0};
  for (double x : xs) {
    for (int j = 0; j < 5; ++j) {
      INFO("x = " << x << ", j = " << j);
      CHECK_THAT(bessel_k_scaled(BesselOrder(j), x), WithinRel(oracle_quadrature_k_scaled(BesselOrder(j), x), 1e-12));
    }
  }
}

TEST_CASE("branches agree near their cutoffs", "[bessel]") {
  for (double x : {1.5, 2.0, 3.0}) {
    const auto s = detail::series_k01(x, 80);
    const auto c = detail::steed_k01_scaled(x);
    CHECK_THAT(c.k0 * std::exp(-x), WithinRel(s.k0, 1e-13));
    CHECK_THAT(c.k1 * std::exp(-x), WithinRel(s.k1, 1e-13));
  }
  for (double x : {20.0, 30.0, 50.0}) {
    const auto a = detail::asymptotic_k01_scaled(x, 40);
    const auto c = detail::steed_k01_scaled(x);
    CHECK_THAT(a.k0, WithinRel(c.k0, 1e-14));
    CHECK_THAT(a.k1, WithinRel(c.k1, 1e-14));
  }
}

TEST_CASE("recurrence K_{j+1} = K_{j-1} + 2j K_j / x holds", "[bessel][property]") {
  for (int n = 0; n <= 200; ++n) {
    const double x = std::pow(10.0, -3.0 + 5.5 * n / 200.0);
    for (int j = 1; j <= 3; ++j) {
      const double km = bessel_k_scaled(BesselOrder(j - 1), x);
      const double k = bessel_k_scaled(BesselOrder(j), x);
      const double kp = bessel_k_scaled(BesselOrder(j + 1), x);
      CHECK(std::abs(kp - km - 2.0 * j * k / x) <= 1e-13 * kp);
    }
  }
}

TEST_CASE("K_j is positive, decreasing in x and increasing in j", "[bessel][property]") {
  double prev[5];
  for (int j = 0; j < 5; ++j) prev[j] = bessel_k(BesselOrder(j), 1e-3);
  for (int n = 1; n <= 300; ++n) {
    const double x = std::pow(10.0, -3.0 + 5.0 * n / 300.0);
    for (int j = 0; j < 5; ++j) {
      const double k = bessel_k(BesselOrder(j), x);
      CHECK(k > 0.0);
      CHECK(k < prev[j]);
      if (j > 0) CHECK(k > bessel_k(BesselOrder(j - 1), x));
      prev[j] = k;
    }
  }
}

TEST_CASE("one_minus_ratio_h keeps relative accuracy where h -> 1", "[bessel]") {
  // 1 - h_i ~ (2i+1) / (2 gamma) for large gamma
  for (int i = 0; i < 2; ++i) {
    for (double g : {1e4, 1e6, 1e10}) {
      const double r = one_minus_ratio_h(i, g);
      CHECK_THAT(g * r, WithinRel((2.0 * i + 1.0) / 2.0, 5.0 / g));
    }
    for (double g : {0.5, 3.0, 40.0}) CHECK_THAT(one_minus_ratio_h(i, g), WithinRel(1.0 - ratio_h(i, g), 1e-12));
  }
}

TEST_CASE("h_i' matches a central difference", "[bessel][property]") {
  for (int i = 0; i < 2; ++i) {
    for (double g : {0.05, 0.7, 2.0, 9.0, 80.0}) {
      const double d = 1e-5 * g;
      const double fd = (ratio_h(i, g + d) - ratio_h(i, g - d)) / (2.0 * d);
      CHECK_THAT(ratio_h_prime(i, g), WithinRel(fd, 1e-8));
    }
  }
}

TEST_CASE("underflow is reported with the scaled value", "[bessel]") {
  try {
    (void)bessel_k(BesselOrder(0), 800.0);
    FAIL("expected BesselUnderflow");
  } catch (const BesselUnderflow& e) {
    CHECK(e.gamma() == 800.0);
    CHECK_THAT(e.scaled_value(), WithinRel(bessel_k_scaled(BesselOrder(0), 800.0), 1e-15));
  }
}

TEST_CASE("domain errors", "[bessel]") {
  CHECK_THROWS_AS(BesselOrder(5), DomainError);
  CHECK_THROWS_AS(BesselOrder(-1), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder(0), 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder(1), -1.0), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder(1), std::numeric_limits<double>::quiet_NaN()), DomainError);
  EvalPolicy bad;
  bad.series_cutoff = 30.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(ratio_h(2, 1.0), DomainError);
}

TEST_CASE("oracle sweep: parallel equals serial", "[bessel][oracle]") {
  std::vector<double> x;
  for (int k = 0; k < 40; ++k) x.push_back(1e-3 * std::pow(3e5, k / 39.0));
  const auto a = oracle_sweep(x, true);
  const auto b = oracle_sweep(x, false);
  REQUIRE(a.size() == x.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].gamma == x[k]);
    for (int j = 0; j < 5; ++j) {
      CHECK(a[k].rel_err[j] == b[k].rel_err[j]);
      CHECK(a[k].rel_err[j] < 1e-12);
    }
    CHECK(a[k].recurrence < 1e-13);
  }
}
