#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "reference_values.hpp"
#include "synge/eos.hpp"

using namespace synge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

template <std::size_t N>
void check_rows(GasKind gas, const ref::EosRow (&rows)[N]) {
  for (const auto& r : rows) {
    INFO(gas_name(gas) << " gamma = " << r.gamma);
    const EosPoint e = eos_point(gas, r.gamma);
    CHECK_THAT(e.h, WithinRel(r.h, 1e-14));
    CHECK_THAT(r.gamma * e.phi, WithinRel(r.e_over_p, 1e-14));
    CHECK_THAT(e.e_p, WithinRel(r.e_p, 1e-13));
    CHECK_THAT(e.sqrt_e_p, WithinRel(std::sqrt(r.e_p), 1e-13));
    CHECK_THAT(p_epp(gas, r.gamma), WithinRel(r.p_epp, 1e-11));
    CHECK_THAT(char_speed(gas, r.gamma), WithinRel(1.0 / std::sqrt(r.e_p), 1e-13));
  }
}

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = lo * std::pow(hi / lo, k / (n - 1.0));
  return x;
}

}  // namespace

TEST_CASE("EOS matches frozen reference values", "[eos]") {
  check_rows(GasKind::monatomic, ref::kMono);
  check_rows(GasKind::diatomic, ref::kDiat);
}

TEST_CASE("independent routes to e_p and p e_pp agree", "[eos]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    for (double g : log_points(1e-3, 1e3, 61)) {
      INFO(gas_name(gas) << " gamma = " << g);
      CHECK_THAT(e_p_sigma_route(gas, g), WithinRel(e_p_closed_form(gas, g), 1e-11));
      CHECK_THAT(p_epp_sigma_route(gas, g), WithinRel(p_epp(gas, g), 1e-8));
    }
  }
}

TEST_CASE("structural inequalities", "[eos][property]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    double lam_prev = 1.0;
    for (double g : log_points(1e-4, 1e5, 400)) {
      INFO(gas_name(gas) << " gamma = " << g);
      const EosPoint e = eos_point(gas, g);
      CHECK(e.g < 0.0);
      CHECK(e.e_p > 3.0);
      CHECK(p_epp(gas, g) < 0.0);
      const double lam = char_speed(gas, g);
      CHECK(lam < lam_prev);
      CHECK(lam < 1.0 / std::sqrt(3.0));
      lam_prev = lam;
    }
  }
}

TEST_CASE("limits", "[eos]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const double D = degrees_of_freedom(gas);
    // classical: gamma (Phi - 1) -> D / 2
    CHECK_THAT(1e4 * (phi(gas, 1e4) - 1.0), WithinRel(D / 2.0, 1e-3));
    CHECK_THAT(1e8 * (phi(gas, 1e8) - 1.0), WithinRel(D / 2.0, 1e-7));
    // ultra-relativistic: e = 3 p
    CHECK_THAT(1e-6 * phi(gas, 1e-6), WithinRel(3.0, 1e-4));
    CHECK_THAT(char_speed(gas, 1e-6), WithinAbs(1.0 / std::sqrt(3.0), 1e-6));
  }
}

TEST_CASE("isentrope quadrature agrees with the closed form", "[eos]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const IsentropeRef ref{3.0, 1.7};
    for (double g : {0.01, 0.5, 3.0, 20.0, 500.0}) {
      const double lp = isentrope_log_p(gas, ref, g);
      CHECK_THAT(lp, WithinAbs(isentrope_log_p_closed(gas, ref, g), 1e-11 * (1.0 + std::abs(lp))));
      CHECK_THAT(entropy_label(gas, g, std::exp(lp)), WithinAbs(entropy_label(gas, ref.gamma_ref, ref.p_ref), 1e-10));
    }
    CHECK(isentrope_p(gas, ref, 3.0) == 1.7);
  }
}

TEST_CASE("gamma_p matches the slope of the isentrope", "[eos][property]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const IsentropeRef ref{2.0, 1.0};
    for (double g : {0.1, 2.0, 30.0}) {
      const double d = 1e-5 * g;
      const double dp = isentrope_p(gas, ref, g + d) - isentrope_p(gas, ref, g - d);
      CHECK_THAT(dgamma_dp_isentropic(gas, g, isentrope_p(gas, ref, g)), WithinRel(2.0 * d / dp, 1e-7));
    }
  }
}

TEST_CASE("e_p is de/dp along an isentrope", "[eos][property]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const IsentropeRef ref{1.0, 1.0};
    for (double g : {0.05, 1.0, 7.0, 90.0}) {
      const double d = 1e-5 * g;
      const double pa = isentrope_p(gas, ref, g + d), pb = isentrope_p(gas, ref, g - d);
      const double slope = (e_of(gas, g + d, pa) - e_of(gas, g - d, pb)) / (pa - pb);
      CHECK_THAT(e_p(gas, g), WithinRel(slope, 1e-7));
    }
  }
}

TEST_CASE("gas names and domain errors", "[eos]") {
  CHECK(parse_gas("mono") == GasKind::monatomic);
  CHECK(parse_gas("diat") == GasKind::diatomic);
  CHECK(gas_name(GasKind::diatomic) == "diat");
  CHECK_THROWS_AS(parse_gas("triatomic"), DomainError);
  CHECK_THROWS_AS(eos_point(GasKind::monatomic, 0.0), DomainError);
  CHECK_THROWS_AS(eos_point(GasKind::monatomic, -2.0), DomainError);
  CHECK_THROWS_AS(e_of(GasKind::monatomic, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(entropy_label(GasKind::diatomic, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(isentrope_p(GasKind::diatomic, {1.0, 0.0}, 2.0), DomainError);
}
