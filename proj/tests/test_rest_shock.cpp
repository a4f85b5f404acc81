#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "synge/piston.hpp"
#include "synge/rest_shock.hpp"

using namespace synge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("extended-precision jump agrees with the double solver for strong shocks", "[rest_shock]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    for (double g0 : {1.0, 10.0}) {
      for (double theta : {1.5, 0.3, 0.05}) {
        INFO(gas_name(gas) << " gamma0 = " << g0 << " theta = " << theta);
        const RestShock rs = rest_shock(theta, 2.0, g0, gas);
        const ShockRecord d = shock_from_rest(rs.s_P, 2.0, g0, gas);
        CHECK_THAT(d.downstream.u, WithinRel(rs.downstream.u, 1e-10));
        CHECK_THAT(d.downstream.gamma, WithinRel(rs.downstream.gamma, 1e-10));
        CHECK_THAT(d.downstream.p, WithinRel(rs.downstream.p, 1e-10));
        CHECK_THAT(rs.downstream.gamma, WithinRel(g0 * std::exp(-theta), 1e-15));
        CHECK_THAT(rs.s_P - rs.s_bar, WithinRel(rs.x_P, 1e-12));
      }
    }
  }
}

TEST_CASE("weak shocks keep their O(theta) structure", "[rest_shock][property]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    // x_P / theta, u_d / theta and dS / theta^3 all tend to finite limits
    const RestShock a = rest_shock(1e-40, 1.0, 2.0, gas);
    const RestShock b = rest_shock(1e-80, 1.0, 2.0, gas);
    CHECK_THAT(a.x_P / 1e-40, WithinRel(b.x_P / 1e-80, 1e-12));
    CHECK_THAT(a.downstream.u / 1e-40, WithinRel(b.downstream.u / 1e-80, 1e-12));
    CHECK_THAT(a.dp_rel / 1e-40, WithinRel(b.dp_rel / 1e-80, 1e-12));
    CHECK_THAT(a.entropy_jump / 1e-120, WithinRel(b.entropy_jump / 1e-240, 1e-10));
    for (const RestShock& r : {a, b}) {
      CHECK(r.x_P < 0.0);
      CHECK(r.lax_up > 0.0);
      CHECK(r.lax_down > 0.0);
      CHECK(r.entropy_jump > 0.0);
      CHECK(r.dp_rel > 0.0);
      CHECK(r.lab_residual < 1e-300);
      CHECK(r.s_bar == sbar_extended(gas, 2.0));
    }
  }
}

TEST_CASE("s_bar and the e_p expansion", "[rest_shock]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    for (double g0 : {0.5, 5.0, 60.0}) {
      CHECK_THAT(sbar_extended(gas, g0), WithinRel(eos_point(gas, g0).sqrt_e_p, 1e-14));
      const auto c = ep_taylor(gas, g0);
      const double y = 1e-3;
      double series = 0.0;
      for (int k = 7; k >= 0; --k) series = (series + c[k]) * y;
      CHECK_THAT(series, WithinRel(e_p(gas, g0 * (1.0 + y)) - e_p(gas, g0), 1e-9));
      CHECK(c[0] > 0.0);  // e_p grows with gamma
    }
  }
}

TEST_CASE("rest_shock domain", "[rest_shock]") {
  CHECK_THROWS_AS(rest_shock(0.0, 1.0, 1.0, GasKind::monatomic), DomainError);
  CHECK_THROWS_AS(rest_shock(rest_shock_min_theta() / 2, 1.0, 1.0, GasKind::monatomic), DomainError);
  CHECK_THROWS_AS(rest_shock(1.0, 0.0, 1.0, GasKind::monatomic), DomainError);
  CHECK_THROWS_AS(rest_shock(1.0, 1.0, -1.0, GasKind::monatomic), DomainError);
  CHECK_NOTHROW(rest_shock(rest_shock_min_theta(), 1.0, 1.0, GasKind::diatomic));
  CHECK(rest_shock_digits() >= 300);
}
