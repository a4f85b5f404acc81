#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>

#include "synge/shock.hpp"

using namespace synge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SimParams params(GasKind gas) {
  SimParams p;
  p.gas = gas;
  return p;
}

struct Scenario {
  GasKind gas;
  double gamma0;
};

}  // namespace

TEST_CASE("frame changes are inverse to each other", "[shock]") {
  for (double u : {-0.9, -0.3, 0.0, 0.4, 0.95}) {
    for (double s : {1.2, 1.8, 3.0}) {
      const double ut = lorentz_to_shock_frame(u, s);
      CHECK(std::abs(ut) < 1.0);
      CHECK_THAT(lorentz_from_shock_frame(ut, s), WithinAbs(u, 1e-15));
    }
  }
  const FlowState st{0.3, 2.0, 1.5};
  const FlowState back = RestFrameState::from_lab(st, 1.7).to_lab(1.7);
  CHECK_THAT(back.u, WithinAbs(st.u, 1e-15));
  CHECK(back.gamma == st.gamma);
  CHECK(back.p == st.p);
}

TEST_CASE("jump jacobian matches central differences", "[shock][property]") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> uu(-0.9, -0.05), lg(std::log(0.05), std::log(50.0));
  int checked = 0;
  while (checked < 20) {
    const GasKind gas = checked % 2 ? GasKind::monatomic : GasKind::diatomic;
    const auto down = RestFrameState::from_velocity(uu(rng), std::exp(lg(rng)), 1.0);
    const auto up = RestFrameState::from_velocity(-0.8, 2.0, 1.0);
    const Matrix2 J = jump_jacobian(down, gas);
    const double hu = 1e-6, hg = 1e-6 * down.gamma;
    auto G = [&](double ut, double g) {
      return jump_residuals(up, RestFrameState::from_velocity(ut, g, 1.0), gas);
    };
    const auto pu = G(down.u_tilde + hu, down.gamma), mu = G(down.u_tilde - hu, down.gamma);
    const auto pg = G(down.u_tilde, down.gamma + hg), mg = G(down.u_tilde, down.gamma - hg);
    const double fd[2][2] = {{(pu.g1 - mu.g1) / (2 * hu), (pg.g1 - mg.g1) / (2 * hg)},
                             {(pu.g2 - mu.g2) / (2 * hu), (pg.g2 - mg.g2) / (2 * hg)}};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        INFO("state " << checked << " entry " << r << c);
        CHECK_THAT(J[r][c], WithinRel(fd[r][c], 1e-6));
      }
    }
    ++checked;
  }
}

TEST_CASE("solve_downstream satisfies the lab-frame conservation laws", "[shock]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const FlowState up{0.0, 4.0, 1.0};
    const double lam = char_speed(gas, up.gamma);
    for (double f : {0.05, 0.3, 0.7}) {
      const double sigma = lam + f * (1.0 - lam);
      const FlowState d = solve_downstream(up, sigma, gas);
      const auto res = lab_jump_residuals(up, d, sigma, gas);
      for (double r : res) CHECK(std::abs(r) < 1e-12);
      CHECK(d.p > up.p);
      CHECK(d.gamma < up.gamma);  // shocks heat the gas
      const ShockRecord rec = make_shock_record(up, d, 1.0 / sigma, gas);
      CHECK(rec.lax_margin > 0.0);
      CHECK(rec.entropy_ratio > 1.0);
    }
    CHECK_THROWS_AS(solve_downstream(up, 0.9 * lam, gas), DomainError);
  }
}

TEST_CASE("shock scenarios are admissible and unique", "[shock]") {
  const Scenario sc = GENERATE(Scenario{GasKind::monatomic, 3.0}, Scenario{GasKind::diatomic, 3.0},
                               Scenario{GasKind::monatomic, 30.0}, Scenario{GasKind::diatomic, 30.0});
  INFO(gas_name(sc.gas) << " gamma0 = " << sc.gamma0);
  const SimParams p = params(sc.gas);
  const FlowState init{-1.0 / std::sqrt(2.0), sc.gamma0, 1.0};
  const BlowupResult blow = find_blowup_sbar(init, p);

  ShockOptions opt;
  const ShockScan scan = prescan_shock(blow.segment, blow.s_bar, sc.gas, opt);
  CHECK(scan.sign_changes == 1);

  const ShockRecord rec = find_shock_sstar(blow.segment, p, opt);
  CHECK(rec.s_star > std::sqrt(3.0));
  CHECK(rec.s_star < blow.s_bar);
  CHECK(std::abs(rec.downstream.u) < opt.u_tol);
  CHECK(rec.lab_residual < 1e-9);
  CHECK(rec.lax_margin > 0.0);
  CHECK(rec.entropy_ratio > 1.0);
  CHECK(rec.pressure_jump > 0.0);
  CHECK(rec.jacobian_det < 0.0);

  ShockOptions fine = opt;
  fine.scan_points = 10 * opt.scan_points;
  CHECK_THAT(find_shock_sstar(blow.segment, p, fine).s_star, WithinAbs(rec.s_star, 1e-8));
}

TEST_CASE("shock location regression", "[shock]") {
  // value produced by this solver; guards against unnoticed drift
  const SimParams p = params(GasKind::monatomic);
  const BlowupResult blow = find_blowup_sbar({-1.0 / std::sqrt(2.0), 3.0, 1.0}, p);
  CHECK_THAT(find_shock_sstar(blow.segment, p).s_star, WithinAbs(2.0896048270679932, 1e-9));
}

TEST_CASE("parallel and serial scans are identical", "[shock]") {
  const SimParams p = params(GasKind::diatomic);
  const BlowupResult blow = find_blowup_sbar({-0.5, 3.0, 1.0}, p);
  std::vector<double> s;
  for (int k = 1; k < 200; ++k) s.push_back(std::sqrt(3.0) + (blow.s_bar - std::sqrt(3.0)) * k / 200.0);
  const auto a = scan_downstream_velocity(blow.segment, s, p.gas, true);
  const auto b = scan_downstream_velocity(blow.segment, s, p.gas, false);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::memcmp(&a[k], &b[k], sizeof(double)) == 0);
}
