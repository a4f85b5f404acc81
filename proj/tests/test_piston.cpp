#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "synge/piston.hpp"

using namespace synge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PistonProblem problem(double alpha, double gamma0, GasKind gas) {
  PistonProblem p;
  p.alpha = alpha;
  p.gamma0 = gamma0;
  p.gas = gas;
  return p;
}

void check_admissible(const PistonSolution& s) {
  CHECK(s.shock.lax_margin > 0.0);
  CHECK(s.shock.entropy_jump > 0.0);
  CHECK(s.shock.pressure_jump > 0.0);
  CHECK(s.shock.lab_residual < 1e-9);
  CHECK(s.x_P < 0.0);
  CHECK(s.s_P > 1.0);
}

}  // namespace

TEST_CASE("moderate piston meets its boundary condition", "[piston]") {
  const PistonSolution s = solve_piston(problem(0.5, 3.0, GasKind::monatomic));
  CHECK(s.residual < 1e-8);
  CHECK_THAT(s.s_tilde, WithinRel(2.0, 1e-10));
  CHECK(s.layer_s.empty());
  check_admissible(s);
  // the arc starts right behind the shock
  CHECK(s.arc.s_begin() == s.s_P);
  CHECK_THAT(s.arc.at(s.s_tilde).u * s.s_tilde, WithinAbs(1.0, 1e-10));
  CHECK(s.arc.max_isentrope_drift < 1e-10);
}

TEST_CASE("slower pistons push the shock toward s_bar", "[piston][slow]") {
  const GasKind gas = GENERATE(GasKind::monatomic, GasKind::diatomic);
  const double g0 = GENERATE(1.0, 10.0);
  double prev_x = -1e300, prev_st = 0.0;
  for (double alpha : {0.9, 0.5, 0.1}) {
    INFO(gas_name(gas) << " gamma0 = " << g0 << " alpha = " << alpha);
    const PistonSolution s = solve_piston(problem(alpha, g0, gas));
    CHECK(s.residual < 1e-8);
    check_admissible(s);
    CHECK(s.x_P > prev_x);
    CHECK(s.s_tilde > prev_st);
    prev_x = s.x_P;
    prev_st = s.s_tilde;
  }
}

TEST_CASE("layer and direct arcs agree where both apply", "[piston]") {
  for (auto gas : {GasKind::monatomic, GasKind::diatomic}) {
    const PistonProblem pb = problem(0.5, 1.0, gas);
    PistonOptions direct;
    direct.layer_theta = 0.0;
    const PistonShot a = shoot_piston(1e-3, pb, SimParams{.gas = gas}, 200.0);
    const PistonShot b = shoot_piston(1e-3, pb, SimParams{.gas = gas}, 200.0, direct);
    CHECK_FALSE(a.layer_s.empty());
    CHECK(b.layer_s.empty());
    CHECK_THAT(a.s_tilde, WithinRel(b.s_tilde, 1e-10));
  }
}

TEST_CASE("layer integration converges", "[piston][property]") {
  const PistonProblem pb = problem(0.5, 1.0, GasKind::monatomic);
  SimParams loose, tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-15;
  PistonOptions wide;
  wide.layer_width = 3e-2;
  const double a = shoot_piston(1e-50, pb, loose, 1e3).s_tilde;
  CHECK_THAT(shoot_piston(1e-50, pb, tight, 1e3).s_tilde, WithinRel(a, 1e-9));
  CHECK_THAT(shoot_piston(1e-50, pb, loose, 1e3, wide).s_tilde, WithinRel(a, 1e-9));
}

TEST_CASE("piston results do not depend on the parallel scan", "[piston]") {
  PistonOptions serial;
  serial.parallel = false;
  const PistonProblem pb = problem(0.7, 10.0, GasKind::diatomic);
  const PistonSolution a = solve_piston(pb);
  const PistonSolution b = solve_piston(pb, 1e-8, {}, serial);
  CHECK(a.theta == b.theta);
  CHECK(a.s_tilde == b.s_tilde);
  CHECK(a.residual == b.residual);
}

TEST_CASE("piston limits", "[piston]") {
  // fast piston: the shock runs close to the light cone
  const PistonSolution fast = solve_piston(problem(0.99, 3.0, GasKind::monatomic));
  CHECK(fast.s_P < 1.02);
  check_admissible(fast);
  // very slow piston: only reachable for a cold gas, where s~ grows faster as the shock weakens
  const PistonSolution slow = solve_piston(problem(0.01, 1000.0, GasKind::monatomic));
  CHECK(slow.residual < 1e-8);
  CHECK(-slow.x_P < 1e-6 * slow.s_bar);
  // for a warm gas s~ = 100 is beyond any resolvable shock strength
  CHECK_THROWS_AS(solve_piston(problem(0.01, 3.0, GasKind::monatomic)), SolverError);
}

TEST_CASE("piston domain errors", "[piston]") {
  CHECK_THROWS_AS(solve_piston(problem(1.0, 1.0, GasKind::monatomic)), DomainError);
  CHECK_THROWS_AS(solve_piston(problem(0.0, 1.0, GasKind::monatomic)), DomainError);
  CHECK_THROWS_AS(solve_piston(problem(0.5, -1.0, GasKind::monatomic)), DomainError);
  CHECK_THROWS_AS(shock_from_rest(0.9, 1.0, 1.0, GasKind::monatomic), DomainError);
  CHECK_THROWS_AS(shock_from_rest(eos_point(GasKind::monatomic, 1.0).sqrt_e_p, 1.0, 1.0, GasKind::monatomic),
                  DomainError);
  PistonOptions bad;
  bad.scan_points = 1;
  CHECK_THROWS_AS(solve_piston(problem(0.5, 1.0, GasKind::monatomic), 1e-8, {}, bad), DomainError);
}
