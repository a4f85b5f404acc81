#include "synge/piston.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "synge/ode.hpp"

namespace synge {

namespace {

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

constexpr double kInf = std::numeric_limits<double>::infinity();
// Taylor expansion of e_p in gamma / gamma0 - 1 is used only this close to gamma0
constexpr double kLayerGammaRel = 2e-2;

struct LayerEnd {
  double x;
  FlowState state;
};

// Near s_bar the smooth ODE loses everything to cancellation in g: s - s_bar, u and
// gamma - gamma0 are all O(theta). Integrate in x = s - s_bar with y = (u, gamma/gamma0 - 1,
// p/p0 - 1) and g expanded so that no O(1) terms cancel.
LayerEnd integrate_layer(const RestShock& rs, const PistonProblem& pb, const SimParams& prm, double x_end,
                         std::vector<double>& s_out, std::vector<FlowState>& st_out) {
  const std::array<double, 8> c = ep_taylor(pb.gas, pb.gamma0);
  const double sb = rs.s_bar, sb2 = sb * sb, dm1 = pb.d - 1.0;
  const GasKind gas = pb.gas;
  const double g0 = pb.gamma0;
  ode::Rhs<3> f = [=](double x, const ode::Vec<3>& y, ode::Vec<3>& dy) {
    const double u = y[0], gh = y[1], ph = y[2];
    if (!(std::abs(u) < 1.0) || !(std::abs(gh) < 0.5) || !(ph > -1.0)) return false;
    const double s = sb + x;
    double de = 0.0;
    for (int k = 7; k >= 0; --k) de = (de + c[k]) * gh;
    const double us1 = u * s - 1.0;
    const double g = 2.0 * u * s * (1.0 - sb2) + u * u * (sb2 * s * s - 1.0) + de * us1 * us1 - 2.0 * sb * x - x * x;
    if (!(g < 0.0)) return false;
    const EosPoint e = eos_point(gas, g0 * (1.0 + gh));
    const double dlnp = dm1 * u * us1 * e.chi / g;
    dy[0] = dm1 * u * (1.0 - u * u) * (u - s) / g;
    dy[1] = (1.0 + gh) * dlnp / e.g;
    dy[2] = (1.0 + ph) * dlnp;
    return true;
  };
  ode::Options o;
  o.rel_tol = prm.rel_tol;
  o.abs_tol = 1e-300;  // every component is O(theta); only relative error means anything
  o.h_min_rel = 1e-300;
  o.h_init = 1e-3 * std::abs(rs.x_P);
  o.event_tol = prm.event_tol * x_end;
  std::vector<ode::Event<3>> ev;
  ev.push_back({0, [](double, const ode::Vec<3>& y) { return std::abs(y[1]) - kLayerGammaRel; }, +1, true});

  const FlowState& d = rs.downstream;
  const ode::Vec<3> y0{d.u, rs.dgamma_rel, rs.dp_rel};
  const ode::Result<3> res = ode::integrate<3>(f, rs.x_P, y0, x_end, o, ev);
  if (res.status == ode::Status::rejected_domain) {
    throw SolverError("sonic layer: integration stopped at s - s_bar = " + fmt_g(res.t_final));
  }
  auto state = [&](const ode::Vec<3>& y) { return FlowState{y[0], g0 * (1.0 + y[1]), pb.p0 * (1.0 + y[2])}; };
  s_out.push_back(sb + rs.x_P);
  st_out.push_back(d);
  for (const auto& step : res.steps) {
    const double t = std::min(step.t1(), res.t_final);
    s_out.push_back(sb + t);
    st_out.push_back(state(step(t)));
  }
  // the arc picks up from here
  s_out.pop_back();
  st_out.pop_back();
  return {res.t_final, state(res.y_final)};
}

// s~(theta) - 1/alpha; +inf when the arc outruns the horizon, NaN if the construction fails.
struct Shooter {
  PistonProblem pb;
  SimParams prm;
  double s_end;
  PistonOptions opt;

  double residual(double log_theta) const {
    try {
      const PistonShot shot = shoot_piston(std::exp(log_theta), pb, prm, s_end, opt);
      if (shot.arc.terminal_event == TerminalEvent::horizon) return kInf;
      if (shot.arc.terminal_event != TerminalEvent::u_hits_one_over_s) return std::nan("");
      return shot.s_tilde - 1.0 / pb.alpha;
    } catch (const std::exception&) {
      return std::nan("");
    }
  }
};

}  // namespace

void PistonProblem::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("PistonProblem: alpha must be in (0, 1)");
  if (!(p0 > 0.0) || !(gamma0 > 0.0)) throw DomainError("PistonProblem: p0 and gamma0 must be positive");
  if (d != 2 && d != 3) throw DomainError("PistonProblem: d must be 2 or 3");
}

ShockRecord shock_from_rest(double sP, double p0, double gamma0, GasKind gas) {
  const double s_bar = eos_point(gas, gamma0).sqrt_e_p;
  if (!(sP > 1.0 && sP < s_bar)) {
    throw DomainError("shock_from_rest: sP must lie in (1, " + std::to_string(s_bar) + ")");
  }
  const FlowState rest{0.0, gamma0, p0};
  const FlowState down = solve_downstream(rest, 1.0 / sP, gas);
  if (!(down.u > 0.0 && down.u < 1.0 / sP)) {
    throw SolverError("shock_from_rest: downstream velocity outside (0, sigma)");
  }
  if (!(denom_g(sP, down, gas) < 0.0)) throw SolverError("shock_from_rest: g is not negative behind the shock");
  return make_shock_record(rest, down, sP, gas);
}

PistonArc arc_until_piston(const FlowState& down, double sP, const SimParams& params, double s_end) {
  OdeSegment arc = integrate_arc(sP, down, params, s_end);
  if (arc.terminal_event != TerminalEvent::u_hits_one_over_s) {
    throw SolverError("arc_until_piston: arc ended with " + to_string(arc.terminal_event) + " at s = " +
                      std::to_string(arc.s_end()) + " before u s = 1");
  }
  const double s_tilde = arc.s_end();
  return {s_tilde, std::move(arc)};
}

PistonShot shoot_piston(double theta, const PistonProblem& problem, const SimParams& params, double s_end,
                        const PistonOptions& opt) {
  problem.validate();
  PistonShot shot;
  shot.shock = rest_shock(theta, problem.p0, problem.gamma0, problem.gas);
  const RestShock& rs = shot.shock;
  if (theta < opt.layer_theta && rs.x_P > -0.5 * opt.layer_width) {
    const LayerEnd end = integrate_layer(rs, problem, params, opt.layer_width, shot.layer_s, shot.layer_states);
    shot.arc = integrate_arc(rs.s_bar + end.x, end.state, params, s_end);
  } else {
    shot.arc = integrate_arc(rs.s_P, rs.downstream, params, s_end);
  }
  shot.s_tilde = shot.arc.s_end();
  return shot;
}

PistonSolution solve_piston(const PistonProblem& problem, double tol, const SimParams& base, const PistonOptions& opt) {
  problem.validate();
  if (opt.scan_points < 2) throw DomainError("solve_piston: scan_points must be at least 2");
  const double t_min = opt.theta_min > 0.0 ? opt.theta_min : rest_shock_min_theta();
  if (!(t_min >= rest_shock_min_theta() && opt.theta_max > t_min)) {
    throw DomainError("solve_piston: need rest_shock_min_theta() <= theta_min < theta_max");
  }
  SimParams prm = base;
  prm.gas = problem.gas;
  prm.d = problem.d;
  const Shooter shoot{problem, prm, std::max(prm.s_max, 4.0 / problem.alpha), opt};

  // s~ grows without bound only logarithmically as the shock weakens, so the scan
  // runs over ln theta; s~ decreases with theta.
  const int n = opt.scan_points;
  const double l_lo = std::log(t_min), l_hi = std::log(opt.theta_max);
  std::vector<double> lt(n), r(n);
  for (int k = 0; k < n; ++k) lt[k] = l_lo + (l_hi - l_lo) * k / (n - 1);
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) r[k] = shoot.residual(lt[k]);
  } else {
    for (int k = 0; k < n; ++k) r[k] = shoot.residual(lt[k]);
  }

  int k = n - 1;
  for (; k > 0; --k) {
    if (!std::isnan(r[k - 1]) && !std::isnan(r[k]) && r[k - 1] >= 0.0 && r[k] < 0.0) break;
  }
  if (k == 0) {
    double best = -kInf;
    for (double v : r) {
      if (std::isfinite(v)) best = std::max(best, v);
    }
    throw SolverError("solve_piston: no sign change of s~ - 1/alpha for theta in [" + fmt_g(t_min) + ", " +
                      fmt_g(opt.theta_max) + "]; alpha = " + fmt_g(problem.alpha) +
                      ", largest resolved s~ = " + fmt_g(best + 1.0 / problem.alpha));
  }
  double a = lt[k - 1], b = lt[k];
  while (b - a > opt.log_theta_tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double rm = shoot.residual(m);
    if (std::isnan(rm)) throw SolverError("solve_piston: construction failed at theta = " + fmt_g(std::exp(m)));
    if (rm >= 0.0) {
      a = m;
    } else {
      b = m;
    }
  }

  PistonShot shot = shoot_piston(std::exp(0.5 * (a + b)), problem, prm, shoot.s_end, opt);
  if (shot.arc.terminal_event != TerminalEvent::u_hits_one_over_s) {
    throw SolverError("solve_piston: final arc ended with " + to_string(shot.arc.terminal_event));
  }
  PistonSolution sol;
  const RestShock& rs = shot.shock;
  sol.s_bar = rs.s_bar;
  sol.s_P = rs.s_P;
  sol.x_P = rs.x_P;
  sol.theta = rs.theta;
  sol.shock = rs.record(problem.gas);
  sol.s_tilde = shot.s_tilde;
  sol.layer_s = std::move(shot.layer_s);
  sol.layer_states = std::move(shot.layer_states);
  sol.arc = std::move(shot.arc);
  const double s_eval = std::min(1.0 / problem.alpha, sol.s_tilde);
  sol.residual = s_eval >= sol.arc.s_begin() ? std::abs(sol.arc.at(s_eval).u - problem.alpha)
                                             : std::abs(1.0 / sol.s_tilde - problem.alpha);
  if (!(sol.residual < tol)) {
    throw ConvergenceError("solve_piston: |u(1/alpha) - alpha| above tolerance", sol.residual);
  }
  return sol;
}

}  // namespace synge
