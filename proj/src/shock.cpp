#include "synge/shock.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

namespace synge {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Conserved {
  double density, mass_flux;     // rho Gamma, rho Gamma u
  double momentum, momentum_flux;  // H Gamma^2 u, H Gamma^2 u^2 + p
  double energy, energy_flux;      // e + u^2 Gamma^2 H, H Gamma^2 u
};

Conserved conserved(const FlowState& st, GasKind gas) {
  const double w = 1.0 / ((1.0 - st.u) * (1.0 + st.u));  // Gamma^2
  const double rho = st.p * st.gamma;
  const double x = chi(gas, st.gamma);
  const double H = st.p * x;
  const double e = st.p * (x - 1.0);
  const double gamma_lorentz = std::sqrt(w);
  return {rho * gamma_lorentz, rho * gamma_lorentz * st.u, H * w * st.u, H * w * st.u * st.u + st.p,
          e + st.u * st.u * w * H, H * w * st.u};
}

double jump(double sigma, double qu, double qd, double fu, double fd) {
  const double r = sigma * (qd - qu) - (fd - fu);
  const double scale = sigma * (std::abs(qd) + std::abs(qu)) + std::abs(fd) + std::abs(fu);
  return scale > 0.0 ? r / scale : r;
}

// Rest-frame downstream from gamma_d alone: G1 = 0 fixes Gamma~_d, v_d < 0 picks the branch.
struct Reduced {
  GasKind gas;
  double c1;  // chi Gamma~ / gamma upstream
  double c2;  // (chi v^2 + 1)/(gamma v) upstream

  double Gamma_d(double gd) const { return c1 * gd / chi(gas, gd); }
  // scaled G2 along G1 = 0; -inf where no real v_d exists
  double f(double gd) const {
    const double G = Gamma_d(gd);
    if (!(G > 1.0)) return -std::numeric_limits<double>::infinity();
    const double vd = -std::sqrt((G - 1.0) * (G + 1.0));
    return ((chi(gas, gd) * vd * vd + 1.0) / (gd * vd) - c2) / std::abs(c2);
  }
};

}  // namespace

double lorentz_to_shock_frame(double u, double s) {
  if (!(std::abs(u) < 1.0)) throw DomainError("lorentz_to_shock_frame: |u| must be < 1");
  if (!(s > 1.0)) throw DomainError("lorentz_to_shock_frame: s must exceed 1");
  return (u * s - 1.0) / (s - u);
}

double lorentz_from_shock_frame(double u_tilde, double s) {
  if (!(std::abs(u_tilde) < 1.0)) throw DomainError("lorentz_from_shock_frame: |u~| must be < 1");
  if (!(s > 1.0)) throw DomainError("lorentz_from_shock_frame: s must exceed 1");
  return (u_tilde * s + 1.0) / (s + u_tilde);
}

RestFrameState RestFrameState::from_velocity(double u_tilde, double gamma, double p) {
  if (!(std::abs(u_tilde) < 1.0)) throw DomainError("RestFrameState: |u~| must be < 1");
  const double G = 1.0 / std::sqrt((1.0 - u_tilde) * (1.0 + u_tilde));
  return {u_tilde, u_tilde * G, G, gamma, p};
}

RestFrameState RestFrameState::from_lab(const FlowState& st, double s) {
  return from_velocity(lorentz_to_shock_frame(st.u, s), st.gamma, st.p);
}

FlowState RestFrameState::to_lab(double s) const { return {lorentz_from_shock_frame(u_tilde, s), gamma, p}; }

JumpResidual jump_residuals(const RestFrameState& up, const RestFrameState& down, GasKind gas) {
  if (up.v == 0.0 || down.v == 0.0) throw DomainError("jump_residuals: v = 0 (characteristic configuration)");
  const double xu = chi(gas, up.gamma);
  const double xd = chi(gas, down.gamma);
  const double g1 = xd * down.Gamma_tilde / down.gamma - xu * up.Gamma_tilde / up.gamma;
  const double g2 = (xd * down.v * down.v + 1.0) / (down.gamma * down.v) - (xu * up.v * up.v + 1.0) / (up.gamma * up.v);
  return {g1, g2};
}

Matrix2 jump_jacobian(const RestFrameState& d, GasKind gas) {
  if (d.v == 0.0) throw DomainError("jump_jacobian: v_d = 0");
  const double x = chi(gas, d.gamma);
  const double q = q_aux(gas, d.gamma);
  const double G = d.Gamma_tilde;
  const double k = (d.gamma * q - x) / (d.gamma * d.gamma);
  Matrix2 m;
  m[0][0] = x / d.gamma * d.v * G * G;
  m[0][1] = k * G;
  m[1][0] = G * G * G / (d.gamma * d.v * d.v) * (x * d.v * d.v - 1.0);
  m[1][1] = k * d.v - 1.0 / (d.gamma * d.gamma * d.v);
  return m;
}

std::array<double, 3> lab_jump_residuals(const FlowState& up, const FlowState& down, double sigma, GasKind gas) {
  const Conserved a = conserved(up, gas);
  const Conserved b = conserved(down, gas);
  return {jump(sigma, a.density, b.density, a.mass_flux, b.mass_flux),
          jump(sigma, a.momentum, b.momentum, a.momentum_flux, b.momentum_flux),
          jump(sigma, a.energy, b.energy, a.energy_flux, b.energy_flux)};
}

FlowState solve_downstream(const FlowState& upstream, double sigma, GasKind gas) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("solve_downstream: sigma must be in (0, 1)");
  const double s = 1.0 / sigma;
  const double lam = lambda_plus(upstream, gas);
  if (!(lam < sigma)) {
    throw DomainError("solve_downstream: upstream characteristic speed " + std::to_string(lam) +
                      " is not below sigma = " + std::to_string(sigma));
  }
  const RestFrameState up = RestFrameState::from_lab(upstream, s);
  if (!(up.v < 0.0)) throw DomainError("solve_downstream: upstream must flow into the shock (u s < 1)");

  const double xu = chi(gas, up.gamma);
  const Reduced red{gas, xu * up.Gamma_tilde / up.gamma, (xu * up.v * up.v + 1.0) / (up.gamma * up.v)};
  const double g = up.gamma;

  // gamma_min: Gamma~_d = 1, the sonic end of the admissible range
  double a = g;
  for (int k = 0; red.Gamma_d(a) >= 1.0; ++k) {
    if (k > 2000) throw SolverError("solve_downstream: no sonic end for the downstream branch");
    a *= 0.5;
  }
  using boost::math::tools::eps_tolerance;
  using boost::math::tools::toms748_solve;
  std::uintmax_t iters = 200;
  const auto sonic = toms748_solve([&](double x) { return red.Gamma_d(x) - 1.0; }, a, g, eps_tolerance<double>(52), iters);
  const double g_min = sonic.second;

  // The reduced G2 runs from -inf at g_min through the compressive root, then back to the
  // trivial root at gamma_d = gamma. The extra points hug gamma for weak shocks.
  std::vector<double> cand;
  constexpr int kGrid = 64;
  for (int k = 1; k <= kGrid; ++k) {
    const double t = static_cast<double>(k) / (kGrid + 1);
    cand.push_back(g_min * std::pow(g / g_min, t));
  }
  for (int j = 7; j <= 52; ++j) cand.push_back(g * (1.0 - std::ldexp(1.0, -j)));
  std::sort(cand.begin(), cand.end());

  double lo = g_min, hi = 0.0, f_lo = -std::numeric_limits<double>::infinity();
  for (double x : cand) {
    if (!(x > g_min && x < g)) continue;
    const double fx = red.f(x);
    if (fx > 0.0) {
      hi = x;
      break;
    }
    lo = x;
    f_lo = fx;
  }
  if (hi == 0.0) throw SolverError("solve_downstream: compressive branch not found (shock too weak to resolve)");
  if (!std::isfinite(f_lo)) {
    // the first positive point sits next to g_min; step toward it until G2 < 0
    for (int j = 1; j < 200; ++j) {
      const double x = g_min + (hi - g_min) * std::ldexp(1.0, -j);
      const double fx = red.f(x);
      if (std::isfinite(fx) && fx < 0.0) {
        lo = x;
        f_lo = fx;
        break;
      }
    }
    if (!std::isfinite(f_lo)) throw SolverError("solve_downstream: could not bracket the compressive root");
  }
  iters = 200;
  const auto br = toms748_solve([&](double x) { return red.f(x); }, lo, hi, eps_tolerance<double>(52), iters);
  double gd = 0.5 * (br.first + br.second);
  double Gd = red.Gamma_d(gd);
  double ut = -std::sqrt((Gd - 1.0) * (Gd + 1.0)) / Gd;

  // two-dimensional Newton polish on the full G-system
  auto norm = [&](double u_t, double gam) {
    const auto r = jump_residuals(up, RestFrameState::from_velocity(u_t, gam, 1.0), gas);
    return std::hypot(r.g1 / red.c1, r.g2 / red.c2);
  };
  double res = norm(ut, gd);
  for (int it = 0; it < 4 && res > 0.0; ++it) {
    const auto dn = RestFrameState::from_velocity(ut, gd, 1.0);
    const auto r = jump_residuals(up, dn, gas);
    const Matrix2 J = jump_jacobian(dn, gas);
    const double D = det(J);
    if (!(D != 0.0)) break;
    const double du = -(J[1][1] * r.g1 - J[0][1] * r.g2) / D;
    const double dg = -(-J[1][0] * r.g1 + J[0][0] * r.g2) / D;
    const double ut_new = ut + du, gd_new = gd + dg;
    if (!(std::abs(ut_new) < 1.0 && gd_new > 0.0)) break;
    const double res_new = norm(ut_new, gd_new);
    if (!(res_new < res)) break;
    ut = ut_new;
    gd = gd_new;
    res = res_new;
  }

  const auto dn = RestFrameState::from_velocity(ut, gd, 1.0);
  // mass flux p gamma v is conserved
  const double pd = upstream.p * (up.gamma * up.v) / (gd * dn.v);
  const FlowState down{lorentz_from_shock_frame(ut, s), gd, pd};
  const double lam_d = lambda_plus(down, gas);
  if (!(lam_d > sigma)) {
    throw SolverError("solve_downstream: root violates the Lax condition (lambda_d = " + std::to_string(lam_d) +
                      ", sigma = " + std::to_string(sigma) + ")");
  }
  return down;
}

ShockRecord make_shock_record(const FlowState& upstream, const FlowState& downstream, double s, GasKind gas) {
  ShockRecord rec;
  rec.s_star = s;
  rec.sigma = 1.0 / s;
  rec.upstream = upstream;
  rec.downstream = downstream;
  rec.lax_margin = std::min(rec.sigma - lambda_plus(upstream, gas), lambda_plus(downstream, gas) - rec.sigma);
  rec.entropy_jump =
      entropy_label(gas, downstream.gamma, downstream.p) - entropy_label(gas, upstream.gamma, upstream.p);
  rec.entropy_ratio = std::exp(rec.entropy_jump);
  rec.pressure_jump = downstream.p / upstream.p - 1.0;
  const auto lab = lab_jump_residuals(upstream, downstream, rec.sigma, gas);
  rec.lab_residual = std::max({std::abs(lab[0]), std::abs(lab[1]), std::abs(lab[2])});
  rec.jacobian_det = det(jump_jacobian(RestFrameState::from_lab(downstream, s), gas));
  return rec;
}

double downstream_velocity(const OdeSegment& run, double s, GasKind gas) {
  return solve_downstream(run.at(s), 1.0 / s, gas).u;
}

std::vector<double> scan_downstream_velocity(const OdeSegment& run, const std::vector<double>& s, GasKind gas,
                                             bool parallel) {
  std::vector<double> out(s.size());
  const long n = static_cast<long>(s.size());
  if (!parallel) {
    for (long k = 0; k < n; ++k) out[k] = downstream_velocity(run, s[k], gas);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    try {
      out[k] = downstream_velocity(run, s[k], gas);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ShockScan prescan_shock(const OdeSegment& run, double s_bar, GasKind gas, const ShockOptions& opt) {
  if (opt.scan_points < 1) throw DomainError("prescan_shock: scan_points must be positive");
  const double lo = kSqrt3 * (1.0 + opt.bracket_inset);
  const double hi = s_bar * (1.0 - opt.bracket_inset);
  if (!(hi > lo)) throw SolverError("prescan_shock: s_bar = " + std::to_string(s_bar) + " does not exceed sqrt(3)");
  ShockScan scan;
  const int n = opt.scan_points + 2;
  for (int k = 0; k < n; ++k) scan.s.push_back(k + 1 == n ? hi : lo + (hi - lo) * k / (n - 1));
  scan.u_delta = scan_downstream_velocity(run, scan.s, gas, opt.parallel);
  for (int k = 1; k < n; ++k) {
    if ((scan.u_delta[k - 1] > 0.0) != (scan.u_delta[k] > 0.0)) ++scan.sign_changes;
  }
  return scan;
}

ShockRecord find_shock_sstar(const OdeSegment& run, const SimParams& params, const ShockOptions& opt) {
  const GasKind gas = params.gas;
  const double s_bar = run.s_end();
  const ShockScan scan = prescan_shock(run, s_bar, gas, opt);
  if (scan.sign_changes != 1) {
    throw SolverError("find_shock_sstar: expected one sign change of u_d over (sqrt(3), s_bar), found " +
                      std::to_string(scan.sign_changes));
  }
  std::size_t k = 1;
  while ((scan.u_delta[k - 1] > 0.0) == (scan.u_delta[k] > 0.0)) ++k;
  double a = scan.s[k - 1], b = scan.s[k];
  double fa = scan.u_delta[k - 1];
  double best_s = std::abs(fa) < std::abs(scan.u_delta[k]) ? a : b;
  double best_u = std::min(std::abs(fa), std::abs(scan.u_delta[k]));
  while (b - a > opt.s_tol * b) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = downstream_velocity(run, m, gas);
    if (std::abs(fm) < best_u) {
      best_u = std::abs(fm);
      best_s = m;
    }
    if (fm == 0.0) break;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  if (!(best_u < opt.u_tol)) {
    throw ConvergenceError("find_shock_sstar: |u_d(s*)| did not fall below the tolerance", best_u);
  }
  const FlowState up = run.at(best_s);
  return make_shock_record(up, solve_downstream(up, 1.0 / best_s, gas), best_s, gas);
}

}  // namespace synge
