#ifndef SYNGE_PISTON_HPP
#define SYNGE_PISTON_HPP

// Spherical piston r = alpha t pushing into gas at rest: rest state ahead of a forward
// shock at s_P, then a smooth arc behind it that meets the piston where u = 1/s = alpha.

#include <vector>

#include "synge/flow.hpp"
#include "synge/rest_shock.hpp"
#include "synge/shock.hpp"

namespace synge {

struct PistonProblem {
  double alpha = 0.5;
  double p0 = 1.0;
  double gamma0 = 1.0;
  GasKind gas = GasKind::monatomic;
  int d = 3;

  void validate() const;
};

struct PistonSolution {
  double s_P = 0.0;
  double s_bar = 0.0;    // sqrt(e_p(gamma0)), supremum of admissible s_P
  double x_P = 0.0;      // s_P - s_bar, kept separately since s_P rounds to s_bar for weak shocks
  double theta = 0.0;    // shock strength ln(gamma0 / gamma_d)
  double s_tilde = 0.0;  // where the arc meets the piston
  ShockRecord shock;
  // Weak shocks: samples of the near-sonic stretch [s_P, arc.s_begin()) integrated in
  // perturbation variables. Empty when the arc starts at s_P.
  std::vector<double> layer_s;
  std::vector<FlowState> layer_states;
  OdeSegment arc;
  double residual = 0.0;  // |u(1/alpha) - alpha|
};

/// Shock of speed 1/sP into the rest state (0, gamma0, p0); needs 1 < sP < sqrt(e_p(gamma0)).
ShockRecord shock_from_rest(double sP, double p0, double gamma0, GasKind gas);

struct PistonArc {
  double s_tilde;
  OdeSegment arc;
};

/// Integrates behind the shock until u s = 1. s_end caps the arc.
PistonArc arc_until_piston(const FlowState& down, double sP, const SimParams& params, double s_end);

struct PistonOptions {
  int scan_points = 128;       // log-spaced in theta
  double theta_min = 0.0;      // 0: rest_shock_min_theta()
  double theta_max = 30.0;
  double log_theta_tol = 1e-13;  // bisection width in ln theta
  double layer_theta = 1e-2;   // below this the sonic layer is integrated separately
  double layer_width = 1e-2;   // ... up to s_bar + layer_width
  bool parallel = true;
};

/// Arc behind a shock of strength theta into the rest state, through the sonic layer
/// when the shock is weak. arc.terminal_event says how it ended; s_tilde is only
/// meaningful for u_hits_one_over_s.
struct PistonShot {
  RestShock shock;
  std::vector<double> layer_s;
  std::vector<FlowState> layer_states;
  OdeSegment arc;
  double s_tilde = 0.0;
};
PistonShot shoot_piston(double theta, const PistonProblem& problem, const SimParams& params, double s_end,
                        const PistonOptions& opt = {});

PistonSolution solve_piston(const PistonProblem& problem, double tol = 1e-8, const SimParams& base = {},
                            const PistonOptions& opt = {});

}  // namespace synge

#endif  // SYNGE_PISTON_HPP
