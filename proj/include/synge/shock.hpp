#ifndef SYNGE_SHOCK_HPP
#define SYNGE_SHOCK_HPP

// Forward (3-) shocks of self-similar flows. Jump conditions are solved in the shock
// rest frame, where with v = u~/sqrt(1-u~^2), Gamma~ = 1/sqrt(1-u~^2) and H = p chi:
//
//   G1 = chi(gd) Gd / gd - chi(g) G / g = 0
//   G2 = (chi(gd) vd^2 + 1)/(gd vd) - (chi(g) v^2 + 1)/(g v) = 0
//
// (mass flux eliminated; d subscripts are the downstream state).

#include <array>
#include <vector>

#include "synge/eos.hpp"
#include "synge/flow.hpp"

namespace synge {

double lorentz_to_shock_frame(double u, double s);
double lorentz_from_shock_frame(double u_tilde, double s);

struct RestFrameState {
  double u_tilde = 0.0;
  double v = 0.0;
  double Gamma_tilde = 1.0;
  double gamma = 1.0;
  double p = 1.0;

  static RestFrameState from_velocity(double u_tilde, double gamma, double p);
  static RestFrameState from_lab(const FlowState& st, double s);
  FlowState to_lab(double s) const;
};

struct JumpResidual {
  double g1;
  double g2;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// G-system above; throws DomainError if v = 0 on either side.
JumpResidual jump_residuals(const RestFrameState& up, const RestFrameState& down, GasKind gas);

/// d(G1, G2)/d(u~_d, gamma_d), rows G1, G2.
Matrix2 jump_jacobian(const RestFrameState& down, GasKind gas);

inline double det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

/// Lab-frame conservation jumps (mass, momentum, energy) at speed sigma, each divided
/// by the magnitude of its terms.
std::array<double, 3> lab_jump_residuals(const FlowState& up, const FlowState& down, double sigma, GasKind gas);

/// Downstream state behind a forward shock of speed sigma running into `upstream`.
/// Requires lambda_up < sigma < 1.
FlowState solve_downstream(const FlowState& upstream, double sigma, GasKind gas);

struct ShockRecord {
  double s_star = 0.0;
  double sigma = 0.0;
  FlowState upstream;
  FlowState downstream;
  double lax_margin = 0.0;     // min(sigma - lambda_up, lambda_down - sigma)
  double entropy_ratio = 1.0;  // exp(label_down - label_up), > 1 across an admissible shock
  double entropy_jump = 0.0;   // label_down - label_up, kept apart for weak shocks
  double pressure_jump = 0.0;  // p_down / p_up - 1
  double lab_residual = 0.0;   // max |lab_jump_residuals|
  double jacobian_det = 0.0;   // det dG/d(u~_d, gamma_d) at the downstream state
};

/// Diagnostics for a solved pair at similarity coordinate s (sigma = 1/s).
ShockRecord make_shock_record(const FlowState& upstream, const FlowState& downstream, double s, GasKind gas);

struct ShockOptions {
  double u_tol = 1e-6;          // required |u_d(s*)|
  int scan_points = 64;         // interior pre-scan points
  double bracket_inset = 1e-9;  // relative inset at sqrt(3) and s_bar
  double s_tol = 1e-14;         // bisection stops once the bracket is this narrow (relative)
  bool parallel = true;
};

/// Lab velocity behind the shock placed at s on the upstream run.
double downstream_velocity(const OdeSegment& run, double s, GasKind gas);

/// u_d at each s; the parallel and serial kernels give identical results.
std::vector<double> scan_downstream_velocity(const OdeSegment& run, const std::vector<double>& s, GasKind gas,
                                             bool parallel);

struct ShockScan {
  std::vector<double> s;
  std::vector<double> u_delta;
  int sign_changes = 0;
};

/// Pre-scan of u_d over the bracket [sqrt(3)(1+inset), s_bar(1-inset)].
ShockScan prescan_shock(const OdeSegment& run, double s_bar, GasKind gas, const ShockOptions& opt);

/// Unique s* in (sqrt(3), s_bar) with u_d(s*) = 0. `run` is the blow-up run ending at s_bar.
ShockRecord find_shock_sstar(const OdeSegment& run, const SimParams& params, const ShockOptions& opt = {});

}  // namespace synge

#endif  // SYNGE_SHOCK_HPP
