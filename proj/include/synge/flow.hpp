#ifndef SYNGE_FLOW_HPP
#define SYNGE_FLOW_HPP

// Self-similar radial flow u(s), gamma(s), p(s) with s = t/r (c = 1):
//
//   du/ds = (d-1) u (1-u^2) (u-s) / g
//   dp/ds = (d-1) u (us-1) (e+p) / g
//   g     = e_p (us-1)^2 - (u-s)^2 = A B
//
// Integration starts at s = 0 and stops at the first terminal event. Near the
// endpoints where g -> 0 the independent variable is switched (ln p toward vacuum,
// u toward the blow-up fold) so that the integrated system stays regular.

#include <memory>
#include <string>
#include <vector>

#include "synge/eos.hpp"
#include "synge/ode.hpp"

namespace synge {

struct FlowState {
  double u = 0.0;
  double gamma = 1.0;
  double p = 1.0;
};

struct SimParams {
  int d = 3;
  GasKind gas = GasKind::monatomic;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double event_tol = 1e-12;
  double s_max = 50.0;
  double g_floor = 0.0;          // |g| at or below this is treated as singular in rhs()
  double vacuum_p = 1e-300;      // pressure treated as exact vacuum
  double switch_gamma = 1e4;     // switch to ln p as independent variable beyond this coldness
  double switch_slope = 20.0;    // switch to u as independent variable once |du/ds| exceeds this

  void validate() const;
};

enum class TerminalEvent { none, u_hits_phiA, p_hits_zero, u_hits_zero, u_hits_one_over_s, g_hits_zero, horizon };
enum class Regime { CaseI_vacuum, CaseII_stationary, CaseIII_global, Shocked, Constant };

std::string to_string(TerminalEvent e);
std::string to_string(Regime r);

struct EventRecord {
  std::string kind;  // u_equals_s, phiA_zero, u_hits_zero, ...
  double s;
};

/// Continuous trajectory assembled from dense-output pieces; s is monotone along it.
class Trajectory {
 public:
  enum class Mode { s, log_p, u };
  struct Piece {
    Mode mode;
    ode::DenseStep<3> step;
    double t_stop;  // the piece is valid between step.t0 and t_stop
    double s_lo, s_hi;
  };
  struct Point {
    double s, u, log_gamma, log_p;
  };

  void append(Mode mode, const ode::DenseStep<3>& step, double t_stop);
  bool empty() const { return pieces_.empty(); }
  double s_begin() const;
  double s_end() const;
  Point at_s(double s) const;
  Point eval(const Piece& piece, double t) const;
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

struct OdeSegment {
  std::vector<double> s_grid;
  std::vector<FlowState> states;
  TerminalEvent terminal_event = TerminalEvent::none;
  std::vector<EventRecord> events;
  /// max |p_integrated - isentrope_p(gamma)| / p_integrated over the samples
  double max_isentrope_drift = 0.0;
  IsentropeRef isentrope;
  GasKind gas = GasKind::monatomic;
  std::shared_ptr<const Trajectory> path;

  /// State on the segment at similarity coordinate s (dense output).
  FlowState at(double s) const;
  double s_begin() const { return s_grid.front(); }
  double s_end() const { return s_grid.back(); }
};

struct Derivatives {
  double du;
  double dgamma;
  double dp;
};

/// Right-hand side in s. Throws SolverError if |g| <= params.g_floor.
Derivatives rhs(double s, const FlowState& state, const SimParams& params);

double denom_g(double s, const FlowState& state, GasKind gas);
double factor_A(double s, const FlowState& state, GasKind gas);
double factor_B(double s, const FlowState& state, GasKind gas);
double phi_A(double s, double gamma, GasKind gas);
double phi_B(double s, double gamma, GasKind gas);
/// Lab-frame forward characteristic speed (sqrt(e_p) u + 1)/(sqrt(e_p) + u).
double lambda_plus(const FlowState& state, GasKind gas);

/// Velocity threshold separating vacuum formation from the other positive regimes.
/// tail_split: gamma at which the integral switches to the x = gamma^(-1/2) tail map.
double vacuum_threshold_ubar(GasKind gas, const IsentropeRef& ref, double tail_split = 1e3);

/// Integrate from s = 0 to the first terminal event (or s_max).
OdeSegment integrate(const FlowState& initial, const SimParams& params);

/// Forward arc from (s0, state) up to the first of u s = 1, g = 0 (rising) or s_end.
/// Used behind piston shocks, where g < 0.
OdeSegment integrate_arc(double s0, const FlowState& state, const SimParams& params, double s_end);

struct PositiveResult {
  Regime regime;
  OdeSegment segment;
  double s_star;        // terminal coordinate (s_max for Case III)
  FlowState terminal;   // state at s_star (p = 0 for vacuum)
};

/// u0 in [0, 1): Constant, Case I, II or III.
PositiveResult classify_positive(const FlowState& initial, const SimParams& params);

struct BlowupResult {
  double s_bar;   // u meets phi_A, g -> 0
  double s_hat;   // phi_A = 0
  OdeSegment segment;
};

/// u0 in (-1, 0).
BlowupResult find_blowup_sbar(const FlowState& initial, const SimParams& params);

/// Case II / Case III boundary in u0, located by bisection on the regime outcome.
/// Returns the smallest tested u0 that survives to s_max without stopping at u = 0.
double case_boundary_u0(const FlowState& base, const SimParams& params, double lo, double hi, int iterations = 60);

/// Gamma -> p along the run's isentrope, used when p is reconstructed.
double reconstruct_p(const OdeSegment& seg, GasKind gas, double gamma);

}  // namespace synge

#endif  // SYNGE_FLOW_HPP
