#ifndef SYNGE_REST_SHOCK_HPP
#define SYNGE_REST_SHOCK_HPP

// Forward shock running into gas at rest, parametrised by its strength
// theta = ln(gamma0 / gamma_d) > 0 rather than by its position. With the downstream
// temperature fixed the Taub adiabat is a quadratic in p_d, so the whole jump is
// closed-form; it is evaluated in extended precision, which keeps the O(theta)
// differences (s_P - s_bar, u_d, p_d - p0) and the O(theta^3) entropy jump exact to
// double precision even when theta is far below the double epsilon.

#include <array>

#include "synge/eos.hpp"
#include "synge/flow.hpp"
#include "synge/shock.hpp"

namespace synge {

struct RestShock {
  double theta = 0.0;
  double s_P = 0.0;
  double s_bar = 0.0;
  double x_P = 0.0;         // s_P - s_bar (< 0), relative to the exact s_bar
  FlowState upstream;       // (0, gamma0, p0)
  FlowState downstream;     // rounded to double
  double dgamma_rel = 0.0;  // gamma_d / gamma0 - 1
  double dp_rel = 0.0;      // p_d / p0 - 1
  double lax_up = 0.0;      // sigma - lambda_up
  double lax_down = 0.0;    // lambda_down - sigma
  double entropy_jump = 0.0;  // label_d - label_u
  double lab_residual = 0.0;  // max scaled lab-frame jump residual, extended precision

  /// Shock diagnostics in the common format (jacobian_det from the double jacobian).
  ShockRecord record(GasKind gas) const;
};

/// Throws DomainError unless theta > 0, gamma0 > 0, p0 > 0 and theta is resolvable at the
/// working precision (theta >= rest_shock_min_theta()).
RestShock rest_shock(double theta, double p0, double gamma0, GasKind gas);

/// Working precision in decimal digits and the smallest admissible theta.
int rest_shock_digits();
double rest_shock_min_theta();

/// sqrt(e_p(gamma0)) in extended precision, rounded.
double sbar_extended(GasKind gas, double gamma0);

/// c_k, k = 1..8, of e_p(gamma0 (1 + y)) - e_p(gamma0) = sum c_k y^k; c[0] is c_1.
std::array<double, 8> ep_taylor(GasKind gas, double gamma0);

}  // namespace synge

#endif  // SYNGE_REST_SHOCK_HPP
