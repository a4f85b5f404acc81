#ifndef SYNGE_EOS_HPP
#define SYNGE_EOS_HPP

// Constitutive relations of the monatomic and diatomic Synge gas in units c = 1.
// Every quantity except the isentrope is a function of the coldness gamma alone.

#include <string>
#include <string_view>

#include "synge/bessel.hpp"

namespace synge {

enum class GasKind { diatomic = 0, monatomic = 1 };

constexpr int ratio_index(GasKind gas) noexcept { return static_cast<int>(gas); }
/// Number of classical degrees of freedom D (3 monatomic, 5 diatomic).
constexpr int degrees_of_freedom(GasKind gas) noexcept { return gas == GasKind::monatomic ? 3 : 5; }
std::string_view gas_name(GasKind gas) noexcept;
GasKind parse_gas(std::string_view name);

/// Everything the flow solvers need at one gamma, evaluated once.
struct EosPoint {
  double gamma;
  double h;       // h_i
  double r;       // 1 - h_i
  double phi;     // Phi_i = 3/gamma + h_i
  double chi;     // gamma Phi_i + 1
  double g;       // gamma^2 Phi_i' - 1  (always < 0)
  double e_p;     // de/dp at fixed entropy
  double sqrt_e_p;
};

EosPoint eos_point(GasKind gas, double gamma);

double phi(GasKind gas, double gamma);
double phi_prime(GasKind gas, double gamma);
double chi(GasKind gas, double gamma);
double q_aux(GasKind gas, double gamma);
double s_aux(GasKind gas, double gamma);
/// g_i = gamma^2 (h^2 - 1) + (2i+1) gamma h - 4 = gamma^2 Phi' - 1.
double g_aux(GasKind gas, double gamma);

double e_p(GasKind gas, double gamma);
/// 3 + sigma_i with sigma_i = (gamma h + 4)/g + gamma h + 1.
double e_p_sigma_route(GasKind gas, double gamma);
/// Direct rational expressions in h and gamma.
double e_p_closed_form(GasKind gas, double gamma);

double sigma_prime(GasKind gas, double gamma);
double p_epp(GasKind gas, double gamma);
/// gamma sigma' / g.
double p_epp_sigma_route(GasKind gas, double gamma);

double char_speed(GasKind gas, double gamma);

/// gamma_p = d gamma / dp along an isentrope.
double dgamma_dp_isentropic(GasKind gas, double gamma, double p);

double e_of(GasKind gas, double gamma, double p);

struct IsentropeRef {
  double gamma_ref = 1.0;
  double p_ref = 1.0;
};

/// p(gamma) on the isentrope through ref; integrates d ln p = g dln gamma by adaptive quadrature.
double isentrope_p(GasKind gas, const IsentropeRef& ref, double gamma, double rel_tol = 1e-12);
double isentrope_log_p(GasKind gas, const IsentropeRef& ref, double gamma, double rel_tol = 1e-12);

/// Entropy label, constant along isentropes and increasing with physical entropy:
///   eta = gamma (h - 1) + (i - 3) ln gamma + ln(e^gamma K_{i+1}(gamma)) - ln p.
double entropy_label(GasKind gas, double gamma, double p);
/// ln p on an isentrope from the closed form above (independent of the quadrature).
double isentrope_log_p_closed(GasKind gas, const IsentropeRef& ref, double gamma);

}  // namespace synge

#endif  // SYNGE_EOS_HPP
