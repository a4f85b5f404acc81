#include "synge/eos.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "eos_formulas.hpp"
#include "laurent.hpp"

namespace synge {

namespace {

void require_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(who) + ": gamma must be positive and finite");
  }
}

struct Core {
  int i;
  double gamma;
  detail::RatioParts rp;
  double g;
};

Core core(GasKind gas, double gamma, const char* who) {
  require_gamma(gamma, who);
  const int i = ratio_index(gas);
  const auto& pol = default_policy();
  const auto rp = detail::ratio_parts(i, gamma, pol);
  double g;
  if (gamma < pol.asymptotic_cutoff) {
    const double h = rp.h;
    g = -gamma * gamma * (1.0 - h) * (1.0 + h) + (2 * i + 1) * gamma * h - 4.0;
  } else {
    // rho and tau carry the O(gamma) cancellation analytically
    const double k = i + 0.5;
    g = -2.0 * rp.tau + rp.rho * (rp.rho - 2.0 * k) - 4.0;
  }
  return {i, gamma, rp, g};
}

double sigma_of(const Core& c) {
  const double gh = c.gamma * c.rp.h;
  return (gh + 4.0) / c.g + gh + 1.0;
}

// Large-gamma expansions of the rational EOS expressions, built once per gas.
struct SeriesSet {
  struct Entry {
    int lead;
    std::vector<double> c;
    double operator()(double gamma) const { return detail::sum_asymptotic(c, lead, 1.0 / gamma); }
  };
  Entry ep_closed, pepp_closed, pepp_sigma, sigma_prime;
};

SeriesSet::Entry entry_of(const detail::Laurent& l) { return {l.lead(), l.to_double()}; }

SeriesSet build_series(int i) {
  using detail::Laurent;
  using detail::Rational;
  constexpr int kOrder = 32;
  auto bessel_series = [&](int j) {
    // A_{j,m} = prod_{k=1..m} (4j^2 - (2k-1)^2) / (m! 8^m)
    std::vector<Rational> c(kOrder);
    c[0] = 1;
    for (int m = 1; m < kOrder; ++m) c[m] = c[m - 1] * Rational(4 * j * j - (2 * m - 1) * (2 * m - 1), 8 * m);
    return Laurent(0, std::move(c), kOrder);
  };
  const Laurent h = bessel_series(i) / bessel_series(i + 1);
  const Laurent x = Laurent::eps_power(-1, detail::kExact);
  return {entry_of(detail::ep_closed(i, x, h)), entry_of(detail::pepp_closed(i, x, h)),
          entry_of(detail::pepp_sigma(i, x, h)), entry_of(detail::sigma_prime_formula(i, x, h))};
}

const SeriesSet& series_for(int i) {
  static const SeriesSet sets[2] = {build_series(0), build_series(1)};
  return sets[i];
}

// Below this the double-precision rational forms lose at most ~1e-12; above it the
// optimally truncated expansions are exact to rounding.
constexpr double kSeriesCutoff = 60.0;

bool use_series(double gamma) { return gamma >= kSeriesCutoff; }

double closed_form_ep(const Core& c) {
  if (use_series(c.gamma)) return series_for(c.i).ep_closed(c.gamma);
  return detail::ep_closed(c.i, c.gamma, c.rp.h);
}

double ep_of(const Core& c) {
  if (c.gamma < default_policy().asymptotic_cutoff) return closed_form_ep(c);
  return 3.0 + sigma_of(c);
}

double q_of(const Core& c) {
  if (c.gamma >= default_policy().asymptotic_cutoff) {
    // q - 1 = -2 tau / gamma + r (rho - 2i - 2)
    return 1.0 - 2.0 * c.rp.tau / c.gamma + c.rp.r * (c.rp.rho - 2.0 * c.i - 2.0);
  }
  return detail::q_formula(c.i, c.gamma, c.rp.h);
}

double sigma_prime_of(const Core& c) {
  if (use_series(c.gamma)) return series_for(c.i).sigma_prime(c.gamma);
  return detail::sigma_prime_formula(c.i, c.gamma, c.rp.h);
}

}  // namespace

std::string_view gas_name(GasKind gas) noexcept { return gas == GasKind::monatomic ? "mono" : "diat"; }

GasKind parse_gas(std::string_view name) {
  if (name == "mono" || name == "monatomic") return GasKind::monatomic;
  if (name == "diat" || name == "diatomic") return GasKind::diatomic;
  throw DomainError("unknown gas '" + std::string(name) + "' (expected mono or diat)");
}

EosPoint eos_point(GasKind gas, double gamma) {
  const Core c = core(gas, gamma, "eos_point");
  const double ep = ep_of(c);
  return {gamma, c.rp.h, c.rp.r, 3.0 / gamma + c.rp.h, 4.0 + gamma * c.rp.h, c.g, ep, std::sqrt(ep)};
}

double phi(GasKind gas, double gamma) {
  require_gamma(gamma, "phi");
  return 3.0 / gamma + ratio_h(ratio_index(gas), gamma);
}

double phi_prime(GasKind gas, double gamma) {
  const Core c = core(gas, gamma, "phi_prime");
  return (c.g + 1.0) / (gamma * gamma);
}

double chi(GasKind gas, double gamma) {
  require_gamma(gamma, "chi");
  return 4.0 + gamma * ratio_h(ratio_index(gas), gamma);
}

double q_aux(GasKind gas, double gamma) { return q_of(core(gas, gamma, "q_aux")); }

double s_aux(GasKind gas, double gamma) { return -core(gas, gamma, "s_aux").g; }

double g_aux(GasKind gas, double gamma) { return core(gas, gamma, "g_aux").g; }

double e_p(GasKind gas, double gamma) { return ep_of(core(gas, gamma, "e_p")); }

double e_p_sigma_route(GasKind gas, double gamma) { return 3.0 + sigma_of(core(gas, gamma, "e_p")); }

double e_p_closed_form(GasKind gas, double gamma) { return closed_form_ep(core(gas, gamma, "e_p")); }

double sigma_prime(GasKind gas, double gamma) { return sigma_prime_of(core(gas, gamma, "sigma_prime")); }

double p_epp(GasKind gas, double gamma) {
  const Core c = core(gas, gamma, "p_epp");
  if (use_series(gamma)) return series_for(c.i).pepp_closed(gamma);
  return detail::pepp_closed(c.i, gamma, c.rp.h);
}

double p_epp_sigma_route(GasKind gas, double gamma) {
  const Core c = core(gas, gamma, "p_epp");
  if (use_series(gamma)) return series_for(c.i).pepp_sigma(gamma);
  return detail::pepp_sigma(c.i, gamma, c.rp.h);
}

double char_speed(GasKind gas, double gamma) { return 1.0 / std::sqrt(e_p(gas, gamma)); }

double dgamma_dp_isentropic(GasKind gas, double gamma, double p) {
  if (!(p > 0.0)) throw DomainError("dgamma_dp_isentropic: p must be positive");
  const Core c = core(gas, gamma, "dgamma_dp_isentropic");
  return gamma / (p * c.g);
}

double e_of(GasKind gas, double gamma, double p) {
  if (p < 0.0) throw DomainError("e_of: p must be non-negative");
  if (p == 0.0) return 0.0;
  return p * (3.0 + gamma * ratio_h(ratio_index(gas), gamma));
}

double isentrope_log_p(GasKind gas, const IsentropeRef& ref, double gamma, double rel_tol) {
  require_gamma(gamma, "isentrope_p");
  require_gamma(ref.gamma_ref, "isentrope_p");
  if (!(ref.p_ref > 0.0)) throw DomainError("isentrope_p: p_ref must be positive");
  const double log_p_ref = std::log(ref.p_ref);
  if (gamma == ref.gamma_ref) return log_p_ref;
  // d ln p / d ln gamma = g(gamma). g is analytic and slowly varying in ln gamma, so fixed
  // Gauss-Legendre panels are exact to rounding; the 20/30-point difference serves as the
  // error estimate (the Kronrod estimate in Boost degrades like eps/(b-a) on short panels).
  auto f = [gas](double t) { return core(gas, std::exp(t), "isentrope_p").g; };
  const double a = std::log(ref.gamma_ref);
  const double b = std::log(gamma);
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / 0.5)));
  const double w = (b - a) / panels;
  double v = 0.0, err = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * w;
    const double hi = k + 1 == panels ? b : lo + w;
    const double fine = boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi);
    const double coarse = boost::math::quadrature::gauss<double, 20>::integrate(f, lo, hi);
    v += fine;
    err += std::abs(fine - coarse);
  }
  if (!(err <= rel_tol * std::max(1.0, std::abs(v)))) {
    throw ConvergenceError("isentrope_p: quadrature did not reach tolerance at gamma = " + std::to_string(gamma), err);
  }
  return log_p_ref + v;
}

double isentrope_p(GasKind gas, const IsentropeRef& ref, double gamma, double rel_tol) {
  return std::exp(isentrope_log_p(gas, ref, gamma, rel_tol));
}

namespace {

double entropy_potential(GasKind gas, double gamma) {
  const int i = ratio_index(gas);
  const auto rp = detail::ratio_parts(i, gamma, default_policy());
  return -rp.rho + (i - 3) * std::log(gamma) + std::log(bessel_k_scaled(BesselOrder(i + 1), gamma));
}

}  // namespace

double entropy_label(GasKind gas, double gamma, double p) {
  require_gamma(gamma, "entropy_label");
  if (!(p > 0.0)) throw DomainError("entropy_label: p must be positive");
  return entropy_potential(gas, gamma) - std::log(p);
}

double isentrope_log_p_closed(GasKind gas, const IsentropeRef& ref, double gamma) {
  require_gamma(gamma, "isentrope_log_p_closed");
  return std::log(ref.p_ref) + entropy_potential(gas, gamma) - entropy_potential(gas, ref.gamma_ref);
}

}  // namespace synge
