#include "synge/rest_shock.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <string>

#include "eos_formulas.hpp"
#include "synge/errors.hpp"

namespace synge {

namespace {

constexpr int kDigits = 400;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kDigits>,
                                           boost::multiprecision::et_off>;

// The ascending series loses about 2x / ln 10 digits to cancellation; past this
// point the library's continued-fraction route is both cheaper and accurate.
constexpr double kSeriesLimit = 30.0;

struct K01 {
  Real k0, k1;
};

K01 bessel_k01(const Real& x) {
  if (x > kSeriesLimit) return {boost::math::cyl_bessel_k(0, x), boost::math::cyl_bessel_k(1, x)};
  // I0, I1 and the harmonic-weighted sum for K0; K1 from the Wronskian I0 K1 + I1 K0 = 1/x.
  const Real q = x * x / 4;
  const Real tiny = boost::multiprecision::pow(Real(10), -(kDigits + 10));
  Real t = 1, i0 = 1, i1 = 1, tail = 0, harm = 0, t1 = 1;
  for (int k = 1; k < 100000; ++k) {
    t *= q / (Real(k) * k);  // (q^k) / (k!)^2
    t1 *= q / (Real(k) * (k + 1));  // q^k / (k! (k+1)!)
    harm += Real(1) / k;
    i0 += t;
    i1 += t1;
    tail += harm * t;
    if (t < tiny * i0 && harm * t < tiny * (tail + 1)) break;
  }
  i1 *= x / 2;
  const Real euler = boost::math::constants::euler<Real>();
  const Real k0 = -(log(x / 2) + euler) * i0 + tail;
  const Real k1 = (1 / x - i1 * k0) / i0;
  return {k0, k1};
}

struct Thermo {
  Real gamma, h, E, chi, enth, ep, psi;  // enth = chi / gamma, enthalpy per particle (m = 1)
};

Thermo thermo(GasKind gas, const Real& gamma) {
  const int i = ratio_index(gas);
  const K01 k = bessel_k01(gamma);
  const Real k2 = k.k0 + 2 * k.k1 / gamma;
  Thermo t;
  t.gamma = gamma;
  t.h = i == 0 ? k.k0 / k.k1 : k.k1 / k2;
  t.E = 3 + gamma * t.h;  // e / p
  t.chi = t.E + 1;
  t.enth = t.chi / gamma;
  t.ep = detail::ep_closed<Real>(i, gamma, t.h);
  t.psi = gamma * t.h + (i - 3) * log(gamma) + log(i == 0 ? k.k1 : k2);
  return t;
}

double to_d(const Real& x) { return x.convert_to<double>(); }

}  // namespace

int rest_shock_digits() { return kDigits; }

// The entropy jump is O(theta^3); keep it resolvable with a wide guard.
double rest_shock_min_theta() { return 1e-120; }

double sbar_extended(GasKind gas, double gamma0) {
  if (!(gamma0 > 0.0)) throw DomainError("sbar_extended: gamma0 must be positive");
  return to_d(sqrt(thermo(gas, Real(gamma0)).ep));
}

std::array<double, 8> ep_taylor(GasKind gas, double gamma0) {
  if (!(gamma0 > 0.0)) throw DomainError("ep_taylor: gamma0 must be positive");
  // Interpolate f(y) = e_p(gamma0 (1 + y)) at y_j = j eta, |j| <= 4, by a degree-8 polynomial.
  constexpr int n = 9;
  const Real eta = boost::multiprecision::pow(Real(10), -30);
  const Real g0 = gamma0;
  Real m[n][n + 1];
  for (int r = 0; r < n; ++r) {
    const Real y = eta * (r - 4);
    Real pw = 1;
    for (int c = 0; c < n; ++c) {
      m[r][c] = pw;
      pw *= y;
    }
    m[r][n] = thermo(gas, g0 * (1 + y)).ep;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    if (piv != c) {
      for (int k = 0; k <= n; ++k) std::swap(m[c][k], m[piv][k]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const Real f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<double, 8> out{};
  for (int k = 1; k < n; ++k) out[k - 1] = to_d(m[k][n] / m[k][k]);
  return out;
}

RestShock rest_shock(double theta, double p0, double gamma0, GasKind gas) {
  if (!(theta >= rest_shock_min_theta()) || !std::isfinite(theta)) {
    throw DomainError("rest_shock: theta must lie in [" + std::to_string(rest_shock_min_theta()) + ", inf)");
  }
  if (!(p0 > 0.0) || !(gamma0 > 0.0)) throw DomainError("rest_shock: p0 and gamma0 must be positive");

  const Real P0 = p0;
  const Thermo up = thermo(gas, Real(gamma0));
  const Thermo dn = thermo(gas, Real(gamma0) * exp(-Real(theta)));

  // Taub adiabat [enth^2] = (enth_d / n_d + enth_0 / n_0) [p] with n = p gamma:
  // B p_d^2 + (A - B p0 - C) p_d - A p0 = 0.
  const Real A = dn.enth / dn.gamma;
  const Real B = up.enth / (P0 * up.gamma);
  const Real C = dn.enth * dn.enth - up.enth * up.enth;
  const Real b = A - B * P0 - C;
  const Real pd = (-b + sqrt(b * b + 4 * B * A * P0)) / (2 * B);

  const Real e0 = P0 * up.E, ed = pd * dn.E;
  const Real dp = pd - P0, de = ed - e0;
  if (!(dp > 0) || !(de > 0)) throw SolverError("rest_shock: Taub root is not compressive");
  // shock-frame speeds of the incoming and outgoing gas
  const Real v1 = sqrt(dp * (ed + P0) / (de * (e0 + pd)));
  const Real v2 = sqrt(dp * (e0 + pd) / (de * (ed + P0)));
  if (!(v2 < v1 && v1 < 1)) throw SolverError("rest_shock: shock speeds out of order");
  const Real ud = (v1 - v2) / (1 - v1 * v2);
  const Real sigma = v1;
  const Real sbar = sqrt(up.ep);
  const Real sP = 1 / sigma;

  const Real sq = sqrt(dn.ep);
  const Real lam_d = (sq * ud + 1) / (sq + ud);

  // lab-frame conservation of particles, momentum and energy
  const Real G2 = 1 / (1 - ud * ud);
  const Real Gd = sqrt(G2);
  const Real Hd = ed + pd, nd = pd * dn.gamma, n0 = P0 * up.gamma;
  auto scaled = [](const Real& a, const Real& bb, const Real& c, const Real& d) {
    const Real mag = abs(a) + abs(bb) + abs(c) + abs(d);
    return to_d(abs(a + bb + c + d) / mag);
  };
  const double r_mass = scaled(nd * Gd * ud, -sigma * nd * Gd, sigma * n0, Real(0));
  const double r_mom = scaled(Hd * G2 * ud * ud, pd - P0, -sigma * Hd * G2 * ud, Real(0));
  const double r_en = scaled(Hd * G2 * ud, -sigma * ed, -sigma * ud * ud * G2 * Hd, sigma * e0);

  RestShock rs;
  rs.theta = theta;
  rs.s_P = to_d(sP);
  rs.s_bar = to_d(sbar);
  rs.x_P = to_d(sP - sbar);
  rs.upstream = {0.0, gamma0, p0};
  rs.downstream = {to_d(ud), to_d(dn.gamma), to_d(pd)};
  rs.dgamma_rel = to_d(dn.gamma / up.gamma - 1);
  rs.dp_rel = to_d(dp / P0);
  rs.lax_up = to_d(sigma - 1 / sbar);
  rs.lax_down = to_d(lam_d - sigma);
  rs.entropy_jump = to_d((dn.psi - log(pd)) - (up.psi - log(P0)));
  rs.lab_residual = std::max({r_mass, r_mom, r_en});
  return rs;
}

ShockRecord RestShock::record(GasKind gas) const {
  ShockRecord r;
  r.s_star = s_P;
  r.sigma = 1.0 / s_P;
  r.upstream = upstream;
  r.downstream = downstream;
  r.lax_margin = std::min(lax_up, lax_down);
  r.entropy_jump = entropy_jump;
  r.entropy_ratio = std::exp(entropy_jump);
  r.pressure_jump = dp_rel;
  r.lab_residual = lab_residual;
  r.jacobian_det = det(jump_jacobian(RestFrameState::from_lab(downstream, s_P), gas));
  return r;
}

}  // namespace synge
