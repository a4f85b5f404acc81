#include "synge/bessel_oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <string>

namespace synge {

namespace {

// log of the scaled integrand exp(-x (cosh t - 1)) sinh(t)^(2j)
double log_integrand(int j, double x, double t) {
  const double sh = std::sinh(0.5 * t);
  const double base = -2.0 * x * sh * sh;
  if (j == 0) return base;
  return base + 2.0 * j * std::log(std::sinh(t));
}

double integrate_piece(int j, double x, double a, double b, double shift, const OracleOptions& opts,
                       double& err_sum) {
  if (!(b > a)) return 0.0;
  auto f = [&](double t) { return std::exp(log_integrand(j, x, t) - shift); };
  double err = 0.0;
  double l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, opts.max_depth,
                                                                                  opts.tol, &err, &l1);
  err_sum += err;
  return v;
}

}  // namespace

double oracle_quadrature_k_scaled(BesselOrder order, double gamma, const OracleOptions& opts) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("oracle_quadrature_k: gamma must be positive");
  const int j = order.value();
  const double x = gamma;

  // peak of the integrand: x sinh^2 t = 2j cosh t
  const double c_peak = (j + std::sqrt(double(j) * j + x * x)) / x;
  const double t_peak = std::acosh(c_peak);
  const double shift = j == 0 ? 0.0 : log_integrand(j, x, t_peak);

  // right end where the integrand has dropped by e^-50 relative to its peak
  double width = 1.0 / std::sqrt(x + 1.0) + 0.5;
  double t_hi = t_peak + width;
  while (log_integrand(j, x, t_hi) - shift > -50.0) {
    width *= 1.5;
    t_hi = t_peak + width;
  }
  double err = 0.0;
  const double left = integrate_piece(j, x, 0.0, t_peak, shift, opts, err);
  const double right = integrate_piece(j, x, t_peak, t_hi, shift, opts, err);
  const double integral = left + right;
  if (!(integral > 0.0) || err > 10.0 * opts.tol * integral) {
    throw ConvergenceError("oracle_quadrature_k: quadrature did not reach tolerance", err / integral);
  }

  // 2^j j! x^j / (2j)!, kept in log form together with the shift
  double log_coef = j * std::log(2.0 * x);
  for (int k = j + 1; k <= 2 * j; ++k) log_coef -= std::log(double(k));
  return std::exp(log_coef + shift) * integral;
}

double oracle_quadrature_k(BesselOrder order, double gamma, const OracleOptions& opts) {
  return oracle_quadrature_k_scaled(order, gamma, opts) * std::exp(-gamma);
}

namespace {

OracleComparison compare_one(double x, const OracleOptions& opts) {
  OracleComparison c;
  c.gamma = x;
  std::array<double, 5> k{};
  for (int j = 0; j < 5; ++j) {
    try {
      k[j] = bessel_k_scaled(BesselOrder(j), x);
      const double o = oracle_quadrature_k_scaled(BesselOrder(j), x, opts);
      c.rel_err[j] = std::abs(k[j] - o) / o;
    } catch (const std::exception&) {
      c.rel_err[j] = std::nan("");
    }
  }
  for (int j = 1; j <= 3; ++j) {
    c.recurrence = std::max(c.recurrence, std::abs(k[j + 1] - k[j - 1] - 2.0 * j * k[j] / x) / k[j + 1]);
  }
  return c;
}

}  // namespace

std::vector<OracleComparison> oracle_sweep(const std::vector<double>& gammas, bool parallel,
                                           const OracleOptions& opts) {
  std::vector<OracleComparison> out(gammas.size());
  const long n = static_cast<long>(gammas.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) out[i] = compare_one(gammas[i], opts);
  } else {
    for (long i = 0; i < n; ++i) out[i] = compare_one(gammas[i], opts);
  }
  return out;
}

}  // namespace synge
