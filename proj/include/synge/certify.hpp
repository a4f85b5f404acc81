#ifndef SYNGE_CERTIFY_HPP
#define SYNGE_CERTIFY_HPP

// Grid certification of the equation-of-state inequalities, the K0/K1 bounds they rest
// on, and the forward-shock structure. Sampling only: a passing report is numerical
// evidence at the listed points, nothing more.

#include <limits>
#include <string>
#include <vector>

#include "synge/eos.hpp"

namespace synge {

/// gamma_0 = 2 exp(-C_E), the root of ln(gamma/2) + C_E.
inline constexpr double kGammaZero = 1.1229189671337703;

struct GridSpec {
  double lo = 1e-3;
  double hi = 1e3;
  int points = 2048;          // log-spaced over [lo, hi]
  int refine_points = 256;    // per case boundary, log-spaced over [b / refine_factor, b * refine_factor]
  double refine_factor = 1.05;

  void validate() const;
  /// Sorted, duplicate-free points; refinements are clipped to [lo, hi].
  std::vector<double> build() const;
  std::string describe() const;
};

/// Case boundaries of the e_pp sign analysis: 1/2, 9/10, gamma_0, sqrt 2, 2, 3.
const std::vector<double>& case_boundaries();

struct CheckResult {
  std::string family;  // epp_negative, ep_gt3_and_monotone_lambda, bessel_bounds, shock_structure
  std::string name;
  std::string gas;     // mono, diat, or "-" when gas independent
  std::string grid;
  int points = 0;
  int failures = 0;    // points with margin <= 0 or a failed evaluation
  bool passed = false;
  double worst_margin = 0.0;  // > 0 when passing; the scale is check specific
  double arg_worst = 0.0;
  std::string detail;
};

struct CertReport {
  std::string label = "numerical evidence";
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// Families reported with at least one check.
  std::vector<std::string> families() const;
};

const std::vector<std::string>& certification_families();

struct ShockScenario {
  GasKind gas;
  double gamma0;
  double u0;
};

std::vector<ShockScenario> default_shock_scenarios();

struct CertOptions {
  GridSpec grid;
  std::vector<ShockScenario> scenarios = default_shock_scenarios();
  int samples_per_interval = 1000;  // bessel_bounds: extra log points on each interval
  int shock_samples = 50;           // Lax / entropy samples over (sqrt 3, s_bar)
  bool parallel = true;
  std::string inject_fault;         // negates every margin of the named check (testing hook)
};

std::vector<CheckResult> certify_epp_negative(GasKind gas, const CertOptions& opt);
std::vector<CheckResult> certify_ep_gt3_and_monotone_lambda(GasKind gas, const CertOptions& opt);
std::vector<CheckResult> certify_bessel_bounds(const CertOptions& opt);
std::vector<CheckResult> certify_shock_structure(const CertOptions& opt);

/// All four families, both gases, in a fixed order.
CertReport certify_all(const CertOptions& opt = {});

/// Evaluates f at every point; NaN marks a point whose evaluation threw.
/// The parallel and serial paths return identical vectors.
template <class F>
std::vector<double> evaluate_points(const std::vector<double>& x, F&& f, bool parallel) {
  std::vector<double> out(x.size());
  const long n = static_cast<long>(x.size());
  auto one = [&](long k) {
    try {
      out[k] = f(x[k]);
    } catch (...) {
      out[k] = std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) one(k);
  } else {
    for (long k = 0; k < n; ++k) one(k);
  }
  return out;
}

}  // namespace synge

#endif  // SYNGE_CERTIFY_HPP
