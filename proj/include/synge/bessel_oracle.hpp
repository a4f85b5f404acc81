#ifndef SYNGE_BESSEL_ORACLE_HPP
#define SYNGE_BESSEL_ORACLE_HPP

// Independent reference values for K_j by adaptive quadrature of the integral
// representation, after the substitution lambda = gamma cosh(theta):
//
//   K_j(x) = 2^j j! x^j / (2j)!  *  int_0^inf exp(-x cosh t) sinh(t)^(2j) dt
//
// Slow. Intended for tests and certification only.

#include <array>
#include <vector>

#include "synge/bessel.hpp"

namespace synge {

struct OracleOptions {
  double tol = 1e-13;
  unsigned max_depth = 30;
};

double oracle_quadrature_k(BesselOrder order, double gamma, const OracleOptions& opts = {});
double oracle_quadrature_k_scaled(BesselOrder order, double gamma, const OracleOptions& opts = {});

struct OracleComparison {
  double gamma = 0.0;
  std::array<double, 5> rel_err{};  // |bessel_k - oracle| / oracle, j = 0..4; NaN if either side threw
  double recurrence = 0.0;          // max_j |K_{j+1} - K_{j-1} - 2j K_j / x| / K_{j+1}, j = 1..3
};

/// Library vs quadrature at every gamma (scaled values, so nothing underflows).
/// The parallel and serial kernels give identical results.
std::vector<OracleComparison> oracle_sweep(const std::vector<double>& gammas, bool parallel,
                                           const OracleOptions& opts = {});

}  // namespace synge

#endif  // SYNGE_BESSEL_ORACLE_HPP
