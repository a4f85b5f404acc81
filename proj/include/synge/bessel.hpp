#ifndef SYNGE_BESSEL_HPP
#define SYNGE_BESSEL_HPP

// Modified Bessel functions of the second kind K_j(x), j = 0..4, for real x > 0,
// and the ratios h_i = K_i / K_{i+1} that enter the Synge energy.
//
// K_0 and K_1 come from one of three representations depending on x:
//   x <= series_cutoff        ascending series
//   x <  asymptotic_cutoff    Steed/Temme continued fraction (scaled)
//   otherwise                 large-x asymptotic expansion (scaled)
// Higher orders use the forward recurrence K_{j+1} = 2j K_j / x + K_{j-1}.

#include <stdexcept>

#include "synge/errors.hpp"

namespace synge {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

/// Bessel order 0..4.
class BesselOrder {
 public:
  constexpr explicit BesselOrder(int j) : j_(j) {
    if (j < 0 || j > 4) throw DomainError("BesselOrder: order must be in {0,...,4}");
  }
  constexpr int value() const noexcept { return j_; }

 private:
  int j_;
};

struct EvalPolicy {
  double series_cutoff = 2.0;
  double asymptotic_cutoff = 20.0;
  int series_terms = 60;
  int asymptotic_terms = 40;
  double rel_tol = 1e-15;

  void validate() const;
};

const EvalPolicy& default_policy() noexcept;

/// Thrown by bessel_k when K_j(x) underflows double precision; carries e^x K_j(x).
class BesselUnderflow : public std::range_error {
 public:
  BesselUnderflow(double gamma, double scaled)
      : std::range_error("bessel_k: K_j(gamma) underflows; use bessel_k_scaled"),
        gamma_(gamma),
        scaled_(scaled) {}
  double gamma() const noexcept { return gamma_; }
  double scaled_value() const noexcept { return scaled_; }

 private:
  double gamma_;
  double scaled_;
};

/// K_j(gamma).
double bessel_k(BesselOrder order, double gamma, const EvalPolicy& policy = default_policy());

/// e^gamma K_j(gamma); finite for any representable gamma > 0.
double bessel_k_scaled(BesselOrder order, double gamma, const EvalPolicy& policy = default_policy());

/// h_i(gamma) = K_i / K_{i+1}, i in {0,1}.
double ratio_h(int i, double gamma, const EvalPolicy& policy = default_policy());

/// 1 - h_i(gamma), evaluated without cancellation for large gamma.
double one_minus_ratio_h(int i, double gamma, const EvalPolicy& policy = default_policy());

/// h_i'(gamma) = h_i^2 + (2i+1) h_i / gamma - 1.
double ratio_h_prime(int i, double gamma, const EvalPolicy& policy = default_policy());

namespace detail {

struct ScaledPair {
  double k0;  // e^x K_0(x)
  double k1;  // e^x K_1(x)
};

ScaledPair scaled_k01(double x, const EvalPolicy& policy);
ScaledPair series_k01(double x, int max_terms);  // unscaled K_0, K_1
ScaledPair steed_k01_scaled(double x);
ScaledPair asymptotic_k01_scaled(double x, int max_terms);

// Pieces of h_i that stay accurate as gamma -> inf:
//   r = 1 - h,  rho = gamma r -> (2i+1)/2,  tau = gamma (rho - (2i+1)/2) -> finite.
struct RatioParts {
  double h;
  double r;
  double rho;
  double tau;
};
RatioParts ratio_parts(int i, double gamma, const EvalPolicy& policy);

}  // namespace detail

}  // namespace synge

#endif  // SYNGE_BESSEL_HPP
