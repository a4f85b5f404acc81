#include "synge/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace synge {

namespace {

constexpr double kTiny = std::numeric_limits<double>::epsilon() * 0.25;

void require_positive(double gamma, const char* who) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(who) + ": gamma must be positive and finite");
  }
}

void require_ratio_index(int i, const char* who) {
  if (i != 0 && i != 1) throw DomainError(std::string(who) + ": ratio index must be 0 or 1");
}

// Upward recurrence from (K_0, K_1); works for scaled and unscaled pairs alike.
double recur(int j, double k0, double k1, double x) {
  if (j == 0) return k0;
  double km = k0;
  double k = k1;
  for (int n = 1; n < j; ++n) {
    const double kp = 2.0 * n * k / x + km;
    km = k;
    k = kp;
  }
  return k;
}

}  // namespace

void EvalPolicy::validate() const {
  if (!(series_cutoff > 0.0) || !(series_cutoff <= asymptotic_cutoff)) {
    throw DomainError("EvalPolicy: require 0 < series_cutoff <= asymptotic_cutoff");
  }
  if (!(rel_tol > 0.0)) throw DomainError("EvalPolicy: rel_tol must be positive");
  if (series_terms < 1 || asymptotic_terms < 1) throw DomainError("EvalPolicy: term counts must be positive");
}

const EvalPolicy& default_policy() noexcept {
  static const EvalPolicy policy{};
  return policy;
}

namespace detail {

ScaledPair series_k01(double x, int max_terms) {
  const double y = 0.5 * x;
  const double log_y = std::log(y);
  const double q = y * y;

  // K_0 = sum_m (y^2)^m / (m!)^2 [psi(m+1) - ln y]
  double t = 1.0;
  double psi = -kEulerGamma;
  double k0 = t * (psi - log_y);
  // K_1 = 1/x + sum_m y^(2m+1) / (m!(m+1)!) [ln y - (psi(m+1) + psi(m+2))/2]
  double w = y;
  double psi_next = psi + 1.0;
  double k1_sum = w * (log_y - 0.5 * (psi + psi_next));
  for (int m = 1; m < max_terms; ++m) {
    t *= q / (static_cast<double>(m) * m);
    psi += 1.0 / m;
    const double d0 = t * (psi - log_y);
    k0 += d0;

    w *= q / (static_cast<double>(m) * (m + 1));
    psi_next = psi + 1.0 / (m + 1);
    const double d1 = w * (log_y - 0.5 * (psi + psi_next));
    k1_sum += d1;
    if (std::abs(d0) <= kTiny * std::abs(k0) && std::abs(d1) <= kTiny * std::abs(k1_sum)) break;
  }
  return {k0, 1.0 / x + k1_sum};
}

// Steed's continued fraction CF2 with Temme's normalisation, order mu = 0.
ScaledPair steed_k01_scaled(double x) {
  constexpr int kMaxIter = 10000;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  for (; i < kMaxIter; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kTiny) break;
  }
  if (i == kMaxIter) throw ConvergenceError("steed_k01_scaled: continued fraction did not converge", h);
  h *= a1;
  const double k0 = std::sqrt(kPi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

ScaledPair asymptotic_k01_scaled(double x, int max_terms) {
  // A_{j,m+1} = A_{j,m} (4j^2 - (2m+1)^2) / (8 (m+1)); terms carry x^{-m}.
  double t0 = 1.0;
  double t1 = 1.0;
  double s0 = 1.0;
  double s1 = 1.0;
  double prev = 1.0;
  for (int m = 0; m + 1 < max_terms; ++m) {
    const double odd = (2.0 * m + 1.0) * (2.0 * m + 1.0);
    const double denom = 8.0 * (m + 1) * x;
    t0 *= (0.0 - odd) / denom;
    t1 *= (4.0 - odd) / denom;
    const double mag = std::abs(t0) + std::abs(t1);
    if (mag > prev) break;  // past the smallest term of the divergent series
    s0 += t0;
    s1 += t1;
    prev = mag;
    if (mag <= kTiny) break;
  }
  const double pre = std::sqrt(kPi / (2.0 * x));
  return {pre * s0, pre * s1};
}

ScaledPair scaled_k01(double x, const EvalPolicy& policy) {
  if (x <= policy.series_cutoff) {
    const auto k = series_k01(x, policy.series_terms);
    const double ex = std::exp(x);
    return {k.k0 * ex, k.k1 * ex};
  }
  if (x < policy.asymptotic_cutoff) return steed_k01_scaled(x);
  return asymptotic_k01_scaled(x, policy.asymptotic_terms);
}

RatioParts ratio_parts(int i, double gamma, const EvalPolicy& policy) {
  const double k = i + 0.5;
  if (gamma < policy.asymptotic_cutoff) {
    const double h = ratio_h(i, gamma, policy);
    const double r = 1.0 - h;
    const double rho = gamma * r;
    return {h, r, rho, gamma * (rho - k)};
  }
  // With a_m = A_{i+1,m}, b_m = A_{i,m}, d_m = a_m - b_m and S = sum a_m x^-m:
  //   rho = sum_{m>=1} d_m x^(1-m) / S,   tau = sum_{m>=2} (d_m - k a_{m-1}) x^(2-m) / S
  // (the m = 1 tau term vanishes since d_1 = k).
  // Coefficients and powers of 1/x are kept apart so nothing underflows at huge x.
  const double lo = 4.0 * i * i;
  const double hi = 4.0 * (i + 1) * (i + 1);
  const double eps = 1.0 / gamma;
  double am = 1.0, bm = 1.0;  // a_m, b_m
  double S = 1.0;
  double rho_num = 0.0;
  double tau_num = 0.0;
  double pw = 1.0;   // x^(1-m) for the current m >= 1
  double prev = INFINITY;
  double a_prev = 1.0;  // a_{m-1}
  for (int m = 1; m < policy.asymptotic_terms; ++m) {
    const double odd = (2.0 * m - 1.0) * (2.0 * m - 1.0);
    am *= (hi - odd) / (8.0 * m);
    bm *= (lo - odd) / (8.0 * m);
    const double d = am - bm;
    // the m-th tau term pairs d_m with a_{m-1} at power x^(2-m)
    if (m >= 2) {
      const double term = (d - k * a_prev) * pw * gamma;
      if (std::abs(term) > prev) break;  // past the smallest term of the divergent series
      tau_num += term;
      prev = std::abs(term);
      if (prev <= kTiny * std::abs(tau_num) || pw * gamma == 0.0) break;
    }
    rho_num += d * pw;
    S += am * pw * eps;
    a_prev = am;
    pw *= eps;
  }
  const double rho = rho_num / S;
  return {1.0 - rho / gamma, rho / gamma, rho, tau_num / S};
}

}  // namespace detail

double bessel_k_scaled(BesselOrder order, double gamma, const EvalPolicy& policy) {
  require_positive(gamma, "bessel_k_scaled");
  const auto k = detail::scaled_k01(gamma, policy);
  return recur(order.value(), k.k0, k.k1, gamma);
}

double bessel_k(BesselOrder order, double gamma, const EvalPolicy& policy) {
  require_positive(gamma, "bessel_k");
  if (gamma <= policy.series_cutoff) {
    const auto k = detail::series_k01(gamma, policy.series_terms);
    return recur(order.value(), k.k0, k.k1, gamma);
  }
  const double scaled = bessel_k_scaled(order, gamma, policy);
  const double value = scaled * std::exp(-gamma);
  if (!(value >= std::numeric_limits<double>::min())) throw BesselUnderflow(gamma, scaled);
  return value;
}

double ratio_h(int i, double gamma, const EvalPolicy& policy) {
  require_ratio_index(i, "ratio_h");
  require_positive(gamma, "ratio_h");
  const auto k = detail::scaled_k01(gamma, policy);
  const double h0 = k.k0 / k.k1;
  if (i == 0) return h0;
  return 1.0 / (2.0 / gamma + h0);
}

double one_minus_ratio_h(int i, double gamma, const EvalPolicy& policy) {
  require_ratio_index(i, "one_minus_ratio_h");
  require_positive(gamma, "one_minus_ratio_h");
  if (gamma < policy.asymptotic_cutoff) return 1.0 - ratio_h(i, gamma, policy);

  // (K_{i+1} - K_i) / K_{i+1} from the two asymptotic series; the m = 0 terms cancel exactly.
  const double lo = 4.0 * i * i;
  const double hi = 4.0 * (i + 1) * (i + 1);
  double t_lo = 1.0;
  double t_hi = 1.0;
  double diff = 0.0;
  double denom = 1.0;
  double prev = 1.0;
  for (int m = 0; m + 1 < policy.asymptotic_terms; ++m) {
    const double odd = (2.0 * m + 1.0) * (2.0 * m + 1.0);
    const double scale = 8.0 * (m + 1) * gamma;
    t_lo *= (lo - odd) / scale;
    t_hi *= (hi - odd) / scale;
    const double mag = std::abs(t_lo) + std::abs(t_hi);
    if (mag > prev) break;
    diff += t_hi - t_lo;
    denom += t_hi;
    prev = mag;
    if (mag <= kTiny * std::abs(diff)) break;
  }
  return diff / denom;
}

double ratio_h_prime(int i, double gamma, const EvalPolicy& policy) {
  const double r = one_minus_ratio_h(i, gamma, policy);
  return -r * (2.0 - r) + (2.0 * i + 1.0) * (1.0 - r) / gamma;
}

}  // namespace synge
