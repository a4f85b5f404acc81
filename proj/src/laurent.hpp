#ifndef SYNGE_SRC_LAURENT_HPP
#define SYNGE_SRC_LAURENT_HPP

// Truncated Laurent series in eps = 1/gamma with exact rational coefficients.
// Used to carry the large-gamma cancellations of the EOS formulas out exactly.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

namespace synge::detail {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kExact = 1 << 20;  // valid_to of exactly known series
inline constexpr int kMaxTerms = 64;

class Laurent {
 public:
  // sum_{n} c[n] eps^(lead + n), known exactly for exponents < valid_to
  Laurent() = default;
  Laurent(int lead, std::vector<Rational> c, int valid_to) : lead_(lead), c_(std::move(c)), valid_(valid_to) {
    trim();
  }
  static Laurent constant(const Rational& v, int valid_to) { return Laurent(0, {v}, valid_to); }
  static Laurent eps_power(int n, int valid_to) { return Laurent(n, {Rational(1)}, valid_to); }

  int lead() const { return lead_; }
  int end() const { return lead_ + static_cast<int>(c_.size()); }  // one past the last stored exponent
  int valid_to() const { return valid_; }
  Rational coef(int exponent) const {
    const int n = exponent - lead_;
    return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : Rational(0);
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    const int valid = std::min(a.valid_, b.valid_);
    const int lead = std::min(a.lead_, b.lead_);
    const int end = std::min(valid, std::max(a.end(), b.end()));
    std::vector<Rational> c(std::max(0, end - lead));
    for (int e = lead; e < end; ++e) c[e - lead] = a.coef(e) + b.coef(e);
    return Laurent(lead, std::move(c), valid);
  }
  friend Laurent operator-(const Laurent& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v = -v;
    return Laurent(a.lead_, std::move(c), a.valid_);
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    const int valid = std::min(a.lead_ + b.valid_, b.lead_ + a.valid_);
    const int lead = a.lead_ + b.lead_;
    const int end = std::min(valid, a.end() + b.end() - 1);
    std::vector<Rational> c(std::max(0, end - lead));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const int n = static_cast<int>(i + j);
        if (lead + n >= end) break;
        c[n] += a.c_[i] * b.c_[j];
      }
    }
    return Laurent(lead, std::move(c), valid);
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.reciprocal(); }

  friend Laurent operator+(const Laurent& a, int k) { return a + constant(k, kExact); }
  friend Laurent operator+(int k, const Laurent& a) { return a + k; }
  friend Laurent operator-(const Laurent& a, int k) { return a + (-k); }
  friend Laurent operator-(int k, const Laurent& a) { return (-a) + k; }
  friend Laurent operator*(const Laurent& a, int k) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= k;
    return Laurent(a.lead_, std::move(c), a.valid_);
  }
  friend Laurent operator*(int k, const Laurent& a) { return a * k; }
  friend Laurent operator/(const Laurent& a, int k) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v /= k;
    return Laurent(a.lead_, std::move(c), a.valid_);
  }

  friend Laurent operator/(int k, const Laurent& a) { return a.reciprocal() * k; }

  Laurent reciprocal() const {
    if (c_.empty()) throw std::domain_error("Laurent: reciprocal of a series with no known terms");
    // (c0 eps^L (1 + t))^-1, t known to relative order valid - lead
    const int rel = std::min(valid_ - lead_, kMaxTerms);
    std::vector<Rational> inv(rel);
    inv[0] = Rational(1) / c_[0];
    for (int n = 1; n < rel; ++n) {
      Rational acc = 0;
      for (int j = 1; j <= n && j < static_cast<int>(c_.size()); ++j) acc += c_[j] * inv[n - j];
      inv[n] = -acc / c_[0];
    }
    return Laurent(-lead_, std::move(inv), valid_ >= kExact && c_.size() == 1 ? kExact : -lead_ + rel);
  }

  /// Coefficients as doubles, exponents lead .. valid_to-1.
  std::vector<double> to_double() const {
    std::vector<double> out;
    for (int e = lead_; e < std::min(valid_, end()); ++e) out.push_back(static_cast<double>(coef(e)));
    return out;
  }

 private:
  void trim() {
    // drop exact leading zeros so reciprocals see a non-zero leading coefficient
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      lead_ += static_cast<int>(k);
    }
    const int keep = std::max(0, valid_ - lead_);
    if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
  }

  int lead_ = 0;
  std::vector<Rational> c_;
  int valid_ = 0;
};

/// Evaluate a coefficient list for exponents lead, lead+1, ... at eps, stopping at the smallest term.
inline double sum_asymptotic(const std::vector<double>& c, int lead, double eps) {
  double term_scale = std::pow(eps, lead);
  double sum = 0.0;
  double prev = INFINITY;
  for (double ci : c) {
    const double term = ci * term_scale;
    if (std::abs(term) > prev && prev != 0.0) break;
    sum += term;
    if (ci != 0.0) prev = std::abs(term);
    term_scale *= eps;
  }
  return sum;
}

}  // namespace synge::detail

#endif  // SYNGE_SRC_LAURENT_HPP
