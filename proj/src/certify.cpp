#include "synge/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "synge/bessel.hpp"
#include "synge/errors.hpp"
#include "synge/flow.hpp"
#include "synge/shock.hpp"

namespace synge {

namespace {

constexpr double kEuler = 0.57721566490153286;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt3 = 1.7320508075688772;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> x;
  if (n <= 0 || !(lo < hi)) return x;
  if (n == 1) return {std::sqrt(lo * hi)};
  const double a = std::log(lo), b = std::log(hi);
  x.reserve(n);
  for (int k = 0; k < n; ++k) x.push_back(k + 1 == n ? hi : std::exp(a + (b - a) * k / (n - 1)));
  x.front() = lo;
  return x;
}

// Closed or half-open interval membership; lo_open excludes the left end.
struct Interval {
  double lo, hi;
  bool lo_open;
  bool contains(double g) const { return (lo_open ? g > lo : g >= lo) && g <= hi; }
  std::string describe() const {
    return std::string(lo_open ? "(" : "[") + fmt(lo) + ", " + (std::isinf(hi) ? "inf)" : fmt(hi) + "]");
  }
};

CheckResult make_check(std::string family, std::string name, std::string gas, std::string grid) {
  CheckResult c;
  c.family = std::move(family);
  c.name = std::move(name);
  c.gas = std::move(gas);
  c.grid = std::move(grid);
  return c;
}

// Reduces margins in index order so the result does not depend on the thread count.
CheckResult reduce(std::string family, std::string name, std::string gas, std::string grid,
                   const std::vector<double>& x, std::vector<double> margin, const CertOptions& opt) {
  CheckResult c = make_check(std::move(family), std::move(name), std::move(gas), std::move(grid));
  if (!opt.inject_fault.empty() && opt.inject_fault == c.name) {
    for (double& m : margin) m = -m;
    c.detail = "fault injected; ";
  }
  c.points = static_cast<int>(x.size());
  c.worst_margin = std::numeric_limits<double>::infinity();
  int failed_evals = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::isnan(margin[k])) {
      ++failed_evals;
      ++c.failures;
      continue;
    }
    if (!(margin[k] > 0.0)) ++c.failures;
    if (margin[k] < c.worst_margin) {
      c.worst_margin = margin[k];
      c.arg_worst = x[k];
    }
  }
  if (!std::isfinite(c.worst_margin)) {
    c.worst_margin = 0.0;
    ++c.failures;
    c.detail += "no evaluable point; ";
  }
  if (failed_evals > 0) c.detail += std::to_string(failed_evals) + " evaluations failed; ";
  c.passed = c.points > 0 && c.failures == 0;
  if (c.detail.empty()) c.detail = c.passed ? "ok" : std::to_string(c.failures) + " points fail";
  return c;
}

CheckResult run_pointwise(const std::string& family, const std::string& name, const std::string& gas,
                          const std::string& grid, const std::vector<double>& x,
                          const std::function<double(double)>& margin, const CertOptions& opt) {
  return reduce(family, name, gas, grid, x, evaluate_points(x, margin, opt.parallel), opt);
}

}  // namespace

void GridSpec::validate() const {
  if (!(lo > 0.0 && lo < hi) || !std::isfinite(hi)) throw DomainError("GridSpec: need 0 < lo < hi < inf");
  if (points < 2) throw DomainError("GridSpec: points must be at least 2");
  if (refine_points < 0) throw DomainError("GridSpec: refine_points must be non-negative");
  if (!(refine_factor > 1.0)) throw DomainError("GridSpec: refine_factor must exceed 1");
}

std::vector<double> GridSpec::build() const {
  validate();
  std::vector<double> x = log_points(lo, hi, points);
  for (double b : case_boundaries()) {
    const double a = std::max(lo, b / refine_factor), c = std::min(hi, b * refine_factor);
    if (a >= c) continue;
    for (double g : log_points(a, c, refine_points)) x.push_back(g);
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

std::string GridSpec::describe() const {
  return "log " + std::to_string(points) + " in [" + fmt(lo) + ", " + fmt(hi) + "] + " + std::to_string(refine_points) +
         " per case boundary (x/" + fmt(refine_factor) + ", x*" + fmt(refine_factor) + ")";
}

const std::vector<double>& case_boundaries() {
  static const std::vector<double> b{0.5, 0.9, kGammaZero, kSqrt2, 2.0, 3.0};
  return b;
}

const std::vector<std::string>& certification_families() {
  static const std::vector<std::string> f{"epp_negative", "ep_gt3_and_monotone_lambda", "bessel_bounds",
                                          "shock_structure"};
  return f;
}

std::vector<ShockScenario> default_shock_scenarios() {
  const double u = -1.0 / kSqrt2;
  return {{GasKind::monatomic, 3.0, u},  {GasKind::monatomic, 30.0, u}, {GasKind::diatomic, 3.0, u},
          {GasKind::diatomic, 30.0, u},  {GasKind::monatomic, 0.3, -0.3}};
}

bool CertReport::all_passed() const {
  if (families().size() != certification_families().size()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> CertReport::families() const {
  std::vector<std::string> out;
  for (const auto& f : certification_families()) {
    if (std::any_of(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.family == f; })) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<CheckResult> certify_epp_negative(GasKind gas, const CertOptions& opt) {
  const std::vector<double> x = opt.grid.build();
  const std::string g(gas_name(gas));
  std::vector<CheckResult> out;
  out.push_back(run_pointwise("epp_negative", "epp_negative", g, opt.grid.describe(), x,
                              [gas](double y) { return -p_epp(gas, y); }, opt));
  // The case split of the sign proof, each boundary neighbourhood on its own.
  for (double b : case_boundaries()) {
    std::vector<double> near;
    for (double y : x) {
      if (y >= b / opt.grid.refine_factor && y <= b * opt.grid.refine_factor) near.push_back(y);
    }
    if (near.empty()) continue;
    out.push_back(run_pointwise("epp_negative", "epp_negative_near_" + fmt(b), g,
                                "refined around " + fmt(b), near, [gas](double y) { return -p_epp(gas, y); },
                                opt));
  }
  return out;
}

std::vector<CheckResult> certify_ep_gt3_and_monotone_lambda(GasKind gas, const CertOptions& opt) {
  const std::string fam = "ep_gt3_and_monotone_lambda";
  const std::vector<double> x = opt.grid.build();
  const std::string g(gas_name(gas));
  std::vector<CheckResult> out;
  out.push_back(run_pointwise(fam, "ep_gt3", g, opt.grid.describe(), x,
                              [gas](double y) { return e_p(gas, y) - 3.0; }, opt));

  // lambda~ strictly decreasing: margin at x_k is lambda(x_{k-1}) - lambda(x_k).
  const std::vector<double> lam = evaluate_points(x, [gas](double y) { return char_speed(gas, y); }, opt.parallel);
  std::vector<double> drop(x.size() - 1);
  std::vector<double> at(x.begin() + 1, x.end());
  for (std::size_t k = 1; k < x.size(); ++k) drop[k - 1] = lam[k - 1] - lam[k];
  out.push_back(reduce(fam, "lambda_decreasing", g, opt.grid.describe(), at, drop, opt));

  // ultra-relativistic limit, |lambda(1e-6) - 1/sqrt 3| within 1e-3
  const std::vector<double> tiny{1e-6};
  out.push_back(run_pointwise(fam, "lambda_ultrarelativistic_limit", g, "gamma = 1e-6", tiny,
                              [gas](double y) { return 1e-3 - std::abs(char_speed(gas, y) - 1.0 / kSqrt3); },
                              opt));
  return out;
}

std::vector<CheckResult> certify_bessel_bounds(const CertOptions& opt) {
  const std::string fam = "bessel_bounds";
  const std::vector<double> grid = opt.grid.build();
  const double inf = std::numeric_limits<double>::infinity();

  // h = K0/K1, r = 1 - h. Margins are relative gaps; beyond sqrt 2 they are taken in r so
  // that the O(gamma^-5) gaps stay resolvable in double precision.
  auto h0 = [](double y) { return ratio_h(0, y); };
  auto r0 = [](double y) { return one_minus_ratio_h(0, y); };
  struct Bound {
    std::string name;
    Interval iv;
    std::function<double(double)> margin;
  };
  const std::vector<Bound> bounds{
      {"h0_lower_small", {0.0, kGammaZero, true},
       [&](double y) {
         const double l = y / (std::sqrt(y * y + 1.0) + 1.0);
         return (h0(y) - l) / l;
       }},
      {"h0_upper_small", {0.0, kGammaZero, true},
       [&](double y) {
         const double u = y * (11.0 / 16.0 - (std::log(y / 2.0) + kEuler));
         return (u - h0(y)) / u;
       }},
      {"h0_quadratic_small", {0.0, kGammaZero, true},
       [&](double y) {
         const double h = h0(y);
         return h * h + 2.0 * h / y - 1.0;
       }},
      {"h0_upper_mid", {kGammaZero, kSqrt2, true},
       [&](double y) {
         const double u = 1.0 - (kGammaZero - 1.0) / y;
         return (u - h0(y)) / u;
       }},
      {"h0_lower_mid", {kGammaZero, kSqrt2, true},
       [&](double y) { return (h0(y) - 0.5 * y) / (0.5 * y); }},
      {"h0_lower_rough", {kSqrt2, inf, true},
       [&](double y) {
         const double rb = 0.5 / y;
         return (rb - r0(y)) / rb;
       }},
      {"h0_upper_rough", {kSqrt2, inf, true},
       [&](double y) {
         const double z = 1.0 / y;
         const double rb = z * (0.5 - z * (3.0 / 8.0 + z * (3.0 / 16.0)));
         return (r0(y) - rb) / rb;
       }},
      {"h0_lower_fine", {2.0, inf, true},
       [&](double y) {
         const double z = 1.0 / y;
         const double rb = z * (0.5 - z * (3.0 / 8.0 - z * (3.0 / 8.0 - z * (63.0 / 128.0 - z * (31.0 / 20.0)))));
         return (rb - r0(y)) / rb;
       }},
      {"h0_upper_fine", {2.0, inf, true},
       [&](double y) {
         const double z = 1.0 / y;
         const double rb = z * (0.5 - z * (3.0 / 8.0 - z * (3.0 / 8.0 - z * (63.0 / 128.0 + z * (7.0 / 8.0)))));
         return (r0(y) - rb) / rb;
       }},
      // K1/K2 inequalities used alongside the above, written in r1 = 1 - K1/K2.
      {"h1_quadratic", {0.0, inf, true},
       [](double y) {
         const double r = one_minus_ratio_h(1, y), h = 1.0 - r;
         if (y < 1.0) return -(y * y * h * h + 3.0 * y * h - y * y - 3.0) / 3.0;
         // y^2 h^2 + 3 y h - y^2 - 3 = y^2 r^2 - 2 y^2 r + 3 y - 3 y r - 3
         return -(y * y * r * r - 2.0 * y * y * r + 3.0 * y * (1.0 - r) - 3.0) / 3.0;
       }},
      {"h1_cubic", {0.0, inf, true},
       [](double y) {
         const double r = one_minus_ratio_h(1, y), h = 1.0 - r;
         // y h^3 + 4 h^2 - y h - 1 = -y h r (2 - r) + 4 h^2 - 1
         return -(-y * h * r * (2.0 - r) + 4.0 * h * h - 1.0);
       }},
  };

  std::vector<CheckResult> out;
  for (const Bound& b : bounds) {
    const double lo = std::max(b.iv.lo, opt.grid.lo), hi = std::min(b.iv.hi, opt.grid.hi);
    std::vector<double> x;
    for (double y : grid) {
      if (b.iv.contains(y)) x.push_back(y);
    }
    if (lo < hi) {
      for (double y : log_points(lo, hi, opt.samples_per_interval)) {
        if (b.iv.contains(y)) x.push_back(y);
      }
    }
    if (x.empty()) continue;
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    out.push_back(run_pointwise(fam, b.name, "-", b.iv.describe() + " clipped to grid", x, b.margin, opt));
  }
  return out;
}

std::vector<CheckResult> certify_shock_structure(const CertOptions& opt) {
  const std::string fam = "shock_structure";
  std::vector<CheckResult> out;
  for (const ShockScenario& sc : opt.scenarios) {
    const std::string g(gas_name(sc.gas));
    const std::string grid = "u0 = " + fmt(sc.u0) + ", gamma0 = " + fmt(sc.gamma0);
    CheckResult c = make_check(fam, "shock_structure", g, grid);
    SimParams prm;
    prm.gas = sc.gas;
    try {
      const BlowupResult blow = find_blowup_sbar({sc.u0, sc.gamma0, 1.0}, prm);
      ShockOptions so;
      so.parallel = opt.parallel;
      const ShockScan scan = prescan_shock(blow.segment, blow.s_bar, sc.gas, so);
      const ShockRecord rec = find_shock_sstar(blow.segment, prm, so);

      // Lax margin and entropy gain of the shock placed at each sample.
      std::vector<double> s(opt.shock_samples);
      for (int k = 0; k < opt.shock_samples; ++k) {
        s[k] = kSqrt3 + (blow.s_bar - kSqrt3) * (k + 0.5) / opt.shock_samples;
      }
      auto admissible = [&](double y) {
        const FlowState up = blow.segment.at(y);
        const FlowState down = solve_downstream(up, 1.0 / y, sc.gas);
        const ShockRecord r = make_shock_record(up, down, y, sc.gas);
        return std::min(r.lax_margin, std::log(r.entropy_ratio));
      };
      std::vector<double> margin = evaluate_points(s, admissible, opt.parallel);
      // The root itself: det < 0, pressure rises, one sign change.
      s.push_back(rec.s_star);
      margin.push_back(std::min({-rec.jacobian_det, rec.downstream.p / rec.upstream.p - 1.0,
                                 scan.sign_changes == 1 ? 1.0 : -1.0}));
      c = reduce(fam, "shock_structure", g, grid, s, margin, opt);
      c.detail = "s* = " + fmt(rec.s_star) + ", sign changes = " + std::to_string(scan.sign_changes) +
                 ", det = " + fmt(rec.jacobian_det) + ", p_d/p = " + fmt(rec.downstream.p / rec.upstream.p) + "; " +
                 c.detail;
    } catch (const std::exception& e) {
      c.passed = false;
      c.failures = 1;
      c.detail = std::string("construction failed: ") + e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

CertReport certify_all(const CertOptions& opt) {
  CertReport rep;
  auto add = [&](std::vector<CheckResult> v) {
    for (auto& c : v) rep.checks.push_back(std::move(c));
  };
  for (GasKind gas : {GasKind::monatomic, GasKind::diatomic}) add(certify_epp_negative(gas, opt));
  for (GasKind gas : {GasKind::monatomic, GasKind::diatomic}) add(certify_ep_gt3_and_monotone_lambda(gas, opt));
  add(certify_bessel_bounds(opt));
  add(certify_shock_structure(opt));
  return rep;
}

}  // namespace synge
