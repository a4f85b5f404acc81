#ifndef SYNGE_ODE_HPP
#define SYNGE_ODE_HPP

// Dormand-Prince 5(4) with Hairer's 4th-order dense output and event location.
// Header-only; the state is a fixed-size std::array.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "synge/errors.hpp"

namespace synge::ode {

template <std::size_t N>
using Vec = std::array<double, N>;

/// Right-hand side; returns false if the state is outside the domain (the step is then rejected).
template <std::size_t N>
using Rhs = std::function<bool(double t, const Vec<N>& y, Vec<N>& dydt)>;

struct Options {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  std::vector<double> abs_scale;  // optional per-component multiplier on abs_tol
  double h_init = 0.0;  // 0: pick from the RHS scale
  double h_max = std::numeric_limits<double>::infinity();
  double h_min_rel = 1e-15;  // relative to |t|+1
  long max_steps = 2000000;
  double event_tol = 1e-13;  // absolute, in t
};

/// One accepted step with its continuous extension.
template <std::size_t N>
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  std::array<Vec<N>, 5> r{};

  double t1() const { return t0 + h; }
  bool contains(double t) const {
    return h > 0 ? (t >= t0 && t <= t0 + h) : (t <= t0 && t >= t0 + h);
  }
  Vec<N> operator()(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    Vec<N> y;
    for (std::size_t k = 0; k < N; ++k) {
      y[k] = r[0][k] + th * (r[1][k] + th1 * (r[2][k] + th * (r[3][k] + th1 * r[4][k])));
    }
    return y;
  }
};

template <std::size_t N>
struct Event {
  int id = 0;
  std::function<double(double t, const Vec<N>& y)> f;
  int direction = 0;  // +1 only rising, -1 only falling, 0 both
  bool terminal = true;
};

template <std::size_t N>
struct EventHit {
  int id;
  double t;
  Vec<N> y;
};

enum class Status { reached_end, terminal_event, rejected_domain };

template <std::size_t N>
struct Result {
  Status status = Status::reached_end;
  std::vector<DenseStep<N>> steps;
  std::vector<EventHit<N>> hits;  // in order of occurrence; last one is terminal if status == terminal_event
  double t_final = 0.0;
  Vec<N> y_final{};
  long n_rhs = 0;
};

namespace detail {

// Dormand-Prince tableau
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                        a76 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;
inline constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

template <std::size_t N>
bool finite(const Vec<N>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// Illinois-modified regula falsi for f on [a, b] with f(a) f(b) < 0.
template <class F>
double illinois(F&& f, double a, double fa, double b, double fb, double tol) {
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(b - a) <= tol) break;
    double c = (a * fb - b * fa) / (fb - fa);
    if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if ((fc > 0) == (fb > 0)) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == +1) fb *= 0.5;
      side = +1;
    }
  }
  return std::abs(fa) < std::abs(fb) ? a : b;
}

}  // namespace detail

/// Integrate from (t0, y0) toward t_end (either direction), locating events on the dense output.
template <std::size_t N>
Result<N> integrate(const Rhs<N>& rhs, double t0, const Vec<N>& y0, double t_end, const Options& opt,
                    const std::vector<Event<N>>& events = {}) {
  using namespace detail;
  Result<N> res;
  const double dir = t_end >= t0 ? 1.0 : -1.0;
  double t = t0;
  Vec<N> y = y0;
  Vec<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

  if (!rhs(t, y, k1)) throw SolverError("ode::integrate: initial state outside the domain");
  ++res.n_rhs;

  auto weight = [&](std::size_t k, double a, double b) {
    const double atol = k < opt.abs_scale.size() ? opt.abs_tol * opt.abs_scale[k] : opt.abs_tol;
    return atol + opt.rel_tol * std::max(std::abs(a), std::abs(b));
  };

  double h = opt.h_init;
  if (h <= 0.0) {
    double d0 = 0.0, d1n = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      const double w = weight(k, y[k], y[k]);
      d0 += (y[k] / w) * (y[k] / w);
      d1n += (k1[k] / w) * (k1[k] / w);
    }
    d0 = std::sqrt(d0 / N);
    d1n = std::sqrt(d1n / N);
    h = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
    h = std::min(h, std::abs(t_end - t0));
  }
  h = std::min(h, opt.h_max);

  std::vector<double> g_prev(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) g_prev[e] = events[e].f(t, y);

  bool last_rejected = false;
  for (long step = 0; step < opt.max_steps; ++step) {
    const double remaining = std::abs(t_end - t);
    if (remaining <= opt.h_min_rel * (std::abs(t) + 1.0)) {
      res.status = Status::reached_end;
      res.t_final = t;
      res.y_final = y;
      return res;
    }
    bool final_step = false;
    if (h >= remaining) {
      h = remaining;
      final_step = true;
    }
    const double hs = dir * h;

    bool ok = true;
    for (std::size_t k = 0; k < N; ++k) ytmp[k] = y[k] + hs * a21 * k1[k];
    ok = ok && rhs(t + c2 * hs, ytmp, k2);
    for (std::size_t k = 0; k < N && ok; ++k) ytmp[k] = y[k] + hs * (a31 * k1[k] + a32 * k2[k]);
    ok = ok && rhs(t + c3 * hs, ytmp, k3);
    for (std::size_t k = 0; k < N && ok; ++k) ytmp[k] = y[k] + hs * (a41 * k1[k] + a42 * k2[k] + a43 * k3[k]);
    ok = ok && rhs(t + c4 * hs, ytmp, k4);
    for (std::size_t k = 0; k < N && ok; ++k)
      ytmp[k] = y[k] + hs * (a51 * k1[k] + a52 * k2[k] + a53 * k3[k] + a54 * k4[k]);
    ok = ok && rhs(t + c5 * hs, ytmp, k5);
    for (std::size_t k = 0; k < N && ok; ++k)
      ytmp[k] = y[k] + hs * (a61 * k1[k] + a62 * k2[k] + a63 * k3[k] + a64 * k4[k] + a65 * k5[k]);
    ok = ok && rhs(t + hs, ytmp, k6);
    for (std::size_t k = 0; k < N && ok; ++k)
      ynew[k] = y[k] + hs * (a71 * k1[k] + a73 * k3[k] + a74 * k4[k] + a75 * k5[k] + a76 * k6[k]);
    ok = ok && rhs(t + hs, ynew, k7);
    res.n_rhs += 6;

    double err = std::numeric_limits<double>::infinity();
    if (ok && finite(ynew) && finite(k7)) {
      err = 0.0;
      for (std::size_t k = 0; k < N; ++k) {
        const double ek = hs * (e1 * k1[k] + e3 * k3[k] + e4 * k4[k] + e5 * k5[k] + e6 * k6[k] + e7 * k7[k]);
        const double w = weight(k, y[k], ynew[k]);
        err += (ek / w) * (ek / w);
      }
      err = std::sqrt(err / N);
    }

    if (!(err <= 1.0)) {
      const double fac = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.25;
      h *= std::min(fac, 0.9);
      last_rejected = true;
      if (h < opt.h_min_rel * (std::abs(t) + 1.0)) {
        res.status = Status::rejected_domain;
        res.t_final = t;
        res.y_final = y;
        return res;
      }
      continue;
    }

    DenseStep<N> ds;
    ds.t0 = t;
    ds.h = hs;
    for (std::size_t k = 0; k < N; ++k) {
      const double ydiff = ynew[k] - y[k];
      const double bspl = hs * k1[k] - ydiff;
      ds.r[0][k] = y[k];
      ds.r[1][k] = ydiff;
      ds.r[2][k] = bspl;
      ds.r[3][k] = ydiff - hs * k7[k] - bspl;
      ds.r[4][k] = hs * (d1 * k1[k] + d3 * k3[k] + d4 * k4[k] + d5 * k5[k] + d6 * k6[k] + d7 * k7[k]);
    }
    const double t_new = final_step ? t_end : t + hs;

    // events: earliest sign change within the step
    std::optional<EventHit<N>> first_terminal;
    std::vector<EventHit<N>> step_hits;
    for (std::size_t e = 0; e < events.size(); ++e) {
      const double ga = g_prev[e];
      const double gb = events[e].f(t_new, ynew);
      const bool rising = ga < 0 && gb >= 0;
      const bool falling = ga > 0 && gb <= 0;
      if ((rising && events[e].direction >= 0) || (falling && events[e].direction <= 0)) {
        double te;
        if (gb == 0.0) {
          te = t_new;
        } else {
          auto fe = [&](double tt) { return events[e].f(tt, ds(tt)); };
          te = illinois(fe, t, ga, t_new, gb, opt.event_tol);
        }
        EventHit<N> hit{events[e].id, te, te == t_new ? ynew : ds(te)};
        if (events[e].terminal) {
          if (!first_terminal || dir * (te - first_terminal->t) < 0) first_terminal = hit;
        } else {
          step_hits.push_back(hit);
        }
      }
      g_prev[e] = gb;
    }
    std::sort(step_hits.begin(), step_hits.end(),
              [dir](const EventHit<N>& a, const EventHit<N>& b) { return dir * (a.t - b.t) < 0; });
    if (first_terminal) {
      for (const auto& hh : step_hits)
        if (dir * (hh.t - first_terminal->t) <= 0) res.hits.push_back(hh);
      res.hits.push_back(*first_terminal);
      res.steps.push_back(ds);
      res.status = Status::terminal_event;
      res.t_final = first_terminal->t;
      res.y_final = first_terminal->y;
      return res;
    }
    for (const auto& hh : step_hits) res.hits.push_back(hh);
    res.steps.push_back(ds);

    t = t_new;
    y = ynew;
    k1 = k7;

    const double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= last_rejected ? std::min(1.0, fac) : std::min(5.0, std::max(0.2, fac));
    h = std::min(h, opt.h_max);
    last_rejected = false;
    if (final_step) {
      res.status = Status::reached_end;
      res.t_final = t;
      res.y_final = y;
      return res;
    }
  }
  throw SolverError("ode::integrate: maximum step count exceeded");
}

}  // namespace synge::ode

#endif  // SYNGE_ODE_HPP
