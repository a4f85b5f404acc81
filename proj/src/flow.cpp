#include "synge/flow.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

namespace synge {

namespace {

using Vec3 = ode::Vec<3>;
using Mode = Trajectory::Mode;

enum EventId {
  kUZero = 1,
  kA = 2,
  kUS1 = 3,
  kG = 4,
  kSwitchGamma = 5,
  kUeqS = 6,
  kPhiAZero = 7,
  kSwitchSlope = 8,
  kHorizon = 9,
};

constexpr double kStationaryU = 1e-9;

struct Local {
  EosPoint eos;
  double g;
  double dlnp_ds;  // (d-1) u (us-1) chi / g
  double du_ds;
};

double g_of(double s, double u, const EosPoint& e) {
  const double a = u * s - 1.0;
  const double b = u - s;
  return e.e_p * a * a - b * b;
}

bool valid(double u, double log_gamma) {
  return std::abs(u) < 1.0 && std::isfinite(log_gamma) && log_gamma < 700.0 && log_gamma > -700.0;
}

ode::Options ode_options(const SimParams& p) {
  ode::Options o;
  o.rel_tol = p.rel_tol;
  o.abs_tol = p.abs_tol;
  o.event_tol = p.event_tol;
  return o;
}

class Runner {
 public:
  Runner(const FlowState& init, const SimParams& params)
      : init_(init), prm_(params), gas_(params.gas), dm1_(params.d - 1.0) {}

  Local local(double s, double u, double log_gamma) const {
    Local l;
    l.eos = eos_point(gas_, std::exp(log_gamma));
    l.g = g_of(s, u, l.eos);
    l.dlnp_ds = dm1_ * u * (u * s - 1.0) * l.eos.chi / l.g;
    l.du_ds = dm1_ * u * (1.0 - u * u) * (u - s) / l.g;
    return l;
  }

  // s as independent variable: y = (u, ln gamma, ln p)
  ode::Rhs<3> rhs_s() const {
    return [this](double s, const Vec3& y, Vec3& dy) {
      if (!valid(y[0], y[1])) return false;
      const Local l = local(s, y[0], y[1]);
      if (!(l.g != 0.0) || !std::isfinite(l.g)) return false;
      dy[0] = l.du_ds;
      dy[2] = l.dlnp_ds;
      dy[1] = l.dlnp_ds / l.eos.g;
      return true;
    };
  }

  // ln p as independent variable: y = (s, u, ln gamma)
  ode::Rhs<3> rhs_log_p() const {
    return [this](double, const Vec3& y, Vec3& dy) {
      const double s = y[0], u = y[1];
      if (!valid(u, y[2])) return false;
      const EosPoint e = eos_point(gas_, std::exp(y[2]));
      const double us1 = u * s - 1.0;
      const double denom = us1 * e.chi;
      if (!(denom != 0.0) || u == 0.0) return false;
      dy[0] = g_of(s, u, e) / (dm1_ * u * denom);
      dy[1] = (1.0 - u * u) * (u - s) / denom;
      dy[2] = 1.0 / e.g;
      return std::isfinite(dy[0]) && std::isfinite(dy[1]);
    };
  }

  // u as independent variable: y = (s, ln gamma, ln p)
  ode::Rhs<3> rhs_u() const {
    return [this](double u, const Vec3& y, Vec3& dy) {
      const double s = y[0];
      if (!valid(u, y[1])) return false;
      const EosPoint e = eos_point(gas_, std::exp(y[1]));
      const double den = (1.0 - u * u) * (u - s);
      if (!(den != 0.0) || u == 0.0) return false;
      dy[0] = g_of(s, u, e) / (dm1_ * u * den);
      dy[2] = (u * s - 1.0) * e.chi / den;
      dy[1] = dy[2] / e.g;
      return true;
    };
  }

  OdeSegment run();
  OdeSegment run_arc(double s0, double s_end);

 private:
  void add_pieces(Mode mode, const ode::Result<3>& r) {
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
      const bool last = k + 1 == r.steps.size();
      traj_->append(mode, r.steps[k], last ? r.t_final : r.steps[k].t1());
    }
  }
  void record_hits(Mode mode, const ode::Result<3>& r) {
    for (const auto& h : r.hits) {
      const double s = mode == Mode::s ? h.t : h.y[0];
      switch (h.id) {
        case kUeqS: seg_.events.push_back({"u_equals_s", s}); break;
        case kPhiAZero: seg_.events.push_back({"phiA_zero", s}); break;
        case kSwitchGamma: seg_.events.push_back({"switch_log_p", s}); break;
        case kSwitchSlope: seg_.events.push_back({"switch_u", s}); break;
        default: break;
      }
    }
  }
  void finish_samples();

  FlowState init_;
  SimParams prm_;
  GasKind gas_;
  double dm1_;
  OdeSegment seg_;
  std::shared_ptr<Trajectory> traj_ = std::make_shared<Trajectory>();
};

OdeSegment Runner::run() {
  seg_.isentrope = IsentropeRef{init_.gamma, init_.p};
  seg_.gas = gas_;
  const double sign_u = init_.u > 0 ? 1.0 : -1.0;
  const double log_switch = std::log(prm_.switch_gamma);
  const auto opts = ode_options(prm_);

  std::vector<ode::Event<3>> ev;
  ev.push_back({kUZero, [](double, const Vec3& y) { return y[0]; }, static_cast<int>(-sign_u), true});
  ev.push_back({kA,
                [this](double s, const Vec3& y) {
                  if (s <= 1.0) return -1.0;
                  return y[0] - phi_A(s, std::exp(y[1]), gas_);
                },
                +1, true});
  ev.push_back({kUS1, [](double s, const Vec3& y) { return y[0] * s - 1.0; }, +1, true});
  ev.push_back({kG, [this](double s, const Vec3& y) { return g_of(s, y[0], eos_point(gas_, std::exp(y[1]))); },
                -1, true});
  ev.push_back({kUeqS, [](double s, const Vec3& y) { return y[0] - s; }, 0, false});
  ev.push_back({kPhiAZero, [this](double s, const Vec3& y) { return s - eos_point(gas_, std::exp(y[1])).sqrt_e_p; },
                +1, false});
  if (sign_u > 0) {
    ev.push_back({kSwitchGamma, [log_switch](double, const Vec3& y) { return y[1] - log_switch; }, +1, true});
  } else {
    ev.push_back({kSwitchSlope,
                  [this](double s, const Vec3& y) {
                    if (s <= 1.0) return -1.0;
                    return std::abs(local(s, y[0], y[1]).du_ds) - prm_.switch_slope;
                  },
                  +1, true});
  }

  const Vec3 y0{init_.u, std::log(init_.gamma), std::log(init_.p)};
  // u can be tiny (u0 -> 0) while its zero still has to be located to event_tol
  auto opts_s = opts;
  opts_s.abs_scale = {std::min(1.0, std::abs(init_.u)), 1.0, 1.0};
  auto r = ode::integrate<3>(rhs_s(), 0.0, y0, prm_.s_max, opts_s, ev);
  add_pieces(Mode::s, r);
  record_hits(Mode::s, r);

  if (r.status == ode::Status::rejected_domain) {
    throw SolverError("integrate: step size underflow at s = " + std::to_string(r.t_final));
  }
  if (r.status == ode::Status::reached_end) {
    seg_.terminal_event = TerminalEvent::horizon;
  } else {
    const int id = r.hits.back().id;
    const double s_hit = r.t_final;
    const Vec3 yh = r.y_final;
    // For u0 > 0 the stationary point s* = sqrt(e_p) is a node where u, phi_A and g vanish
    // together, so whichever root is located first stands for u = 0.
    const bool stationary = sign_u > 0 && std::abs(yh[0]) <= kStationaryU;
    if (id == kUZero || (stationary && (id == kA || id == kG))) {
      seg_.terminal_event = TerminalEvent::u_hits_zero;
    } else if (id == kA) {
      seg_.terminal_event = TerminalEvent::u_hits_phiA;
    } else if (id == kUS1) {
      seg_.terminal_event = TerminalEvent::u_hits_one_over_s;
    } else if (id == kG) {
      seg_.terminal_event = TerminalEvent::g_hits_zero;
    } else if (id == kSwitchGamma) {
      // toward vacuum: t = ln p decreasing
      std::vector<ode::Event<3>> ev2;
      const double s_max = prm_.s_max;
      ev2.push_back({kHorizon, [s_max](double, const Vec3& y) { return y[0] - s_max; }, +1, true});
      ev2.push_back({kUZero, [](double, const Vec3& y) { return y[1]; }, -1, true});
      ev2.push_back({kUS1, [](double, const Vec3& y) { return y[0] * y[1] - 1.0; }, +1, true});
      const Vec3 z0{s_hit, yh[0], yh[1]};
      auto r2 = ode::integrate<3>(rhs_log_p(), yh[2], z0, std::log(prm_.vacuum_p), opts, ev2);
      add_pieces(Mode::log_p, r2);
      record_hits(Mode::log_p, r2);
      if (r2.status == ode::Status::rejected_domain) {
        throw SolverError("integrate: step size underflow approaching vacuum at s = " +
                          std::to_string(r2.y_final[0]));
      }
      if (r2.status == ode::Status::reached_end) {
        seg_.terminal_event = TerminalEvent::p_hits_zero;
      } else {
        const int id2 = r2.hits.back().id;
        // u s - 1 only reaches zero together with p; once it resolves to rounding the state is vacuum
        seg_.terminal_event = id2 == kHorizon  ? TerminalEvent::horizon
                              : id2 == kUZero ? TerminalEvent::u_hits_zero
                                              : TerminalEvent::p_hits_zero;
      }
    } else if (id == kSwitchSlope) {
      // toward the fold where g -> 0: t = u increasing, ds/du -> 0
      std::vector<ode::Event<3>> ev2;
      ev2.push_back({kG,
                     [this](double u, const Vec3& y) { return g_of(y[0], u, eos_point(gas_, std::exp(y[1]))); },
                     -1, true});
      ev2.push_back({kPhiAZero,
                     [this](double, const Vec3& y) { return y[0] - eos_point(gas_, std::exp(y[1])).sqrt_e_p; }, +1,
                     false});
      const Vec3 z0{s_hit, yh[1], yh[2]};
      auto r2 = ode::integrate<3>(rhs_u(), yh[0], z0, 0.0, opts, ev2);
      add_pieces(Mode::u, r2);
      record_hits(Mode::u, r2);
      if (r2.status != ode::Status::terminal_event) {
        throw SolverError("integrate: blow-up fold not reached before u = 0");
      }
      seg_.terminal_event = TerminalEvent::u_hits_phiA;
    }
  }
  finish_samples();
  return std::move(seg_);
}

OdeSegment Runner::run_arc(double s0, double s_end) {
  seg_.isentrope = IsentropeRef{init_.gamma, init_.p};
  seg_.gas = gas_;
  std::vector<ode::Event<3>> ev;
  ev.push_back({kUS1, [](double s, const Vec3& y) { return y[0] * s - 1.0; }, +1, true});
  // g < 0 behind the shock; reaching g = 0 from below would be a second characteristic
  ev.push_back({kG, [this](double s, const Vec3& y) { return g_of(s, y[0], eos_point(gas_, std::exp(y[1]))); },
                +1, true});
  ev.push_back({kUeqS, [](double s, const Vec3& y) { return y[0] - s; }, 0, false});
  const Vec3 y0{init_.u, std::log(init_.gamma), std::log(init_.p)};
  auto r = ode::integrate<3>(rhs_s(), s0, y0, s_end, ode_options(prm_), ev);
  add_pieces(Mode::s, r);
  record_hits(Mode::s, r);
  if (r.status == ode::Status::rejected_domain) {
    throw SolverError("integrate_arc: step size underflow at s = " + std::to_string(r.t_final));
  }
  if (r.status == ode::Status::reached_end) {
    seg_.terminal_event = TerminalEvent::horizon;
  } else {
    seg_.terminal_event = r.hits.back().id == kUS1 ? TerminalEvent::u_hits_one_over_s : TerminalEvent::g_hits_zero;
  }
  finish_samples();
  return std::move(seg_);
}

void Runner::finish_samples() {
  seg_.path = traj_;
  const auto& pieces = traj_->pieces();
  auto push = [&](const Trajectory::Point& pt) {
    const double gamma = std::exp(pt.log_gamma);
    const double p_rec = std::exp(isentrope_log_p(gas_, seg_.isentrope, gamma));
    const double drift = std::abs(std::expm1(pt.log_p - std::log(p_rec)));
    seg_.max_isentrope_drift = std::max(seg_.max_isentrope_drift, drift);
    seg_.s_grid.push_back(pt.s);
    seg_.states.push_back({pt.u, gamma, p_rec});
  };
  if (pieces.empty()) return;
  push(traj_->eval(pieces.front(), pieces.front().step.t0));
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto pt = traj_->eval(pieces[k], pieces[k].t_stop);
    if (pt.s > seg_.s_grid.back()) {
      push(pt);
    } else if (k + 1 == pieces.size()) {
      // near vacuum s stalls at rounding level; the terminal point still replaces the last sample
      seg_.s_grid.pop_back();
      seg_.states.pop_back();
      push(pt);
    }
  }
}

double ubar_integrand(GasKind gas, double gamma) {
  const EosPoint e = eos_point(gas, gamma);
  return std::sqrt(e.g * (e.g + 1.0) / e.chi);  // times d ln gamma
}

// Shrinks [lo, hi] (lo in Case II, hi global) to the smallest u0 that still reaches s_max.
template <class F>
double bisect_global(F&& regime_at, double lo, double hi, int iterations) {
  for (int k = 0; k < iterations && hi - lo > 1e-15; ++k) {
    const double mid = 0.5 * (lo + hi);
    const Regime r = regime_at(mid);
    if (r == Regime::CaseII_stationary) {
      lo = mid;
    } else if (r == Regime::CaseIII_global) {
      hi = mid;
    } else {
      break;
    }
  }
  return hi;
}

}  // namespace

// ---------------------------------------------------------------------------

void SimParams::validate() const {
  if (d != 2 && d != 3) throw DomainError("SimParams: d must be 2 or 3");
  if (!(rel_tol > 0 && abs_tol > 0 && event_tol > 0)) throw DomainError("SimParams: tolerances must be positive");
  if (!(s_max > 0)) throw DomainError("SimParams: s_max must be positive");
}

std::string to_string(TerminalEvent e) {
  switch (e) {
    case TerminalEvent::none: return "none";
    case TerminalEvent::u_hits_phiA: return "u_hits_phiA";
    case TerminalEvent::p_hits_zero: return "p_hits_zero";
    case TerminalEvent::u_hits_zero: return "u_hits_zero";
    case TerminalEvent::u_hits_one_over_s: return "u_hits_one_over_s";
    case TerminalEvent::g_hits_zero: return "g_hits_zero";
    case TerminalEvent::horizon: return "horizon";
  }
  return "none";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::CaseI_vacuum: return "CaseI_vacuum";
    case Regime::CaseII_stationary: return "CaseII_stationary";
    case Regime::CaseIII_global: return "CaseIII_global";
    case Regime::Shocked: return "Shocked";
    case Regime::Constant: return "Constant";
  }
  return "Constant";
}

void Trajectory::append(Mode mode, const ode::DenseStep<3>& step, double t_stop) {
  Piece pc{mode, step, t_stop, 0.0, 0.0};
  const double a = eval(pc, step.t0).s;
  const double b = eval(pc, t_stop).s;
  pc.s_lo = std::min(a, b);
  pc.s_hi = std::max(a, b);
  pieces_.push_back(pc);
}

double Trajectory::s_begin() const { return pieces_.front().s_lo; }
double Trajectory::s_end() const { return pieces_.back().s_hi; }

Trajectory::Point Trajectory::eval(const Piece& pc, double t) const {
  const Vec3 y = pc.step(t);
  switch (pc.mode) {
    case Mode::s: return {t, y[0], y[1], y[2]};
    case Mode::log_p: return {y[0], y[1], y[2], t};
    case Mode::u: return {y[0], t, y[1], y[2]};
  }
  return {};
}

Trajectory::Point Trajectory::at_s(double s) const {
  if (pieces_.empty()) throw DomainError("Trajectory: empty");
  if (s < s_begin() || s > s_end()) throw DomainError("Trajectory: s outside the integrated range");
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), s,
                             [](const Piece& pc, double v) { return pc.s_hi < v; });
  if (it == pieces_.end()) it = std::prev(pieces_.end());
  const Piece& pc = *it;
  if (pc.mode == Mode::s) return eval(pc, s);
  // invert s(t) on this piece
  double a = pc.step.t0, b = pc.t_stop;
  double fa = eval(pc, a).s - s, fb = eval(pc, b).s - s;
  if (fa == 0.0) return eval(pc, a);
  if (fb == 0.0 || (fa > 0) == (fb > 0)) return eval(pc, b);
  for (int k = 0; k < 200 && std::abs(b - a) > 1e-16 * (std::abs(a) + std::abs(b)); ++k) {
    const double m = 0.5 * (a + b);
    const double fm = eval(pc, m).s - s;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return eval(pc, 0.5 * (a + b));
}

FlowState OdeSegment::at(double s) const {
  if (!path || path->empty()) {
    // constant segment
    return states.front();
  }
  const auto pt = path->at_s(s);
  const double gamma = std::exp(pt.log_gamma);
  return {pt.u, gamma, reconstruct_p(*this, gas, gamma)};
}

double reconstruct_p(const OdeSegment& seg, GasKind gas, double gamma) {
  return isentrope_p(gas, seg.isentrope, gamma);
}

double denom_g(double s, const FlowState& st, GasKind gas) { return g_of(s, st.u, eos_point(gas, st.gamma)); }

double factor_A(double s, const FlowState& st, GasKind gas) {
  const double r = eos_point(gas, st.gamma).sqrt_e_p;
  return (r * s - 1.0) * st.u - (r - s);
}

double factor_B(double s, const FlowState& st, GasKind gas) {
  const double r = eos_point(gas, st.gamma).sqrt_e_p;
  return (r * s + 1.0) * st.u - (r + s);
}

double phi_A(double s, double gamma, GasKind gas) {
  if (!(s > 1.0)) throw DomainError("phi_A: requires s > 1");
  const double r = eos_point(gas, gamma).sqrt_e_p;
  return (r - s) / (r * s - 1.0);
}

double phi_B(double s, double gamma, GasKind gas) {
  if (!(s > 1.0)) throw DomainError("phi_B: requires s > 1");
  const double r = eos_point(gas, gamma).sqrt_e_p;
  return (r + s) / (r * s + 1.0);
}

double lambda_plus(const FlowState& st, GasKind gas) {
  const double r = eos_point(gas, st.gamma).sqrt_e_p;
  return (r * st.u + 1.0) / (r + st.u);
}

Derivatives rhs(double s, const FlowState& st, const SimParams& prm) {
  if (!(std::abs(st.u) < 1.0)) throw DomainError("rhs: |u| must be < 1");
  if (!(st.p > 0.0)) throw DomainError("rhs: p must be positive");
  const EosPoint e = eos_point(prm.gas, st.gamma);
  const double g = g_of(s, st.u, e);
  if (!(std::abs(g) > prm.g_floor)) throw SolverError("rhs: singular denominator g");
  const double dm1 = prm.d - 1.0;
  const double dlnp = dm1 * st.u * (st.u * s - 1.0) * e.chi / g;
  return {dm1 * st.u * (1.0 - st.u * st.u) * (st.u - s) / g, st.gamma * dlnp / e.g, st.p * dlnp};
}

double vacuum_threshold_ubar(GasKind gas, const IsentropeRef& ref, double tail_split) {
  if (!(ref.gamma_ref > 0.0)) throw DomainError("vacuum_threshold_ubar: gamma must be positive");
  using boost::math::quadrature::gauss_kronrod;
  constexpr double tol = 1e-12;  // tighter requests only hit the Kronrod error floor and recurse to max depth
  double err = 0.0, total_err = 0.0, body = 0.0;
  const double split = std::max(tail_split, ref.gamma_ref);
  if (split > ref.gamma_ref) {
    auto f = [gas](double t) { return ubar_integrand(gas, std::exp(t)); };
    body = gauss_kronrod<double, 61>::integrate(f, std::log(ref.gamma_ref), std::log(split), 12, tol, &err);
    total_err += err;
  }
  // tail with gamma = x^-2: d ln gamma = -2 dx / x, integrand ~ x near 0
  auto ft = [gas](double x) {
    if (x <= 0.0) return 0.0;
    const double gamma = 1.0 / (x * x);
    return 2.0 * ubar_integrand(gas, gamma) / x;
  };
  const double tail = gauss_kronrod<double, 61>::integrate(ft, 0.0, 1.0 / std::sqrt(split), 12, tol, &err);
  total_err += err;
  const double I = body + tail;
  if (!(total_err <= 1e-10 * std::max(1.0, I))) {
    throw ConvergenceError("vacuum_threshold_ubar: quadrature did not converge", total_err);
  }
  return std::tanh(I);
}

OdeSegment integrate(const FlowState& initial, const SimParams& params) {
  params.validate();
  if (!(std::abs(initial.u) < 1.0)) throw DomainError("integrate: |u0| must be < 1");
  if (!(initial.gamma > 0.0) || !(initial.p > 0.0)) throw DomainError("integrate: gamma0 and p0 must be positive");
  if (initial.u == 0.0) {
    OdeSegment seg;
    seg.isentrope = {initial.gamma, initial.p};
    seg.gas = params.gas;
    seg.s_grid = {0.0, params.s_max};
    seg.states = {initial, initial};
    seg.terminal_event = TerminalEvent::horizon;
    return seg;
  }
  Runner runner(initial, params);
  return runner.run();
}

OdeSegment integrate_arc(double s0, const FlowState& state, const SimParams& params, double s_end) {
  params.validate();
  if (!(std::abs(state.u) < 1.0) || !(state.gamma > 0.0) || !(state.p > 0.0)) {
    throw DomainError("integrate_arc: invalid start state");
  }
  if (!(s_end > s0)) throw DomainError("integrate_arc: s_end must exceed s0");
  Runner runner(state, params);
  return runner.run_arc(s0, s_end);
}

PositiveResult classify_positive(const FlowState& initial, const SimParams& params) {
  if (!(initial.u >= 0.0 && initial.u < 1.0)) throw DomainError("classify_positive: u0 must be in [0, 1)");
  OdeSegment seg = integrate(initial, params);
  const double s_end = seg.s_end();
  FlowState last = seg.states.back();
  if (initial.u == 0.0) return {Regime::Constant, std::move(seg), params.s_max, initial};

  switch (seg.terminal_event) {
    case TerminalEvent::p_hits_zero:
    case TerminalEvent::u_hits_one_over_s: {
      const double p_tol = 1e-12 * initial.p;
      if (!(last.p < p_tol)) {
        throw SolverError("classify_positive: u s = 1 reached at s = " + std::to_string(s_end) +
                          " with p = " + std::to_string(last.p) + " not at vacuum");
      }
      last.p = 0.0;  // frozen vacuum beyond s*
      return {Regime::CaseI_vacuum, std::move(seg), s_end, last};
    }
    case TerminalEvent::u_hits_zero:
      return {Regime::CaseII_stationary, std::move(seg), s_end, last};
    case TerminalEvent::horizon: {
      for (std::size_t k = 0; k < seg.s_grid.size(); ++k) {
        const double s = seg.s_grid[k];
        if (s <= 1.0) continue;
        const double u = seg.states[k].u;
        const double pa = phi_A(s, seg.states[k].gamma, params.gas);
        if (!(u > 0.0 && u < pa && pa < 1.0 / s)) {
          throw SolverError("classify_positive: horizon reached but 0 < u < phi_A < 1/s fails at s = " +
                            std::to_string(s));
        }
      }
      return {Regime::CaseIII_global, std::move(seg), s_end, last};
    }
    case TerminalEvent::u_hits_phiA:
      throw SolverError("classify_positive: u = phi_A at s = " + std::to_string(s_end) + " with u = " +
                        std::to_string(last.u) + ", p = " + std::to_string(last.p) +
                        " (neither vacuum nor stationary)");
    default:
      throw SolverError("classify_positive: terminal event " + to_string(seg.terminal_event) +
                        " at s = " + std::to_string(s_end) + " is not admissible for u0 > 0");
  }
}

BlowupResult find_blowup_sbar(const FlowState& initial, const SimParams& params) {
  if (!(initial.u < 0.0 && initial.u > -1.0)) throw DomainError("find_blowup_sbar: u0 must be in (-1, 0)");
  OdeSegment seg = integrate(initial, params);
  if (seg.terminal_event != TerminalEvent::u_hits_phiA) {
    throw SolverError("find_blowup_sbar: run ended with " + to_string(seg.terminal_event) + " at s = " +
                      std::to_string(seg.s_end()) + " before u met phi_A");
  }
  double s_hat = std::numeric_limits<double>::quiet_NaN();
  for (const auto& e : seg.events) {
    if (e.kind == "phiA_zero") {
      s_hat = e.s;
      break;
    }
  }
  if (!std::isfinite(s_hat)) throw SolverError("find_blowup_sbar: phi_A never vanished before the fold");
  const double s_bar = seg.s_end();
  return {s_bar, s_hat, std::move(seg)};
}

double case_boundary_u0(const FlowState& base, const SimParams& params, double lo, double hi, int iterations) {
  if (!(0.0 < lo && lo < hi && hi < 1.0)) throw DomainError("case_boundary_u0: need 0 < lo < hi < 1");
  auto regime_at = [&](double u0) {
    FlowState st = base;
    st.u = u0;
    return classify_positive(st, params).regime;
  };
  // lo must end stationary and hi must not
  const Regime r_lo = regime_at(lo);
  if (r_lo == Regime::CaseIII_global) return lo;
  if (r_lo != Regime::CaseII_stationary) throw DomainError("case_boundary_u0: lo is not in Case II");
  const Regime r_hi = regime_at(hi);
  if (r_hi == Regime::CaseII_stationary) throw DomainError("case_boundary_u0: hi is still in Case II");
  if (r_hi == Regime::CaseIII_global) return bisect_global(regime_at, lo, hi, iterations);
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    const Regime r = regime_at(mid);
    if (r == Regime::CaseIII_global) return bisect_global(regime_at, lo, mid, iterations - k - 1);
    if (r == Regime::CaseII_stationary) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw SolverError("case_boundary_u0: no u0 surviving to s_max found between " + std::to_string(lo) + " and " +
                    std::to_string(hi));
}

}  // namespace synge
