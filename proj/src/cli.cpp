#include "synge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "synge/bessel.hpp"
#include "synge/errors.hpp"
#include "synge/flow.hpp"
#include "synge/piston.hpp"
#include "synge/shock.hpp"

namespace synge::cli {

using nlohmann::json;

namespace {

SimParams sim_params(const RunConfig& cfg) {
  SimParams p;
  p.d = cfg.d;
  p.gas = cfg.gas;
  p.rel_tol = cfg.ode_rel;
  p.abs_tol = cfg.ode_abs;
  p.event_tol = cfg.event_tol;
  p.s_max = cfg.s_max;
  p.validate();
  return p;
}

json state_json(const FlowState& st, double p0) {
  return {{"u_over_c", st.u}, {"gamma", st.gamma}, {"p_over_p0", st.p / p0}};
}

json events_json(std::vector<EventRecord> ev) {
  std::stable_sort(ev.begin(), ev.end(), [](const EventRecord& a, const EventRecord& b) { return a.s < b.s; });
  json a = json::array();
  for (const auto& e : ev) a.push_back({{"kind", e.kind}, {"cs", e.s}});
  return a;
}

json config_json(const RunConfig& cfg) {
  json j{{"command", cfg.command}, {"gas", std::string(gas_name(cfg.gas))}, {"dim", cfg.d}};
  if (cfg.command == "solve" || cfg.command == "piston") {
    j["gamma0"] = cfg.gamma0;
    j["p0"] = cfg.p0;
    j["s_max"] = cfg.s_max;
    j["ode_rel"] = cfg.ode_rel;
    j["ode_abs"] = cfg.ode_abs;
    j["event_tol"] = cfg.event_tol;
    j["samples"] = cfg.samples;
  }
  if (cfg.command == "solve") {
    j["u0_over_c"] = cfg.u0;
    j["tol_shock_u"] = cfg.shock_u;
  }
  if (cfg.command == "piston") j["alpha_over_c"] = cfg.alpha;
  return j;
}

class CsvWriter {
 public:
  CsvWriter() { os_ << kCsvHeader << '\n'; }
  void row(double s, const FlowState& st, double p0, const std::string& regime, int segment) {
    os_ << format_number(s) << ',' << format_number(st.u) << ',' << format_number(st.gamma) << ','
        << format_number(st.p / p0) << ',' << regime << ',' << segment << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

// n points on [a, b], both ends included.
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = k + 1 == n ? b : a + (b - a) * k / (n - 1);
  return x;
}

void dump_value(const json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump_value(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        dump_value(j[k], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

json error_summary(const RunConfig& cfg, const std::string& kind, const std::string& msg) {
  return {{"config", config_json(cfg)}, {"error", {{"kind", kind}, {"message", msg}}}};
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += '\n';
  return out;
}

void RunConfig::validate() const {
  static const char* cmds[] = {"solve", "piston", "certify", "eos-table"};
  if (std::find(std::begin(cmds), std::end(cmds), command) == std::end(cmds)) {
    throw DomainError("unknown command '" + command + "'");
  }
  if (d != 2 && d != 3) throw DomainError("--dim must be 2 or 3");
  if (!(u0 > -1.0 && u0 < 1.0)) throw DomainError("--u0 must lie in (-1, 1)");
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw DomainError("--gamma0 must be positive");
  if (!(p0 > 0.0) || !std::isfinite(p0)) throw DomainError("--p0 must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("--alpha must lie in (0, 1)");
  if (!(s_max > 0.0) || !std::isfinite(s_max)) throw DomainError("--s-max must be positive");
  if (!(ode_rel > 0.0) || !(ode_abs > 0.0) || !(event_tol > 0.0) || !(shock_u > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (samples < 2) throw DomainError("--samples must be at least 2");
  if (count < 1) throw DomainError("--count must be positive");
  // a single row only reads gamma_min
  if (!(gamma_min > 0.0) || !std::isfinite(gamma_min) ||
      (count > 1 && (!(gamma_max >= gamma_min) || !std::isfinite(gamma_max)))) {
    throw DomainError("need 0 < --gamma-min <= --gamma-max");
  }
  if (command == "certify") grid.validate();
}

CommandOutput cmd_solve(const RunConfig& cfg) {
  cfg.validate();
  const SimParams prm = sim_params(cfg);
  const FlowState init{cfg.u0, cfg.gamma0, cfg.p0};
  CommandOutput out;
  CsvWriter csv;
  json sum{{"config", config_json(cfg)}};

  if (cfg.u0 >= 0.0) {
    PositiveResult res = classify_positive(init, prm);
    const std::string regime = to_string(res.regime);
    const double s_end = std::min(cfg.s_max, res.s_star);
    const auto s = linspace(0.0, s_end, cfg.samples);
    for (std::size_t k = 0; k < s.size(); ++k) {
      FlowState st = init;
      if (res.regime != Regime::Constant && k > 0) st = k + 1 == s.size() ? res.terminal : res.segment.at(s[k]);
      csv.row(s[k], st, cfg.p0, regime, 0);
    }
    sum["regime"] = regime;
    sum["events"] = events_json(res.segment.events);
    sum["terminal"] = {{"kind", to_string(res.segment.terminal_event)}, {"cs", res.s_star}};
    sum["terminal"]["state"] = state_json(res.terminal, cfg.p0);
    sum["max_isentrope_drift"] = res.segment.max_isentrope_drift;
  } else {
    const BlowupResult blow = find_blowup_sbar(init, prm);
    ShockOptions so;
    so.u_tol = cfg.shock_u;
    const ShockRecord rec = find_shock_sstar(blow.segment, prm, so);
    const std::string regime = to_string(Regime::Shocked);
    // Downstream of the shock the flow is the constant state at rest behind it.
    const double s_end = std::max(cfg.s_max, rec.s_star);
    std::vector<double> s = linspace(0.0, s_end, cfg.samples);
    for (double x : s) {
      if (x < rec.s_star) csv.row(x, x == 0.0 ? init : blow.segment.at(x), cfg.p0, regime, 0);
    }
    csv.row(rec.s_star, rec.upstream, cfg.p0, regime, 0);
    csv.row(rec.s_star, rec.downstream, cfg.p0, regime, 1);
    for (double x : s) {
      if (x > rec.s_star) csv.row(x, rec.downstream, cfg.p0, regime, 1);
    }
    auto events = blow.segment.events;
    events.push_back({"shock", rec.s_star});
    sum["regime"] = regime;
    sum["events"] = events_json(events);
    sum["blowup"] = {{"cs_bar", blow.s_bar}, {"cs_hat", blow.s_hat}};
    sum["shock"] = {{"cs_star", rec.s_star},
                    {"sigma", rec.sigma},
                    {"upstream", state_json(rec.upstream, cfg.p0)},
                    {"downstream", state_json(rec.downstream, cfg.p0)},
                    {"lax_margin", rec.lax_margin},
                    {"entropy_ratio", rec.entropy_ratio},
                    {"jump_residual", rec.lab_residual},
                    {"jacobian_det", rec.jacobian_det}};
    sum["max_isentrope_drift"] = blow.segment.max_isentrope_drift;
  }
  out.csv = csv.str();
  out.summary = std::move(sum);
  return out;
}

CommandOutput cmd_piston(const RunConfig& cfg) {
  cfg.validate();
  const SimParams prm = sim_params(cfg);
  PistonProblem pb;
  pb.alpha = cfg.alpha;
  pb.p0 = cfg.p0;
  pb.gamma0 = cfg.gamma0;
  pb.gas = cfg.gas;
  pb.d = cfg.d;
  const PistonSolution sol = solve_piston(pb, 1e-8, prm);
  const std::string regime = "Piston";
  const FlowState rest{0.0, cfg.gamma0, cfg.p0};

  CsvWriter csv;
  const auto s = linspace(0.0, sol.s_tilde, cfg.samples);
  for (double x : s) {
    if (x < sol.s_P) csv.row(x, rest, cfg.p0, regime, 0);
  }
  csv.row(sol.s_P, rest, cfg.p0, regime, 0);
  csv.row(sol.s_P, sol.shock.downstream, cfg.p0, regime, 1);
  // a weak shock sits in a thin sonic layer that the uniform samples would skip over
  double last = sol.s_P;
  for (std::size_t k = 1; k < sol.layer_s.size(); ++k) {
    if (!(sol.layer_s[k] > last)) continue;  // distinct cs only
    last = sol.layer_s[k];
    csv.row(last, sol.layer_states[k], cfg.p0, regime, 1);
  }
  for (double x : s) {
    if (x > sol.s_P && x >= sol.arc.s_begin()) csv.row(x, sol.arc.at(std::min(x, sol.arc.s_end())), cfg.p0, regime, 1);
  }

  CommandOutput out;
  out.csv = csv.str();
  auto events = sol.arc.events;
  events.insert(events.begin(), EventRecord{"shock", sol.s_P});
  out.summary = {{"config", config_json(cfg)},
                 {"regime", regime},
                 {"events", events_json(events)},
                 {"shock",
                  {{"cs_star", sol.s_P},
                   {"sigma", sol.shock.sigma},
                   {"upstream", state_json(sol.shock.upstream, cfg.p0)},
                   {"downstream", state_json(sol.shock.downstream, cfg.p0)},
                   {"lax_margin", sol.shock.lax_margin},
                   {"entropy_ratio", sol.shock.entropy_ratio},
                   {"entropy_jump", sol.shock.entropy_jump},
                   {"pressure_jump", sol.shock.pressure_jump},
                   {"strength_theta", sol.theta},
                   {"jump_residual", sol.shock.lab_residual}}},
                 {"piston",
                  {{"cs_P", sol.s_P},
                   {"cs_P_minus_cs_bar", sol.x_P},
                   {"cs_tilde", sol.s_tilde},
                   {"cs_bar", sol.s_bar},
                   {"residual", sol.residual}}},
                 {"max_isentrope_drift", sol.arc.max_isentrope_drift}};
  return out;
}

CommandOutput cmd_certify(const RunConfig& cfg) {
  cfg.validate();
  CertOptions opt;
  opt.grid = cfg.grid;
  opt.inject_fault = cfg.inject_fault;
  opt.parallel = !cfg.serial;
  const CertReport rep = certify_all(opt);

  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"family", c.family},
                      {"name", c.name},
                      {"gas", c.gas},
                      {"grid", c.grid},
                      {"points", c.points},
                      {"failures", c.failures},
                      {"pass", c.passed},
                      {"worst_margin", c.worst_margin},
                      {"arg_worst", c.arg_worst},
                      {"detail", c.detail}});
  }
  CommandOutput out;
  out.exit_code = rep.all_passed() ? kOk : kCheckFailure;
  out.summary = {{"label", rep.label},
                 {"grid", cfg.grid.describe()},
                 {"families", rep.families()},
                 {"all_passed", rep.all_passed()},
                 {"checks", checks}};
  if (!rep.all_passed()) {
    json failing = json::array();
    for (const auto& c : rep.checks) {
      if (!c.passed) failing.push_back(c.name + " (" + c.gas + ")");
    }
    out.summary["failing"] = failing;
  }
  return out;
}

CommandOutput cmd_eos_table(const RunConfig& cfg) {
  cfg.validate();
  std::ostringstream os;
  os << "gamma,h0,h1,Phi,e_over_p,e_p,p_epp,lambda_tilde\n";
  const int n = cfg.count;
  const double a = std::log(cfg.gamma_min), b = std::log(cfg.gamma_max);
  for (int k = 0; k < n; ++k) {
    const double g = n == 1 ? cfg.gamma_min : k + 1 == n ? cfg.gamma_max : std::exp(a + (b - a) * k / (n - 1));
    const double vals[] = {g,
                           ratio_h(0, g),
                           ratio_h(1, g),
                           phi(cfg.gas, g),
                           e_of(cfg.gas, g, 1.0),
                           e_p(cfg.gas, g),
                           p_epp(cfg.gas, g),
                           char_speed(cfg.gas, g)};
    for (std::size_t i = 0; i < std::size(vals); ++i) os << (i ? "," : "") << format_number(vals[i]);
    os << '\n';
  }
  CommandOutput out;
  out.csv = os.str();
  out.summary = {{"config", config_json(cfg)}, {"rows", n}};
  return out;
}

CommandOutput run_command(const RunConfig& cfg) {
  try {
    if (cfg.command == "solve") return cmd_solve(cfg);
    if (cfg.command == "piston") return cmd_piston(cfg);
    if (cfg.command == "certify") return cmd_certify(cfg);
    if (cfg.command == "eos-table") return cmd_eos_table(cfg);
    cfg.validate();
  } catch (const DomainError& e) {
    return {kUsage, "", error_summary(cfg, "domain", e.what())};
  } catch (const ConvergenceError& e) {
    auto j = error_summary(cfg, "convergence", e.what());
    j["error"]["achieved"] = e.achieved();
    return {kSolverFailure, "", j};
  } catch (const std::exception& e) {
    return {kSolverFailure, "", error_summary(cfg, "solver", e.what())};
  }
  return {kUsage, "", error_summary(cfg, "usage", "no command")};
}

namespace {

std::string env_name(const std::string& flag) {
  std::string s = kEnvPrefix;
  for (char c : flag) s += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "cannot write " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Self-similar radial flows of relativistic Synge gases"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string gas = "mono";
  auto flag = [&](const std::string& name, auto& target, const std::string& help) {
    return app.add_option("--" + name, target, help)->envname(env_name(name))->capture_default_str();
  };
  flag("gas", gas, "mono or diat")->check(CLI::IsMember({"mono", "diat"}));
  flag("dim", cfg.d, "spatial dimension")->check(CLI::IsMember({2, 3}));
  flag("u0", cfg.u0, "initial velocity u0/c");
  flag("gamma0", cfg.gamma0, "initial coldness mc^2/kT");
  flag("p0", cfg.p0, "initial pressure");
  flag("alpha", cfg.alpha, "piston speed alpha/c");
  flag("s-max", cfg.s_max, "horizon in cs");
  flag("ode-rel", cfg.ode_rel, "ODE relative tolerance");
  flag("ode-abs", cfg.ode_abs, "ODE absolute tolerance");
  flag("event-tol", cfg.event_tol, "event location tolerance");
  flag("tol-shock-u", cfg.shock_u, "required |u_d| at the shock");
  flag("out-csv", cfg.out_csv, "profile / table CSV path (stdout for eos-table if empty)");
  flag("out-json", cfg.out_json, "summary JSON path (stdout if empty)");
  flag("samples", cfg.samples, "profile rows");
  flag("gamma-min", cfg.gamma_min, "eos-table: first gamma");
  flag("gamma-max", cfg.gamma_max, "eos-table: last gamma");
  flag("count", cfg.count, "eos-table: rows, log-spaced");
  flag("grid-lo", cfg.grid.lo, "certify: grid start");
  flag("grid-hi", cfg.grid.hi, "certify: grid end");
  flag("grid-points", cfg.grid.points, "certify: log-spaced points");
  flag("refine-points", cfg.grid.refine_points, "certify: points per case boundary");
  flag("inject-fault", cfg.inject_fault, "certify: negate the margins of this check (testing)");
  app.add_flag("--serial", cfg.serial, "certify: serial evaluation")->envname(env_name("serial"));

  app.add_subcommand("solve", "radial initial value problem from s = 0");
  app.add_subcommand("piston", "expanding spherical piston");
  app.add_subcommand("certify", "grid certification of the EOS inequalities");
  app.add_subcommand("eos-table", "tabulate the equation of state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.gas = parse_gas(gas);

  const CommandOutput res = run_command(cfg);
  if (res.exit_code == kUsage && res.summary.contains("error")) {
    err << res.summary["error"]["message"].get<std::string>() << '\n';
  }
  const bool table = cfg.command == "eos-table";
  if (!res.csv.empty()) {
    if (!cfg.out_csv.empty()) {
      if (!write_file(cfg.out_csv, res.csv, err)) return kUsage;
    } else if (table) {
      out << res.csv;
    }
  }
  if (!table || !cfg.out_json.empty()) {
    const std::string text = dump_json(res.summary);
    if (!cfg.out_json.empty()) {
      if (!write_file(cfg.out_json, text, err)) return kUsage;
    } else {
      out << text;
    }
  }
  return res.exit_code;
}

}  // namespace synge::cli
