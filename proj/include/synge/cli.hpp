#ifndef SYNGE_CLI_HPP
#define SYNGE_CLI_HPP

// Command-line front end. Every command yields an optional CSV profile and a JSON
// summary; run_cli() parses arguments, dispatches and writes them.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "synge/certify.hpp"
#include "synge/eos.hpp"

namespace synge::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2, kSolverFailure = 3 };

struct RunConfig {
  std::string command;  // solve, piston, certify, eos-table
  GasKind gas = GasKind::monatomic;
  int d = 3;
  double u0 = 0.0;
  double gamma0 = 3.0;
  double p0 = 1.0;
  double alpha = 0.5;
  double s_max = 50.0;
  double ode_rel = 1e-11;
  double ode_abs = 1e-13;
  double event_tol = 1e-12;
  double shock_u = 1e-6;
  int samples = 401;
  std::string out_csv;
  std::string out_json;

  // eos-table
  double gamma_min = 1e-3;
  double gamma_max = 1e3;
  int count = 61;

  // certify
  GridSpec grid;
  std::string inject_fault;
  bool serial = false;

  /// Throws DomainError on an out-of-range field.
  void validate() const;
};

struct CommandOutput {
  int exit_code = kOk;
  std::string csv;      // empty when the command emits no profile
  nlohmann::json summary;
};

CommandOutput cmd_solve(const RunConfig& cfg);
CommandOutput cmd_piston(const RunConfig& cfg);
CommandOutput cmd_certify(const RunConfig& cfg);
CommandOutput cmd_eos_table(const RunConfig& cfg);

/// Dispatch on cfg.command; solver failures become exit 3 with an error summary.
CommandOutput run_command(const RunConfig& cfg);

/// JSON text with every floating-point number printed as %.17g; non-finite values become null.
std::string dump_json(const nlohmann::json& j);

/// %.17g
std::string format_number(double x);

inline constexpr const char* kCsvHeader = "cs,u_over_c,gamma,p_over_p0,regime,segment_id";
inline constexpr const char* kEnvPrefix = "SYNGE_";

/// Full front end. Environment variables SYNGE_<FLAG> (upper case, '-' -> '_') supply
/// any flag not given on the command line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace synge::cli

#endif  // SYNGE_CLI_HPP
