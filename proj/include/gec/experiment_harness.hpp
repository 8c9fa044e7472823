#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gec/gec_solver.hpp"
#include "gec/problems.hpp"

namespace gec {

enum class RhoPolicy { kRatio100, kRatio10, kExplicit };

std::string_view to_string(RhoPolicy policy);
/// "ratio100" / "ratio10" / "explicit"; nullopt otherwise.
std::optional<RhoPolicy> parse_rho_policy(std::string_view text);

struct RunSpec {
  int problem_id = 1;
  double eps_g = 1e-6;
  RhoPolicy rho_policy = RhoPolicy::kRatio100;
  double eps_rho = 0;             // used only with kExplicit
  std::optional<double> eps_rb;   // default eps_g / 1000
  std::optional<std::pair<double, double>> interval;

  double eps_rho_default() const;
  SolverConfig config() const;
  ScalarAutonomousProblem problem() const;
};

struct TableRow {
  int problem_id = 0;
  double max_delta = 0;    // true max relative error of the controlled solution
  long N = 0;
  long Q = 0;
  long P = 0;
  long S = 0;
  long star = 0;
  double h2 = 0;
  double max_delta_E = 0;  // plain Euler on the same grid
  bool met_tolerance = false;
  bool aborted = false;
  std::string diagnostic;
};

struct RunOutcome {
  RunSpec spec;
  SolveResult result;
  TableRow row;
};

RunOutcome run_single(const RunSpec& spec);

/// Same as above for an arbitrary problem (RunSpec::problem_id and interval
/// are only copied into the row).
RunOutcome run_single(const RunSpec& spec, const ScalarAutonomousProblem& problem);

/// One row per built-in problem, #1..#6. A failing row does not stop the rest.
std::vector<RunOutcome> run_table(double eps_g, RhoPolicy policy, double eps_rho = 0);

/// Problem #3 on [0, 50] at the given reboot tolerance.
inline constexpr double kRebootExperimentEpsG = 1e-4;
RunOutcome run_reboot_experiment(double eps_rb, double eps_g = kRebootExperimentEpsG);

struct Table9Row {
  int problem_id = 0;
  double y0 = 0;
  double x1 = 0;
  double mu1 = 0;
  double g_mu = 0;
  int iterations = 0;
  bool ok = false;
  std::string diagnostic;
};

std::vector<Table9Row> run_table9(double x_mu_offset = 1e-3);

/// One significant digit, e.g. 1.3778e-3 -> "1.4e-03".
std::string format_h2_display(double h2);

/// Per-node CSV with every StepDiagnostics field plus the exact solution.
void write_trace_csv(std::ostream& os, const SolveResult& result,
                     const ScalarAutonomousProblem& problem);

struct TraceCounters {
  long N = 0;
  long Q = 0;
  long P = 0;
  long S = 0;
  long star = 0;
  long reboots = 0;
};

/// Re-derives the counters from a CSV written by write_trace_csv.
TraceCounters read_trace_counters(std::istream& is);

/// First line "# eps_g=<value>", then
/// x,abs_rel_err_estimate,abs_DeltaYT,true_rel_err,quenched.
void write_error_curves(std::ostream& os, const SolveResult& result,
                        const ScalarAutonomousProblem& problem, double eps_g);

nlohmann::json to_json(const TableRow& row);
nlohmann::json to_json(const Table9Row& row);
nlohmann::json summary_json(const RunOutcome& outcome);

/// Fixed-width text rendering of table rows (h2 rounded for display).
void print_table(std::ostream& os, std::span<const RunOutcome> rows);

/// 0 when every run met eps_g, 3 if any run aborted, otherwise 2.
int exit_code(std::span<const RunOutcome> runs);

}  // namespace gec
