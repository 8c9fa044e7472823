#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gec/lagrange_field.hpp"
#include "gec/problems.hpp"
#include "gec/tolerance_heuristics.hpp"

namespace gec {

struct SolverConfig {
  double eps_g = 1e-6;            // relative global tolerance on the Euler solution
  double eps_rho_default = 1e-8;  // upper bound for the local tolerance
  double eta = 0.85;              // safety factor
  double h2_default = 0.1;        // default (and per-step trial) stepsize
  double max_growth = 1.2;        // trial h is at most max_growth times the previous h
  double eps_rb = 1e-9;           // reboot threshold on |dy^T|
  double x_mu_offset = 1e-3;
  int p = 3;
  double stability_constant = kDp853StabilityWidth;
  bool secondary_lec_floor_enabled = false;
  bool always_quench = false;
  int reboot_limit = 100;
  long max_steps = 10'000'000;
  LocalToleranceOptions prepass{};
  BootstrapOptions bootstrap{};

  /// eps_rho_default = eps_g / rho_ratio, eps_rb = eps_g / 1000.
  static SolverConfig for_tolerance(double eps_g, double rho_ratio = 100.0);

  /// Throws GecError(kInvalidArgument) when a field is out of range.
  void validate() const;
};

struct StepDiagnostics {
  double x = 0;
  double h = 0;
  double y_euler = 0;
  double y_final = 0;
  double y_taylor = 0;
  double mu_L = 0;
  double mu_H = 0;
  double mu_V = 0;
  double Delta_mu = 0;   // mu_V - mu_L
  double Delta_yT = 0;   // estimated relative error of y_taylor
  double Delta_y_rel = 0;  // estimated relative error of y_euler
  double anchor_x = 0;
  double anchor_y = 0;
  bool quenched = false;
  bool lec_primary = false;
  bool lec_secondary = false;
  bool stability_capped = false;
  bool bootstrap_node = false;  // anchor node or x1 of some anchor
  bool reboot_node = false;     // y_final was replaced by the reboot value
};

struct SolveResult {
  std::vector<StepDiagnostics> trace;
  long N = 0;
  long Q = 0;
  long P = 0;
  long S = 0;
  long star = 0;
  double h2 = 0;
  std::vector<double> reboot_nodes;
  std::vector<HeuristicReport> heuristics;  // one per anchor
  double max_rel_error = std::numeric_limits<double>::quiet_NaN();
  bool aborted = false;
  std::string diagnostic;

  long reboots() const { return static_cast<long>(reboot_nodes.size()); }
};

/// c / |g_mu|, or +infinity when g_mu = 0.
double stability_cap(double g_mu_abs, double c = kDp853StabilityWidth);

/// L = (mu_H - mu_L) / h^(p+1). With m = max(1, |mu_H|), returns
/// eta (eps_rho m / |L|)^(1/p) if |L h^p| > eps_rho m, else nullopt.
std::optional<double> primary_lec(double mu_L, double mu_H, double h, int p,
                                  double eps_rho, double eta);

/// Local-error control on y0 + f(mu)(x - x0): with
/// d = |L f_y(mu)(x - x0)| and m = max(1, |y0 + f(mu)(x - x0)|), returns
/// eta (eps_rho m / d)^(1/p) if d h^p > eps_rho m, else nullopt.
std::optional<double> secondary_lec(double L, double mu, const LagrangeField& field,
                                    double x, double h, int p, double eps_rho,
                                    double eta);

/// [f_yy(mu)(x - x0) Delta^2 - 2 f_y(mu)(x - x0) Delta] / (2 denom)
double remainder_error(const LagrangeField& field, double mu, double x, double Delta,
                       double denom);

/// |Delta_y_rel| > |eps_g - |Delta_yT||
bool quench_test(double Delta_y_rel, double eps_g, double Delta_yT);

/// Runs the stepwise global-error-controlled Euler integration. Errors that
/// stop the run (non-finite values, repeated bootstrap failure, the reboot
/// limit) are reported through aborted/diagnostic; the trace up to that point
/// is kept.
SolveResult solve(const ScalarAutonomousProblem& problem, const SolverConfig& config);

/// Plain Euler from (nodes[0], exact y0) across `nodes`; returns
/// max |y_i - y(x_i)| / max(1, |y(x_i)|).
double baseline_euler_max_error(const ScalarAutonomousProblem& problem,
                                std::span<const double> nodes);

/// max |y_final - y(x)| / max(1, |y(x)|) over the trace.
double max_relative_error(const ScalarAutonomousProblem& problem,
                          std::span<const StepDiagnostics> trace);

/// Recomputes N, Q, P, S, star and reboot_nodes from the per-node flags.
void tally_counters(SolveResult& result);

}  // namespace gec
