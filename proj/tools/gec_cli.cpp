// Command-line front end for the experiment harness.
//
// Exit codes: 0 all runs met eps_g, 2 some run exceeded eps_g, 3 a solver
// aborted, 1 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gec/errors.hpp"
#include "gec/experiment_harness.hpp"
#include "gec/rk_integrators.hpp"

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_output(path);
  out << j.dump(2) << '\n';
}

const std::vector<std::string> kPolicies = {"ratio100", "ratio10"};

gec::RhoPolicy policy_from(const std::string& name) { return *gec::parse_rho_policy(name); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler's method with stepwise global error control"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run one problem and write its trace and summary");
  int problem_id = 1;
  double eps_g = 1e-6;
  std::optional<double> eps_rho;
  std::string policy = "ratio100";
  std::optional<double> eps_rb;
  std::optional<double> x0;
  std::optional<double> xn;
  std::string trace_path;
  std::string summary_path;
  solve_cmd->add_option("--problem", problem_id, "Problem number")->required()->check(CLI::Range(1, 6));
  solve_cmd->add_option("--eps-g", eps_g, "Global tolerance")->required()->check(CLI::PositiveNumber);
  auto* rho_opt = solve_cmd->add_option("--eps-rho", eps_rho, "Explicit local tolerance bound")
                      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--rho-policy", policy, "ratio100 or ratio10")
      ->check(CLI::IsMember(kPolicies))
      ->excludes(rho_opt);
  solve_cmd->add_option("--eps-rb", eps_rb, "Reboot tolerance (default eps_g/1000)")
      ->check(CLI::PositiveNumber);
  auto* x0_opt = solve_cmd->add_option("--x0", x0, "Interval start");
  auto* xn_opt = solve_cmd->add_option("--xn", xn, "Interval end");
  x0_opt->needs(xn_opt);
  xn_opt->needs(x0_opt);
  solve_cmd->add_option("--trace", trace_path, "Trace CSV")->required();
  solve_cmd->add_option("--summary", summary_path, "Summary JSON")->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "Run all six problems at one tolerance");
  double table_eps_g = 1e-2;
  std::string table_policy = "ratio100";
  std::string table_out;
  table_cmd->add_option("--eps-g", table_eps_g, "Global tolerance")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--rho-policy", table_policy, "ratio100 or ratio10")
      ->required()
      ->check(CLI::IsMember(kPolicies));
  table_cmd->add_option("--out", table_out, "Output JSON")->required();

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "Error-curve data for one problem");
  int curves_problem = 1;
  double curves_eps_g = 1e-6;
  std::string curves_policy = "ratio100";
  std::string curves_out;
  curves_cmd->add_option("--problem", curves_problem, "Problem number")->required()->check(CLI::Range(1, 6));
  curves_cmd->add_option("--eps-g", curves_eps_g, "Global tolerance")->required()->check(CLI::PositiveNumber);
  curves_cmd->add_option("--rho-policy", curves_policy, "ratio100 or ratio10")
      ->check(CLI::IsMember(kPolicies));
  curves_cmd->add_option("--out", curves_out, "Output CSV")->required();

  // reboot
  auto* reboot_cmd = app.add_subcommand("reboot", "Problem #3 on [0, 50] at a given reboot tolerance");
  double reboot_eps_rb = 1e-10;
  double reboot_eps_g = gec::kRebootExperimentEpsG;
  std::string reboot_out;
  std::string reboot_trace;
  reboot_cmd->add_option("--eps-rb", reboot_eps_rb, "Reboot tolerance")->required()->check(CLI::PositiveNumber);
  reboot_cmd->add_option("--eps-g", reboot_eps_g, "Global tolerance")->check(CLI::PositiveNumber);
  reboot_cmd->add_option("--out", reboot_out, "Summary JSON")->required();
  reboot_cmd->add_option("--trace", reboot_trace, "Optional trace CSV");

  // table9
  auto* table9_cmd = app.add_subcommand("table9", "mu1 and g_mu(x1, mu1) for every problem");
  std::string table9_out;
  table9_cmd->add_option("--out", table9_out, "Output JSON")->required();

  // tableau-dump
  auto* dump_cmd = app.add_subcommand("tableau-dump", "Dump the Butcher tableaux as CSV");
  std::string dump_out;
  dump_cmd->add_option("--out", dump_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends report success; everything else is a usage error.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) {
      gec::RunSpec spec;
      spec.problem_id = problem_id;
      spec.eps_g = eps_g;
      spec.rho_policy = policy_from(policy);
      if (eps_rho) {
        spec.rho_policy = gec::RhoPolicy::kExplicit;
        spec.eps_rho = *eps_rho;
      }
      spec.eps_rb = eps_rb;
      if (x0) spec.interval = std::pair{*x0, *xn};
      const auto outcome = gec::run_single(spec);
      {
        auto out = open_output(trace_path);
        gec::write_trace_csv(out, outcome.result, spec.problem());
      }
      write_json(summary_path, gec::summary_json(outcome));
      gec::print_table(std::cout, {&outcome, 1});
      if (outcome.row.aborted) std::cerr << "solver aborted: " << outcome.row.diagnostic << '\n';
      return gec::exit_code({&outcome, 1});
    }

    if (*table_cmd) {
      const auto rows = gec::run_table(table_eps_g, policy_from(table_policy));
      nlohmann::json j = {{"eps_g", table_eps_g},
                          {"eps_rho_policy", table_policy},
                          {"rows", nlohmann::json::array()}};
      for (const auto& r : rows) j["rows"].push_back(gec::summary_json(r));
      write_json(table_out, j);
      gec::print_table(std::cout, rows);
      return gec::exit_code(rows);
    }

    if (*curves_cmd) {
      gec::RunSpec spec;
      spec.problem_id = curves_problem;
      spec.eps_g = curves_eps_g;
      spec.rho_policy = policy_from(curves_policy);
      const auto outcome = gec::run_single(spec);
      auto out = open_output(curves_out);
      gec::write_error_curves(out, outcome.result, spec.problem(), spec.eps_g);
      return gec::exit_code({&outcome, 1});
    }

    if (*reboot_cmd) {
      const auto outcome = gec::run_reboot_experiment(reboot_eps_rb, reboot_eps_g);
      auto j = gec::summary_json(outcome);
      j["eps_g_assumed"] = true;
      write_json(reboot_out, j);
      if (!reboot_trace.empty()) {
        auto out = open_output(reboot_trace);
        gec::write_trace_csv(out, outcome.result, outcome.spec.problem());
      }
      std::cout << "reboots: " << outcome.result.reboots() << '\n';
      gec::print_table(std::cout, {&outcome, 1});
      return gec::exit_code({&outcome, 1});
    }

    if (*table9_cmd) {
      const auto rows = gec::run_table9();
      nlohmann::json j = nlohmann::json::array();
      bool ok = true;
      for (const auto& r : rows) {
        j.push_back(gec::to_json(r));
        ok = ok && r.ok;
        std::printf("%d  mu1=%.4f  g_mu=%.2f  newton=%d\n", r.problem_id, r.mu1, r.g_mu, r.iterations);
      }
      write_json(table9_out, j);
      return ok ? 0 : 3;
    }

    if (*dump_cmd) {
      auto out = open_output(dump_out);
      gec::write_tableau_csv(out);
      return 0;
    }
  } catch (const gec::GecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == gec::ErrorKind::kInvalidArgument ? 1 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
