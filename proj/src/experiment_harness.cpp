#include "gec/experiment_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gec/errors.hpp"
#include "gec/lagrange_field.hpp"
#include "gec/newton_bootstrap.hpp"

namespace gec {

std::string_view to_string(RhoPolicy policy) {
  switch (policy) {
    case RhoPolicy::kRatio100:
      return "ratio100";
    case RhoPolicy::kRatio10:
      return "ratio10";
    case RhoPolicy::kExplicit:
      return "explicit";
  }
  return "unknown";
}

std::optional<RhoPolicy> parse_rho_policy(std::string_view text) {
  if (text == "ratio100") return RhoPolicy::kRatio100;
  if (text == "ratio10") return RhoPolicy::kRatio10;
  if (text == "explicit") return RhoPolicy::kExplicit;
  return std::nullopt;
}

double RunSpec::eps_rho_default() const {
  switch (rho_policy) {
    case RhoPolicy::kRatio100:
      return eps_g / 100.0;
    case RhoPolicy::kRatio10:
      return eps_g / 10.0;
    case RhoPolicy::kExplicit:
      return eps_rho;
  }
  return eps_g / 100.0;
}

SolverConfig RunSpec::config() const {
  SolverConfig c = SolverConfig::for_tolerance(eps_g);
  c.eps_rho_default = eps_rho_default();
  if (eps_rb) c.eps_rb = *eps_rb;
  return c;
}

ScalarAutonomousProblem RunSpec::problem() const {
  ScalarAutonomousProblem p = builtin_problem(problem_id);
  if (interval) p = with_interval(p, interval->first, interval->second);
  return p;
}

namespace {

std::vector<double> node_positions(const SolveResult& result) {
  std::vector<double> xs;
  xs.reserve(result.trace.size());
  for (const auto& n : result.trace) xs.push_back(n.x);
  return xs;
}

double exact_or_nan(const ScalarAutonomousProblem& problem, double x) {
  return problem.exact ? problem.exact(x) : std::numeric_limits<double>::quiet_NaN();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunOutcome run_single(const RunSpec& spec, const ScalarAutonomousProblem& problem) {
  RunOutcome out;
  out.spec = spec;
  out.result = solve(problem, spec.config());

  TableRow& row = out.row;
  const SolveResult& r = out.result;
  row.problem_id = spec.problem_id;
  row.max_delta = r.max_rel_error;
  row.N = r.N;
  row.Q = r.Q;
  row.P = r.P;
  row.S = r.S;
  row.star = r.star;
  row.h2 = r.h2;
  row.aborted = r.aborted;
  row.diagnostic = r.diagnostic;
  if (problem.exact) {
    const auto xs = node_positions(r);
    row.max_delta_E = baseline_euler_max_error(problem, xs);
  } else {
    row.max_delta_E = std::numeric_limits<double>::quiet_NaN();
  }
  row.met_tolerance = !r.aborted && r.max_rel_error <= spec.eps_g;
  return out;
}

RunOutcome run_single(const RunSpec& spec) { return run_single(spec, spec.problem()); }

std::vector<RunOutcome> run_table(double eps_g, RhoPolicy policy, double eps_rho) {
  std::vector<RunOutcome> rows;
  for (int id = 1; id <= 6; ++id) {
    RunSpec spec;
    spec.problem_id = id;
    spec.eps_g = eps_g;
    spec.rho_policy = policy;
    spec.eps_rho = eps_rho;
    try {
      rows.push_back(run_single(spec));
    } catch (const GecError& e) {
      RunOutcome failed;
      failed.spec = spec;
      failed.row.problem_id = id;
      failed.row.aborted = true;
      failed.row.diagnostic = e.what();
      failed.result.aborted = true;
      failed.result.diagnostic = e.what();
      rows.push_back(std::move(failed));
    }
  }
  return rows;
}

RunOutcome run_reboot_experiment(double eps_rb, double eps_g) {
  RunSpec spec;
  spec.problem_id = 3;
  spec.eps_g = eps_g;
  spec.rho_policy = RhoPolicy::kRatio100;
  spec.eps_rb = eps_rb;
  spec.interval = std::pair{0.0, 50.0};
  return run_single(spec);
}

std::vector<Table9Row> run_table9(double x_mu_offset) {
  std::vector<Table9Row> rows;
  for (int id = 1; id <= 6; ++id) {
    const auto p = builtin_problem(id);
    Table9Row row;
    row.problem_id = id;
    row.y0 = p.y0;
    try {
      const auto boot = bootstrap(p, p.x0 + x_mu_offset);
      const LagrangeField field(p, p.x0, p.y0);
      row.x1 = boot.x1;
      row.mu1 = boot.mu1;
      row.iterations = boot.iterations;
      row.g_mu = eval_g_mu(field, boot.x1, boot.mu1);
      row.ok = true;
    } catch (const GecError& e) {
      row.diagnostic = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_h2_display(double h2) {
  if (!std::isfinite(h2) || h2 == 0) return fmt(h2);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", h2);
  return buf;
}

void write_trace_csv(std::ostream& os, const SolveResult& result,
                     const ScalarAutonomousProblem& problem) {
  os << "x,h,y_euler,y_final,y_taylor,y_exact,mu_L,mu_H,mu_V,Delta_mu,Delta_yT,"
        "Delta_y_rel,anchor_x,anchor_y,quenched,lec_primary,lec_secondary,"
        "stability_capped,bootstrap_node,reboot_node\n";
  for (const auto& n : result.trace) {
    os << fmt(n.x) << ',' << fmt(n.h) << ',' << fmt(n.y_euler) << ',' << fmt(n.y_final) << ','
       << fmt(n.y_taylor) << ',' << fmt(exact_or_nan(problem, n.x)) << ',' << fmt(n.mu_L) << ','
       << fmt(n.mu_H) << ',' << fmt(n.mu_V) << ',' << fmt(n.Delta_mu) << ',' << fmt(n.Delta_yT)
       << ',' << fmt(n.Delta_y_rel) << ',' << fmt(n.anchor_x) << ',' << fmt(n.anchor_y) << ','
       << n.quenched << ',' << n.lec_primary << ',' << n.lec_secondary << ','
       << n.stability_capped << ',' << n.bootstrap_node << ',' << n.reboot_node << '\n';
  }
}

TraceCounters read_trace_counters(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw GecError(ErrorKind::kInvalidArgument, "empty trace file");
  }
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  const auto column = [&](std::string_view name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw GecError(ErrorKind::kInvalidArgument, "trace is missing column " + std::string(name));
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t q = column("quenched");
  const std::size_t p = column("lec_primary");
  const std::size_t s = column("lec_secondary");
  const std::size_t star = column("stability_capped");
  const std::size_t rb = column("reboot_node");

  TraceCounters c;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != header.size()) {
      throw GecError(ErrorKind::kInvalidArgument, "malformed trace row: " + line);
    }
    ++c.N;
    c.Q += cells[q] == "1";
    c.P += cells[p] == "1";
    c.S += cells[s] == "1";
    c.star += cells[star] == "1";
    c.reboots += cells[rb] == "1";
  }
  return c;
}

void write_error_curves(std::ostream& os, const SolveResult& result,
                        const ScalarAutonomousProblem& problem, double eps_g) {
  os << "# eps_g=" << fmt(eps_g) << '\n';
  os << "x,abs_rel_err_estimate,abs_DeltaYT,true_rel_err,quenched\n";
  for (const auto& n : result.trace) {
    const double exact = exact_or_nan(problem, n.x);
    const double err = std::abs(n.y_final - exact) / std::max(1.0, std::abs(exact));
    os << fmt(n.x) << ',' << fmt(std::abs(n.Delta_y_rel)) << ',' << fmt(std::abs(n.Delta_yT))
       << ',' << fmt(err) << ',' << n.quenched << '\n';
  }
}

namespace {

// JSON has no NaN; emit null instead.
nlohmann::json number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const TableRow& row) {
  return {{"problem_id", row.problem_id},
          {"max_delta", number(row.max_delta)},
          {"N", row.N},
          {"Q", row.Q},
          {"P", row.P},
          {"S", row.S},
          {"star", row.star},
          {"h2", number(row.h2)},
          {"h2_display", format_h2_display(row.h2)},
          {"max_delta_E", number(row.max_delta_E)},
          {"met_tolerance", row.met_tolerance},
          {"aborted", row.aborted},
          {"diagnostic", row.diagnostic}};
}

nlohmann::json to_json(const Table9Row& row) {
  return {{"problem_id", row.problem_id}, {"y0", row.y0},
          {"x1", row.x1},                 {"mu1", number(row.mu1)},
          {"g_mu", number(row.g_mu)},     {"newton_iterations", row.iterations},
          {"ok", row.ok},                 {"diagnostic", row.diagnostic}};
}

nlohmann::json summary_json(const RunOutcome& outcome) {
  const RunSpec& s = outcome.spec;
  const SolverConfig config = s.config();
  nlohmann::json spec = {{"problem_id", s.problem_id},
                         {"eps_g", s.eps_g},
                         {"eps_rho_policy", to_string(s.rho_policy)},
                         {"eps_rho_default", config.eps_rho_default},
                         {"eps_rb", config.eps_rb}};
  if (s.interval) spec["interval"] = {s.interval->first, s.interval->second};

  nlohmann::json heuristics = nlohmann::json::array();
  for (const auto& h : outcome.result.heuristics) {
    heuristics.push_back({{"eps_rho", h.eps_rho},
                          {"delta_mu_m", h.delta_mu_m},
                          {"h2", h.h2},
                          {"h2_source", to_string(h.h2_source)},
                          {"g_mu", number(h.g_mu)},
                          {"g_ttt", number(h.g_ttt)},
                          {"prepass_steps", h.prepass_steps}});
  }
  return {{"spec", spec},
          {"row", to_json(outcome.row)},
          {"heuristics", heuristics},
          {"reboots", outcome.result.reboots()},
          {"reboot_nodes", outcome.result.reboot_nodes}};
}

void print_table(std::ostream& os, std::span<const RunOutcome> rows) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-3s %-10s %7s %7s %7s %7s %5s %-8s %-10s %s\n", "#",
                "max_delta", "N", "Q", "P", "S", "star", "h2", "max_dE", "status");
  os << buf;
  for (const auto& r : rows) {
    const TableRow& t = r.row;
    std::snprintf(buf, sizeof buf, "%-3d %-10.2e %7ld %7ld %7ld %7ld %5ld %-8s %-10.2e %s\n",
                  t.problem_id, t.max_delta, t.N, t.Q, t.P, t.S, t.star,
                  format_h2_display(t.h2).c_str(), t.max_delta_E,
                  t.aborted ? "aborted" : (t.met_tolerance ? "ok" : "EXCEEDED"));
    os << buf;
  }
}

int exit_code(std::span<const RunOutcome> runs) {
  bool exceeded = false;
  for (const auto& r : runs) {
    if (r.row.aborted) return 3;
    if (!r.row.met_tolerance) exceeded = true;
  }
  return exceeded ? 2 : 0;
}

}  // namespace gec
