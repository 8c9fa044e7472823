#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gec/experiment_harness.hpp"

using namespace gec;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("rho policy names") {
  CHECK(parse_rho_policy("ratio100") == RhoPolicy::kRatio100);
  CHECK(parse_rho_policy("ratio10") == RhoPolicy::kRatio10);
  CHECK(parse_rho_policy("explicit") == RhoPolicy::kExplicit);
  CHECK_FALSE(parse_rho_policy("ratio1000"));
  CHECK(to_string(RhoPolicy::kRatio10) == "ratio10");

  RunSpec spec;
  spec.eps_g = 1e-4;
  CHECK(spec.eps_rho_default() == doctest::Approx(1e-6));
  spec.rho_policy = RhoPolicy::kRatio10;
  CHECK(spec.eps_rho_default() == doctest::Approx(1e-5));
  spec.rho_policy = RhoPolicy::kExplicit;
  spec.eps_rho = 3e-7;
  CHECK(spec.eps_rho_default() == 3e-7);
  CHECK(spec.config().eps_rb == doctest::Approx(1e-7));
}

TEST_CASE("h2 display rounding") {
  CHECK(format_h2_display(1.3778e-3) == "1.4e-03");
  CHECK(format_h2_display(1.3764e-3) == "1.4e-03");
  CHECK(format_h2_display(2.7e-4) == "2.7e-04");
}

TEST_CASE("exit codes") {
  std::vector<RunOutcome> runs(2);
  runs[0].row.met_tolerance = runs[1].row.met_tolerance = true;
  CHECK(exit_code(runs) == 0);
  runs[1].row.met_tolerance = false;
  CHECK(exit_code(runs) == 2);
  runs[0].row.aborted = true;
  CHECK(exit_code(runs) == 3);
}

TEST_CASE("trace CSV round trip") {
  RunSpec spec;
  spec.problem_id = 1;
  spec.eps_g = 1e-2;
  const auto outcome = run_single(spec);
  std::ostringstream os;
  write_trace_csv(os, outcome.result, spec.problem());
  const auto lines = lines_of(os.str());
  REQUIRE(lines.size() == static_cast<std::size_t>(outcome.row.N + 1));
  CHECK(lines[0].rfind("x,h,y_euler,y_final,", 0) == 0);

  std::istringstream is(os.str());
  const auto counters = read_trace_counters(is);
  CHECK(counters.N == outcome.row.N);
  CHECK(counters.Q == outcome.row.Q);
  CHECK(counters.P == outcome.row.P);
  CHECK(counters.S == outcome.row.S);
  CHECK(counters.star == outcome.row.star);
  CHECK(counters.reboots == 0);
}

TEST_CASE("error curves") {
  const SolveResult empty;
  std::ostringstream os;
  write_error_curves(os, empty, builtin_problem(1), 1e-6);
  auto lines = lines_of(os.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("# eps_g=", 0) == 0);
  CHECK(lines[1] == "x,abs_rel_err_estimate,abs_DeltaYT,true_rel_err,quenched");

  RunSpec spec;
  spec.problem_id = 2;
  spec.eps_g = 1e-4;
  const auto outcome = run_single(spec);
  std::ostringstream curves;
  write_error_curves(curves, outcome.result, spec.problem(), spec.eps_g);
  lines = lines_of(curves.str());
  CHECK(lines.size() == static_cast<std::size_t>(outcome.row.N + 2));
}

TEST_CASE("constant slope run") {
  RunSpec spec;
  spec.eps_g = 1e-6;
  const auto outcome = run_single(spec, constant_slope_problem(1.0, 0.0, 1.0, 0.0));
  CHECK(outcome.row.Q == 0);
  CHECK(outcome.row.met_tolerance);
  CHECK(outcome.row.max_delta <= 1e-14);
  CHECK(outcome.row.max_delta_E <= 1e-14);
}

TEST_CASE("table row for problem 4 at 1e-2") {
  const auto rows = run_table(1e-2, RhoPolicy::kRatio100);
  REQUIRE(rows.size() == 6);
  const auto& row = rows[3].row;
  CHECK(row.problem_id == 4);
  CHECK(row.N == 221);
  CHECK(row.Q == 0);
  CHECK(row.P == 0);
  CHECK(row.S == 0);
  CHECK(format_h2_display(row.h2) == "1.4e-03");
  CHECK(row.max_delta == doctest::Approx(6.3e-3).epsilon(0.02));
  CHECK(exit_code(rows) == 0);

  std::ostringstream os;
  print_table(os, rows);
  CHECK(lines_of(os.str()).size() >= 7);
}

TEST_CASE("problem 3 at 1e-6 with ratio10") {
  RunSpec spec;
  spec.problem_id = 3;
  spec.eps_g = 1e-6;
  spec.rho_policy = RhoPolicy::kRatio10;
  const auto outcome = run_single(spec);
  CHECK(outcome.row.met_tolerance);
  CHECK(outcome.row.max_delta <= 9.1e-7 * 1.5);
}

TEST_CASE("reboot experiment") {
  const auto off = run_reboot_experiment(1e300);
  CHECK(off.result.reboots() == 0);
  CHECK(off.spec.interval->second == 50.0);
  const auto on = run_reboot_experiment(1e-10);
  CHECK(on.result.reboots() >= 1);
  CHECK(on.row.met_tolerance);

  const auto j = summary_json(on);
  CHECK(j["reboots"] == on.result.reboots());
  CHECK(j["reboot_nodes"].size() == on.result.reboot_nodes.size());
  CHECK(j["spec"]["problem_id"] == 3);
}

TEST_CASE("json output") {
  TableRow row;
  row.problem_id = 2;
  row.max_delta = std::nan("");
  const auto j = to_json(row);
  CHECK(j["problem_id"] == 2);
  CHECK(j["max_delta"].is_null());

  const auto t9 = run_table9();
  REQUIRE(t9.size() == 6);
  for (const auto& r : t9) {
    CHECK(r.ok);
    CHECK(to_json(r)["newton_iterations"] == r.iterations);
  }
}
