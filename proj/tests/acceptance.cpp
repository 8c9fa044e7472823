// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   gec_acceptance [--known-red N,...]
//
// Exit status is 0 when the set of failing criteria equals the --known-red
// set (empty by default), 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gec/experiment_harness.hpp"
#include "gec/newton_bootstrap.hpp"
#include "gec/rk_integrators.hpp"

using namespace gec;

namespace {

struct Config {
  double eps_g;
  RhoPolicy policy;
};

const std::vector<Config> kGrid = {
    {1e-2, RhoPolicy::kRatio100}, {1e-4, RhoPolicy::kRatio100}, {1e-6, RhoPolicy::kRatio100},
    {1e-8, RhoPolicy::kRatio100}, {1e-2, RhoPolicy::kRatio10},  {1e-6, RhoPolicy::kRatio10}};

// Reference N per problem for each configuration.
const std::map<std::pair<double, RhoPolicy>, std::vector<long>> kReferenceN = {
    {{1e-2, RhoPolicy::kRatio100}, {71, 91, 221, 221, 46, 121}},
    {{1e-4, RhoPolicy::kRatio100}, {88, 91, 221, 223, 63, 121}},
    {{1e-6, RhoPolicy::kRatio100}, {327, 108, 221, 311, 214, 276}},
    {{1e-8, RhoPolicy::kRatio100}, {1474, 330, 695, 951, 949, 1233}},
    {{1e-10, RhoPolicy::kRatio100}, {6776, 1460, 3139, 4361, 4354, 5676}},
    {{1e-2, RhoPolicy::kRatio10}, {71, 91, 221, 221, 46, 121}},
    {{1e-6, RhoPolicy::kRatio10}, {162, 92, 221, 243, 110, 150}},
};

struct Report {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << " first failure: " << why;
    pass = false;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string config_name(double eps_g, RhoPolicy policy) {
  return fmt(eps_g) + "/" + std::string(to_string(policy));
}

using Runs = std::map<std::pair<double, RhoPolicy>, std::vector<RunOutcome>>;

Runs& runs() {
  static Runs cache;
  return cache;
}

const std::vector<RunOutcome>& table(double eps_g, RhoPolicy policy) {
  auto& cache = runs();
  auto it = cache.find({eps_g, policy});
  if (it == cache.end()) it = cache.emplace(std::pair{eps_g, policy}, run_table(eps_g, policy)).first;
  return it->second;
}

Report criterion1() {
  Report r;
  double worst_ratio = 0;
  for (const auto& c : kGrid) {
    for (const auto& o : table(c.eps_g, c.policy)) {
      const auto& row = o.row;
      if (row.aborted) r.fail("#" + std::to_string(row.problem_id) + " aborted");
      if (!(row.max_delta <= c.eps_g)) {
        r.fail("#" + std::to_string(row.problem_id) + " at " + config_name(c.eps_g, c.policy) +
               " max_delta=" + fmt(row.max_delta));
      }
      worst_ratio = std::max(worst_ratio, row.max_delta / c.eps_g);
    }
  }
  r.detail << " 36 runs, worst max_delta/eps_g=" << worst_ratio;

  // Reported grid: tolerance or roundoff floor.
  std::ostringstream tight;
  for (const auto& o : table(1e-10, RhoPolicy::kRatio100)) {
    double scale = 1;
    for (const auto& n : o.result.trace) scale = std::max(scale, std::abs(n.y_final));
    const double floor = 50 * std::numeric_limits<double>::epsilon() * scale;
    const bool ok = !o.row.aborted && (o.row.max_delta <= 1e-10 || o.row.max_delta <= floor);
    if (!ok) r.fail("#" + std::to_string(o.row.problem_id) + " at 1e-10");
    tight << " #" << o.row.problem_id << "=" << fmt(o.row.max_delta);
  }
  r.detail << "; 1e-10 grid:" << tight.str();
  return r;
}

Report criterion2() {
  Report r;
  const double mu_reference[] = {2.0010, 0.1000, 1.0001, 1.0005, -0.9997};
  const double g_reference[] = {-999.00, -999.85, -999.76, -999.99, -998.98, -1001.00};
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_table9();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rows.size() != 6) {
    r.fail("expected 6 rows");
    return r;
  }
  double worst_mu = 0;
  double worst_g = 0;
  for (int i = 0; i < 6; ++i) {
    if (!rows[i].ok) r.fail("bootstrap failed for #" + std::to_string(i + 1));
    if (i < 5) worst_mu = std::max(worst_mu, std::abs(rows[i].mu1 - mu_reference[i]));
    worst_g = std::max(worst_g, std::abs(rows[i].g_mu - g_reference[i]) / std::abs(g_reference[i]));
  }
  if (!(worst_mu <= 1e-4)) r.fail("mu1 off by " + fmt(worst_mu));
  if (!(worst_g <= 0.01)) r.fail("g_mu off by " + fmt(worst_g));
  if (seconds >= 1.0) r.fail("took " + fmt(seconds) + " s");
  r.detail << " max |dmu1|=" << fmt(worst_mu) << ", max rel dg_mu=" << fmt(worst_g)
           << ", " << fmt(seconds) << " s";
  return r;
}

bool all_inside(double z) {
  const auto g = [](double, double mu) { return -mu; };
  const auto out = dp853_triple_step(g, TripleState<double>::uniform(0.0, 1.0), z);
  for (double v : {out.mu_low, out.mu_high, out.mu_very_high}) {
    if (!(v > 0 && v < 1)) return false;
  }
  return true;
}

Report criterion3() {
  Report r;
  double lo = 1e-4;
  double hi = lo;
  while (all_inside(hi) && hi < 100) {
    lo = hi;
    hi += 1e-3;
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (all_inside(mid) ? lo : hi) = mid;
  }
  r.detail << " bisected width=" << fmt(lo) << ", target 1.3764";
  if (std::abs(lo - 1.3764) > 5e-4) r.fail("width differs from 1.3764");
  return r;
}

Report criterion4() {
  Report r;
  // Rows whose reference h2 is 1.4e-3.
  const std::vector<std::pair<double, std::vector<int>>> reference = {
      {1e-2, {1, 2, 3, 4, 5, 6}}, {1e-4, {1, 2, 3, 4, 5, 6}}, {1e-6, {2, 3, 5}}};
  int checked = 0;
  for (const auto& [eps_g, ids] : reference) {
    const auto& rows = table(eps_g, RhoPolicy::kRatio100);
    for (int id : ids) {
      const auto& o = rows[id - 1];
      ++checked;
      const std::string shown = format_h2_display(o.row.h2);
      if (shown != "1.4e-03") r.fail("#" + std::to_string(id) + " at " + fmt(eps_g) + " h2=" + shown);
      if (o.result.heuristics.empty() ||
          o.result.heuristics.front().h2_source == H2Source::kDefault) {
        r.fail("#" + std::to_string(id) + " at " + fmt(eps_g) + " h2 from default");
      }
    }
  }
  r.detail << " " << checked << " rows checked";
  return r;
}

Report criterion5() {
  Report r;
  int worst = 0;
  for (const auto& p : builtin_problems()) {
    try {
      const auto boot = bootstrap(p, p.x0 + 1e-3);
      worst = std::max(worst, boot.iterations);
      if (boot.iterations > 3) r.fail(p.name + " took " + std::to_string(boot.iterations));
    } catch (const std::exception& e) {
      r.fail(p.name + ": " + e.what());
    }
  }
  r.detail << " max iterations=" << worst;
  return r;
}

Report criterion6() {
  Report r;
  const auto off = run_reboot_experiment(1e-7);
  const auto on = run_reboot_experiment(1e-10);
  if (off.row.aborted || on.row.aborted) r.fail("run aborted");
  if (off.result.reboots() != 0) r.fail("eps_rb=1e-7 gave " + std::to_string(off.result.reboots()));
  const long n = on.result.reboots();
  if (n < 5 || n > 15) r.fail("eps_rb=1e-10 gave " + std::to_string(n));
  const auto& trace = on.result.trace;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!trace[i].reboot_node) continue;
    // The node re-anchored is the one just before the rejected step, and the
    // next node is the new bootstrap node.
    const bool one_back = i + 1 < trace.size() && trace[i + 1].bootstrap_node &&
                          trace[i + 1].anchor_x == trace[i].x && !trace[i].bootstrap_node;
    if (!one_back) r.fail("reboot at x=" + fmt(trace[i].x) + " is not a one-node backtrack");
  }
  r.detail << " reboots: eps_rb=1e-7 -> " << off.result.reboots() << ", eps_rb=1e-10 -> " << n
           << " (eps_g=" << fmt(kRebootExperimentEpsG) << ")";
  return r;
}

Report criterion7() {
  Report r;
  const auto& t2 = table(1e-2, RhoPolicy::kRatio100);
  const auto& t3 = table(1e-4, RhoPolicy::kRatio100);
  const auto& t4 = table(1e-6, RhoPolicy::kRatio100);
  for (int i = 0; i < 6; ++i) {
    const std::string id = "#" + std::to_string(i + 1);
    if (!(t2[i].row.Q <= t3[i].row.Q && t3[i].row.Q <= t4[i].row.Q)) r.fail(id + " Q decreases");
    if (t2[i].row.Q > 20) r.fail(id + " Q=" + std::to_string(t2[i].row.Q) + " at 1e-2");
    if (t2[i].row.P != 0 || t2[i].row.S != 0) r.fail(id + " LEC fired at 1e-2");
  }
  double worst = 1;
  auto check_n = [&](double eps_g, RhoPolicy policy) {
    const auto& reference = kReferenceN.at({eps_g, policy});
    const auto& rows = table(eps_g, policy);
    for (int i = 0; i < 6; ++i) {
      const double ratio = static_cast<double>(rows[i].row.N) / reference[i];
      worst = std::max({worst, ratio, 1 / ratio});
      if (ratio > 3 || ratio < 1.0 / 3) {
        r.fail("#" + std::to_string(i + 1) + " N=" + std::to_string(rows[i].row.N) + " at " +
               config_name(eps_g, policy));
      }
    }
  };
  for (const auto& c : kGrid) check_n(c.eps_g, c.policy);
  check_n(1e-10, RhoPolicy::kRatio100);
  r.detail << " worst N factor=" << fmt(worst);
  return r;
}

Report criterion8() {
  Report r;
  int equal_cases = 0;
  for (const auto& c : kGrid) {
    for (const auto& o : table(c.eps_g, c.policy)) {
      const auto& row = o.row;
      const std::string where = "#" + std::to_string(row.problem_id) + " at " + config_name(c.eps_g, c.policy);
      // The bootstrap node carries an order-7 value, so plain Euler on the same
      // grid differs from an untouched run by a few ulps of the step error.
      const bool equal = std::abs(row.max_delta - row.max_delta_E) <= 1e-4 * row.max_delta_E;
      if (equal) {
        ++equal_cases;
        if (row.Q != 0 || row.P != 0 || row.S != 0) r.fail(where + " equal with control active");
      } else if (!(row.max_delta < row.max_delta_E)) {
        r.fail(where + " max_delta=" + fmt(row.max_delta) + " > " + fmt(row.max_delta_E));
      }
    }
  }
  r.detail << " " << equal_cases << " run(s) with max_delta = max_delta_E";
  return r;
}

double order_of(const std::function<double(int)>& error, int n) {
  return std::log2(error(n) / error(2 * n));
}

Report criterion9() {
  Report r;
  const auto f = [](double, double y) { return y; };
  const double e = std::exp(1.0);
  const auto fixed = [&](auto step) {
    return [&, step](int n) { return std::abs(integrate_fixed(step, f, 0.0, 1.0, 1.0, n) - e); };
  };
  const auto euler = fixed([](auto& g, double x, double y, double h) {
    return euler_step([&](double v) { return g(x, v); }, y, h);
  });
  const auto rk4 = fixed([](auto& g, double x, double y, double h) { return rk4_step(g, x, y, h); });
  const auto rk7 = fixed([](auto& g, double x, double y, double h) { return rk7_step(g, x, y, h); });
  const auto dp_v = [&](int n) {
    auto s = TripleState<double>::uniform(0.0, 1.0);
    for (int i = 0; i < n; ++i) s = dp853_triple_step(f, s, 1.0 / n);
    return std::abs(s.mu_very_high - e);
  };
  const double p1 = order_of(euler, 512);
  const double p4 = order_of(rk4, 32);
  const double p7 = order_of(rk7, 4);
  const double p8 = order_of(dp_v, 4);
  if (p1 < 0.9 || p1 > 1.1) r.fail("Euler order " + fmt(p1));
  if (p4 < 3.7 || p4 > 4.3) r.fail("RK4 order " + fmt(p4));
  if (p7 < 6.5) r.fail("RK7 order " + fmt(p7));
  if (p8 < 7.5) r.fail("DP853 order " + fmt(p8));

  const auto dp = make_dp853_tableau<double>();
  if (!check_tableau(dp).ok()) r.fail("DP853 tableau check");
  if (!check_tableau(make_rk4_tableau<double>(), 4).ok()) r.fail("RK4 tableau check");
  if (!check_tableau(make_rk7_tableau<double>(), 7).ok()) r.fail("RK7 tableau check");
  if (!dp853_sparsity_check(dp)) r.fail("DP853 sparsity");
  if (satisfied_order(dp.a, dp.b_low, 1e-12) != 3 || satisfied_order(dp.a, dp.b_high, 1e-12) != 5 ||
      satisfied_order(dp.a, dp.b_very_high, 1e-12) != 8) {
    r.fail("DP853 weight orders");
  }
  r.detail << " orders: Euler " << fmt(p1) << ", RK4 " << fmt(p4) << ", RK7 " << fmt(p7)
           << ", DP853-V " << fmt(p8);
  return r;
}

Report criterion10() {
  Report r;
  long audited = 0;
  for (const auto& c : kGrid) {
    for (const auto& o : table(c.eps_g, c.policy)) {
      const auto p = builtin_problem(o.row.problem_id);
      for (const auto& n : o.result.trace) {
        if (!n.quenched) continue;
        ++audited;
        const double exact = p.exact(n.x);
        const double err = std::abs(n.y_final - exact) / std::max(1.0, std::abs(exact));
        if (!(err <= std::max(c.eps_g, std::abs(n.Delta_yT)))) {
          r.fail("#" + std::to_string(o.row.problem_id) + " x=" + fmt(n.x) + " err=" + fmt(err));
        }
      }
    }
  }
  r.detail << " " << audited << " quenched nodes audited";
  return r;
}

std::set<int> parse_list(const char* text) {
  std::set<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.insert(std::atoi(item.c_str()));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-red" && i + 1 < argc) {
      known_red = parse_list(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--known-red N,...]\n", argv[0]);
      return 1;
    }
  }

  const std::vector<std::pair<const char*, std::function<Report()>>> criteria = {
      {"headline tolerance guarantee", criterion1},
      {"bootstrap table", criterion2},
      {"stability constant oracle", criterion3},
      {"initial stepsize value", criterion4},
      {"Newton economy", criterion5},
      {"reboot experiment", criterion6},
      {"counter trends", criterion7},
      {"baseline dominance", criterion8},
      {"integrator order suite", criterion9},
      {"quench postcondition audit", criterion10},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Report rep;
    try {
      rep = criteria[i].second();
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    if (!rep.pass) failed.insert(id);
    std::printf("%s %2d %s:%s%s\n", rep.pass ? "PASS" : "FAIL", id, criteria[i].first,
                rep.detail.str().c_str(),
                !rep.pass && known_red.count(id) ? " (known red)" : "");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  return failed == known_red ? 0 : 1;
}
