#include "gec/gec_solver.hpp"

#include <algorithm>
#include <cmath>

#include "gec/errors.hpp"
#include "gec/newton_bootstrap.hpp"
#include "gec/rk_integrators.hpp"

namespace gec {

SolverConfig SolverConfig::for_tolerance(double eps_g, double rho_ratio) {
  SolverConfig c;
  c.eps_g = eps_g;
  c.eps_rho_default = eps_g / rho_ratio;
  c.eps_rb = eps_g / 1000.0;
  return c;
}

void SolverConfig::validate() const {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw GecError(ErrorKind::kInvalidArgument, std::string("invalid config: ") + what);
  };
  require(eps_g > 0, "eps_g must be positive");
  require(eps_rho_default > 0, "eps_rho_default must be positive");
  require(eta > 0 && eta < 1, "eta must lie in (0, 1)");
  require(h2_default > 0, "h2_default must be positive");
  require(max_growth >= 1, "max_growth must be at least 1");
  require(eps_rb > 0, "eps_rb must be positive");
  require(x_mu_offset > 0, "x_mu_offset must be positive");
  require(p >= 1, "p must be at least 1");
  require(stability_constant > 0, "stability_constant must be positive");
  require(reboot_limit >= 0, "reboot_limit must be non-negative");
}

double stability_cap(double g_mu_abs, double c) {
  if (g_mu_abs == 0) return std::numeric_limits<double>::infinity();
  return c / std::abs(g_mu_abs);
}

std::optional<double> primary_lec(double mu_L, double mu_H, double h, int p,
                                  double eps_rho, double eta) {
  const double L = (mu_H - mu_L) / std::pow(h, p + 1);
  if (L == 0) return std::nullopt;
  const double m = std::max(1.0, std::abs(mu_H));
  if (std::abs(L * std::pow(h, p)) > eps_rho * m) {
    return eta * std::pow(eps_rho * m / std::abs(L), 1.0 / p);
  }
  return std::nullopt;
}

std::optional<double> secondary_lec(double L, double mu, const LagrangeField& field,
                                    double x, double h, int p, double eps_rho,
                                    double eta) {
  const auto& pr = field.problem();
  const double dx = x - field.anchor_x();
  const double d = std::abs(L * pr.f_y(mu) * dx);
  if (d == 0) return std::nullopt;
  const double m = std::max(1.0, std::abs(field.anchor_y() + pr.f(mu) * dx));
  if (d * std::pow(h, p) > eps_rho * m) {
    return eta * std::pow(eps_rho * m / d, 1.0 / p);
  }
  return std::nullopt;
}

double remainder_error(const LagrangeField& field, double mu, double x, double Delta,
                       double denom) {
  const auto& pr = field.problem();
  const double dx = x - field.anchor_x();
  return (pr.f_yy(mu) * dx * Delta * Delta - 2.0 * pr.f_y(mu) * dx * Delta) / (2.0 * denom);
}

bool quench_test(double Delta_y_rel, double eps_g, double Delta_yT) {
  return std::abs(Delta_y_rel) > std::abs(eps_g - std::abs(Delta_yT));
}

double max_relative_error(const ScalarAutonomousProblem& problem,
                          std::span<const StepDiagnostics> trace) {
  if (!problem.exact) return std::numeric_limits<double>::quiet_NaN();
  double worst = 0;
  for (const auto& node : trace) {
    const double exact = problem.exact(node.x);
    worst = std::max(worst, std::abs(node.y_final - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

double baseline_euler_max_error(const ScalarAutonomousProblem& problem,
                                std::span<const double> nodes) {
  if (nodes.empty()) return 0;
  double y = problem.exact(nodes.front());
  double worst = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    y = euler_step(problem.f, y, nodes[i] - nodes[i - 1]);
    const double exact = problem.exact(nodes[i]);
    worst = std::max(worst, std::abs(y - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

void tally_counters(SolveResult& result) {
  result.N = static_cast<long>(result.trace.size());
  result.Q = result.P = result.S = result.star = 0;
  result.reboot_nodes.clear();
  for (const auto& node : result.trace) {
    result.Q += node.quenched;
    result.P += node.lec_primary;
    result.S += node.lec_secondary;
    result.star += node.stability_capped;
    if (node.reboot_node) result.reboot_nodes.push_back(node.x);
  }
}

namespace {

class Integration {
 public:
  Integration(const ScalarAutonomousProblem& problem, const SolverConfig& config)
      : problem_(problem), config_(config) {}

  SolveResult run() {
    StepDiagnostics start;
    start.x = problem_.x0;
    start.y_euler = start.y_final = start.y_taylor = problem_.y0;
    start.anchor_x = problem_.x0;
    start.anchor_y = problem_.y0;
    start.bootstrap_node = true;
    result_.trace.push_back(start);

    double anchor_x = problem_.x0;
    double anchor_y = problem_.y0;
    try {
      while (true) {
        const auto reboot = run_segment(anchor_x, anchor_y);
        if (!reboot) break;
        anchor_x = reboot->first;
        anchor_y = reboot->second;
      }
    } catch (const GecError& e) {
      result_.aborted = true;
      result_.diagnostic = e.what();
    }

    tally_counters(result_);
    result_.max_rel_error = max_relative_error(problem_, result_.trace);
    return std::move(result_);
  }

 private:
  using Anchor = std::pair<double, double>;

  // Integrates from a fresh anchor until xN or until a reboot is needed, in
  // which case the new anchor is returned.
  std::optional<Anchor> run_segment(double anchor_x, double anchor_y) {
    const LagrangeField field(problem_, anchor_x, anchor_y);
    const double xN = problem_.xN;

    const double x_mu = std::min(anchor_x + config_.x_mu_offset, xN);
    const BootstrapResult boot = bootstrap(problem_, anchor_x, anchor_y, x_mu, config_.bootstrap);

    StepDiagnostics first;
    first.x = boot.x1;
    first.h = boot.x1 - anchor_x;
    first.y_euler = first.y_final = boot.y1;
    first.y_taylor = taylor_value(field, boot.mu1, boot.x1);
    first.mu_L = first.mu_H = first.mu_V = boot.mu1;
    first.Delta_y_rel = (first.y_taylor - boot.y1) / std::max(1.0, std::abs(first.y_taylor));
    first.anchor_x = anchor_x;
    first.anchor_y = anchor_y;
    first.bootstrap_node = true;
    result_.trace.push_back(first);
    if (boot.x1 >= xN) return std::nullopt;

    LocalToleranceOptions prepass = config_.prepass;
    prepass.x_mu_offset = config_.x_mu_offset;
    prepass.stability_width = config_.stability_constant;
    const LocalTolerance tol =
        suggest_local_tolerance(field, boot, config_.eps_g, config_.eps_rho_default, prepass);
    const InitialStep init =
        suggest_initial_stepsize(field, boot, config_.h2_default, config_.stability_constant);
    result_.heuristics.push_back({tol.eps_rho, tol.delta_mu_m, init.h2, init.source,
                                  init.g_mu, init.g_ttt, tol.prepass_steps});
    if (result_.heuristics.size() == 1) result_.h2 = init.h2;
    const double eps_rho = tol.eps_rho;

    TripleState<double> state = TripleState<double>::uniform(boot.x1, boot.mu1);
    double y = boot.y1;
    bool first_step = true;
    double h_prev = init.h2;

    while (state.x < xN) {
      if (++steps_ > config_.max_steps) {
        throw GecError(ErrorKind::kNonFinite, "step budget exhausted");
      }

      double h = first_step ? init.h2 : std::min(config_.h2_default, config_.max_growth * h_prev);
      bool capped = first_step && init.source == H2Source::kStability;
      if (!first_step) {
        double g_mu = 0;
        try {
          g_mu = eval_g_mu(field, state.x, state.mu_high);
        } catch (const GecError& e) {
          if (e.kind() != ErrorKind::kFieldSingularity) throw;
          return reboot_at_last_node(field);
        }
        const double cap = stability_cap(std::abs(g_mu), config_.stability_constant);
        if (cap < h) {
          h = cap;
          capped = true;
        }
      }
      bool clamped = false;
      if (h >= (xN - state.x) - 1e-12 * std::max(1.0, std::abs(xN))) {
        if (xN - state.x < h) capped = false;
        h = xN - state.x;
        clamped = true;
      }

      const auto advance = [&](double step) -> std::optional<TripleState<double>> {
        try {
          auto next = dp853_triple_step(field, state, step);
          if (clamped && step == h) next.x = xN;
          return next;
        } catch (const GecError& e) {
          if (e.kind() != ErrorKind::kFieldSingularity) throw;
          return std::nullopt;
        }
      };

      auto next = advance(h);
      if (!next) return reboot_at_last_node(field);

      const double L = (next->mu_high - next->mu_low) / std::pow(h, config_.p + 1);
      const auto h_primary =
          primary_lec(next->mu_low, next->mu_high, h, config_.p, eps_rho, config_.eta);
      auto h_secondary = secondary_lec(L, next->mu_high, field, next->x, h, config_.p,
                                       eps_rho, config_.eta);
      if (h_secondary && config_.secondary_lec_floor_enabled) {
        *h_secondary = std::max(*h_secondary, 0.1 * h_primary.value_or(h));
      }

      bool lec_primary = false;
      bool lec_secondary = false;
      if (h_primary || h_secondary) {
        lec_primary = h_primary && (!h_secondary || *h_primary <= *h_secondary);
        lec_secondary = !lec_primary;
        const double adjusted = lec_primary ? *h_primary : *h_secondary;
        if (adjusted < h) {
          h = adjusted;
          clamped = false;
          capped = false;
          next = advance(h);
          if (!next) return reboot_at_last_node(field);
        } else {
          lec_primary = lec_secondary = false;
        }
      }

      StepDiagnostics node;
      node.x = next->x;
      node.h = next->x - state.x;
      node.mu_L = next->mu_low;
      node.mu_H = next->mu_high;
      node.mu_V = next->mu_very_high;
      node.Delta_mu = next->mu_very_high - next->mu_low;
      node.y_euler = euler_step(problem_.f, y, node.h);
      node.y_taylor = taylor_value(field, next->mu_high, next->x);
      const double denom = std::max(1.0, std::abs(node.y_taylor));
      node.Delta_yT = remainder_error(field, next->mu_high, next->x, node.Delta_mu, denom);
      node.Delta_y_rel = (node.y_taylor - node.y_euler) / denom;
      node.quenched =
          config_.always_quench || quench_test(node.Delta_y_rel, config_.eps_g, node.Delta_yT);
      node.y_final = node.quenched ? node.y_taylor : node.y_euler;
      node.lec_primary = lec_primary;
      node.lec_secondary = lec_secondary;
      node.stability_capped = capped;
      node.anchor_x = anchor_x;
      node.anchor_y = anchor_y;
      if (!std::isfinite(node.y_final) || !std::isfinite(node.Delta_yT)) {
        throw GecError(ErrorKind::kNonFinite, "non-finite solution at x = " + std::to_string(node.x));
      }

      if (std::abs(node.Delta_yT) > config_.eps_rb) return reboot_at_last_node(field);

      result_.trace.push_back(node);
      state = *next;
      y = node.y_final;
      h_prev = node.h;
      first_step = false;
    }
    return std::nullopt;
  }

  // Backtracks to the most recent accepted node and re-anchors there with
  // y_rb = y0 + f(mu_V)(x_rb - x0).
  Anchor reboot_at_last_node(const LagrangeField& field) {
    if (++reboots_ > config_.reboot_limit) {
      throw GecError(ErrorKind::kRebootLimit,
                     "reboot limit of " + std::to_string(config_.reboot_limit) + " exceeded");
    }
    StepDiagnostics& node = result_.trace.back();
    if (node.x >= problem_.xN) {
      throw GecError(ErrorKind::kRebootLimit, "reboot requested at the interval end");
    }
    const double y_rb = taylor_value(field, node.mu_V, node.x);
    node.y_final = y_rb;
    node.reboot_node = true;
    return {node.x, y_rb};
  }

  const ScalarAutonomousProblem& problem_;
  const SolverConfig& config_;
  SolveResult result_;
  long steps_ = 0;
  int reboots_ = 0;
};

}  // namespace

SolveResult solve(const ScalarAutonomousProblem& problem, const SolverConfig& config) {
  config.validate();
  return Integration(problem, config).run();
}

}  // namespace gec
