#include "gec/tolerance_heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gec/errors.hpp"
#include "gec/rk_integrators.hpp"

namespace gec {

std::string_view to_string(H2Source source) {
  switch (source) {
    case H2Source::kDefault:
      return "default";
    case H2Source::kStability:
      return "stability";
    case H2Source::kGttt:
      return "g_ttt";
  }
  return "unknown";
}

LocalTolerance suggest_local_tolerance(const LagrangeField& field,
                                       const BootstrapResult& boot, double eps_g,
                                       double eps_rho_default,
                                       const LocalToleranceOptions& options) {
  const auto& p = field.problem();
  const double x0 = field.anchor_x();
  const double y0 = field.anchor_y();
  const double span = p.xN - x0;

  LocalTolerance out;
  out.eps_rho = eps_rho_default;
  if (!(boot.x1 < p.xN)) return out;

  double h = (p.xN - boot.x1) / options.prepass_steps;
  if (options.stability_capped) {
    const double g_mu = std::abs(eval_g_mu(field, boot.x1, boot.mu1));
    if (g_mu > 0 && std::isfinite(g_mu)) h = std::min(h, options.stability_width / g_mu);
  }
  const int steps = std::max(
      options.prepass_steps, static_cast<int>(std::ceil((p.xN - boot.x1) / h - 1e-9)));
  h = (p.xN - boot.x1) / steps;
  out.prepass_steps = steps;

  const double min_distance = options.near_anchor_factor * options.x_mu_offset;
  double delta_mu_m = 0;
  bool any = false;
  double mu = boot.mu1;
  for (int j = 1; j <= steps; ++j) {
    const double x_prev = boot.x1 + (j - 1) * h;
    try {
      mu = rk4_step(field, x_prev, mu, h);
    } catch (const GecError& e) {
      if (e.kind() == ErrorKind::kFieldSingularity || e.kind() == ErrorKind::kNonFinite) break;
      throw;
    }
    const double x = (j == steps) ? p.xN : boot.x1 + j * h;
    const double dx = x - x0;
    if (dx < min_distance) continue;
    const double scaled_slope = std::abs(p.f_y(mu) * dx);
    if (!(scaled_slope > 0)) continue;
    const double scale = std::max(1.0, std::abs(y0 + p.f(mu) * dx));
    const double bound = eps_g * scale / scaled_slope;
    if (!std::isfinite(bound)) continue;
    delta_mu_m = std::max(delta_mu_m, bound);
    any = true;
  }

  if (any) {
    out.delta_mu_m = delta_mu_m;
    out.eps_rho = std::min(eps_rho_default, delta_mu_m / span);
  }
  return out;
}

InitialStep choose_initial_stepsize(double h2_default, double g_mu, double g_ttt,
                                    double mu1,
                                    double stability_width) {
  InitialStep out{h2_default, H2Source::kDefault, g_mu, g_ttt};
  if (std::isfinite(g_mu) && g_mu != 0) {
    const double cap = stability_width / std::abs(g_mu);
    if (cap < out.h2) out = {cap, H2Source::kStability, g_mu, g_ttt};
  }
  if (std::isfinite(g_ttt) && g_ttt != 0) {
    const double h = std::cbrt(std::abs(24.0 * std::max(1.0, std::abs(mu1)) / g_ttt));
    if (h < out.h2) out = {h, H2Source::kGttt, g_mu, g_ttt};
  }
  return out;
}

InitialStep suggest_initial_stepsize(const LagrangeField& field,
                                     const BootstrapResult& boot, double h2_default,
                                     double stability_width) {
  const auto guarded = [](auto&& fn) {
    try {
      return fn();
    } catch (const GecError& e) {
      if (e.kind() == ErrorKind::kFieldSingularity || e.kind() == ErrorKind::kNonFinite) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      throw;
    }
  };
  const double g_mu = guarded([&] { return eval_g_mu(field, boot.x1, boot.mu1); });
  const double g_ttt = guarded([&] { return eval_g_ttt(field, boot.x1, boot.mu1); });
  return choose_initial_stepsize(h2_default, g_mu, g_ttt, boot.mu1, stability_width);
}

}  // namespace gec
