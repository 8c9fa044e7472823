#pragma once

#include <string_view>

#include "gec/lagrange_field.hpp"
#include "gec/newton_bootstrap.hpp"

namespace gec {

/// Real-axis stability width shared by all three DP853 members on
/// mu' = -lambda mu: every output from mu = 1 stays in (0, 1) for
/// 0 < lambda h < 1.3764.
inline constexpr double kDp853StabilityWidth = 1.3764;

enum class H2Source { kDefault, kStability, kGttt };

std::string_view to_string(H2Source source);

struct HeuristicReport {
  double eps_rho = 0;
  double delta_mu_m = 0;
  double h2 = 0;
  H2Source h2_source = H2Source::kDefault;
  double g_mu = 0;   // g_mu(x1, mu1)
  double g_ttt = 0;  // (d/dx + g d/dmu)^3 g at (x1, mu1)
  int prepass_steps = 0;
};

struct LocalToleranceOptions {
  int prepass_steps = 50;
  bool stability_capped = true;
  double stability_width = kDp853StabilityWidth;
  /// Nodes closer than near_anchor_factor * x_mu_offset to the anchor are
  /// left out of the delta_mu_m maximum; 0 disables the exclusion.
  double near_anchor_factor = 10.0;
  double x_mu_offset = 1e-3;
};

struct LocalTolerance {
  double eps_rho = 0;
  double delta_mu_m = 0;  // 0 when every pre-pass node was excluded
  int prepass_steps = 0;
};

/// Coarse RK4 pass over [x1, xN] on the auxiliary field, then
///
///   delta_mu_m = max_j eps_g max(1, |y0 + f(mu_j)(x_j - x0)|) / |f_y(mu_j)(x_j - x0)|
///   eps_rho    = min(eps_rho_default, delta_mu_m / (xN - x0)).
LocalTolerance suggest_local_tolerance(const LagrangeField& field,
                                       const BootstrapResult& boot, double eps_g,
                                       double eps_rho_default,
                                       const LocalToleranceOptions& options = {});

struct InitialStep {
  double h2 = 0;
  H2Source source = H2Source::kDefault;
  double g_mu = 0;
  double g_ttt = 0;
};

/// h2 = min(h2_default, width / |g_mu(x1, mu1)|,
///          |24 max(1, |mu1|) / g'''(x1, mu1)|^(1/3)).
/// Zero or non-finite g_mu / g''' drop their term.
InitialStep suggest_initial_stepsize(const LagrangeField& field,
                                     const BootstrapResult& boot, double h2_default,
                                     double stability_width = kDp853StabilityWidth);

/// Combines initial-stepsize candidates; exposed for testing the argmin logic.
InitialStep choose_initial_stepsize(double h2_default, double g_mu, double g_ttt,
                                    double mu1,
                                    double stability_width = kDp853StabilityWidth);

}  // namespace gec
