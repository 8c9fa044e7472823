#include "gec/newton_bootstrap.hpp"

#include <cmath>
#include <string>

#include "gec/errors.hpp"
#include "gec/rk_integrators.hpp"

namespace gec {

BootstrapResult bootstrap(const ScalarAutonomousProblem& problem, double anchor_x,
                          double anchor_y, double x_mu,
                          const BootstrapOptions& options) {
  if (!(x_mu > anchor_x)) {
    throw GecError(ErrorKind::kInvalidArgument, "bootstrap needs x_mu > x0");
  }
  const auto rhs = [&problem](double, double y) { return problem.f(y); };
  const auto solution_at = [&](double x) {
    return integrate_fixed([](auto& f, double xx, double yy, double h) { return rk7_step(f, xx, yy, h); },
                           rhs, anchor_x, anchor_y, x, options.rk7_steps);
  };

  const double span = x_mu - anchor_x;
  const double y_mu = solution_at(x_mu);
  const auto residual = [&](double xi) {
    return y_mu - anchor_y - problem.f(solution_at(xi)) * span;
  };

  BootstrapResult out;
  out.x1 = x_mu;
  out.y1 = y_mu;

  double xi = 0.5 * (anchor_x + x_mu);
  double r = residual(xi);
  int iterations = 0;
  while (!(std::abs(r) < options.residual_tol)) {
    if (iterations == options.max_iterations) {
      throw GecError(ErrorKind::kBootstrapFailure,
                     "Newton iteration for xi1 did not converge (|F| = " +
                         std::to_string(std::abs(r)) + ")");
    }
    const double slope = (residual(xi + options.xi_step) - r) / options.xi_step;
    if (!(std::abs(slope) >= 1e-300)) {
      throw GecError(ErrorKind::kBootstrapFailure, "flat F in the xi1 Newton iteration");
    }
    double next = xi - r / slope;
    if (next <= anchor_x) next = 0.5 * (xi + anchor_x);
    if (next >= x_mu) next = 0.5 * (xi + x_mu);
    xi = next;
    r = residual(xi);
    ++iterations;
  }

  out.xi1 = xi;
  out.mu1 = solution_at(xi);
  out.iterations = iterations;
  out.residual = std::abs(r);
  return out;
}

}  // namespace gec
