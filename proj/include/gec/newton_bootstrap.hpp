#pragma once

#include "gec/problems.hpp"

namespace gec {

struct BootstrapResult {
  double x1 = 0;   // x_mu, relabelled as the first node after the anchor
  double y1 = 0;   // order-7 solution at x1
  double xi1 = 0;  // Lagrange abscissa, anchor_x < xi1 < x1
  double mu1 = 0;  // order-7 estimate of y(xi1)
  int iterations = 0;
  double residual = 0;  // |F(xi1)| at acceptance
};

struct BootstrapOptions {
  double xi_step = 1e-5;          // forward-difference step for F'
  double residual_tol = 1e-14;    // stop when |F| < residual_tol
  int max_iterations = 25;
  int rk7_steps = 5;
};

/// Finds xi1 in (x0, x_mu) with
///
///   F(xi) = y_mu - y0 - f(y(xi)) (x_mu - x0) = 0,
///
/// where y(.) is integrated from (anchor_x, anchor_y) by the order-7 method
/// in rk7_steps equal steps, using Newton's method with a forward-difference
/// derivative from xi = (x0 + x_mu)/2. Iterates leaving (x0, x_mu) are pulled
/// back halfway toward the violated bound.
///
/// Throws GecError(kBootstrapFailure) on non-convergence or a flat F.
BootstrapResult bootstrap(const ScalarAutonomousProblem& problem, double anchor_x,
                          double anchor_y, double x_mu,
                          const BootstrapOptions& options = {});

inline BootstrapResult bootstrap(const ScalarAutonomousProblem& problem, double x_mu,
                                 const BootstrapOptions& options = {}) {
  return bootstrap(problem, problem.x0, problem.y0, x_mu, options);
}

}  // namespace gec
