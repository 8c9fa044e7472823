#include "gec/lagrange_field.hpp"

#include <cmath>
#include <string>

#include "gec/errors.hpp"

namespace gec {

LagrangeField::LagrangeField(const ScalarAutonomousProblem& problem,
                             double anchor_x, double anchor_y)
    : problem_(&problem), anchor_x_(anchor_x), anchor_y_(anchor_y) {
  if (!(anchor_x >= problem.x0 && anchor_x < problem.xN)) {
    throw GecError(ErrorKind::kInvalidArgument,
                   "field anchor must lie in [x0, xN) of problem " + problem.name);
  }
}

double LagrangeField::operator()(double x, double mu) const {
  return eval_g(*this, x, mu);
}

double eval_g(const LagrangeField& field, double x, double mu) {
  const auto& p = field.problem();
  const double dx = x - field.anchor_x();
  if (std::abs(dx) < 1e-12 * std::max(1.0, std::abs(field.anchor_x()))) {
    throw GecError(ErrorKind::kFieldSingularity,
                   "auxiliary field evaluated at its anchor x = " + std::to_string(x));
  }
  const double f_mu = p.f(mu);
  const double numerator = p.f(field.anchor_y() + f_mu * dx) - f_mu;
  if (numerator == 0.0) return 0.0;
  const double denominator = p.f_y(mu) * dx;
  if (denominator == 0.0) {
    throw GecError(ErrorKind::kFieldSingularity,
                   "f_y(mu) = 0 in the auxiliary field at mu = " + std::to_string(mu));
  }
  return numerator / denominator;
}

double eval_g_mu(const LagrangeField& field, double x, double mu) {
  const double delta = std::max(1e-6, 1e-6 * std::abs(mu));
  return (eval_g(field, x, mu + delta) - eval_g(field, x, mu - delta)) / (2.0 * delta);
}

double eval_g_ttt(const LagrangeField& field, double x, double mu) {
  const double step = std::min(1e-4 * std::max(1.0, std::abs(x)),
                               0.1 * std::abs(x - field.anchor_x()));
  return third_total_derivative(field, x, mu, step);
}

double remainder(const LagrangeField& field, double mu, double x) {
  return field.problem().f(mu) * (x - field.anchor_x());
}

double taylor_value(const LagrangeField& field, double mu, double x) {
  return field.anchor_y() + remainder(field, mu, x);
}

}  // namespace gec
