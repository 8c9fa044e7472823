#pragma once

#include <functional>

#include "gec/problems.hpp"

namespace gec {

/// The auxiliary field
///
///   g(x, mu) = [f(y0 + f(mu)(x - x0)) - f(mu)] / [f_y(mu)(x - x0)]
///
/// whose solution mu(x) makes y0 + f(mu)(x - x0) the exact solution. The
/// anchor (x0, y0) is the problem's initial point until a reboot moves it.
/// The problem is held by pointer and must outlive the field.
class LagrangeField {
 public:
  LagrangeField(const ScalarAutonomousProblem& problem, double anchor_x,
                double anchor_y);

  const ScalarAutonomousProblem& problem() const { return *problem_; }
  double anchor_x() const { return anchor_x_; }
  double anchor_y() const { return anchor_y_; }

  double operator()(double x, double mu) const;

 private:
  const ScalarAutonomousProblem* problem_;
  double anchor_x_;
  double anchor_y_;
};

/// g(x, mu). Throws GecError(kFieldSingularity) when x is within
/// 1e-12 max(1, |x0|) of the anchor or when f_y(mu) = 0 with a nonzero
/// numerator. A vanishing numerator yields 0 regardless of f_y: the
/// remainder is then exact for every mu.
double eval_g(const LagrangeField& field, double x, double mu);

/// dg/dmu by a central difference with step max(1e-6, 1e-6 |mu|).
double eval_g_mu(const LagrangeField& field, double x, double mu);

/// (d/dx + g d/dmu)^3 g at (x, mu) for any field g, by three nested central
/// differences of t -> v(x + t, mu + t g(x, mu)) with step `step`.
template <typename Field>
double third_total_derivative(const Field& g, double x, double mu, double step) {
  using PointFunction = std::function<double(double, double)>;
  auto along = [&g, step](PointFunction v) -> PointFunction {
    return [&g, step, v = std::move(v)](double xx, double mm) {
      const double slope = g(xx, mm);
      return (v(xx + step, mm + step * slope) - v(xx - step, mm - step * slope)) /
             (2.0 * step);
    };
  };
  PointFunction base = [&g](double xx, double mm) { return g(xx, mm); };
  return along(along(along(std::move(base))))(x, mu);
}

/// Third total derivative (d/dx + g d/dmu)^3 g, i.e. mu'''' along the
/// trajectory through (x, mu). Each of the three nested total derivatives
/// is a central difference of t -> v(x + t, mu + t g(x, mu)) with
/// t = min(1e-4 max(1, |x|), 0.1 |x - x0|).
double eval_g_ttt(const LagrangeField& field, double x, double mu);

/// R = f(mu)(x - x0)
double remainder(const LagrangeField& field, double mu, double x);

/// y0 + R, the Taylor reconstruction of y(x).
double taylor_value(const LagrangeField& field, double mu, double x);

}  // namespace gec
