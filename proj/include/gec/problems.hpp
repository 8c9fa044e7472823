#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gec {

using ScalarFunction = std::function<double(double)>;

/// y' = f(y), y(x0) = y0 on [x0, xN], with closed-form first and second
/// derivatives of f and an evaluator for the true solution.
struct ScalarAutonomousProblem {
  std::string name;
  ScalarFunction f;
  ScalarFunction f_y;
  ScalarFunction f_yy;
  double x0 = 0.0;
  double xN = 1.0;
  double y0 = 0.0;
  /// Empty when no exact solution is known.
  ScalarFunction exact;
};

/// Left and right endpoints of benchmark #5. The exact values are
/// -/+ 1.2261911708835170708130609674719; they round to these doubles.
inline constexpr double kProblem5Left = -1.2261911708835170708130609674719;
inline constexpr double kProblem5Right = 1.2261911708835170708130609674719;

/// The six benchmark problems, in order #1..#6.
std::vector<ScalarAutonomousProblem> builtin_problems();

/// Benchmark by 1-based index. Throws GecError(kInvalidArgument) outside 1..6.
ScalarAutonomousProblem builtin_problem(int index);

/// Lookup by index ("3") or name ("#3"). Returns nullopt if nothing matches.
std::optional<ScalarAutonomousProblem> find_problem(std::string_view key);

/// Evaluates problem.exact at x after checking x lies in [x0, xN]
/// (with a relative slack of 1e-12 of the span).
double exact_solution(const ScalarAutonomousProblem& problem, double x);

/// Solves ln(sec y + tan y) = x for y in (-pi/2, pi/2) by bisection, then
/// polishes with Newton steps kept inside the bracket.
double solve_gudermannian_relation(double x);

/// Copy of problem restricted or extended to [x0, xN]; y0 is re-evaluated
/// from the exact solution. Requires an exact solution defined at x0.
ScalarAutonomousProblem with_interval(const ScalarAutonomousProblem& problem,
                                      double x0, double xN);

/// y' = c; used for degenerate-case testing (Euler is exact).
ScalarAutonomousProblem constant_slope_problem(double slope, double x0,
                                               double xN, double y0);

}  // namespace gec
