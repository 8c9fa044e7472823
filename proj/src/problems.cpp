#include "gec/problems.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "gec/errors.hpp"

namespace gec {

namespace {

double gudermannian_residual(double y, double x) {
  return std::log(1.0 / std::cos(y) + std::tan(y)) - x;
}

}  // namespace

double solve_gudermannian_relation(double x) {
  constexpr double kEdge = 1e-12;
  double lo = -std::numbers::pi / 2 + kEdge;
  double hi = std::numbers::pi / 2 - kEdge;
  double f_lo = gudermannian_residual(lo, x);
  double f_hi = gudermannian_residual(hi, x);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw GecError(ErrorKind::kDomain,
                   "ln(sec y + tan y) = x: no bracket on (-pi/2, pi/2) for x = " +
                       std::to_string(x));
  }

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = gudermannian_residual(mid, x);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // d/dy ln(sec y + tan y) = sec y
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double r = gudermannian_residual(y, x);
    if (std::abs(r) < 1e-15) break;
    double next = y - r * std::cos(y);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (r < 0.0) {
      lo = std::max(lo, y);
    } else {
      hi = std::min(hi, y);
    }
    if (next == y) break;
    y = next;
  }
  return y;
}

std::vector<ScalarAutonomousProblem> builtin_problems() {
  std::vector<ScalarAutonomousProblem> out;
  out.reserve(6);

  out.push_back({"#1", [](double y) { return y; }, [](double) { return 1.0; },
                 [](double) { return 0.0; }, 0.0, 5.0, 2.0,
                 [](double x) { return 2.0 * std::exp(x); }});

  out.push_back({"#2", [](double y) { return y * y; },
                 [](double y) { return 2.0 * y; }, [](double) { return 2.0; },
                 -10.0, -3.0, 0.1, [](double x) { return -1.0 / x; }});

  out.push_back({"#3", [](double y) { return 0.25 * y * (1.0 - y / 20.0); },
                 [](double y) { return 0.25 - y / 40.0; },
                 [](double) { return -1.0 / 40.0; }, 0.0, 20.0, 1.0,
                 [](double x) { return 20.0 / (1.0 + 19.0 * std::exp(-0.25 * x)); }});

  out.push_back({"#4", [](double y) { return 1.0 / y; },
                 [](double y) { return -1.0 / (y * y); },
                 [](double y) { return 2.0 / (y * y * y); }, 5.0, 25.0, 1.0,
                 [](double x) { return std::sqrt(2.0 * x - 9.0); }});

  out.push_back({"#5", [](double y) { return std::cos(y); },
                 [](double y) { return -std::sin(y); },
                 [](double y) { return -std::cos(y); }, kProblem5Left,
                 kProblem5Right, -1.0, &solve_gudermannian_relation});

  out.push_back({"#6", [](double y) { return -y; }, [](double) { return -1.0; },
                 [](double) { return 0.0; }, 0.0, 10.0, 1.0,
                 [](double x) { return std::exp(-x); }});

  return out;
}

ScalarAutonomousProblem builtin_problem(int index) {
  if (index < 1 || index > 6) {
    throw GecError(ErrorKind::kInvalidArgument,
                   "problem index must be in 1..6, got " + std::to_string(index));
  }
  return builtin_problems()[static_cast<std::size_t>(index - 1)];
}

std::optional<ScalarAutonomousProblem> find_problem(std::string_view key) {
  if (!key.empty() && key.front() == '#') key.remove_prefix(1);
  int index = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
  if (ec != std::errc{} || ptr != key.data() + key.size()) return std::nullopt;
  if (index < 1 || index > 6) return std::nullopt;
  return builtin_problem(index);
}

double exact_solution(const ScalarAutonomousProblem& problem, double x) {
  if (!problem.exact) {
    throw GecError(ErrorKind::kInvalidArgument,
                   "problem " + problem.name + " has no exact solution");
  }
  const double slack = 1e-12 * std::max(1.0, problem.xN - problem.x0);
  if (!(x >= problem.x0 - slack && x <= problem.xN + slack)) {
    throw GecError(ErrorKind::kDomain, "x = " + std::to_string(x) +
                                           " outside the interval of problem " +
                                           problem.name);
  }
  return problem.exact(x);
}

ScalarAutonomousProblem with_interval(const ScalarAutonomousProblem& problem,
                                      double x0, double xN) {
  if (!(xN > x0)) {
    throw GecError(ErrorKind::kInvalidArgument, "interval override needs xN > x0");
  }
  if (!problem.exact) {
    throw GecError(ErrorKind::kInvalidArgument,
                   "interval override needs an exact solution to seed y0");
  }
  ScalarAutonomousProblem out = problem;
  out.x0 = x0;
  out.xN = xN;
  out.y0 = problem.exact(x0);
  if (!std::isfinite(out.y0)) {
    throw GecError(ErrorKind::kDomain, "exact solution undefined at the new x0");
  }
  return out;
}

ScalarAutonomousProblem constant_slope_problem(double slope, double x0,
                                               double xN, double y0) {
  return {"const", [slope](double) { return slope; }, [](double) { return 0.0; },
          [](double) { return 0.0; }, x0, xN, y0,
          [=](double x) { return y0 + slope * (x - x0); }};
}

}  // namespace gec
