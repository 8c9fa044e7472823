#pragma once

#include <cmath>
#include <iosfwd>
#include <span>
#include <string>

#include "gec/butcher_tableau.hpp"
#include "gec/detail/coefficients.hpp"
#include "gec/errors.hpp"

namespace gec {

/// The three DP853 solutions of the auxiliary problem at node x.
template <typename Scalar = double>
struct TripleState {
  Scalar x = 0;
  Scalar mu_low = 0;        // order 3, restarted from mu_high every step
  Scalar mu_high = 0;       // order 5
  Scalar mu_very_high = 0;  // order 8

  static TripleState uniform(Scalar x, Scalar mu) { return {x, mu, mu, mu}; }
};

namespace detail {

template <typename Scalar, typename Vector>
void fill(Vector& v, std::span<const VectorEntry> entries) {
  for (const auto& e : entries) v(e.index - 1) = static_cast<Scalar>(e.value);
}

template <typename Scalar, typename Matrix>
void fill(Matrix& m, std::span<const MatrixEntry> entries) {
  for (const auto& e : entries) m(e.row - 1, e.col - 1) = static_cast<Scalar>(e.value);
}

inline void require_positive_step(double h) {
  if (!(h > 0)) {
    throw GecError(ErrorKind::kInvalidArgument,
                   "stepsize must be positive, got " + std::to_string(h));
  }
}

template <typename Scalar>
void require_finite(Scalar v, const char* what) {
  if (!std::isfinite(static_cast<double>(v))) {
    throw GecError(ErrorKind::kNonFinite, std::string("non-finite value in ") + what);
  }
}

}  // namespace detail

template <typename Scalar>
ButcherTableau<Scalar, 4> make_rk4_tableau() {
  ButcherTableau<Scalar, 4> t;
  t.a(1, 0) = Scalar(1) / 2;
  t.a(2, 1) = Scalar(1) / 2;
  t.a(3, 2) = Scalar(1);
  t.c << Scalar(0), Scalar(1) / 2, Scalar(1) / 2, Scalar(1);
  t.b << Scalar(1) / 6, Scalar(1) / 3, Scalar(1) / 3, Scalar(1) / 6;
  return t;
}

template <typename Scalar>
ButcherTableau<Scalar, 12> make_rk7_tableau() {
  ButcherTableau<Scalar, 12> t;
  detail::fill<Scalar>(t.a, detail::kRk7A);
  detail::fill<Scalar>(t.c, detail::kRk7C);
  detail::fill<Scalar>(t.b, detail::kRk7B);
  return t;
}

template <typename Scalar>
EmbeddedTriple<Scalar> make_dp853_tableau() {
  EmbeddedTriple<Scalar> t;
  detail::fill<Scalar>(t.a, detail::kDp853A);
  detail::fill<Scalar>(t.c, detail::kDp853C);
  detail::fill<Scalar>(t.b_very_high, detail::kDp853BVeryHigh);
  detail::fill<Scalar>(t.b_low, detail::kDp853BLow);
  typename EmbeddedTriple<Scalar>::Vector defect = EmbeddedTriple<Scalar>::Vector::Zero();
  detail::fill<Scalar>(defect, detail::kDp853HighDefect);
  t.b_high = t.b_very_high - defect;
  return t;
}

/// True iff b_high and b_very_high vanish at stages 2..5 and b_low vanishes
/// at stages 2..8, 10, 11 (1-based), compared exactly.
template <typename Scalar>
bool dp853_sparsity_check(const EmbeddedTriple<Scalar>& t) {
  for (int q = 2; q <= 5; ++q) {
    if (t.b_high(q - 1) != 0 || t.b_very_high(q - 1) != 0) return false;
  }
  for (int q : {2, 3, 4, 5, 6, 7, 8, 10, 11}) {
    if (t.b_low(q - 1) != 0) return false;
  }
  return true;
}

/// Load-time checks shared by every tableau: explicit structure, consistency
/// of each weight set, the row-sum condition and the claimed order.
struct TableauCheck {
  bool explicit_structure = false;
  double row_sum_defect = 0;
  double weight_sum_defect = 0;
  double order_defect = 0;
  bool sparsity = true;

  bool ok() const {
    return explicit_structure && row_sum_defect <= 1e-13 &&
           weight_sum_defect <= 1e-13 && order_defect <= 1e-12 && sparsity;
  }
};

template <typename Scalar, int Stages>
TableauCheck check_tableau(const ButcherTableau<Scalar, Stages>& t, int order) {
  TableauCheck r;
  r.explicit_structure = is_strictly_lower_triangular(t.a);
  r.row_sum_defect = static_cast<double>(row_sum_defect(t.a, t.c));
  r.weight_sum_defect = static_cast<double>(std::abs(t.b.sum() - Scalar(1)));
  r.order_defect = static_cast<double>(order_condition_defect(t.a, t.b, order));
  return r;
}

template <typename Scalar>
TableauCheck check_tableau(const EmbeddedTriple<Scalar>& t) {
  TableauCheck r;
  r.explicit_structure = is_strictly_lower_triangular(t.a);
  r.row_sum_defect = static_cast<double>(row_sum_defect(t.a, t.c));
  r.weight_sum_defect = static_cast<double>(
      std::max({std::abs(t.b_low.sum() - Scalar(1)), std::abs(t.b_high.sum() - Scalar(1)),
                std::abs(t.b_very_high.sum() - Scalar(1))}));
  r.order_defect = static_cast<double>(std::max(
      {order_condition_defect(t.a, t.b_low, 3), order_condition_defect(t.a, t.b_high, 5),
       order_condition_defect(t.a, t.b_very_high, 8)}));
  r.sparsity = dp853_sparsity_check(t);
  return r;
}

/// Validated, process-wide tableaux. The first call for double runs
/// check_tableau and throws GecError(kInvalidArgument) on a bad transcription.
const ButcherTableau<double, 4>& rk4_tableau();
const ButcherTableau<double, 12>& rk7_tableau();
const EmbeddedTriple<double>& dp853_tableau();

/// y + h f(y). Throws GecError(kNonFinite) on overflow.
template <typename Scalar, typename Rhs>
Scalar euler_step(Rhs&& f, Scalar y, Scalar h) {
  detail::require_positive_step(static_cast<double>(h));
  const Scalar out = y + h * f(y);
  detail::require_finite(out, "Euler step");
  return out;
}

/// One step of an explicit method for y' = f(x, y).
template <typename Scalar, int Stages, typename Rhs>
Scalar explicit_rk_step(const ButcherTableau<Scalar, Stages>& t, Rhs&& f,
                        Scalar x, Scalar y, Scalar h) {
  detail::require_positive_step(static_cast<double>(h));
  Eigen::Matrix<Scalar, Stages, 1> k = Eigen::Matrix<Scalar, Stages, 1>::Zero();
  for (int q = 0; q < Stages; ++q) {
    Scalar arg = y;
    for (int r = 0; r < q; ++r) arg += t.a(q, r) * k(r);
    k(q) = h * f(x + t.c(q) * h, arg);
    detail::require_finite(k(q), "Runge-Kutta stage");
  }
  return y + t.b.dot(k);
}

template <typename Rhs>
double rk4_step(Rhs&& f, double x, double y, double h) {
  return explicit_rk_step(rk4_tableau(), f, x, y, h);
}

template <typename Rhs>
double rk7_step(Rhs&& f, double x, double y, double h) {
  return explicit_rk_step(rk7_tableau(), f, x, y, h);
}

/// n equal steps of `step` from (x0, y0) to x1.
template <typename Step, typename Rhs>
double integrate_fixed(Step&& step, Rhs&& f, double x0, double y0, double x1, int n) {
  const double h = (x1 - x0) / n;
  double y = y0;
  for (int i = 0; i < n; ++i) y = step(f, x0 + i * h, y, h);
  return y;
}

/// One DP853 step on mu' = g(x, mu). All twelve stages are built from
/// mu_very_high; the order-8 and order-5 results advance their own
/// sequences, while the order-3 result is formed from the incoming mu_high.
template <typename Scalar, typename Field>
TripleState<Scalar> dp853_triple_step(const EmbeddedTriple<Scalar>& t, Field&& g,
                                      const TripleState<Scalar>& s, Scalar h) {
  detail::require_positive_step(static_cast<double>(h));
  Eigen::Matrix<Scalar, 12, 1> k = Eigen::Matrix<Scalar, 12, 1>::Zero();
  for (int q = 0; q < 12; ++q) {
    Scalar arg = s.mu_very_high;
    for (int r = 0; r < q; ++r) arg += t.a(q, r) * k(r);
    k(q) = h * g(s.x + t.c(q) * h, arg);
    detail::require_finite(k(q), "DP853 stage");
  }
  TripleState<Scalar> out;
  out.x = s.x + h;
  out.mu_very_high = s.mu_very_high + t.b_very_high.dot(k);
  out.mu_high = s.mu_high + t.b_high.dot(k);
  out.mu_low = s.mu_high + t.b_low.dot(k);
  return out;
}

template <typename Field>
TripleState<double> dp853_triple_step(Field&& g, const TripleState<double>& s, double h) {
  return dp853_triple_step(dp853_tableau(), g, s, h);
}

/// CSV dump of every built-in tableau: method,kind,row,col,value (1-based).
void write_tableau_csv(std::ostream& os);

}  // namespace gec
