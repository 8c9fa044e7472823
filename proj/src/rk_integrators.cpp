#include "gec/rk_integrators.hpp"

#include <cstdio>
#include <ostream>

namespace gec {

namespace {

template <typename Tableau>
const Tableau& validated(const Tableau& t, const TableauCheck& check, const char* name) {
  if (!check.ok()) {
    throw GecError(ErrorKind::kInvalidArgument,
                   std::string(name) + " tableau failed validation (row sum " +
                       std::to_string(check.row_sum_defect) + ", weights " +
                       std::to_string(check.weight_sum_defect) + ", order " +
                       std::to_string(check.order_defect) + ")");
  }
  return t;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Matrix>
void dump_matrix(std::ostream& os, const char* method, const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      os << method << ",a," << i + 1 << ',' << j + 1 << ',' << format_value(a(i, j)) << '\n';
    }
  }
}

template <typename Vector>
void dump_vector(std::ostream& os, const char* method, const char* kind, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    os << method << ',' << kind << ',' << i + 1 << ",," << format_value(v(i)) << '\n';
  }
}

}  // namespace

const ButcherTableau<double, 4>& rk4_tableau() {
  static const ButcherTableau<double, 4> t = make_rk4_tableau<double>();
  static const auto& checked = validated(t, check_tableau(t, 4), "RK4");
  return checked;
}

const ButcherTableau<double, 12>& rk7_tableau() {
  static const ButcherTableau<double, 12> t = make_rk7_tableau<double>();
  static const auto& checked = validated(t, check_tableau(t, 7), "RK7");
  return checked;
}

const EmbeddedTriple<double>& dp853_tableau() {
  static const EmbeddedTriple<double> t = make_dp853_tableau<double>();
  static const auto& checked = validated(t, check_tableau(t), "DP853");
  return checked;
}

void write_tableau_csv(std::ostream& os) {
  os << "method,kind,row,col,value\n";
  const auto& dp = dp853_tableau();
  dump_vector(os, "DP853", "c", dp.c);
  dump_matrix(os, "DP853", dp.a);
  dump_vector(os, "DP853", "b_low", dp.b_low);
  dump_vector(os, "DP853", "b_high", dp.b_high);
  dump_vector(os, "DP853", "b_very_high", dp.b_very_high);
  const auto& rk7 = rk7_tableau();
  dump_vector(os, "RK7", "c", rk7.c);
  dump_matrix(os, "RK7", rk7.a);
  dump_vector(os, "RK7", "b", rk7.b);
  const auto& rk4 = rk4_tableau();
  dump_vector(os, "RK4", "c", rk4.c);
  dump_matrix(os, "RK4", rk4.a);
  dump_vector(os, "RK4", "b", rk4.b);
}

}  // namespace gec
