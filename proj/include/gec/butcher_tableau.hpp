#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace gec {

template <typename Scalar, int Stages>
struct ButcherTableau {
  using Matrix = Eigen::Matrix<Scalar, Stages, Stages>;
  using Vector = Eigen::Matrix<Scalar, Stages, 1>;

  static constexpr int kStages = Stages;

  Matrix a = Matrix::Zero();
  Vector b = Vector::Zero();
  Vector c = Vector::Zero();
};

/// Twelve shared stages with three weight sets: order 3 (low), order 5 (high)
/// and order 8 (very high).
template <typename Scalar>
struct EmbeddedTriple {
  static constexpr int kStages = 12;
  using Matrix = Eigen::Matrix<Scalar, kStages, kStages>;
  using Vector = Eigen::Matrix<Scalar, kStages, 1>;

  Matrix a = Matrix::Zero();
  Vector c = Vector::Zero();
  Vector b_low = Vector::Zero();
  Vector b_high = Vector::Zero();
  Vector b_very_high = Vector::Zero();
};

template <typename Derived>
bool is_strictly_lower_triangular(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

/// max_q |c_q - sum_r a_{q,r}|
template <typename DerivedA, typename DerivedC>
typename DerivedA::Scalar row_sum_defect(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedC>& c) {
  return (a.rowwise().sum() - c).cwiseAbs().maxCoeff();
}

/// Largest |b . Psi(t) - 1/gamma(t)| over all rooted trees t with
/// 1 <= |t| <= order, where Psi(.) = 1 and Psi([t1..tm]) = prod_k A Psi(t_k).
/// Trees are enumerated as non-decreasing multisets of smaller trees, so each
/// tree appears exactly once (1, 1, 2, 4, 9, 20, 48, 115 per order).
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar order_condition_defect(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
    int order) {
  using Scalar = typename DerivedA::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  struct Tree {
    int order;
    Scalar gamma;
    Vec a_psi;  // A * Psi(t), the factor this tree contributes as a child
    Vec psi;
  };

  const Eigen::Index s = a.rows();
  std::vector<Tree> trees;
  Scalar worst = 0;

  auto record = [&](int n, Scalar gamma_children, const Vec& psi) {
    const Scalar gamma = Scalar(n) * gamma_children;
    const Scalar defect = std::abs(b.dot(psi) - Scalar(1) / gamma);
    if (defect > worst) worst = defect;
    trees.push_back({n, gamma, a * psi, psi});
  };

  // Children are chosen with non-decreasing index into `trees` (restricted to
  // trees of lower order than the one being built).
  auto extend = [&](auto&& self, int n, int remaining, std::size_t first,
                    std::size_t limit, Scalar gamma_children,
                    const Vec& psi) -> void {
    if (remaining == 0) {
      record(n, gamma_children, psi);
      return;
    }
    for (std::size_t k = first; k < limit; ++k) {
      const Tree& child = trees[k];
      if (child.order > remaining) continue;
      Vec next = psi.cwiseProduct(child.a_psi);
      self(self, n, remaining - child.order, k, limit,
           gamma_children * child.gamma, next);
    }
  };

  for (int n = 1; n <= order; ++n) {
    const std::size_t limit = trees.size();
    extend(extend, n, n - 1, 0, limit, Scalar(1), Vec::Ones(s));
  }
  return worst;
}

/// Highest p such that every order condition up to p holds within tol.
template <typename DerivedA, typename DerivedB>
int satisfied_order(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b,
                    typename DerivedA::Scalar tol, int max_order = 9) {
  int p = 0;
  while (p < max_order && order_condition_defect(a, b, p + 1) <= tol) ++p;
  return p;
}

}  // namespace gec
