#include "tropt/plan.hpp"

#include <stdexcept>

namespace tropt {

bool is_plan(const Plan& h, const MaxPlusMeasure& mu,
             const MaxPlusMeasure& nu) {
  if (h.rows() != mu.size() || h.cols() != nu.size()) {
    throw std::invalid_argument("plan dimensions must match the measures");
  }
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (h.row(i).maxCoeff() != ExtendedReal(mu.weight(i))) return false;
  }
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    if (h.col(j).maxCoeff() != ExtendedReal(nu.weight(j))) return false;
  }
  return true;
}

Plan trivial_plan(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu) {
  Eigen::MatrixXd sums = mu.weights().replicate(1, nu.size());
  sums.rowwise() += nu.weights().transpose();
  return sums.cast<ExtendedReal>();
}

ExtendedReal objective(const Plan& h, const CostMatrix& c) {
  if (h.rows() != c.rows() || h.cols() != c.cols()) {
    throw std::invalid_argument("plan and cost dimensions must match");
  }
  return (h + c.entries().cast<ExtendedReal>()).maxCoeff();
}

CellSet support(const Plan& h) {
  CellSet cells;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (h(i, j).is_finite()) cells.push_back({i, j});
    }
  }
  return cells;
}

}  // namespace tropt
