#pragma once

#include <Eigen/Core>

namespace tropt {

// Nonnegative finite cost per cell. Rows index the source points, columns
// the target points.
class CostMatrix {
 public:
  // Validates: nonempty, every entry finite and >= 0.
  explicit CostMatrix(Eigen::MatrixXd entries);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

}  // namespace tropt
