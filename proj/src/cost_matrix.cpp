#include "tropt/cost_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tropt {

CostMatrix::CostMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw std::invalid_argument("cost matrix must be nonempty");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const double c = entries_(i, j);
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument(
            "cost entries must be finite and nonnegative");
      }
    }
  }
}

}  // namespace tropt
