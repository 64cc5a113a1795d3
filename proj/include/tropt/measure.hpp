#pragma once

#include <Eigen/Core>
#include <vector>

namespace tropt {

// Finitely supported max-plus probability measure. Weights are sorted
// non-increasing, all finite, and the largest weight is 0.
class MaxPlusMeasure {
 public:
  Eigen::Index size() const { return weights_.size(); }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(Eigen::Index i) const { return weights_(i); }

  // labels()[pos] = position of this weight in the raw input vector.
  const std::vector<Eigen::Index>& labels() const { return labels_; }

  // Distinct weight values, descending.
  std::vector<double> distinct_weights() const;

  friend MaxPlusMeasure normalize_measure(const Eigen::VectorXd& raw);

 private:
  MaxPlusMeasure(Eigen::VectorXd weights, std::vector<Eigen::Index> labels)
      : weights_(std::move(weights)), labels_(std::move(labels)) {}

  Eigen::VectorXd weights_;
  std::vector<Eigen::Index> labels_;
};

// Shifts the weights so the maximum is 0 and stable-sorts them
// non-increasing. Rejects empty input and non-finite entries.
MaxPlusMeasure normalize_measure(const Eigen::VectorXd& raw);

}  // namespace tropt
