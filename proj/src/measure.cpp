#include "tropt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tropt {

MaxPlusMeasure normalize_measure(const Eigen::VectorXd& raw) {
  if (raw.size() == 0) {
    throw std::invalid_argument("measure needs at least one weight");
  }
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw(i))) {
      throw std::invalid_argument("measure weights must be finite");
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(raw.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return raw(a) > raw(b); });

  const double top = raw(order.front());
  Eigen::VectorXd sorted(raw.size());
  for (Eigen::Index pos = 0; pos < raw.size(); ++pos) {
    sorted(pos) = raw(order[static_cast<std::size_t>(pos)]) - top;
  }
  return MaxPlusMeasure(std::move(sorted), std::move(order));
}

std::vector<double> MaxPlusMeasure::distinct_weights() const {
  std::vector<double> values;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (values.empty() || values.back() != weights_(i)) {
      values.push_back(weights_(i));
    }
  }
  return values;
}

}  // namespace tropt
