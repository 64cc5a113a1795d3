#pragma once

// Shared helpers for building small instances in tests.

#include <Eigen/Core>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/plan.hpp"

namespace tropt::testing {

inline Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

inline Eigen::MatrixXd mat(
    std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXd m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Plan literal: NaN stands for minus infinity.
inline Plan plan(std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Plan h(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double x : row) {
      h(i, j++) = std::isnan(x) ? ExtendedReal::neg_inf() : ExtendedReal(x);
    }
    ++i;
  }
  return h;
}

constexpr double kNegInf = std::numeric_limits<double>::quiet_NaN();

inline bool plans_equal(const Plan& a, const Plan& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

// Fundamental measure of size n: all weights zero.
inline MaxPlusMeasure fundamental(Eigen::Index n) {
  return normalize_measure(Eigen::VectorXd::Zero(n));
}

// Random normalized measure with weights drawn from the given values.
inline MaxPlusMeasure random_measure(std::mt19937_64& rng, Eigen::Index size,
                                     const std::vector<double>& values) {
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  Eigen::VectorXd w(size);
  for (Eigen::Index i = 0; i < size; ++i) w(i) = values[pick(rng)];
  return normalize_measure(w);
}

inline CostMatrix random_integer_cost(std::mt19937_64& rng, Eigen::Index rows,
                                      Eigen::Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> pick(lo, hi);
  Eigen::MatrixXd c(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) c(i, j) = pick(rng);
  }
  return CostMatrix(std::move(c));
}

}  // namespace tropt::testing
