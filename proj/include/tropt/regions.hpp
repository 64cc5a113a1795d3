#pragma once

#include <Eigen/Core>
#include <vector>

#include "tropt/cell.hpp"
#include "tropt/measure.hpp"

namespace tropt {

// One block of the grid partition induced by a weight value lambda.
// The block is the union of the leading row segments of the rows whose
// weight equals lambda and the leading column segments of the columns whose
// weight equals lambda, so it can be L-shaped; cells are stored sparsely.
struct Region {
  double lambda = 0.0;
  CellSet cells;  // lexicographic, no duplicates

  // Projections of cells (sorted). These describe the block's extent.
  std::vector<Eigen::Index> row_set;
  std::vector<Eigen::Index> col_set;

  // Rows i with mu weight == lambda and columns j with nu weight == lambda
  // (sorted). A plan of the region must reach lambda on each of these lines;
  // the remaining projected lines belong to larger-weight regions.
  std::vector<Eigen::Index> required_rows;
  std::vector<Eigen::Index> required_cols;
};

// p(i) = number of leading columns j with l_j >= k_i (at least 1);
// q(j) = number of leading rows i with k_i >= l_j (at least 1).
struct Thresholds {
  Eigen::VectorXi p;
  Eigen::VectorXi q;
};
Thresholds thresholds(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu);

// Partition of the full grid, one region per distinct weight value of
// either measure, in descending lambda order.
std::vector<Region> build_regions(const MaxPlusMeasure& mu,
                                  const MaxPlusMeasure& nu);

}  // namespace tropt
