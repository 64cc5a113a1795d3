#include "tropt/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropt/matching.hpp"
#include "tropt/solver.hpp"

namespace tropt {

namespace {

bool strict_row_max(const Plan& h, Eigen::Index i, Eigen::Index j) {
  for (Eigen::Index k = 0; k < h.cols(); ++k) {
    if (k != j && h(i, k) >= h(i, j)) return false;
  }
  return true;
}

bool strict_col_max(const Plan& h, Eigen::Index i, Eigen::Index j) {
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    if (k != i && h(k, j) >= h(i, j)) return false;
  }
  return true;
}

}  // namespace

bool is_reduced(const Plan& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (!h(i, j).is_finite()) continue;
      if (!strict_row_max(h, i, j) && !strict_col_max(h, i, j)) return false;
    }
  }
  return true;
}

bool is_reduced(const Region& region, const CellSet& support) {
  for (const Cell& cell : support) {
    if (!std::binary_search(region.cells.begin(), region.cells.end(), cell)) {
      throw std::invalid_argument("support cell outside the region");
    }
  }
  // All support entries share the region weight, so strict maximum on a
  // line of the region means sole support cell on that line.
  for (const Cell& cell : support) {
    bool alone_in_row = true, alone_in_col = true;
    for (const Cell& other : support) {
      if (other == cell) continue;
      if (other.row == cell.row) alone_in_row = false;
      if (other.col == cell.col) alone_in_col = false;
    }
    if (!alone_in_row && !alone_in_col) return false;
  }
  return true;
}

Plan reduce(const Plan& h) {
  Plan result = h;
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (Eigen::Index i = 0; i < result.rows() && !deleted; ++i) {
      for (Eigen::Index j = 0; j < result.cols() && !deleted; ++j) {
        if (!result(i, j).is_finite()) continue;
        if (strict_row_max(result, i, j) || strict_col_max(result, i, j)) {
          continue;
        }
        // Neither line's maximum depends on this entry alone, so the
        // marginals survive its removal.
        result(i, j) = ExtendedReal::neg_inf();
        deleted = true;
      }
    }
  }
  return result;
}

bool contains_perfect_matching(const Plan& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("perfect matchings need a square plan");
  }
  return max_bipartite_matching(support(h), h.rows(), h.cols()) == h.rows();
}

bool pm_feasible(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu) {
  return mu.size() == nu.size() && mu.weights() == nu.weights();
}

UniquenessCertificate uniqueness_certificate(const MaxPlusMeasure& mu,
                                             const MaxPlusMeasure& nu,
                                             const CostMatrix& c) {
  UniquenessCertificate certificate;
  for (const Region& region : build_regions(mu, nu)) {
    const RegionSolution solution = solve_region(region, c);
    certificate.per_region.emplace_back(
        region.lambda, is_reduced(region, solution.support));
  }
  if (certificate.per_region.size() == 1) {
    certificate.overall_fundamental = certificate.per_region[0].second;
  }
  return certificate;
}

}  // namespace tropt
