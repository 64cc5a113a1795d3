#include "tropt/regions.hpp"

#include <algorithm>
#include <map>

namespace tropt {

namespace {

// Number of leading entries of the non-increasing vector w that are >= x.
// At least 1 because w(0) == 0 >= x for normalized weights.
Eigen::Index leading_count_at_least(const Eigen::VectorXd& w, double x) {
  Eigen::Index count = 0;
  while (count < w.size() && w(count) >= x) ++count;
  return count;
}

}  // namespace

Thresholds thresholds(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu) {
  Thresholds t;
  t.p.resize(mu.size());
  t.q.resize(nu.size());
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    t.p(i) = static_cast<int>(leading_count_at_least(nu.weights(), mu.weight(i)));
  }
  for (Eigen::Index j = 0; j < nu.size(); ++j) {
    t.q(j) = static_cast<int>(leading_count_at_least(mu.weights(), nu.weight(j)));
  }
  return t;
}

std::vector<Region> build_regions(const MaxPlusMeasure& mu,
                                  const MaxPlusMeasure& nu) {
  const Thresholds t = thresholds(mu, nu);

  // Distinct weight values of either measure, descending.
  std::map<double, Region, std::greater<>> by_lambda;
  auto region_of = [&](double lambda) -> Region& {
    Region& r = by_lambda[lambda];
    r.lambda = lambda;
    return r;
  };

  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    Region& r = region_of(mu.weight(i));
    r.required_rows.push_back(i);
    for (Eigen::Index j = 0; j < t.p(i); ++j) r.cells.push_back({i, j});
  }
  for (Eigen::Index j = 0; j < nu.size(); ++j) {
    Region& r = region_of(nu.weight(j));
    r.required_cols.push_back(j);
    for (Eigen::Index i = 0; i < t.q(j); ++i) r.cells.push_back({i, j});
  }

  std::vector<Region> regions;
  regions.reserve(by_lambda.size());
  for (auto& [lambda, region] : by_lambda) {
    auto& cells = region.cells;
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (const Cell& cell : cells) {
      region.row_set.push_back(cell.row);
      region.col_set.push_back(cell.col);
    }
    auto dedupe = [](std::vector<Eigen::Index>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(region.row_set);
    dedupe(region.col_set);
    regions.push_back(std::move(region));
  }
  return regions;
}

}  // namespace tropt
