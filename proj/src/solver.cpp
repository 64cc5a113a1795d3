#include "tropt/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropt {

namespace {

// Tracks which of a fixed sorted set of line indices have been touched.
class LineCoverage {
 public:
  explicit LineCoverage(const std::vector<Eigen::Index>& lines)
      : lines_(lines), covered_(lines.size(), 0), remaining_(lines.size()) {}

  void touch(Eigen::Index line) {
    const auto it = std::lower_bound(lines_.begin(), lines_.end(), line);
    if (it == lines_.end() || *it != line) return;
    char& flag = covered_[static_cast<std::size_t>(it - lines_.begin())];
    if (!flag) {
      flag = 1;
      --remaining_;
    }
  }

  bool complete() const { return remaining_ == 0; }

 private:
  const std::vector<Eigen::Index>& lines_;
  std::vector<char> covered_;
  std::size_t remaining_;
};

}  // namespace

RegionSolution solve_region(const Region& region, const CostMatrix& c) {
  if (region.cells.empty()) {
    throw std::invalid_argument("region has no cells");
  }
  for (const Cell& cell : region.cells) {
    if (cell.row >= c.rows() || cell.col >= c.cols()) {
      throw std::invalid_argument("cost matrix does not cover the region");
    }
  }

  // Cells in ascending cost order, ties lexicographic.
  CellSet ordered = region.cells;
  std::sort(ordered.begin(), ordered.end(),
            [&](const Cell& a, const Cell& b) {
              const double ca = c(a.row, a.col), cb = c(b.row, b.col);
              if (ca != cb) return ca < cb;
              return a < b;
            });

  RegionSolution solution;
  solution.region = region;

  LineCoverage rows(region.required_rows);
  LineCoverage cols(region.required_cols);
  std::size_t taken = 0;
  bool stopped = false;
  for (std::size_t begin = 0; begin < ordered.size() && !stopped;) {
    const double value = c(ordered[begin].row, ordered[begin].col);
    solution.betas.push_back(value);
    // Equal costs share one threshold: the whole group enters at once.
    std::size_t end = begin;
    while (end < ordered.size() &&
           c(ordered[end].row, ordered[end].col) == value) {
      rows.touch(ordered[end].row);
      cols.touch(ordered[end].col);
      ++end;
    }
    if (rows.complete() && cols.complete()) {
      solution.rank = solution.betas.size();
      taken = end;
      stopped = true;
    }
    begin = end;
  }
  if (!stopped) {
    throw std::logic_error("region cells cannot cover the required lines");
  }
  // Record the remaining thresholds; the support stops at the current one.
  for (std::size_t k = taken; k < ordered.size(); ++k) {
    const double value = c(ordered[k].row, ordered[k].col);
    if (value > solution.betas.back()) solution.betas.push_back(value);
  }

  solution.support.assign(ordered.begin(),
                          ordered.begin() + static_cast<std::ptrdiff_t>(taken));
  std::sort(solution.support.begin(), solution.support.end());
  const double threshold = solution.betas[solution.rank - 1];
  for (const Cell& cell : solution.support) {
    if (c(cell.row, cell.col) == threshold) {
      solution.witness = cell;
      break;
    }
  }
  solution.cost = region.lambda + threshold;
  return solution;
}

SolveResult solve(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                  const CostMatrix& c) {
  if (mu.size() != c.rows() || nu.size() != c.cols()) {
    throw std::invalid_argument("cost dimensions must match the measures");
  }

  SolveResult result;
  result.cost = -std::numeric_limits<double>::infinity();
  result.plan = Plan::Constant(mu.size(), nu.size(), ExtendedReal::neg_inf());
  for (const Region& region : build_regions(mu, nu)) {
    RegionSolution solution = solve_region(region, c);
    result.cost = std::max(result.cost, solution.cost);
    for (const Cell& cell : solution.support) {
      result.plan(cell.row, cell.col) = ExtendedReal(region.lambda);
    }
    result.regions.push_back(std::move(solution));
  }

  if (!is_plan(result.plan, mu, nu)) {
    throw std::logic_error("assembled plan does not match the marginals");
  }
  if (objective(result.plan, c) != ExtendedReal(result.cost)) {
    throw std::logic_error("assembled plan does not attain the reported cost");
  }
  return result;
}

double closed_form_distinct(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                            const CostMatrix& c) {
  if (mu.size() != c.rows() || nu.size() != c.cols()) {
    throw std::invalid_argument("cost dimensions must match the measures");
  }
  const auto strictly_decreasing = [](const Eigen::VectorXd& w) {
    for (Eigen::Index i = 1; i < w.size(); ++i) {
      if (w(i) >= w(i - 1)) return false;
    }
    return true;
  };
  if (!strictly_decreasing(mu.weights()) ||
      !strictly_decreasing(nu.weights())) {
    throw std::invalid_argument("weights must be distinct within each measure");
  }
  for (Eigen::Index i = 1; i < mu.size(); ++i) {
    for (Eigen::Index j = 1; j < nu.size(); ++j) {
      if (mu.weight(i) == nu.weight(j)) {
        throw std::invalid_argument(
            "measures may share no weight besides the leading zero");
      }
    }
  }

  const Thresholds t = thresholds(mu, nu);
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < t.p(i); ++j) {
      row_min = std::min(row_min, mu.weight(i) + c(i, j));
    }
    best = std::max(best, row_min);
  }
  for (Eigen::Index j = 0; j < nu.size(); ++j) {
    double col_min = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < t.q(j); ++i) {
      col_min = std::min(col_min, nu.weight(j) + c(i, j));
    }
    best = std::max(best, col_min);
  }
  return best;
}

}  // namespace tropt
