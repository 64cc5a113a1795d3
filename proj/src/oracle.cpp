#include "tropt/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tropt/extended_real.hpp"

namespace tropt::oracle {

namespace {

Eigen::Index index_of(const std::vector<Eigen::Index>& sorted, Eigen::Index x) {
  return std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
}

}  // namespace

RegionBruteForce brute_force_region_cost(const Region& region,
                                         const CostMatrix& c) {
  const std::size_t size = region.cells.size();
  if (size == 0) throw std::invalid_argument("region is empty");
  if (size > 25) throw std::invalid_argument("region too large for the oracle");

  // Bitmask of required rows/cols hit by each cell.
  std::vector<std::uint32_t> row_bit(size, 0), col_bit(size, 0);
  for (std::size_t k = 0; k < size; ++k) {
    const Cell cell = region.cells[k];
    if (std::binary_search(region.required_rows.begin(),
                           region.required_rows.end(), cell.row)) {
      row_bit[k] = 1u << index_of(region.required_rows, cell.row);
    }
    if (std::binary_search(region.required_cols.begin(),
                           region.required_cols.end(), cell.col)) {
      col_bit[k] = 1u << index_of(region.required_cols, cell.col);
    }
  }
  const std::uint32_t rows_full =
      (region.required_rows.empty())
          ? 0
          : (std::uint32_t{1} << region.required_rows.size()) - 1;
  const std::uint32_t cols_full =
      (region.required_cols.empty())
          ? 0
          : (std::uint32_t{1} << region.required_cols.size()) - 1;

  RegionBruteForce best;
  best.cost = std::numeric_limits<double>::infinity();
  const std::uint64_t total = std::uint64_t{1} << size;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::uint32_t rows = 0, cols = 0;
    double max_cost = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < size; ++k) {
      if (!(mask >> k & 1)) continue;
      rows |= row_bit[k];
      cols |= col_bit[k];
      max_cost = std::max(max_cost,
                          c(region.cells[k].row, region.cells[k].col));
    }
    if (rows != rows_full || cols != cols_full) continue;
    const double value = region.lambda + max_cost;
    if (value < best.cost) {
      best.cost = value;
      best.optimal_supports.clear();
    }
    if (value == best.cost) {
      CellSet support;
      for (std::size_t k = 0; k < size; ++k) {
        if (mask >> k & 1) support.push_back(region.cells[k]);
      }
      best.optimal_supports.push_back(std::move(support));
    }
  }
  if (best.optimal_supports.empty()) {
    throw std::logic_error("region has no covering assignment");
  }
  return best;
}

double brute_force_global(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                          const CostMatrix& c) {
  const Eigen::Index m = mu.size(), n = nu.size();
  if (m != c.rows() || n != c.cols()) {
    throw std::invalid_argument("cost dimensions must match the measures");
  }
  if (m > 4 || n > 4) {
    throw std::invalid_argument("instance too large for the oracle");
  }
  std::vector<double> values = mu.distinct_weights();
  for (double w : nu.distinct_weights()) values.push_back(w);
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > 3) {
    throw std::invalid_argument("too many distinct weights for the oracle");
  }

  // Candidate entries per cell: -inf plus every weight <= min(k_i, l_j);
  // larger entries cannot appear in any plan. Restricting to weight values
  // loses no optimum: entries below their row and column maxima can drop to
  // -inf without breaking the marginals, and every max witness is a weight.
  const ExtendedReal bottom = ExtendedReal::neg_inf();
  std::vector<std::vector<std::vector<ExtendedReal>>> candidates(
      static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    candidates[i].resize(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      auto& cell = candidates[i][j];
      cell.push_back(bottom);
      for (double v : values) {
        if (v <= std::min(mu.weight(i), nu.weight(j))) {
          cell.push_back(ExtendedReal(v));
        }
      }
    }
  }

  // All row assignments whose maximum is exactly k_i.
  std::vector<std::vector<std::vector<ExtendedReal>>> row_options(
      static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    std::vector<ExtendedReal> row(static_cast<std::size_t>(n), bottom);
    const ExtendedReal target(mu.weight(i));
    auto recurse = [&](auto&& self, Eigen::Index j) -> void {
      if (j == n) {
        ExtendedReal row_max = bottom;
        for (const auto& v : row) row_max = tropical_add(row_max, v);
        if (row_max == target) row_options[i].push_back(row);
        return;
      }
      for (const auto& v : candidates[i][j]) {
        row[j] = v;
        self(self, j + 1);
      }
    };
    recurse(recurse, 0);
  }

  // Columns j where some row >= depth may still raise the column max to l_j.
  std::vector<std::vector<bool>> reachable(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    reachable[j].assign(static_cast<std::size_t>(m) + 1, false);
    for (Eigen::Index d = m - 1; d >= 0; --d) {
      reachable[j][d] =
          reachable[j][d + 1] || mu.weight(d) >= nu.weight(j);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<ExtendedReal> col_max(static_cast<std::size_t>(n), bottom);
  auto dfs = [&](auto&& self, Eigen::Index depth, double partial) -> void {
    if (partial >= best) return;  // objective only grows with more cells
    if (depth == m) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (col_max[j] != ExtendedReal(nu.weight(j))) return;
      }
      best = partial;
      return;
    }
    for (const auto& row : row_options[depth]) {
      double extended = partial;
      std::vector<ExtendedReal> saved = col_max;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (row[j].is_finite()) {
          extended = std::max(extended, row[j].value() + c(depth, j));
          col_max[j] = tropical_add(col_max[j], row[j]);
        }
      }
      bool feasible = true;
      for (Eigen::Index j = 0; j < n && feasible; ++j) {
        feasible = col_max[j] == ExtendedReal(nu.weight(j)) ||
                   reachable[j][depth + 1];
      }
      if (feasible) self(self, depth + 1, extended);
      col_max = saved;
    }
  };
  dfs(dfs, 0, -std::numeric_limits<double>::infinity());

  if (!std::isfinite(best)) {
    throw std::logic_error("no plan found in the enumeration space");
  }
  return best;
}

bool brute_force_pm(const CellSet& support, Eigen::Index n) {
  if (n > 6) throw std::invalid_argument("n too large for the oracle");
  if (n <= 0) throw std::invalid_argument("n must be positive");
  std::vector<std::vector<bool>> present(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const Cell& cell : support) {
    if (cell.row < 0 || cell.row >= n || cell.col < 0 || cell.col >= n) {
      throw std::invalid_argument("support cell outside the n x n grid");
    }
    present[cell.row][cell.col] = true;
  }
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  do {
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i) ok = present[i][perm[i]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Rational enumerate_prob_beta1(int n, const Rational& p) {
  if (n < 1 || n > 4) throw std::invalid_argument("n out of oracle range");
  if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
  const int cells = n * n;
  const Rational q = Rational(1) - p;

  std::vector<Rational> p_pow(cells + 1), q_pow(cells + 1);
  p_pow[0] = q_pow[0] = 1;
  for (int k = 1; k <= cells; ++k) {
    p_pow[k] = p_pow[k - 1] * p;
    q_pow[k] = q_pow[k - 1] * q;
  }

  Rational total = 0;
  const std::uint32_t masks = std::uint32_t{1} << cells;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    bool covered = true;
    for (int i = 0; i < n && covered; ++i) {
      std::uint32_t row = (mask >> (i * n)) & ((1u << n) - 1);
      covered = row != 0;
    }
    for (int j = 0; j < n && covered; ++j) {
      bool hit = false;
      for (int i = 0; i < n && !hit; ++i) hit = mask >> (i * n + j) & 1;
      covered = hit;
    }
    if (!covered) continue;
    const int ones = __builtin_popcount(mask);
    total += p_pow[ones] * q_pow[cells - ones];
  }
  return total;
}

}  // namespace tropt::oracle
