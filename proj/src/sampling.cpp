#include "tropt/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropt {
namespace {

// SplitMix64 step; spreads nearby inputs across the full 64-bit range.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void check_order(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("cost grid order must be positive");
}

}  // namespace

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(mix(mix(seed) ^ trial));
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

CostMatrix sample_bernoulli(const BernoulliCostSpec& spec,
                            std::uint64_t trial) {
  check_order(spec.n);
  if (spec.p < 0.0 || spec.p > 1.0) {
    throw std::invalid_argument("low-value probability must lie in [0, 1]");
  }
  if (spec.low < 0.0 || !(spec.low < spec.high)) {
    throw std::invalid_argument("cost values need 0 <= low < high");
  }
  auto rng = trial_stream(spec.seed, trial);
  Eigen::MatrixXd entries(spec.n, spec.n);
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    for (Eigen::Index j = 0; j < spec.n; ++j) {
      entries(i, j) = uniform_unit(rng) < spec.p ? spec.low : spec.high;
    }
  }
  return CostMatrix(std::move(entries));
}

CostMatrix sample_uniform(const UniformCostSpec& spec, std::uint64_t trial) {
  check_order(spec.n);
  if (!(spec.upper > 0.0)) {
    throw std::invalid_argument("uniform cost bound must be positive");
  }
  auto rng = trial_stream(spec.seed, trial);
  Eigen::MatrixXd entries(spec.n, spec.n);
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    for (Eigen::Index j = 0; j < spec.n; ++j) {
      entries(i, j) = spec.upper * uniform_unit(rng);
    }
  }
  return CostMatrix(std::move(entries));
}

GraphProcess graph_process_tau(const CostMatrix& c) {
  if (c.rows() != c.cols()) {
    throw std::invalid_argument("graph process needs a square cost grid");
  }
  const Eigen::Index n = c.rows();
  std::vector<std::pair<double, Cell>> order;
  order.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      order.push_back({c(i, j), Cell{i, j}});
    }
  }
  std::sort(order.begin(), order.end());

  GraphProcess out;
  std::vector<char> row_hit(static_cast<std::size_t>(n), 0);
  std::vector<char> col_hit(static_cast<std::size_t>(n), 0);
  Eigen::Index missing = 2 * n;
  double last_cost = 0.0;
  for (const auto& [cost, cell] : order) {
    if (out.tau == 0 || cost != last_cost) ++out.distinct_rank;
    last_cost = cost;
    out.support.push_back(cell);
    ++out.tau;
    char& row = row_hit[static_cast<std::size_t>(cell.row)];
    char& col = col_hit[static_cast<std::size_t>(cell.col)];
    if (!row) {
      row = 1;
      --missing;
    }
    if (!col) {
      col = 1;
      --missing;
    }
    if (missing == 0) break;
  }
  std::sort(out.support.begin(), out.support.end());
  return out;
}

}  // namespace tropt
