#pragma once

#include <cstdint>
#include <random>

#include "tropt/cell.hpp"
#include "tropt/cost_matrix.hpp"

namespace tropt {

// Cost grid with two values: each entry is low with probability p and high
// otherwise, independently.
struct BernoulliCostSpec {
  Eigen::Index n = 1;
  double p = 0.5;
  double low = 0.0;  // 0 <= low < high
  double high = 1.0;
  std::uint64_t seed = 0;
};

// Cost grid with independent entries uniform on [0, upper].
struct UniformCostSpec {
  Eigen::Index n = 1;
  double upper = 1.0;
  std::uint64_t seed = 0;
};

// Generator for one trial, a pure function of (seed, trial). Streams for
// different trials are independent, so trials can run on any thread layout
// with identical results.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

// Uniform draw from [0,1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

CostMatrix sample_bernoulli(const BernoulliCostSpec& spec,
                            std::uint64_t trial);

CostMatrix sample_uniform(const UniformCostSpec& spec, std::uint64_t trial);

// Adds the cells of a square cost grid one at a time in increasing cost
// order (ties lexicographic) until every row and every column holds a cell.
// tau counts the cells added; distinct_rank counts the distinct cost values
// among them, which is the stopping threshold's index in the ascending
// sweep. The two agree exactly when no added cells share a cost.
struct GraphProcess {
  Eigen::Index tau = 0;
  Eigen::Index distinct_rank = 0;
  CellSet support;
};

GraphProcess graph_process_tau(const CostMatrix& c);

}  // namespace tropt
