#pragma once

#include <vector>

#include "tropt/cell.hpp"
#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/rational.hpp"
#include "tropt/regions.hpp"

// Brute-force reference implementations. Deliberately independent of the
// production solver and analysis code: they share only the core types, and
// their answers come from exhaustive enumeration.
namespace tropt::oracle {

struct RegionBruteForce {
  double cost = 0.0;
  std::vector<CellSet> optimal_supports;  // every support attaining cost
};

// Minimizes max(lambda + c) over all {lambda, -inf} assignments on the
// region's cells whose support reaches lambda on every required row and
// column. Exhaustive over all 2^|cells| subsets; |cells| <= 25.
RegionBruteForce brute_force_region_cost(const Region& region,
                                         const CostMatrix& c);

// Exact optimal cost by enumerating every matrix with entries in
// {-inf} ∪ Λ(mu) ∪ Λ(nu) that is a plan. Requires m,n <= 4 and at most
// 3 distinct weights across both measures.
double brute_force_global(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                          const CostMatrix& c);

// True iff some permutation sigma has (i, sigma(i)) in the support for all
// i. Enumerates all n! permutations; n <= 6.
bool brute_force_pm(const CellSet& support, Eigen::Index n);

// Exact probability that an n x n Bernoulli matrix (each entry is the
// cheaper value with probability p) has a cheap entry in every row and
// every column. Sums over all 2^(n^2) matrices; n <= 4.
Rational enumerate_prob_beta1(int n, const Rational& p);

}  // namespace tropt::oracle
