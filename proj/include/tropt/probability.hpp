#pragma once

#include <vector>

#include "tropt/rational.hpp"

namespace tropt {

// Probability that an n x n grid of independent Bernoulli cost entries,
// each taking the cheaper of two values with probability p, shows the
// cheaper value in every row and every column. By convention the value at
// p = 1 is 1. Evaluated with every summand factor inside [0,1] plus
// compensated summation, so large n stays stable.
double exact_prob_beta1(int n, double p);

// Same quantity in exact arithmetic, evaluated as the alternating sum
// (1-p)^(n^2) sum_j (-1)^j C(n,j) (1-(1-p)^(-j))^n.
Rational exact_prob_beta1(int n, const Rational& p);

// Probability that the optimal cost of a fundamental n x n instance equals
// the j-th cheapest of s possible entry values (1-based j), when entry k
// appears with probability probs[k-1]. Probabilities must be nonnegative
// and sum to one.
double prob_beta_j(int n, const std::vector<double>& probs, int j);

}  // namespace tropt
