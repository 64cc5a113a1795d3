#pragma once

#include <Eigen/Core>

#include "tropt/cell.hpp"
#include "tropt/cost_matrix.hpp"
#include "tropt/extended_real.hpp"
#include "tropt/measure.hpp"

namespace tropt {

// Transport plan candidate: entries are extended reals in [-inf, 0].
using Plan = Eigen::Matrix<ExtendedReal, Eigen::Dynamic, Eigen::Dynamic>;

// True iff every row-i maximum equals mu's weight i and every column-j
// maximum equals nu's weight j. Throws on dimension mismatch.
bool is_plan(const Plan& h, const MaxPlusMeasure& mu, const MaxPlusMeasure& nu);

// The product plan of mu and nu: h(i,j) = k_i + l_j. Always a plan.
Plan trivial_plan(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu);

// max over cells of c(i,j) + h(i,j), minus-infinity entries absorbing.
ExtendedReal objective(const Plan& h, const CostMatrix& c);

// Cells with finite entries, in lexicographic order.
CellSet support(const Plan& h);

}  // namespace tropt
