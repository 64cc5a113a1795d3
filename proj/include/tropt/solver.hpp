#pragma once

#include <vector>

#include "tropt/cell.hpp"
#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/plan.hpp"
#include "tropt/regions.hpp"

namespace tropt {

// Minimizing plan of one region: lambda on every region cell whose cost is
// at most the stopping threshold, -inf on the rest of the region.
struct RegionSolution {
  Region region;
  std::vector<double> betas;  // distinct cell costs on the region, ascending
  std::size_t rank = 0;       // 1-based index of the stopping threshold
  CellSet support;            // cells holding lambda (lexicographic)
  Cell witness;               // lex smallest support cell at the threshold
  double cost = 0.0;          // region.lambda + betas[rank - 1]
};

// Sweeps the region's cells in ascending cost order, equal costs as one
// atomic group, until every required row and column holds a support cell.
// Throws std::invalid_argument if the region is empty or not covered by c.
RegionSolution solve_region(const Region& region, const CostMatrix& c);

struct SolveResult {
  double cost = 0.0;  // max over regions of the region cost
  Plan plan;          // region plans assembled on the full grid
  std::vector<RegionSolution> regions;  // descending lambda
};

// Optimal cost and plan via the region decomposition. The assembled plan is
// checked against the marginals and the reported cost before returning.
SolveResult solve(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                  const CostMatrix& c);

// Closed form for strictly decreasing weight vectors that share no value
// except the leading zero. Throws std::invalid_argument otherwise.
double closed_form_distinct(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu,
                            const CostMatrix& c);

}  // namespace tropt
