#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/plan.hpp"
#include "tropt/regions.hpp"

namespace tropt {

// True iff every finite entry is a strict maximum of its row or of its
// column. An entry that is the only finite one on a line counts as strict
// there.
bool is_reduced(const Plan& h);

// Region overload for plans holding the region weight on the support cells
// and -inf elsewhere: a support cell is a strict maximum of a line of the
// region iff it is the only support cell on that line.
bool is_reduced(const Region& region, const CellSet& support);

// Sets entries that are strict maxima in neither direction to -inf, in
// lexicographic order, rescanning until none remain. The result is a reduced
// plan with the same marginals and support contained in the input's.
Plan reduce(const Plan& h);

// True iff the support holds a perfect matching between rows and columns.
// Throws std::invalid_argument on a non-square plan.
bool contains_perfect_matching(const Plan& h);

// Necessary condition for a perfect matching plan to exist: equal sizes and
// elementwise equal sorted weights. Not sufficient.
bool pm_feasible(const MaxPlusMeasure& mu, const MaxPlusMeasure& nu);

// Whether each region's sweep plan is reduced, which certifies it as the
// unique minimizing plan of the region among those holding only the region
// weight and -inf. Says nothing about minimizers outside that class.
struct UniquenessCertificate {
  std::vector<std::pair<double, bool>> per_region;  // descending weight
  // Set when there is a single region (all weights equal); then the flag
  // characterizes uniqueness of the global minimizing plan in that class.
  std::optional<bool> overall_fundamental;
};

UniquenessCertificate uniqueness_certificate(const MaxPlusMeasure& mu,
                                             const MaxPlusMeasure& nu,
                                             const CostMatrix& c);

}  // namespace tropt
