#pragma once

#include <json.hpp>

#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/plan.hpp"
#include "tropt/regions.hpp"
#include "tropt/solver.hpp"

namespace tropt::io {

// Problem file contents, brought into library form: weights normalized and
// the cost grid permuted to match their sorted order.
struct Problem {
  MaxPlusMeasure mu;
  MaxPlusMeasure nu;
  CostMatrix cost;
  bool mu_rewritten = false;  // input weights needed shifting or reordering
  bool nu_rewritten = false;
};

// Expects {"mu": [...], "nu": [...], "cost": [[...], ...]} with finite
// weights and finite nonnegative costs of shape |mu| x |nu|. Throws
// std::invalid_argument naming the violated requirement.
Problem parse_problem(const nlohmann::json& file);

// Plans serialize as {"entries": [[...], ...]} where minus infinity is the
// string "-inf" and finite values are JSON numbers.
nlohmann::json plan_to_json(const Plan& plan);
Plan plan_from_json(const nlohmann::json& file);

nlohmann::json region_to_json(const Region& region);
nlohmann::json solution_to_json(const SolveResult& result);

}  // namespace tropt::io
