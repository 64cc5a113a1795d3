#include "tropt/io.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tropt::io {
namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

Eigen::VectorXd read_weights(const nlohmann::json& file, const char* key) {
  require(file.contains(key), "problem file needs mu, nu, and cost");
  const auto& raw = file.at(key);
  require(raw.is_array() && !raw.empty(), "weights must be a nonempty array");
  Eigen::VectorXd weights(static_cast<Eigen::Index>(raw.size()));
  Eigen::Index at = 0;
  for (const auto& entry : raw) {
    require(entry.is_number(), "weights must be numbers");
    const double value = entry.get<double>();
    require(std::isfinite(value), "weights must be finite");
    weights(at++) = value;
  }
  return weights;
}

Eigen::MatrixXd read_cost(const nlohmann::json& file, Eigen::Index rows,
                          Eigen::Index cols) {
  require(file.contains("cost"), "problem file needs mu, nu, and cost");
  const auto& raw = file.at("cost");
  require(raw.is_array() &&
              raw.size() == static_cast<std::size_t>(rows),
          "cost must have one row per mu weight");
  Eigen::MatrixXd cost(rows, cols);
  Eigen::Index i = 0;
  for (const auto& row : raw) {
    require(row.is_array() &&
                row.size() == static_cast<std::size_t>(cols),
            "cost must have one column per nu weight");
    Eigen::Index j = 0;
    for (const auto& entry : row) {
      require(entry.is_number(), "costs must be numbers");
      const double value = entry.get<double>();
      require(std::isfinite(value) && value >= 0.0,
              "costs must be finite and nonnegative");
      cost(i, j++) = value;
    }
    ++i;
  }
  return cost;
}

bool rewritten(const Eigen::VectorXd& raw, const MaxPlusMeasure& measure) {
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (raw(i) != measure.weight(i)) return true;
  }
  return false;
}

nlohmann::json cell_to_json(Cell cell) {
  return nlohmann::json::array({cell.row, cell.col});
}

nlohmann::json cells_to_json(const CellSet& cells) {
  auto out = nlohmann::json::array();
  for (Cell cell : cells) out.push_back(cell_to_json(cell));
  return out;
}

}  // namespace

Problem parse_problem(const nlohmann::json& file) {
  require(file.is_object(), "problem file must be a JSON object");
  const Eigen::VectorXd raw_mu = read_weights(file, "mu");
  const Eigen::VectorXd raw_nu = read_weights(file, "nu");
  const Eigen::MatrixXd raw_cost =
      read_cost(file, raw_mu.size(), raw_nu.size());

  MaxPlusMeasure mu = normalize_measure(raw_mu);
  MaxPlusMeasure nu = normalize_measure(raw_nu);

  // Row i of the library cost grid belongs to the i-th sorted weight, so
  // the raw grid is permuted by the sort orders.
  Eigen::MatrixXd sorted_cost(raw_cost.rows(), raw_cost.cols());
  for (Eigen::Index i = 0; i < raw_cost.rows(); ++i) {
    for (Eigen::Index j = 0; j < raw_cost.cols(); ++j) {
      sorted_cost(i, j) = raw_cost(mu.labels()[static_cast<std::size_t>(i)],
                                   nu.labels()[static_cast<std::size_t>(j)]);
    }
  }

  Problem problem{std::move(mu), std::move(nu),
                  CostMatrix(std::move(sorted_cost)), false, false};
  problem.mu_rewritten = rewritten(raw_mu, problem.mu);
  problem.nu_rewritten = rewritten(raw_nu, problem.nu);
  return problem;
}

nlohmann::json plan_to_json(const Plan& plan) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < plan.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < plan.cols(); ++j) {
      if (plan(i, j).is_finite()) {
        row.push_back(plan(i, j).value());
      } else {
        row.push_back("-inf");
      }
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"entries", std::move(rows)}};
}

Plan plan_from_json(const nlohmann::json& file) {
  require(file.is_object() && file.contains("entries"),
          "plan file needs an entries matrix");
  const auto& raw = file.at("entries");
  require(raw.is_array() && !raw.empty(), "plan entries must be a matrix");
  const auto rows = static_cast<Eigen::Index>(raw.size());
  require(raw.front().is_array() && !raw.front().empty(),
          "plan entries must be a matrix");
  const auto cols = static_cast<Eigen::Index>(raw.front().size());

  Plan plan(rows, cols);
  Eigen::Index i = 0;
  for (const auto& row : raw) {
    require(row.is_array() && row.size() == static_cast<std::size_t>(cols),
            "plan rows must have equal length");
    Eigen::Index j = 0;
    for (const auto& entry : row) {
      if (entry.is_string()) {
        require(entry.get<std::string>() == "-inf",
                "plan entries are numbers or \"-inf\"");
        plan(i, j) = ExtendedReal::neg_inf();
      } else {
        require(entry.is_number(), "plan entries are numbers or \"-inf\"");
        const double value = entry.get<double>();
        require(std::isfinite(value), "plan entries must be finite");
        plan(i, j) = ExtendedReal(value);
      }
      ++j;
    }
    ++i;
  }
  return plan;
}

nlohmann::json region_to_json(const Region& region) {
  return nlohmann::json{{"lambda", region.lambda},
                        {"cells", cells_to_json(region.cells)},
                        {"row_set", region.row_set},
                        {"col_set", region.col_set},
                        {"required_rows", region.required_rows},
                        {"required_cols", region.required_cols}};
}

nlohmann::json solution_to_json(const SolveResult& result) {
  auto regions = nlohmann::json::array();
  for (const auto& solution : result.regions) {
    regions.push_back(
        nlohmann::json{{"lambda", solution.region.lambda},
                       {"betas", solution.betas},
                       {"rank", solution.rank},
                       {"cost", solution.cost},
                       {"support", cells_to_json(solution.support)},
                       {"witness", cell_to_json(solution.witness)}});
  }
  return nlohmann::json{{"cost", result.cost},
                        {"plan", plan_to_json(result.plan)},
                        {"regions", std::move(regions)}};
}

}  // namespace tropt::io
