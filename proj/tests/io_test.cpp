#include <doctest.h>
#include <json.hpp>
#include <stdexcept>

#include "support.hpp"
#include "tropt/io.hpp"
#include "tropt/plan.hpp"
#include "tropt/solver.hpp"

using namespace tropt;
using namespace tropt::testing;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("problem files parse into normalized form") {
    const json file = {{"mu", {0, -1}},
                       {"nu", {0, -2}},
                       {"cost", {{1, 2}, {3, 4}}}};
    const io::Problem problem = io::parse_problem(file);
    CHECK(problem.mu.weights().cwiseEqual(vec({0, -1})).all());
    CHECK(problem.nu.weights().cwiseEqual(vec({0, -2})).all());
    CHECK(problem.cost.entries().cwiseEqual(mat({{1, 2}, {3, 4}})).all());
    CHECK(!problem.mu_rewritten);
    CHECK(!problem.nu_rewritten);
  }

  TEST_CASE("raw weights are shifted and sorted with the cost grid") {
    // mu = (3, 5) normalizes to (0, -2) with the two points swapped, so the
    // cost rows swap with them; nu shifts without reordering.
    const json file = {{"mu", {3, 5}},
                       {"nu", {7, 7}},
                       {"cost", {{1, 2}, {3, 4}}}};
    const io::Problem problem = io::parse_problem(file);
    CHECK(problem.mu.weights().cwiseEqual(vec({0, -2})).all());
    CHECK(problem.nu.weights().cwiseEqual(vec({0, 0})).all());
    CHECK(problem.mu.labels() == std::vector<Eigen::Index>{1, 0});
    CHECK(problem.cost.entries().cwiseEqual(mat({{3, 4}, {1, 2}})).all());
    CHECK(problem.mu_rewritten);
    CHECK(problem.nu_rewritten);
  }

  TEST_CASE("malformed problem files are rejected") {
    CHECK_THROWS_AS(io::parse_problem(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_problem(json{{"mu", {0}}, {"nu", {0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        io::parse_problem(json{{"mu", json::array()},
                               {"nu", {0}},
                               {"cost", json::array()}}),
        std::invalid_argument);
    CHECK_THROWS_AS(io::parse_problem(json{{"mu", {0, "x"}},
                                           {"nu", {0}},
                                           {"cost", {{1}, {2}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_problem(json{{"mu", {0, -1}},
                                           {"nu", {0}},
                                           {"cost", {{1}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_problem(json{{"mu", {0}},
                                           {"nu", {0, -1}},
                                           {"cost", {{1, 2, 3}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_problem(json{{"mu", {0}},
                                           {"nu", {0}},
                                           {"cost", {{-1}}}}),
                    std::invalid_argument);
  }

  TEST_CASE("plans round trip through JSON") {
    const Plan original = plan({{0, kNegInf}, {-1.5, 0}});
    const json encoded = io::plan_to_json(original);
    CHECK(encoded.at("entries")[0][1] == "-inf");
    CHECK(encoded.at("entries")[1][0] == -1.5);
    const Plan decoded = io::plan_from_json(encoded);
    CHECK(plans_equal(original, decoded));
  }

  TEST_CASE("solver output re-validates as a plan after the round trip") {
    const auto mu = normalize_measure(vec({0, -1, -1}));
    const auto nu = normalize_measure(vec({0, 0, -2}));
    const CostMatrix c(mat({{2, 4, 8}, {8, 2, 0}, {2, 0, 5}}));
    const SolveResult result = solve(mu, nu, c);
    const json encoded = io::solution_to_json(result);
    const Plan decoded = io::plan_from_json(encoded.at("plan"));
    CHECK(is_plan(decoded, mu, nu));
    CHECK(objective(decoded, c) == ExtendedReal(result.cost));
    CHECK(encoded.at("cost") == result.cost);
    CHECK(encoded.at("regions").size() == result.regions.size());
  }

  TEST_CASE("malformed plan files are rejected") {
    CHECK_THROWS_AS(io::plan_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(io::plan_from_json(json{{"entries", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::plan_from_json(json{{"entries", {{0, "oops"}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::plan_from_json(json{{"entries", {{0, 1}, {2}}}}),
                    std::invalid_argument);
  }

  TEST_CASE("regions serialize with their line sets") {
    Region region;
    region.lambda = -1.0;
    region.cells = {{0, 0}, {0, 1}};
    region.row_set = {0};
    region.col_set = {0, 1};
    region.required_rows = {0};
    region.required_cols = {1};
    const json encoded = io::region_to_json(region);
    CHECK(encoded.at("lambda") == -1.0);
    CHECK(encoded.at("cells") == json::array({{0, 0}, {0, 1}}));
    CHECK(encoded.at("required_cols") == json::array({1}));
  }
}
