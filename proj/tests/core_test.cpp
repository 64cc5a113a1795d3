#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support.hpp"
#include "tropt/cost_matrix.hpp"
#include "tropt/measure.hpp"
#include "tropt/plan.hpp"

namespace {

using namespace tropt;
using namespace tropt::testing;

TEST_SUITE_BEGIN("core");

TEST_CASE("normalize_measure keeps an already normalized vector") {
  const auto m = normalize_measure(vec({0, 0, 0}));
  CHECK(m.weights() == vec({0, 0, 0}));
  CHECK(m.labels() == std::vector<Eigen::Index>{0, 1, 2});
}

TEST_CASE("normalize_measure sorts non-increasing with stable ties") {
  const auto m = normalize_measure(vec({-2, 0, -4, 0, -3, -4}));
  CHECK(m.weights() == vec({0, 0, -2, -3, -4, -4}));
  // ties keep input order
  CHECK(m.labels() == std::vector<Eigen::Index>{1, 3, 0, 4, 2, 5});
}

TEST_CASE("normalize_measure shifts the maximum to zero") {
  const auto m = normalize_measure(vec({5, 3, 1}));
  CHECK(m.weights() == vec({0, -2, -4}));
  CHECK(m.labels() == std::vector<Eigen::Index>{0, 1, 2});
}

TEST_CASE("normalize_measure rejects empty and non-finite input") {
  CHECK_THROWS_AS(normalize_measure(Eigen::VectorXd()), std::invalid_argument);
  Eigen::VectorXd bad(2);
  bad << 0.0, -std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(normalize_measure(bad), std::invalid_argument);
  bad(1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(normalize_measure(bad), std::invalid_argument);
}

TEST_CASE("distinct_weights collapses repeats, descending") {
  const auto m = normalize_measure(vec({-2, 0, -4, 0, -3, -4}));
  CHECK(m.distinct_weights() == std::vector<double>{0, -2, -3, -4});
}

TEST_CASE("cost matrix rejects negative and non-finite entries") {
  CHECK_THROWS_AS(CostMatrix{mat({{1, -1}})}, std::invalid_argument);
  CHECK_THROWS_AS(CostMatrix{Eigen::MatrixXd()}, std::invalid_argument);
  Eigen::MatrixXd bad(1, 1);
  bad << std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(CostMatrix{bad}, std::invalid_argument);
}

TEST_CASE("trivial_plan is the componentwise weight sum") {
  const auto mu = normalize_measure(vec({0, -1}));
  const auto nu = normalize_measure(vec({0, -2}));
  const Plan expected = plan({{0, -2}, {-1, -3}});
  CHECK(plans_equal(trivial_plan(mu, nu), expected));

  const auto mu1 = normalize_measure(vec({-2, 0, -4, 0, -3, -4}));
  const auto nu1 = normalize_measure(vec({0, 0, 0, -1, -2, -2}));
  const Plan big = trivial_plan(mu1, nu1);
  CHECK(big(2, 3) == ExtendedReal(-3.0));  // -2 + -1

  CHECK(plans_equal(trivial_plan(fundamental(3), fundamental(3)),
                    Plan::Constant(3, 3, ExtendedReal(0.0))));
}

TEST_CASE("is_plan accepts the product plan and the worked 6x6 plan") {
  const auto mu = normalize_measure(vec({0, 0, -2, -3, -4, -4}));
  const auto nu = normalize_measure(vec({0, 0, 0, -1, -2, -2}));
  CHECK(is_plan(trivial_plan(mu, nu), mu, nu));

  const double x = kNegInf;
  const Plan worked = plan({{x, x, 0, -1, x, -2},
                            {0, 0, x, x, -2, x},
                            {x, x, -2, x, x, x},
                            {x, x, x, x, -3, x},
                            {x, x, x, -4, x, x},
                            {-4, x, x, x, x, x}});
  CHECK(is_plan(worked, mu, nu));

  CHECK(!is_plan(Plan::Constant(6, 6, ExtendedReal::neg_inf()), mu, nu));
}

TEST_CASE("is_plan rejects dimension mismatch") {
  const auto mu = normalize_measure(vec({0, 0}));
  CHECK_THROWS_AS(is_plan(Plan::Constant(3, 2, ExtendedReal(0.0)), mu, mu),
                  std::invalid_argument);
}

TEST_CASE("objective evaluates max of cost plus plan") {
  CHECK(objective(plan({{0}}), CostMatrix(mat({{7}}))) == ExtendedReal(7.0));

  const double x = kNegInf;
  const Plan h = plan({{x, 0, x}, {x, 0, x}, {0, x, 0}});
  const CostMatrix c(mat({{5, 1, 5}, {5, 2, 5}, {3, 5, 4}}));
  CHECK(objective(h, c) == ExtendedReal(4.0));

  // all-zero weights: objective of the product plan is the max cost entry
  const auto mu = fundamental(3);
  CHECK(objective(trivial_plan(mu, mu), c) == ExtendedReal(5.0));

  CHECK(objective(Plan::Constant(3, 3, ExtendedReal::neg_inf()), c) ==
        ExtendedReal::neg_inf());
  CHECK_THROWS_AS(objective(plan({{0}}), c), std::invalid_argument);
}

TEST_CASE("support lists finite cells in lexicographic order") {
  const double x = kNegInf;
  const Plan h = plan({{x, 0}, {-1, x}});
  CHECK(support(h) == CellSet{{0, 1}, {1, 0}});
  CHECK(support(Plan::Constant(1, 1, ExtendedReal::neg_inf())).empty());
}

TEST_CASE("product plan is a plan for random measures") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto mu = random_measure(rng, size(rng), {0, -1, -2, -0.5});
    const auto nu = random_measure(rng, size(rng), {0, -1, -3});
    CHECK(is_plan(trivial_plan(mu, nu), mu, nu));
  }
}

TEST_CASE("objective never increases when an entry decreases") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_real_distribution<double> level(-3.0, 0.0);
  for (int iter = 0; iter < 200; ++iter) {
    const Eigen::Index m = size(rng), n = size(rng);
    Plan h(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) h(i, j) = ExtendedReal(level(rng));
    }
    const auto c = random_integer_cost(rng, m, n, 0, 9);
    const ExtendedReal before = objective(h, c);
    Plan lowered = h;
    std::uniform_int_distribution<Eigen::Index> pi(0, m - 1), pj(0, n - 1);
    const Eigen::Index i = pi(rng), j = pj(rng);
    lowered(i, j) = (iter % 2 == 0)
                        ? ExtendedReal::neg_inf()
                        : ExtendedReal(lowered(i, j).value() - 1.0);
    CHECK(objective(lowered, c) <= before);
  }
}

TEST_SUITE_END();

}  // namespace
