#include <cmath>
#include <doctest.h>
#include <stdexcept>
#include <vector>

#include "support.hpp"
#include "tropt/oracle.hpp"
#include "tropt/probability.hpp"
#include "tropt/solver.hpp"

using namespace tropt;
using namespace tropt::testing;

TEST_SUITE("probability") {
  TEST_CASE("rational formula matches exhaustive enumeration") {
    const std::vector<Rational> choices = {
        Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4),
        Rational(9, 10)};
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& p : choices) {
        CHECK(exact_prob_beta1(n, p) == oracle::enumerate_prob_beta1(n, p));
      }
    }
  }

  TEST_CASE("float formula matches enumeration on small grids") {
    const std::vector<Rational> choices = {
        Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4),
        Rational(9, 10)};
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& p : choices) {
        const double truth = to_double(oracle::enumerate_prob_beta1(n, p));
        CHECK(std::abs(exact_prob_beta1(n, to_double(p)) - truth) <= 1e-12);
      }
    }
  }

  TEST_CASE("float evaluation is certified against rational mode") {
    // Dyadic probabilities are exact in both modes, so the gap measures the
    // float summation alone.
    for (int n = 1; n <= 12; ++n) {
      for (int sixteenth = 1; sixteenth <= 15; ++sixteenth) {
        const double truth =
            to_double(exact_prob_beta1(n, Rational(sixteenth, 16)));
        CHECK(std::abs(exact_prob_beta1(n, sixteenth / 16.0) - truth) <=
              1e-12);
      }
    }
  }

  TEST_CASE("single entry is covered exactly when it is cheap") {
    CHECK(exact_prob_beta1(1, 0.37) == doctest::Approx(0.37).epsilon(1e-14));
    CHECK(exact_prob_beta1(1, Rational(37, 100)) == Rational(37, 100));
  }

  TEST_CASE("fair coin on a two by two grid") {
    CHECK(std::abs(exact_prob_beta1(2, 0.5) - 7.0 / 16.0) <= 1e-15);
    CHECK(exact_prob_beta1(2, Rational(1, 2)) == Rational(7, 16));
  }

  TEST_CASE("endpoint probabilities") {
    for (int n = 1; n <= 6; ++n) {
      CHECK(exact_prob_beta1(n, 0.0) == 0.0);
      CHECK(exact_prob_beta1(n, 1.0) == 1.0);
      CHECK(exact_prob_beta1(n, Rational(0)) == Rational(0));
      CHECK(exact_prob_beta1(n, Rational(1)) == Rational(1));
    }
  }

  TEST_CASE("coverage probability climbs to one past an early dip") {
    // Not monotone from the start: at p = 1/5 adding rows and columns
    // first outpaces the chance of covering them all, so the probability
    // falls until n = 4 and only then climbs. Larger p climbs throughout.
    for (const auto& p : {Rational(1, 2), Rational(4, 5)}) {
      Rational previous = exact_prob_beta1(2, p);
      for (int n = 3; n <= 30; ++n) {
        const Rational current = exact_prob_beta1(n, p);
        CHECK(current > previous);
        previous = current;
      }
    }
    const Rational fifth(1, 5);
    CHECK(exact_prob_beta1(3, fifth) < exact_prob_beta1(2, fifth));
    CHECK(exact_prob_beta1(4, fifth) < exact_prob_beta1(3, fifth));
    Rational previous = exact_prob_beta1(4, fifth);
    for (int n = 5; n <= 30; ++n) {
      const Rational current = exact_prob_beta1(n, fifth);
      CHECK(current > previous);
      previous = current;
    }
    // Float mode may round consecutive values near one to the same double.
    for (double p : {0.5, 0.8}) {
      double before = exact_prob_beta1(2, p);
      for (int n = 3; n <= 30; ++n) {
        const double current = exact_prob_beta1(n, p);
        CHECK(current >= before - 1e-15);
        before = current;
      }
    }
    CHECK(exact_prob_beta1(30, 0.3) > 0.99);
  }

  TEST_CASE("extreme probabilities stay near the endpoints") {
    for (int n = 1; n <= 10; ++n) {
      CHECK(exact_prob_beta1(n, 1e-9) < 1e-6);
      CHECK(exact_prob_beta1(n, 1.0 - 1e-9) > 1.0 - 1e-6);
    }
  }

  TEST_CASE("value probabilities sum to one") {
    const std::vector<double> probs = {0.2, 0.3, 0.5};
    for (int n : {1, 2, 3, 5}) {
      double total = 0.0;
      for (int j = 1; j <= 3; ++j) total += prob_beta_j(n, probs, j);
      CHECK(std::abs(total - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("two valued case reduces to the coverage probability") {
    for (int n : {1, 2, 3, 4}) {
      for (double p : {0.25, 0.5, 0.75}) {
        CHECK(prob_beta_j(n, {p, 1.0 - p}, 1) == exact_prob_beta1(n, p));
      }
    }
    CHECK(prob_beta_j(3, {1.0}, 1) == 1.0);
  }

  TEST_CASE("three valued probabilities match solving every assignment") {
    // n = 2 with entry values 1 < 2 < 3 drawn with dyadic probabilities:
    // every assignment probability and their sums are exact in double.
    const std::vector<double> probs = {0.25, 0.25, 0.5};
    const std::vector<double> values = {1.0, 2.0, 3.0};
    double by_value[3] = {0.0, 0.0, 0.0};
    for (int code = 0; code < 81; ++code) {
      int digits = code;
      Eigen::MatrixXd entries(2, 2);
      double weight = 1.0;
      for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
          const int pick = digits % 3;
          digits /= 3;
          entries(i, j) = values[static_cast<std::size_t>(pick)];
          weight *= probs[static_cast<std::size_t>(pick)];
        }
      }
      const SolveResult result =
          solve(fundamental(2), fundamental(2), CostMatrix(entries));
      for (int j = 0; j < 3; ++j) {
        if (result.cost == values[static_cast<std::size_t>(j)]) {
          by_value[j] += weight;
        }
      }
    }
    for (int j = 1; j <= 3; ++j) {
      CHECK(std::abs(prob_beta_j(2, probs, j) - by_value[j - 1]) <= 1e-12);
    }
    CHECK(prob_beta_j(2, probs, 1) == exact_prob_beta1(2, 0.25));
  }

  TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(exact_prob_beta1(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(exact_prob_beta1(2, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(exact_prob_beta1(2, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(exact_prob_beta1(0, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_prob_beta1(2, Rational(3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(0, {1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(2, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(2, {0.5, 0.5}, 0), std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(2, {0.5, 0.5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(2, {0.7, -0.2, 0.5}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(prob_beta_j(2, {0.5, 0.4}, 1), std::invalid_argument);
  }
}
