#include "tropt/probability.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tropt {

namespace {

void check_arguments(int n, double p) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must be in [0,1]");
  }
}

Rational rational_power(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace

double exact_prob_beta1(int n, double p) {
  check_arguments(n, p);
  if (p == 1.0) return 1.0;
  const double q = 1.0 - p;

  // sum_j (-1)^(j+n) C(n,j) q^(n(n-j)) (1-q^j)^n: all factors in [0,1].
  double sum = 0.0, compensation = 0.0;
  double binomial = 1.0;  // C(n,0)
  for (int j = 0; j <= n; ++j) {
    const double shrink = std::pow(q, static_cast<double>(n) * (n - j));
    double term = 0.0;
    if (shrink > 0.0) {
      term = binomial * shrink * std::pow(1.0 - std::pow(q, j), n);
      if ((j + n) % 2 != 0) term = -term;
    }
    const double adjusted = term - compensation;
    const double next = sum + adjusted;
    compensation = (next - sum) - adjusted;
    sum = next;
    binomial *= static_cast<double>(n - j) / (j + 1);
  }
  // The alternating sum can land a rounding step outside [0,1].
  return std::min(1.0, std::max(0.0, sum));
}

Rational exact_prob_beta1(int n, const Rational& p) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
  if (p == 1) return 1;
  const Rational q = Rational(1) - p;
  const Rational inverse_q = Rational(1) / q;

  Rational sum = 0;
  Rational binomial = 1;
  for (int j = 0; j <= n; ++j) {
    Rational term =
        binomial * rational_power(1 - rational_power(inverse_q, j), n);
    if (j % 2 != 0) term = -term;
    sum += term;
    binomial *= n - j;
    binomial /= j + 1;
  }
  return rational_power(q, static_cast<unsigned>(n) *
                               static_cast<unsigned>(n)) *
         sum;
}

double prob_beta_j(int n, const std::vector<double>& probs, int j) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (probs.empty()) throw std::invalid_argument("no entry probabilities");
  if (j < 1 || j > static_cast<int>(probs.size())) {
    throw std::invalid_argument("value index out of range");
  }
  double total = 0.0;
  for (double value : probs) {
    if (!(value >= 0.0)) {
      throw std::invalid_argument("entry probabilities must be nonnegative");
    }
    total += value;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("entry probabilities must sum to one");
  }

  double below = 0.0;
  for (int k = 0; k + 1 < j; ++k) below += probs[static_cast<std::size_t>(k)];
  const double upto = below + probs[static_cast<std::size_t>(j - 1)];
  const auto clamp = [](double x) {
    return std::min(1.0, std::max(0.0, x));
  };
  return exact_prob_beta1(n, clamp(upto)) - exact_prob_beta1(n, clamp(below));
}

}  // namespace tropt
