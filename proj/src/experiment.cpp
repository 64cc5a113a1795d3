#include "tropt/experiment.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "tropt/analysis.hpp"
#include "tropt/measure.hpp"
#include "tropt/probability.hpp"
#include "tropt/solver.hpp"

namespace tropt {
namespace {

MaxPlusMeasure uniform_measure(Eigen::Index n) {
  return normalize_measure(Eigen::VectorXd::Zero(n));
}

struct TrialContext {
  EventKind kind;
  const CostSpec* spec;
  MaxPlusMeasure mu;
  MaxPlusMeasure nu;
};

CostMatrix sample_trial(const CostSpec& spec, std::uint64_t trial) {
  return std::visit(
      [trial](const auto& chosen) {
        if constexpr (std::is_same_v<std::decay_t<decltype(chosen)>,
                                     BernoulliCostSpec>) {
          return sample_bernoulli(chosen, trial);
        } else {
          return sample_uniform(chosen, trial);
        }
      },
      spec);
}

bool run_trial(const TrialContext& ctx, std::uint64_t trial) {
  const CostMatrix c = sample_trial(*ctx.spec, trial);
  switch (ctx.kind) {
    case EventKind::kCostIsBeta1: {
      const auto& bernoulli = std::get<BernoulliCostSpec>(*ctx.spec);
      // Entries and weights are exact, so the cost is exactly low or high.
      return solve(ctx.mu, ctx.nu, c).cost == bernoulli.low;
    }
    case EventKind::kContainsPerfectMatching:
      return contains_perfect_matching(solve(ctx.mu, ctx.nu, c).plan);
    case EventKind::kUniqueReduced: {
      const auto certificate = uniqueness_certificate(ctx.mu, ctx.nu, c);
      // Equal weights give a single region, so the flag is always present.
      return certificate.overall_fundamental.value();
    }
  }
  throw std::logic_error("unhandled event kind");
}

}  // namespace

std::string event_name(EventKind kind) {
  switch (kind) {
    case EventKind::kCostIsBeta1:
      return "beta1";
    case EventKind::kContainsPerfectMatching:
      return "pm";
    case EventKind::kUniqueReduced:
      return "unique";
  }
  throw std::logic_error("unhandled event kind");
}

SimulationReport run_experiment(EventKind kind, const CostSpec& spec,
                                std::uint64_t trials, int threads) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (threads < 1) throw std::invalid_argument("need at least one thread");
  if (kind == EventKind::kCostIsBeta1 &&
      !std::holds_alternative<BernoulliCostSpec>(spec)) {
    throw std::invalid_argument(
        "the beta1 event needs a two-valued cost distribution");
  }

  const auto start = std::chrono::steady_clock::now();

  SimulationReport report;
  report.event = event_name(kind);
  std::uint64_t seed = 0;
  if (const auto* bernoulli = std::get_if<BernoulliCostSpec>(&spec)) {
    report.n = bernoulli->n;
    report.parameter = bernoulli->p;
    seed = bernoulli->seed;
    // Validate eagerly so a bad spec fails before any thread starts.
    (void)sample_bernoulli(*bernoulli, 0);
  } else {
    const auto& uniform = std::get<UniformCostSpec>(spec);
    report.n = uniform.n;
    report.parameter = uniform.upper;
    seed = uniform.seed;
    (void)sample_uniform(uniform, 0);
  }
  report.trials = trials;
  report.seed = seed;

  TrialContext ctx{kind, &spec, uniform_measure(report.n),
                   uniform_measure(report.n)};

  const auto worker_count =
      static_cast<std::uint64_t>(threads) < trials
          ? static_cast<std::uint64_t>(threads)
          : trials;
  std::vector<std::uint64_t> hits(worker_count, 0);
  // Fixed block split; per-trial streams make the layout irrelevant to the
  // counts.
  const std::uint64_t base = trials / worker_count;
  const std::uint64_t extra = trials % worker_count;
  auto block_begin = [&](std::uint64_t w) {
    return w * base + (w < extra ? w : extra);
  };

  auto count_block = [&](std::uint64_t w) {
    std::uint64_t local = 0;
    const std::uint64_t end = block_begin(w + 1);
    for (std::uint64_t trial = block_begin(w); trial < end; ++trial) {
      if (run_trial(ctx, trial)) ++local;
    }
    hits[w] = local;
  };

  if (worker_count == 1) {
    count_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      pool.emplace_back(count_block, w);
    }
    for (auto& thread : pool) thread.join();
  }

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  report.frequency = static_cast<double>(total) / static_cast<double>(trials);
  report.standard_error = std::sqrt(report.frequency *
                                    (1.0 - report.frequency) /
                                    static_cast<double>(trials));
  if (kind == EventKind::kCostIsBeta1) {
    const auto& bernoulli = std::get<BernoulliCostSpec>(spec);
    report.exact =
        exact_prob_beta1(static_cast<int>(bernoulli.n), bernoulli.p);
  }

  const auto stop = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

double schedule_probability(const std::string& name, Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("schedule needs a positive size");
  const double size = static_cast<double>(n);
  double value = 0.0;
  if (name == "log-over-n") {
    value = std::log(size) / size;
  } else if (name == "inv-n") {
    value = 1.0 / size;
  } else if (name == "inv-sqrt-n") {
    value = 1.0 / std::sqrt(size);
  } else {
    throw std::invalid_argument(
        "unknown schedule; use log-over-n, inv-n, or inv-sqrt-n");
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

}  // namespace tropt
