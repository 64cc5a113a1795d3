#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "tropt/sampling.hpp"

namespace tropt {

// Per-trial events estimated by Monte Carlo. Trials use equal-weight
// measures, so the whole grid forms one region and the optimal cost is the
// stopping threshold itself.
enum class EventKind {
  kCostIsBeta1,             // optimal cost equals the low Bernoulli value
  kContainsPerfectMatching, // the sweep plan's finite cells hold a matching
  kUniqueReduced,           // the sweep plan is the unique two-valued optimum
};

// Short stable identifier: "beta1", "pm", or "unique".
std::string event_name(EventKind kind);

using CostSpec = std::variant<BernoulliCostSpec, UniformCostSpec>;

struct SimulationReport {
  std::string event;
  Eigen::Index n = 0;
  double parameter = 0.0;  // p for Bernoulli costs, the bound for uniform
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double frequency = 0.0;       // event count / trials
  double standard_error = 0.0;  // sqrt(frequency * (1 - frequency) / trials)
  std::optional<double> exact;  // closed-form probability when one exists
  double wall_seconds = 0.0;
};

// Runs independent trials and counts the event. Deterministic in
// (kind, spec, trials) for any thread count: trial streams are keyed by
// (seed, trial) and counts aggregate as integers. kCostIsBeta1 needs a
// Bernoulli spec and attaches its exact probability.
SimulationReport run_experiment(EventKind kind, const CostSpec& spec,
                                std::uint64_t trials, int threads = 1);

// Named decay schedules for the low-value probability: "log-over-n" is
// log(n)/n, "inv-n" is 1/n, "inv-sqrt-n" is 1/sqrt(n), all clamped to
// [0, 1].
double schedule_probability(const std::string& name, Eigen::Index n);

}  // namespace tropt
