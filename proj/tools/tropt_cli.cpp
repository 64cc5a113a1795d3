// Command line front end: problem solving, plan analysis, region display,
// probability formulas, Monte Carlo experiments, and the brute-force
// reference solver. All output is deterministic for fixed inputs and seeds;
// validation failures exit with status 2 and a one-line diagnostic.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropt/analysis.hpp"
#include "tropt/experiment.hpp"
#include "tropt/io.hpp"
#include "tropt/oracle.hpp"
#include "tropt/probability.hpp"
#include "tropt/rational.hpp"
#include "tropt/regions.hpp"
#include "tropt/solver.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kFormatVersion = "1";

std::uint64_t default_seed() {
  if (const char* text = std::getenv("TROPT_SEED")) {
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("TROPT_SEED must be an unsigned integer");
    }
  }
  return 0;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& error) {
    throw std::invalid_argument(path + ": " + error.what());
  }
}

tropt::io::Problem load_problem(const std::string& path) {
  tropt::io::Problem problem = tropt::io::parse_problem(load_json(path));
  const auto echo = [](const char* name,
                       const tropt::MaxPlusMeasure& measure) {
    std::cerr << "note: " << name
              << " weights were normalized; source positions:";
    for (const Eigen::Index label : measure.labels()) {
      std::cerr << ' ' << label;
    }
    std::cerr << '\n';
  };
  if (problem.mu_rewritten) echo("mu", problem.mu);
  if (problem.nu_rewritten) echo("nu", problem.nu);
  return problem;
}

std::string format_number(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

int cmd_solve(const std::string& path, const std::string& plan_out) {
  const tropt::io::Problem problem = load_problem(path);
  const tropt::SolveResult result =
      tropt::solve(problem.mu, problem.nu, problem.cost);
  std::cout << tropt::io::solution_to_json(result).dump(2) << '\n';
  if (!plan_out.empty()) {
    std::ofstream out(plan_out);
    if (!out) throw std::invalid_argument("cannot write " + plan_out);
    out << tropt::io::plan_to_json(result.plan).dump(2) << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& path) {
  const tropt::io::Problem problem = load_problem(path);
  const tropt::SolveResult result =
      tropt::solve(problem.mu, problem.nu, problem.cost);
  const tropt::UniquenessCertificate certificate =
      tropt::uniqueness_certificate(problem.mu, problem.nu, problem.cost);

  auto per_region = nlohmann::json::array();
  for (const auto& [lambda, reduced] : certificate.per_region) {
    per_region.push_back({{"lambda", lambda}, {"reduced", reduced}});
  }
  nlohmann::json uniqueness = {{"per_region", std::move(per_region)}};
  if (certificate.overall_fundamental.has_value()) {
    uniqueness["overall_fundamental"] = *certificate.overall_fundamental;
  } else {
    uniqueness["overall_fundamental"] = nullptr;
  }

  nlohmann::json report = {
      {"cost", result.cost},
      {"sweep_plan_reduced", tropt::is_reduced(result.plan)},
      {"reduction", tropt::io::plan_to_json(tropt::reduce(result.plan))},
      {"pm_feasible", tropt::pm_feasible(problem.mu, problem.nu)},
      {"uniqueness", std::move(uniqueness)}};
  if (result.plan.rows() == result.plan.cols()) {
    report["contains_perfect_matching"] =
        tropt::contains_perfect_matching(result.plan);
  } else {
    report["contains_perfect_matching"] = nullptr;
  }
  std::cout << report.dump(2) << '\n';
  return 0;
}

char region_symbol(std::size_t index) {
  if (index < 10) return static_cast<char>('0' + index);
  if (index < 36) return static_cast<char>('a' + index - 10);
  return '?';
}

int cmd_regions(const std::string& path, bool grid) {
  const tropt::io::Problem problem = load_problem(path);
  const std::vector<tropt::Region> regions =
      tropt::build_regions(problem.mu, problem.nu);
  if (!grid) {
    auto out = nlohmann::json::array();
    for (const auto& region : regions) {
      out.push_back(tropt::io::region_to_json(region));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::vector<std::string> art(
      static_cast<std::size_t>(problem.mu.size()),
      std::string(static_cast<std::size_t>(problem.nu.size()), '.'));
  for (std::size_t index = 0; index < regions.size(); ++index) {
    for (const tropt::Cell cell : regions[index].cells) {
      art[static_cast<std::size_t>(cell.row)]
         [static_cast<std::size_t>(cell.col)] = region_symbol(index);
    }
  }
  for (const std::string& line : art) std::cout << line << '\n';
  for (std::size_t index = 0; index < regions.size(); ++index) {
    std::cout << region_symbol(index) << ": lambda "
              << format_number(regions[index].lambda) << '\n';
  }
  return 0;
}

int cmd_formula(int n, const std::string& p_text, bool exact_rational,
                const std::vector<double>& probs, int value_index) {
  if (!probs.empty()) {
    std::cout << format_number(tropt::prob_beta_j(n, probs, value_index))
              << '\n';
    return 0;
  }
  if (p_text.empty()) {
    throw std::invalid_argument("formula needs --p or --probs");
  }
  const tropt::Rational p = tropt::parse_rational(p_text);
  if (exact_rational) {
    std::cout << tropt::to_string(tropt::exact_prob_beta1(n, p)) << '\n';
  } else {
    std::cout << format_number(
                     tropt::exact_prob_beta1(n, tropt::to_double(p)))
              << '\n';
  }
  return 0;
}

void append_csv(const std::string& path,
                const tropt::SimulationReport& report) {
  const bool fresh = !std::filesystem::exists(path) ||
                     std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::invalid_argument("cannot write " + path);
  if (fresh) out << "event,n,p_or_M,trials,seed,frequency,stderr,exact\n";
  out << report.event << ',' << report.n << ','
      << format_number(report.parameter) << ',' << report.trials << ','
      << report.seed << ',' << format_number(report.frequency) << ','
      << format_number(report.standard_error) << ',';
  if (report.exact.has_value()) out << format_number(*report.exact);
  out << '\n';
}

int cmd_simulate(const std::string& event, std::int64_t n,
                 const std::string& p_text, const std::string& schedule,
                 double low, double high, double uniform_bound,
                 bool uniform_given, std::uint64_t trials,
                 std::uint64_t seed, int threads, const std::string& csv) {
  tropt::EventKind kind = tropt::EventKind::kCostIsBeta1;
  if (event == "pm") {
    kind = tropt::EventKind::kContainsPerfectMatching;
  } else if (event == "unique") {
    kind = tropt::EventKind::kUniqueReduced;
  }

  const int sources = (!p_text.empty() ? 1 : 0) +
                      (!schedule.empty() ? 1 : 0) + (uniform_given ? 1 : 0);
  if (sources != 1) {
    throw std::invalid_argument(
        "pick exactly one cost model: --p, --p-schedule, or --M");
  }

  tropt::CostSpec spec;
  if (uniform_given) {
    tropt::UniformCostSpec uniform;
    uniform.n = n;
    uniform.upper = uniform_bound;
    uniform.seed = seed;
    spec = uniform;
  } else {
    tropt::BernoulliCostSpec bernoulli;
    bernoulli.n = n;
    bernoulli.p = !schedule.empty()
                      ? tropt::schedule_probability(schedule, n)
                      : tropt::to_double(tropt::parse_rational(p_text));
    bernoulli.low = low;
    bernoulli.high = high;
    bernoulli.seed = seed;
    spec = bernoulli;
  }

  const tropt::SimulationReport report =
      tropt::run_experiment(kind, spec, trials, threads);

  nlohmann::json out = {
      {"event", report.event},       {"n", report.n},
      {"parameter", report.parameter}, {"trials", report.trials},
      {"seed", report.seed},         {"frequency", report.frequency},
      {"stderr", report.standard_error}};
  if (report.exact.has_value()) out["exact"] = *report.exact;
  std::cout << out.dump(2) << '\n';
  std::cerr << "note: " << report.wall_seconds << " s wall\n";
  if (!csv.empty()) append_csv(csv, report);
  return 0;
}

int cmd_oracle(const std::string& path) {
  const tropt::io::Problem problem = load_problem(path);
  const double cost =
      tropt::oracle::brute_force_global(problem.mu, problem.nu, problem.cost);
  std::cout << nlohmann::json{{"cost", cost}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical optimal transport toolkit"};
  app.set_version_flag(
      "--version", std::string("tropt ") + kToolVersion + " (problem format " +
                       kFormatVersion + ")");
  app.require_subcommand(0, 1);

  std::string solve_path;
  std::string solve_plan_out;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Solve a problem file and print cost, plan, and regions");
  solve_cmd->add_option("problem", solve_path, "problem JSON file")
      ->required();
  solve_cmd->add_option("--plan", solve_plan_out,
                        "also write the plan JSON to this file");

  std::string analyze_path;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Report reducedness, matching, and uniqueness facts");
  analyze_cmd->add_option("problem", analyze_path, "problem JSON file")
      ->required();

  std::string regions_path;
  bool regions_grid = false;
  CLI::App* regions_cmd = app.add_subcommand(
      "regions", "Print the weight-induced grid partition");
  regions_cmd->add_option("problem", regions_path, "problem JSON file")
      ->required();
  regions_cmd->add_flag("--grid", regions_grid,
                        "draw an ASCII grid instead of JSON");

  int formula_n = 1;
  std::string formula_p;
  bool formula_exact = false;
  std::vector<double> formula_probs;
  int formula_j = 1;
  CLI::App* formula_cmd = app.add_subcommand(
      "formula", "Evaluate the exact low-cost coverage probability");
  formula_cmd->add_option("--n", formula_n, "grid order")->required();
  CLI::Option* p_option =
      formula_cmd->add_option("--p", formula_p, "low-entry probability");
  formula_cmd->add_flag("--exact-rational", formula_exact,
                        "print an exact rational (with --p)");
  CLI::Option* probs_option =
      formula_cmd
          ->add_option("--probs", formula_probs,
                       "comma separated entry value probabilities")
          ->delimiter(',');
  formula_cmd->add_option("--j", formula_j, "1-based entry value index")
      ->needs(probs_option);
  p_option->excludes(probs_option);

  std::string sim_event;
  std::int64_t sim_n = 2;
  std::string sim_p;
  std::string sim_schedule;
  double sim_low = 0.0;
  double sim_high = 1.0;
  double sim_bound = 1.0;
  std::uint64_t sim_trials = 10000;
  std::uint64_t sim_seed = 0;
  int sim_threads = 1;
  std::string sim_csv;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Estimate event probabilities by Monte Carlo");
  simulate_cmd->add_option("--event", sim_event, "beta1, pm, or unique")
      ->required()
      ->check(CLI::IsMember({"beta1", "pm", "unique"}));
  simulate_cmd->add_option("--n", sim_n, "grid order")->required();
  simulate_cmd->add_option("--p", sim_p, "low-entry probability");
  simulate_cmd->add_option("--p-schedule", sim_schedule,
                           "named probability schedule: log-over-n, inv-n, "
                           "or inv-sqrt-n");
  simulate_cmd->add_option("--low", sim_low, "low entry value");
  simulate_cmd->add_option("--high", sim_high, "high entry value");
  CLI::Option* bound_option = simulate_cmd->add_option(
      "--M", sim_bound, "uniform entries on [0, M]");
  simulate_cmd->add_option("--trials", sim_trials, "number of trials");
  CLI::Option* seed_option =
      simulate_cmd->add_option("--seed", sim_seed, "base RNG seed");
  simulate_cmd->add_option("--threads", sim_threads, "worker thread count");
  simulate_cmd->add_option("--csv", sim_csv, "append a CSV report row here");

  std::string oracle_path;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Solve tiny instances by exhaustive enumeration");
  oracle_cmd->add_option("problem", oracle_path, "problem JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_path, solve_plan_out);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_path);
    if (regions_cmd->parsed()) return cmd_regions(regions_path, regions_grid);
    if (formula_cmd->parsed()) {
      return cmd_formula(formula_n, formula_p, formula_exact, formula_probs,
                         formula_j);
    }
    if (simulate_cmd->parsed()) {
      if (!seed_option->count()) sim_seed = default_seed();
      return cmd_simulate(sim_event, sim_n, sim_p, sim_schedule, sim_low,
                          sim_high, sim_bound,
                          bound_option->count() > 0, sim_trials, sim_seed,
                          sim_threads, sim_csv);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path);
    std::cout << app.help();
    return 0;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << '\n';
    return 3;
  }
}
