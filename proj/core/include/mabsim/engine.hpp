#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mabsim/commit.hpp"
#include "mabsim/instance.hpp"
#include "mabsim/offline.hpp"

namespace mabsim {

enum class Algo { etc, maxavg, softmax };

std::string algo_name(Algo algo);

// Which algorithms a run covers. `all` expands to the three concrete ones.
enum class AlgoSelection { etc, maxavg, softmax, all };

std::vector<Algo> selected_algos(AlgoSelection selection);

// Exploration length: a fixed round count, a fraction of the horizon, or
// automatic via the horizon-driven closed form on the true instance.
struct T0Spec {
  enum class Kind { automatic, fixed, fraction };
  Kind kind = Kind::automatic;
  long fixed = 0;
  double fraction = 0.0;

  static T0Spec automatic() { return {}; }
  static T0Spec fixed_rounds(long t0) {
    return {Kind::fixed, t0, 0.0};
  }
  static T0Spec fraction_of_horizon(double f) {
    return {Kind::fraction, 0, f};
  }
};

struct ExperimentConfig {
  // Instance source: an explicit instance wins over the generator params.
  std::optional<Instance> instance;
  int num_arms = 50;
  int num_players = 150;
  long horizon = 10000;
  int d_max = 50;
  double sigma = 0.1;

  T0Spec t0;
  AlgoSelection selection = AlgoSelection::etc;
  int repeats = 120;
  std::uint64_t seed = 1;
  double delta1 = 0.01;
  double delta2 = 0.01;
  double softmax_tau = 1.0;
  int workers = 0;  // 0 = hardware concurrency

  // Test hook: players skip estimation and receive the true (mu, tails),
  // so the committed profile must be exactly optimal. Allows t0 = 0.
  bool oracle_estimates = false;
};

// Throws std::invalid_argument with a field diagnostic on any violation.
void validate_config(const ExperimentConfig& config);

struct PhaseMarkers {
  long explore_end = 0;    // last exploration round
  long consensus_end = 0;  // last consensus round
  long commit_end = 0;     // round after which the profile never changes
  bool commit_completed = true;
  bool consensus_inputs_consistent = true;
};

// Everything recorded about one run. Regret is defined against expected
// utilities of the realized profiles, so it is deterministic given the
// action sequence; reward sampling noise shows up only in cum_reward.
struct RegretTrace {
  double optimal_utility = 0.0;
  std::vector<double> expected_utility;  // E[U(n_t)] per round, analytic
  std::vector<double> cum_regret;        // running sum of U* - E[U(n_t)]
  std::vector<double> cum_reward;        // running total of realized rewards
  PhaseMarkers phases;
};

double regret_of(const RegretTrace& trace);

// Random instance in the style of the experiment section: uniform reward
// means, pmfs from normalized uniform draws, clamped-normal rewards.
Instance generate_instance(int num_arms, int num_players, long horizon,
                           int d_max, double sigma, Rng& rng);

// Config with instance, exploration length, and optimum resolved; shared by
// every repeat so instance generation is independent of the algorithm.
struct ResolvedExperiment {
  Instance instance;
  long t0 = 0;
  double optimal_utility = 0.0;
  PullProfile canonical_target;  // greedy profile on the true instance
  double commit_bound = 0.0;     // expected_commit_bound(canonical_target)
  double softmax_tau = 1.0;
  bool oracle_estimates = false;
  std::vector<std::vector<double>> utilities;  // utility_table up to K
};

ResolvedExperiment resolve_experiment(const ExperimentConfig& config);

RegretTrace run_etc(const ResolvedExperiment& exp, std::uint64_t seed);
RegretTrace run_baseline_maxavg(const ResolvedExperiment& exp,
                                std::uint64_t seed);
RegretTrace run_baseline_softmax(const ResolvedExperiment& exp,
                                 std::uint64_t seed);

// Convenience single-repeat entry points resolving the config themselves.
RegretTrace run_etc(const ExperimentConfig& config, std::uint64_t seed);
RegretTrace run_baseline_maxavg(const ExperimentConfig& config,
                                std::uint64_t seed);
RegretTrace run_baseline_softmax(const ExperimentConfig& config,
                                 std::uint64_t seed);

struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> se;
};

struct MonteCarloResult {
  Algo algo = Algo::etc;
  int repeats = 0;
  long horizon = 0;
  double optimal_utility = 0.0;
  SeriesStats cum_regret;  // per round, across repeats
  SeriesStats cum_reward;
  double final_regret_mean = 0.0;
  double final_regret_se = 0.0;
  double final_reward_mean = 0.0;
  double final_reward_se = 0.0;

  // ETC phase accounting; zero/empty for the baselines.
  long explore_end = 0;
  long consensus_end = 0;
  std::vector<long> commit_end_per_repeat;
  long max_commit_end = 0;
  int commit_completed_count = 0;
  double commit_bound = 0.0;
  std::vector<double> post_commit_regret_per_round;  // per repeat

  std::string phase_label(long t) const;  // t is 1-based
};

// Runs `repeats` independent seeded traces of one algorithm and aggregates
// per-round means and standard errors. Repeats are distributed over a worker
// pool; the aggregate is reduced in repeat order, so the result does not
// depend on the worker count.
MonteCarloResult monte_carlo(const ExperimentConfig& config, Algo algo);
MonteCarloResult monte_carlo(const ResolvedExperiment& exp, Algo algo,
                             int repeats, std::uint64_t seed, int workers);

}  // namespace mabsim
