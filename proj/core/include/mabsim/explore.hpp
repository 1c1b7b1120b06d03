#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mabsim/instance.hpp"
#include "mabsim/offline.hpp"

namespace mabsim {

// What one player accumulates during uniform exploration. Reward sums and
// serve counts are private (only the player sees its own rewards); the tail
// counts are driven by the public arrival profile and are therefore
// identical across players.
struct EstimatorState {
  std::vector<double> reward_sums;             // per arm
  std::vector<long> serve_counts;              // rounds served per arm
  std::vector<std::vector<long>> tail_counts;  // [m][d-1]: rounds with D_m >= d
  long rounds_elapsed = 0;
};

EstimatorState make_estimator_state(int num_arms, int d_max);

// Folds one exploration round into the state. `reward` is the player's own
// reward, absent when idle; idle rounds still update the tail counts.
void explore_step(EstimatorState& state, int own_arm,
                  const std::vector<int>& arrivals,
                  std::optional<double> reward);

// Empirical estimates after exploration. A mean is missing when the player
// was never served at that arm; downstream profile search treats missing
// means as zero.
struct Estimates {
  std::vector<std::optional<double>> mu_hat;
  std::vector<std::vector<double>> tail_hat;  // [m][d-1]

  ArmModel as_arm_model() const;
};

Estimates finalize_estimates(const EstimatorState& state, long t0);

// Probability that a player picking arms uniformly at random gets served at
// arm m in one round, accounting for how many of the other K-1 players land
// on the same arm.
double service_probability(const Instance& inst, int arm);
std::vector<double> service_probabilities(const Instance& inst);

struct Lemma2Bounds {
  double eps_tail = 0.0;              // deviation bound for every tail entry
  std::vector<double> eps_mean;       // per-arm deviation bound for mu_hat
  double success_lower_bound = 0.0;   // probability all bounds hold at once
};

Lemma2Bounds estimate_deviation_bounds(double delta1, double delta2, long t0,
                                       std::span<const double> service_probs,
                                       int num_players);

// Derived quantities of one exploration configuration.
struct ConfidenceParams {
  double delta1 = 0.0;
  double delta2 = 0.0;
  long t0 = 0;
  std::vector<double> service_probs;
  double eps_tail = 0.0;
  std::vector<double> eps_mean;
};

ConfidenceParams make_confidence_params(double delta1, double delta2, long t0,
                                        std::vector<double> service_probs);

// Smallest integer exploration length such that, for every arm,
// eps_mean + eps_tail + eps_mean * eps_tail <= gamma / 2. Throws
// std::domain_error when gamma <= 0 or any service probability is <= 0.
long exploration_length(double delta1, double delta2, double gamma,
                        std::span<const double> service_probs);

// Horizon-driven variant: the length that makes the estimate-failure mass
// decay like 1/T, i.e. the deviation budget evaluated at delta = 1/T floored
// by 8 ln(T) / c_m. Rounded up to an integer.
long exploration_length_log(long horizon, double gamma,
                            std::span<const double> service_probs);

}  // namespace mabsim
