#include "mabsim/explore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabsim {

EstimatorState make_estimator_state(int num_arms, int d_max) {
  EstimatorState state;
  state.reward_sums.assign(static_cast<size_t>(num_arms), 0.0);
  state.serve_counts.assign(static_cast<size_t>(num_arms), 0);
  state.tail_counts.assign(static_cast<size_t>(num_arms),
                           std::vector<long>(static_cast<size_t>(d_max), 0));
  return state;
}

void explore_step(EstimatorState& state, int own_arm,
                  const std::vector<int>& arrivals,
                  std::optional<double> reward) {
  if (reward) {
    state.reward_sums[static_cast<size_t>(own_arm)] += *reward;
    state.serve_counts[static_cast<size_t>(own_arm)] += 1;
  }
  for (size_t m = 0; m < state.tail_counts.size(); ++m) {
    auto& row = state.tail_counts[m];
    const int upto =
        std::min<int>(arrivals[m], static_cast<int>(row.size()));
    for (int d = 0; d < upto; ++d) row[static_cast<size_t>(d)] += 1;
  }
  state.rounds_elapsed += 1;
}

ArmModel Estimates::as_arm_model() const {
  ArmModel model;
  model.mu.reserve(mu_hat.size());
  for (const auto& mu : mu_hat) model.mu.push_back(mu.value_or(0.0));
  model.tail = tail_hat;
  return model;
}

Estimates finalize_estimates(const EstimatorState& state, long t0) {
  if (state.rounds_elapsed != t0) {
    throw std::invalid_argument(
        "finalize_estimates: state has not run for t0 rounds");
  }
  Estimates est;
  est.mu_hat.resize(state.reward_sums.size());
  est.tail_hat.resize(state.tail_counts.size());
  for (size_t m = 0; m < state.reward_sums.size(); ++m) {
    if (state.serve_counts[m] > 0) {
      est.mu_hat[m] = state.reward_sums[m] / state.serve_counts[m];
    }
    auto& row = est.tail_hat[m];
    row.resize(state.tail_counts[m].size());
    for (size_t d = 0; d < row.size(); ++d) {
      row[d] = static_cast<double>(state.tail_counts[m][d]) / t0;
    }
  }
  return est;
}

double service_probability(const Instance& inst, int arm) {
  const int num_arms = inst.num_arms();
  const int others = inst.num_players - 1;
  const ArmSpec& spec = inst.arms[static_cast<size_t>(arm)];

  // Distribution of how many of the other players land on the same arm
  // under uniform selection: Binomial(K-1, 1/M).
  std::vector<double> weight(static_cast<size_t>(others) + 1, 0.0);
  if (num_arms == 1) {
    weight[static_cast<size_t>(others)] = 1.0;
  } else {
    const double p = 1.0 / num_arms;
    double w = std::pow(1.0 - p, others);
    for (int n = 0; n <= others; ++n) {
      weight[static_cast<size_t>(n)] = w;
      if (n < others) {
        w *= static_cast<double>(others - n) / (n + 1) * p / (1.0 - p);
      }
    }
  }

  double total = 0.0;
  for (size_t i = 0; i < spec.pmf.size(); ++i) {
    const double d = static_cast<double>(i + 1);
    double inner = 0.0;
    for (int n = 0; n <= others; ++n) {
      inner += weight[static_cast<size_t>(n)] * std::min(1.0, d / (n + 1));
    }
    total += spec.pmf[i] * inner;
  }
  return total / num_arms;
}

std::vector<double> service_probabilities(const Instance& inst) {
  std::vector<double> probs(static_cast<size_t>(inst.num_arms()));
  for (int m = 0; m < inst.num_arms(); ++m) {
    probs[static_cast<size_t>(m)] = service_probability(inst, m);
  }
  return probs;
}

Lemma2Bounds estimate_deviation_bounds(double delta1, double delta2, long t0,
                                       std::span<const double> service_probs,
                                       int num_players) {
  if (delta1 <= 0.0 || delta1 >= 1.0 || delta2 <= 0.0 || delta2 >= 1.0) {
    throw std::domain_error("estimate_deviation_bounds: delta outside (0,1)");
  }
  if (t0 < 1) throw std::domain_error("estimate_deviation_bounds: t0 < 1");

  Lemma2Bounds bounds;
  bounds.eps_tail = std::sqrt(std::log(1.0 / delta1) / (2.0 * t0));
  const int num_arms = static_cast<int>(service_probs.size());
  bounds.eps_mean.resize(static_cast<size_t>(num_arms));
  double tail_sum = 0.0;
  for (int m = 0; m < num_arms; ++m) {
    const double c = service_probs[static_cast<size_t>(m)];
    bounds.eps_mean[static_cast<size_t>(m)] =
        std::sqrt(std::log(1.0 / delta2) / (c * t0));
    tail_sum += std::exp(-static_cast<double>(t0) * c / 8.0);
  }
  bounds.success_lower_bound = 1.0 - num_arms * num_players * delta1 -
                               num_arms * num_players * delta2 -
                               num_players * tail_sum;
  return bounds;
}

ConfidenceParams make_confidence_params(double delta1, double delta2, long t0,
                                        std::vector<double> service_probs) {
  ConfidenceParams params;
  params.delta1 = delta1;
  params.delta2 = delta2;
  params.t0 = t0;
  const auto bounds = estimate_deviation_bounds(delta1, delta2, t0,
                                                service_probs, /*K*/ 1);
  params.eps_tail = bounds.eps_tail;
  params.eps_mean = bounds.eps_mean;
  params.service_probs = std::move(service_probs);
  return params;
}

namespace {

// Length making eps_mean + eps_tail + eps_mean*eps_tail == gamma/2 for one
// arm. With a = sqrt(ln(1/delta1)/2) and b = sqrt(ln(1/delta2)/c), the
// condition is a quadratic in 1/sqrt(T0); the solution rearranges to the
// cancellation-free form ((sqrt((a+b)^2 + 2ab*gamma) + (a+b)) / gamma)^2.
double length_for_arm(double log1, double log2, double gamma, double c) {
  const double a = std::sqrt(0.5 * log1);
  const double b = std::sqrt(log2 / c);
  const double s = a + b;
  const double root = std::sqrt(s * s + 2.0 * a * b * gamma);
  const double t = (root + s) / gamma;
  return t * t;
}

}  // namespace

long exploration_length(double delta1, double delta2, double gamma,
                        std::span<const double> service_probs) {
  if (gamma <= 0.0) {
    throw std::domain_error("exploration_length: gamma must be positive");
  }
  if (delta1 <= 0.0 || delta1 >= 1.0 || delta2 <= 0.0 || delta2 >= 1.0) {
    throw std::domain_error("exploration_length: delta outside (0,1)");
  }
  const double log1 = std::log(1.0 / delta1);
  const double log2 = std::log(1.0 / delta2);
  double worst = 0.0;
  for (double c : service_probs) {
    if (c <= 0.0) {
      throw std::domain_error(
          "exploration_length: service probability must be positive");
    }
    worst = std::max(worst, length_for_arm(log1, log2, gamma, c));
  }
  return static_cast<long>(std::ceil(worst));
}

long exploration_length_log(long horizon, double gamma,
                            std::span<const double> service_probs) {
  if (horizon < 2) {
    throw std::domain_error("exploration_length_log: horizon must be >= 2");
  }
  if (gamma <= 0.0) {
    throw std::domain_error("exploration_length_log: gamma must be positive");
  }
  const double log_t = std::log(static_cast<double>(horizon));
  double accuracy_term = 0.0;
  double floor_term = 0.0;
  for (double c : service_probs) {
    if (c <= 0.0) {
      throw std::domain_error(
          "exploration_length_log: service probability must be positive");
    }
    accuracy_term =
        std::max(accuracy_term, length_for_arm(log_t, log_t, gamma, c));
    floor_term = std::max(floor_term, 8.0 * log_t / c);
  }
  return static_cast<long>(std::ceil(std::max(accuracy_term, floor_term)));
}

}  // namespace mabsim
