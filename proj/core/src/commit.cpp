#include "mabsim/commit.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mabsim {

CommitState make_commit_state(PullProfile target, long start_round) {
  CommitState state;
  state.deficits = target.counts;
  state.committed_counts.assign(target.counts.size(), 0);
  state.total_deficit = target.sum();
  state.target = std::move(target);
  state.start_round = start_round;
  return state;
}

void update_commitment(CommitState& state, int own_action,
                       const PullProfile& published) {
  if (published.size() != state.target.size()) {
    throw std::invalid_argument("update_commitment: profile size mismatch");
  }
  if (!state.committed_arm &&
      published[own_action] <= state.target[own_action]) {
    state.committed_arm = own_action;
  }
  int total = 0;
  for (int m = 0; m < state.target.size(); ++m) {
    if (published[m] <= state.target[m]) {
      state.committed_counts[static_cast<size_t>(m)] = published[m];
    }
    const int deficit =
        state.target[m] - state.committed_counts[static_cast<size_t>(m)];
    state.deficits[static_cast<size_t>(m)] = deficit;
    total += deficit;
  }
  state.total_deficit = total;
}

int select_action(const CommitState& state, Rng& rng) {
  if (state.committed_arm) return *state.committed_arm;
  if (state.total_deficit < 1) {
    throw std::logic_error(
        "select_action: uncommitted player with zero total deficit");
  }
  return sample_weighted(std::span<const int>(state.deficits), rng);
}

namespace {

// x^n by repeated multiplication; exact for small integer exponents and the
// 0^0 = 1 convention the bound needs.
double pow_int(double x, int n) {
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= x;
  return result;
}

double binomial_coefficient(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i) / i;
  }
  return result;
}

}  // namespace

double expected_commit_bound(const PullProfile& target, int num_players) {
  if (target.sum() != num_players) {
    throw std::invalid_argument(
        "expected_commit_bound: target does not sum to num_players");
  }
  double bound = 0.0;
  for (int m = 0; m < target.size(); ++m) {
    const int n = target[m];
    const double p = static_cast<double>(n) / num_players;
    const double fill_prob = binomial_coefficient(num_players, n) *
                             pow_int(p, n) * pow_int(1.0 - p, num_players - n);
    bound += 1.0 / fill_prob;
  }
  return bound;
}

CommitPhaseResult run_commit_phase(const PullProfile& target, long max_rounds,
                                   Rng& rng, bool log_rounds) {
  const int num_players = target.sum();
  const int num_arms = target.size();
  if (num_players < 1) {
    throw std::invalid_argument("run_commit_phase: empty target");
  }

  std::vector<CommitState> states(static_cast<size_t>(num_players),
                                  make_commit_state(target));
  std::vector<int> actions(static_cast<size_t>(num_players));

  CommitPhaseResult result;
  for (long round = 1; round <= max_rounds; ++round) {
    PullProfile pulls;
    pulls.counts.assign(static_cast<size_t>(num_arms), 0);
    for (int k = 0; k < num_players; ++k) {
      const int a = select_action(states[static_cast<size_t>(k)], rng);
      actions[static_cast<size_t>(k)] = a;
      pulls[a] += 1;
    }
    int committed = 0;
    for (int k = 0; k < num_players; ++k) {
      update_commitment(states[static_cast<size_t>(k)],
                        actions[static_cast<size_t>(k)], pulls);
      if (states[static_cast<size_t>(k)].committed_arm) ++committed;
    }
    if (log_rounds) {
      result.round_log.push_back({pulls, committed});
    }
    result.rounds_used = round;
    if (committed == num_players) {
      result.completed = true;
      break;
    }
  }

  result.final_profile.counts.assign(static_cast<size_t>(num_arms), 0);
  for (const CommitState& state : states) {
    if (state.committed_arm) result.final_profile[*state.committed_arm] += 1;
  }
  return result;
}

}  // namespace mabsim
