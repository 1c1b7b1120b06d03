#include "mabsim/environment.hpp"

#include <algorithm>
#include <stdexcept>

namespace mabsim {

void UniformAllocation::choose_served(std::span<const int> players,
                                      int num_requests, Rng& rng,
                                      std::vector<int>& served_out) const {
  const int n = static_cast<int>(players.size());
  const int served = std::min(n, num_requests);
  if (served == n) {
    served_out.insert(served_out.end(), players.begin(), players.end());
    return;
  }
  // Partial Fisher-Yates: the first `served` slots end up as a uniform
  // sample without replacement.
  std::vector<int> pool(players.begin(), players.end());
  for (int i = 0; i < served; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[static_cast<size_t>(i)],
              pool[static_cast<size_t>(pick(rng))]);
    served_out.push_back(pool[static_cast<size_t>(i)]);
  }
}

const AllocationPolicy& default_allocation() {
  static const UniformAllocation policy;
  return policy;
}

std::vector<int> sample_arrivals(const Instance& inst, Rng& rng) {
  std::vector<int> arrivals(static_cast<size_t>(inst.num_arms()));
  for (int m = 0; m < inst.num_arms(); ++m) {
    const auto& pmf = inst.arms[static_cast<size_t>(m)].pmf;
    arrivals[static_cast<size_t>(m)] = sample_weighted(pmf, rng) + 1;
  }
  return arrivals;
}

RoundOutcome allocate_and_reward(const Instance& inst,
                                 const std::vector<int>& arrivals,
                                 const std::vector<int>& actions, Rng& rng,
                                 const AllocationPolicy& policy) {
  const int num_arms = inst.num_arms();
  const int num_players = static_cast<int>(actions.size());

  RoundOutcome outcome;
  outcome.arrivals = arrivals;
  outcome.pulls.counts.assign(static_cast<size_t>(num_arms), 0);
  outcome.player_rewards.assign(static_cast<size_t>(num_players),
                                std::nullopt);
  outcome.served_per_arm.assign(static_cast<size_t>(num_arms), 0);

  std::vector<std::vector<int>> players_at(static_cast<size_t>(num_arms));
  for (int k = 0; k < num_players; ++k) {
    const int a = actions[static_cast<size_t>(k)];
    if (a < 0 || a >= num_arms) {
      throw std::invalid_argument("allocate_and_reward: action out of range");
    }
    outcome.pulls[a] += 1;
    players_at[static_cast<size_t>(a)].push_back(k);
  }

  std::vector<int> served;
  for (int m = 0; m < num_arms; ++m) {
    const auto& here = players_at[static_cast<size_t>(m)];
    if (here.empty()) continue;
    served.clear();
    policy.choose_served(here, arrivals[static_cast<size_t>(m)], rng, served);
    outcome.served_per_arm[static_cast<size_t>(m)] =
        static_cast<int>(served.size());
    for (int k : served) {
      outcome.player_rewards[static_cast<size_t>(k)] =
          sample_reward(inst.arms[static_cast<size_t>(m)], rng);
    }
  }
  return outcome;
}

}  // namespace mabsim
