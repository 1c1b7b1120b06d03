#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mabsim/instance.hpp"
#include "mabsim/rng.hpp"

namespace mabsim {

// Everything made public at the end of a round, plus each player's private
// reward. An idle player has no reward at all (std::nullopt), which is
// distinct from being served with reward 0.
struct RoundOutcome {
  std::vector<int> arrivals;                          // D_t, size M
  PullProfile pulls;                                  // n_t
  std::vector<std::optional<double>> player_rewards;  // size K
  std::vector<int> served_per_arm;                    // min(arrivals, pulls)
};

// Decides which players at one arm get the available requests. The default
// picks uniformly at random without replacement; alternatives can be injected
// for experiments with other platform policies.
class AllocationPolicy {
 public:
  virtual ~AllocationPolicy() = default;

  // `players` are the indices of the players pulling this arm. Appends the
  // min(players.size(), num_requests) served players to `served_out`.
  virtual void choose_served(std::span<const int> players, int num_requests,
                             Rng& rng, std::vector<int>& served_out) const = 0;
};

class UniformAllocation final : public AllocationPolicy {
 public:
  void choose_served(std::span<const int> players, int num_requests, Rng& rng,
                     std::vector<int>& served_out) const override;
};

const AllocationPolicy& default_allocation();

// IID draw of the request-arrival profile, one count per arm.
std::vector<int> sample_arrivals(const Instance& inst, Rng& rng);

// Runs one platform round: tallies actions into a pull profile, allocates
// min(n, d) requests per arm via the policy, and samples one reward per
// served player. Actions are 0-based arm indices, one per player.
RoundOutcome allocate_and_reward(
    const Instance& inst, const std::vector<int>& arrivals,
    const std::vector<int>& actions, Rng& rng,
    const AllocationPolicy& policy = default_allocation());

}  // namespace mabsim
