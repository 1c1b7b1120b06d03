#include "mabsim/consensus.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mabsim {

ConsensusState make_consensus_state(PullProfile estimate) {
  ConsensusState state;
  state.estimate = std::move(estimate);
  return state;
}

int consensus_action(const PullProfile& estimate, int round, int num_arms) {
  if (round < 0 || round >= num_arms) {
    throw std::invalid_argument("consensus_action: round out of range");
  }
  return estimate[round] % num_arms;
}

void consensus_observe(ConsensusState& state, int round,
                       const PullProfile& published) {
  const int num_arms = published.size();
  int lo = -1;
  int hi = -1;
  for (int m = 0; m < num_arms; ++m) {
    if (published[m] > 0) {
      if (lo < 0) lo = m;
      hi = m;
    }
  }
  state.rounds_observed += 1;
  const int spread = hi - lo;
  if (spread == 0) return;

  const int own_arm = consensus_action(state.estimate, round, num_arms);
  const int own_count = state.estimate[round];
  int recorded;
  if (spread == 1) {
    // Adjacent encodings: the lower occupied arm encodes the smaller count.
    recorded = own_count + (own_arm == lo ? 1 : 0);
  } else {
    // Wrapped encodings: the highest occupied arm encodes the smaller count
    // (its successor wrapped to the bottom).
    recorded = own_count + (own_arm == hi ? 1 : 0);
  }
  state.board_arms.push_back(round);
  state.board_elems.emplace_back(round, recorded);
}

PullProfile consensus_finalize(ConsensusState& state) {
  PullProfile profile = state.estimate;
  for (int m = 0; m < profile.size(); ++m) {
    const std::pair<int, int> element{m, profile[m]};
    if (std::find(state.board_elems.begin(), state.board_elems.end(),
                  element) != state.board_elems.end()) {
      profile[m] -= 1;
      state.removed_count += 1;
    }
  }
  if (state.removed_count > static_cast<int>(state.board_arms.size())) {
    throw std::logic_error(
        "consensus_finalize: removed more elements than boarded arms");
  }
  std::vector<int> board = state.board_arms;
  std::sort(board.begin(), board.end(), std::greater<>());
  for (int i = 0; i < state.removed_count; ++i) {
    profile[board[static_cast<size_t>(i)]] += 1;
  }
  state.estimate = profile;
  return profile;
}

ConsensusPhaseResult run_consensus_phase(
    std::span<const PullProfile> estimates) {
  if (estimates.empty()) {
    throw std::invalid_argument("run_consensus_phase: no players");
  }
  const int num_arms = estimates[0].size();
  if (num_arms < 3) {
    throw std::invalid_argument(
        "run_consensus_phase: requires at least three arms");
  }
  const int num_players = static_cast<int>(estimates.size());
  const int total = estimates[0].sum();
  for (const PullProfile& est : estimates) {
    if (est.size() != num_arms || est.sum() != total) {
      throw std::invalid_argument(
          "run_consensus_phase: estimates must be profiles over the same "
          "instance");
    }
  }

  ConsensusPhaseResult result;
  // Jointly optimal estimates never disagree by more than one player on an
  // arm; flag inputs that prove the hypothesis violated.
  for (int m = 0; m < num_arms; ++m) {
    int lo = estimates[0][m];
    int hi = lo;
    for (const PullProfile& est : estimates) {
      lo = std::min(lo, est[m]);
      hi = std::max(hi, est[m]);
    }
    if (hi - lo > 1) result.inputs_consistent = false;
  }

  std::vector<ConsensusState> states;
  states.reserve(static_cast<size_t>(num_players));
  for (const PullProfile& est : estimates) {
    states.push_back(make_consensus_state(est));
  }

  for (int round = 0; round < num_arms; ++round) {
    PullProfile pulls;
    pulls.counts.assign(static_cast<size_t>(num_arms), 0);
    for (const ConsensusState& state : states) {
      pulls[consensus_action(state.estimate, round, num_arms)] += 1;
    }
    for (ConsensusState& state : states) {
      consensus_observe(state, round, pulls);
    }
  }
  result.rounds_used = num_arms;

  result.profiles.reserve(states.size());
  for (ConsensusState& state : states) {
    result.profiles.push_back(consensus_finalize(state));
  }
  return result;
}

}  // namespace mabsim
