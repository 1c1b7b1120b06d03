#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mabsim/instance.hpp"

namespace mabsim {

// Per-player state of the M-round consensus signaling phase. In round r
// (0-based) every player encodes its estimated count for arm r as an arm
// pull; the published pull profile then reveals whether the players'
// estimates disagree on that arm.
struct ConsensusState {
  PullProfile estimate;              // the player's own optimal-profile estimate
  std::vector<int> board_arms;       // arms with detected disagreement
  std::vector<std::pair<int, int>> board_elems;  // (arm, larger count)
  int removed_count = 0;
  int rounds_observed = 0;
};

ConsensusState make_consensus_state(PullProfile estimate);

// The arm a player pulls in round r: its estimated count for arm r reduced
// modulo M. Counts that differ by one map to adjacent arms, or wrap around
// to a spread of M-1, which is how disagreements become visible.
int consensus_action(const PullProfile& estimate, int round, int num_arms);

// Classifies the published profile of round r. A spread of 1 between the
// lowest and highest occupied arm is an adjacent disagreement, a spread
// greater than 1 is a wrapped one; both record (r, larger count) on the
// board. A single occupied arm means everyone agrees on arm r.
void consensus_observe(ConsensusState& state, int round,
                       const PullProfile& published);

// Removes every boarded element the player itself holds, then adds the same
// number of elements back at the highest-indexed boarded arms. All players
// remove a borderline element or not in lockstep, so the result is common.
// Throws std::logic_error if more elements were removed than arms boarded.
PullProfile consensus_finalize(ConsensusState& state);

struct ConsensusPhaseResult {
  std::vector<PullProfile> profiles;  // one per player, all equal on success
  int rounds_used = 0;                // always exactly M
  // False when the inputs could not all have been optimal (some pair of
  // estimates differs by more than one player on an arm); the outcome is
  // then unspecified but still well-formed enough to log.
  bool inputs_consistent = true;
};

// Runs the full phase for players holding the given estimates. Requires
// M >= 3 and every estimate summing to the same player count.
ConsensusPhaseResult run_consensus_phase(std::span<const PullProfile> estimates);

}  // namespace mabsim
