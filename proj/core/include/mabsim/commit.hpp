#pragma once

#include <optional>
#include <vector>

#include "mabsim/instance.hpp"
#include "mabsim/rng.hpp"

namespace mabsim {

// Per-player state of the distributed commit protocol. Commitment is
// irreversible; the committed-count and deficit vectors are derived from the
// public pull profiles only, so all players tracking the same target hold
// identical copies of them.
struct CommitState {
  std::optional<int> committed_arm;
  std::vector<int> committed_counts;  // per arm, never exceeds the target
  std::vector<int> deficits;          // target - committed_counts
  int total_deficit = 0;
  PullProfile target;
  long start_round = 0;
};

CommitState make_commit_state(PullProfile target, long start_round = 0);

// Applies one round of public information: commits to the player's own arm
// if it was not oversubscribed, and refreshes the committed-count vector
// from the published profile.
void update_commitment(CommitState& state, int own_action,
                       const PullProfile& published);

// Committed players repeat their arm; uncommitted players draw an arm with
// probability proportional to how many players it still lacks. Throws
// std::logic_error if an uncommitted player sees zero total deficit, which
// cannot happen when all players track the same target.
int select_action(const CommitState& state, Rng& rng);

// Closed-form upper bound on the expected number of rounds until every
// player has committed: sum over arms of the inverse binomial probability
// that the arm fills in one round from a fresh start (0^0 treated as 1).
double expected_commit_bound(const PullProfile& target, int num_players);

struct CommitRoundRecord {
  PullProfile pulls;
  int committed_players = 0;
};

struct CommitPhaseResult {
  long rounds_used = 0;
  PullProfile final_profile;  // tally of committed arms
  bool completed = false;
  std::vector<CommitRoundRecord> round_log;
};

// Runs the protocol for players sharing one target until everyone commits or
// max_rounds is exhausted. The physical allocation of requests does not
// influence the protocol, so none is simulated here.
CommitPhaseResult run_commit_phase(const PullProfile& target, long max_rounds,
                                   Rng& rng, bool log_rounds = false);

}  // namespace mabsim
