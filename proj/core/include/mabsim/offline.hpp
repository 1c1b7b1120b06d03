#pragma once

#include <utility>
#include <vector>

#include "mabsim/instance.hpp"

namespace mabsim {

// The pair (mu, tail matrix) every profile computation is driven by. Built
// either from the true instance or from a player's estimates, so the greedy
// optimizer runs unchanged on both.
struct ArmModel {
  std::vector<double> mu;                 // per-arm reward mean
  std::vector<std::vector<double>> tail;  // tail[m][d-1] = P[D_m >= d]

  int num_arms() const { return static_cast<int>(mu.size()); }

  // P[D_m >= d]; zero beyond the stored support.
  double tail_at(int m, int d) const {
    const auto& row = tail[static_cast<size_t>(m)];
    if (d < 1) return 1.0;
    return d <= static_cast<int>(row.size()) ? row[static_cast<size_t>(d - 1)]
                                             : 0.0;
  }

  // Marginal gain of adding an (n+1)-th player to arm m: mu_m * P[D_m >= n+1].
  double gain(int m, int n) const {
    return mu[static_cast<size_t>(m)] * tail_at(m, n + 1);
  }

  static ArmModel from_instance(const Instance& inst);
};

// Expected reward collected by n players at one arm: mu * E[min(n, D)].
double expected_utility_arm(int n, const ArmSpec& arm);

// Sum of per-arm expected utilities. Rejects profiles not summing to K.
double expected_utility_profile(const PullProfile& profile,
                                const Instance& inst);

// Per-arm utility lookup table: table[m][n] = expected_utility_arm(n, arm m)
// for n = 0..max_count. Bit-identical to calling expected_utility_arm.
std::vector<std::vector<double>> utility_table(const Instance& inst,
                                               int max_count);

double marginal_gain(int m, int n, const Instance& inst);

// All M*K marginal gains; entry (m, n) is the gain of the (n+1)-th player.
struct GainTable {
  int num_arms = 0;
  int num_players = 0;
  std::vector<double> gains;  // row-major M x K

  double at(int m, int n) const {
    return gains[static_cast<size_t>(m) * num_players + n];
  }
};

GainTable build_gain_table(const Instance& inst);
GainTable build_gain_table(const ArmModel& model, int num_players);

// Deterministic total order used to break gain ties. All players must use
// the same rule or they will disagree on which optimal profile greedy finds.
// An empty priority list means smallest arm index first.
struct TieRule {
  std::vector<int> priority;
};

struct GreedyStats {
  long selection_steps = 0;
  long candidates_scanned = 0;
  std::vector<double> gains_consumed;
};

// Adds K players one at a time, each to the arm whose next marginal gain is
// currently largest. Returns a maximizer of the expected profile utility.
PullProfile greedy_profile(const ArmModel& model, int num_players,
                           const TieRule& tie_rule = {},
                           GreedyStats* stats = nullptr);

struct BruteForceResult {
  double optimal_utility = 0.0;
  std::vector<PullProfile> optimal_profiles;  // lexicographically sorted
};

// Exact enumeration over all (M+K-1 choose M-1) profiles. Test oracle;
// refuses instances with more than 10^6 profiles.
BruteForceResult brute_force_optimal(const Instance& inst);

// The ranking of all marginal gains around position K, the tie widths on
// both sides, the gap gamma, and the borderline elements. A borderline
// element is identified as (arm, count) with count in 1..K: the count-th
// player at that arm has gain equal to the K-th largest gain.
struct RankedGains {
  std::vector<double> sorted;  // non-increasing, size M*K
  double kth_value = 0.0;
  int ell_minus = 0;  // ties below rank K
  int ell_plus = 0;   // ties above rank K
  double gamma = 0.0;
  std::vector<std::pair<int, int>> borderline;  // (arm, count)
};

// tie_tol > 0 treats gains within a relative tolerance as equal; the default
// exact comparison is right when all gains were computed from one expression.
RankedGains ranked_gains(const GainTable& table, int num_players,
                         double tie_tol = 0.0);

}  // namespace mabsim
