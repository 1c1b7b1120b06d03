#include "mabsim/offline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mabsim {

ArmModel ArmModel::from_instance(const Instance& inst) {
  ArmModel model;
  model.mu.reserve(inst.arms.size());
  model.tail.reserve(inst.arms.size());
  for (const ArmSpec& arm : inst.arms) {
    model.mu.push_back(arm.reward_mean);
    auto tail = tail_mass(arm.pmf);
    tail.pop_back();  // drop the trailing zero; tail_at() is zero beyond
    model.tail.push_back(std::move(tail));
  }
  return model;
}

double expected_utility_arm(int n, const ArmSpec& arm) {
  if (n <= 0) return 0.0;
  double expected_served = 0.0;
  for (size_t i = 0; i < arm.pmf.size(); ++i) {
    const int d = static_cast<int>(i) + 1;
    expected_served += arm.pmf[i] * std::min(n, d);
  }
  return arm.reward_mean * expected_served;
}

double expected_utility_profile(const PullProfile& profile,
                                const Instance& inst) {
  if (profile.size() != inst.num_arms()) {
    throw std::invalid_argument(
        "expected_utility_profile: profile size does not match arm count");
  }
  if (profile.sum() != inst.num_players) {
    throw std::invalid_argument(
        "expected_utility_profile: profile does not sum to num_players");
  }
  double total = 0.0;
  for (int m = 0; m < inst.num_arms(); ++m) {
    total += expected_utility_arm(profile[m], inst.arms[static_cast<size_t>(m)]);
  }
  return total;
}

std::vector<std::vector<double>> utility_table(const Instance& inst,
                                               int max_count) {
  std::vector<std::vector<double>> table(
      static_cast<size_t>(inst.num_arms()));
  for (int m = 0; m < inst.num_arms(); ++m) {
    auto& row = table[static_cast<size_t>(m)];
    row.resize(static_cast<size_t>(max_count) + 1);
    for (int n = 0; n <= max_count; ++n) {
      row[static_cast<size_t>(n)] =
          expected_utility_arm(n, inst.arms[static_cast<size_t>(m)]);
    }
  }
  return table;
}

double marginal_gain(int m, int n, const Instance& inst) {
  const ArmSpec& arm = inst.arms[static_cast<size_t>(m)];
  // mu * P[D >= n+1], the tail past the players already there.
  double tail = 0.0;
  for (size_t i = static_cast<size_t>(n); i < arm.pmf.size(); ++i) {
    tail += arm.pmf[i];
  }
  return arm.reward_mean * tail;
}

GainTable build_gain_table(const Instance& inst) {
  return build_gain_table(ArmModel::from_instance(inst), inst.num_players);
}

GainTable build_gain_table(const ArmModel& model, int num_players) {
  GainTable table;
  table.num_arms = model.num_arms();
  table.num_players = num_players;
  table.gains.resize(static_cast<size_t>(table.num_arms) * num_players);
  for (int m = 0; m < table.num_arms; ++m) {
    for (int n = 0; n < num_players; ++n) {
      table.gains[static_cast<size_t>(m) * num_players + n] = model.gain(m, n);
    }
  }
  return table;
}

PullProfile greedy_profile(const ArmModel& model, int num_players,
                           const TieRule& tie_rule, GreedyStats* stats) {
  const int num_arms = model.num_arms();
  if (num_arms < 1) throw std::invalid_argument("greedy_profile: no arms");
  std::vector<int> order;
  if (tie_rule.priority.empty()) {
    order.resize(static_cast<size_t>(num_arms));
    std::iota(order.begin(), order.end(), 0);
  } else {
    if (static_cast<int>(tie_rule.priority.size()) != num_arms) {
      throw std::invalid_argument("greedy_profile: tie rule arity mismatch");
    }
    order = tie_rule.priority;
  }

  PullProfile profile;
  profile.counts.assign(static_cast<size_t>(num_arms), 0);
  std::vector<double> next_gain(static_cast<size_t>(num_arms));
  for (int m = 0; m < num_arms; ++m) {
    next_gain[static_cast<size_t>(m)] = model.gain(m, 0);
  }

  for (int step = 0; step < num_players; ++step) {
    int best = order[0];
    double best_gain = next_gain[static_cast<size_t>(best)];
    // Scanning in tie-rule order with a strict comparison keeps the
    // earliest arm of any tie.
    for (int i = 1; i < num_arms; ++i) {
      const int m = order[static_cast<size_t>(i)];
      if (next_gain[static_cast<size_t>(m)] > best_gain) {
        best = m;
        best_gain = next_gain[static_cast<size_t>(m)];
      }
    }
    if (stats) {
      stats->selection_steps += 1;
      stats->candidates_scanned += num_arms;
      stats->gains_consumed.push_back(best_gain);
    }
    profile[best] += 1;
    next_gain[static_cast<size_t>(best)] = model.gain(best, profile[best]);
  }
  return profile;
}

namespace {

double profile_space_size(int num_arms, int num_players) {
  // (M+K-1 choose M-1), as a double so oversized spaces just saturate.
  double result = 1.0;
  for (int i = 1; i <= num_arms - 1; ++i) {
    result *= static_cast<double>(num_players + i) / i;
    if (result > 1e18) return result;
  }
  return result;
}

void enumerate_profiles(const Instance& inst,
                        const std::vector<std::vector<double>>& utilities,
                        std::vector<int>& partial, int arm, int remaining,
                        double value_so_far, BruteForceResult& out) {
  const int num_arms = inst.num_arms();
  if (arm == num_arms - 1) {
    partial[static_cast<size_t>(arm)] = remaining;
    const double value =
        value_so_far +
        utilities[static_cast<size_t>(arm)][static_cast<size_t>(remaining)];
    constexpr double kTol = 1e-12;
    if (value > out.optimal_utility + kTol) {
      out.optimal_utility = value;
      out.optimal_profiles.clear();
      out.optimal_profiles.emplace_back(partial);
    } else if (value >= out.optimal_utility - kTol) {
      out.optimal_utility = std::max(out.optimal_utility, value);
      out.optimal_profiles.emplace_back(partial);
    }
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    partial[static_cast<size_t>(arm)] = n;
    enumerate_profiles(
        inst, utilities, partial, arm + 1, remaining - n,
        value_so_far + utilities[static_cast<size_t>(arm)][static_cast<size_t>(n)],
        out);
  }
}

}  // namespace

BruteForceResult brute_force_optimal(const Instance& inst) {
  if (profile_space_size(inst.num_arms(), inst.num_players) > 1e6) {
    throw std::invalid_argument(
        "brute_force_optimal: profile space exceeds 10^6, refusing");
  }
  const auto utilities = utility_table(inst, inst.num_players);

  BruteForceResult result;
  result.optimal_utility = -std::numeric_limits<double>::infinity();
  std::vector<int> partial(static_cast<size_t>(inst.num_arms()), 0);
  enumerate_profiles(inst, utilities, partial, 0, inst.num_players, 0.0,
                     result);

  // Re-collect at the final maximum: profiles kept early against a lower
  // running maximum may no longer qualify.
  constexpr double kTol = 1e-12;
  std::vector<PullProfile> kept;
  for (auto& p : result.optimal_profiles) {
    double v = 0.0;
    for (int m = 0; m < inst.num_arms(); ++m) {
      v += utilities[static_cast<size_t>(m)][static_cast<size_t>(p[m])];
    }
    if (v >= result.optimal_utility - kTol) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(),
            [](const PullProfile& a, const PullProfile& b) {
              return a.counts < b.counts;
            });
  result.optimal_profiles = std::move(kept);
  return result;
}

RankedGains ranked_gains(const GainTable& table, int num_players,
                         double tie_tol) {
  const long total = static_cast<long>(table.gains.size());
  if (num_players < 1 || num_players > total) {
    throw std::invalid_argument("ranked_gains: rank position out of range");
  }
  RankedGains ranked;
  ranked.sorted = table.gains;
  std::sort(ranked.sorted.begin(), ranked.sorted.end(), std::greater<>());

  const double kth = ranked.sorted[static_cast<size_t>(num_players - 1)];
  ranked.kth_value = kth;

  auto equal = [tie_tol, kth](double x) {
    if (tie_tol <= 0.0) return x == kth;
    return std::abs(x - kth) <= tie_tol * std::max(std::abs(kth), 1.0);
  };

  for (long j = num_players; j < total; ++j) {
    if (equal(ranked.sorted[static_cast<size_t>(j)])) ++ranked.ell_minus;
  }
  for (long j = 0; j < num_players - 1; ++j) {
    if (equal(ranked.sorted[static_cast<size_t>(j)])) ++ranked.ell_plus;
  }

  // Gap below: to the first element strictly smaller than the tie block, or
  // to zero when the block runs to the end. Gap above: to the first element
  // strictly larger, or unbounded when the block starts at rank one.
  const long below_idx = num_players + ranked.ell_minus;  // 0-based
  const double below =
      below_idx < total ? kth - ranked.sorted[static_cast<size_t>(below_idx)]
                        : kth;
  const long above_idx = num_players - ranked.ell_plus - 2;  // 0-based
  const double above =
      above_idx >= 0
          ? ranked.sorted[static_cast<size_t>(above_idx)] - kth
          : std::numeric_limits<double>::infinity();
  ranked.gamma = std::min(below, above);

  for (int m = 0; m < table.num_arms; ++m) {
    for (int n = 0; n < table.num_players; ++n) {
      if (equal(table.at(m, n))) ranked.borderline.emplace_back(m, n + 1);
    }
  }
  return ranked;
}

}  // namespace mabsim
