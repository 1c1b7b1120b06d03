#pragma once

#include <span>
#include <string>
#include <vector>

#include "mabsim/rng.hpp"

namespace mabsim {

// Distribution of the reward attached to a single served request. Samples
// are always clamped into [0,1] so the bounded-support assumption behind the
// concentration bounds keeps holding even for the normal family.
struct RewardLaw {
  enum class Family { point_mass, normal };
  Family family = Family::point_mass;
  double sigma = 0.0;  // spread of the normal family; ignored by point_mass
};

// One request source: how many requests show up per round (pmf over
// {1..d_max}) and what a single served request pays.
struct ArmSpec {
  std::vector<double> pmf;  // pmf[d-1] = P[D = d]
  double reward_mean = 0.0;
  RewardLaw reward_law;
};

struct Instance {
  std::vector<ArmSpec> arms;
  int num_players = 0;  // K
  long horizon = 0;     // T
  int d_max = 0;

  int num_arms() const { return static_cast<int>(arms.size()); }
};

// Player counts per arm. Every profile in the action set sums to K.
struct PullProfile {
  std::vector<int> counts;

  PullProfile() = default;
  explicit PullProfile(std::vector<int> c) : counts(std::move(c)) {}
  PullProfile(std::initializer_list<int> c) : counts(c) {}

  int sum() const;
  int size() const { return static_cast<int>(counts.size()); }
  int& operator[](int m) { return counts[static_cast<size_t>(m)]; }
  int operator[](int m) const { return counts[static_cast<size_t>(m)]; }
  bool operator==(const PullProfile&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;

  explicit operator bool() const { return ok; }
};

// Total function: never throws, lists every violated invariant instead.
ValidationReport validate_instance(const Instance& inst);

// Tail masses of a request pmf: result[d-1] = P[D >= d] for d = 1..d_max+1,
// so the first entry is 1 and the last is 0. Non-increasing by construction.
std::vector<double> tail_mass(std::span<const double> pmf);

// One reward draw from the arm's law, clamped to [0,1]. Point-mass laws
// consume no randomness.
double sample_reward(const ArmSpec& arm, Rng& rng);

}  // namespace mabsim
