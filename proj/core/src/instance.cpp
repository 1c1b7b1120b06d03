#include "mabsim/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mabsim {

namespace {
constexpr double kPmfSumTolerance = 1e-9;
}

int PullProfile::sum() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.issues.push_back(msg);
  };

  if (inst.num_arms() < 1) fail("instance must have at least one arm");
  if (inst.num_players < 1) fail("num_players must be >= 1");
  if (inst.horizon < 1) fail("horizon must be >= 1");
  if (inst.d_max < 1) fail("d_max must be >= 1");

  for (int m = 0; m < inst.num_arms(); ++m) {
    const ArmSpec& arm = inst.arms[static_cast<size_t>(m)];
    std::ostringstream tag;
    tag << "arm " << m << ": ";

    if (arm.pmf.empty() || static_cast<int>(arm.pmf.size()) > inst.d_max) {
      fail(tag.str() + "pmf support must lie within {1..d_max}");
    }
    double sum = 0.0;
    bool negative = false;
    for (double p : arm.pmf) {
      if (p < 0.0) negative = true;
      sum += p;
    }
    if (negative) fail(tag.str() + "pmf entries must be >= 0");
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
      std::ostringstream msg;
      msg << tag.str() << "pmf sums to " << sum << ", expected 1";
      fail(msg.str());
    }
    if (arm.reward_mean < 0.0 || arm.reward_mean > 1.0) {
      std::ostringstream msg;
      msg << tag.str() << "reward_mean " << arm.reward_mean
          << " outside [0,1]";
      fail(msg.str());
    }
    if (arm.reward_law.family == RewardLaw::Family::normal &&
        arm.reward_law.sigma < 0.0) {
      fail(tag.str() + "reward sigma must be >= 0");
    }
  }
  return report;
}

std::vector<double> tail_mass(std::span<const double> pmf) {
  std::vector<double> tail(pmf.size() + 1, 0.0);
  for (size_t d = pmf.size(); d-- > 0;) {
    tail[d] = tail[d + 1] + pmf[d];
  }
  return tail;
}

double sample_reward(const ArmSpec& arm, Rng& rng) {
  double x = arm.reward_mean;
  if (arm.reward_law.family == RewardLaw::Family::normal &&
      arm.reward_law.sigma > 0.0) {
    std::normal_distribution<double> dist(arm.reward_mean,
                                          arm.reward_law.sigma);
    x = dist(rng);
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace mabsim
