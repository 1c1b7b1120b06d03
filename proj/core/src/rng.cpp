#include "mabsim/rng.hpp"

#include <stdexcept>

namespace mabsim {

int sample_weighted(std::span<const int> weights, Rng& rng) {
  long total = 0;
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("sample_weighted: negative weight");
    total += w;
  }
  if (total <= 0) {
    throw std::invalid_argument("sample_weighted: no positive weight");
  }
  std::uniform_int_distribution<long> dist(0, total - 1);
  long u = dist(rng);
  for (size_t i = 0; i < weights.size(); ++i) {
    u -= weights[i];
    if (u < 0) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size() - 1);  // unreachable
}

int sample_weighted(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw std::invalid_argument("sample_weighted: negative weight");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("sample_weighted: no positive weight");
  }
  std::uniform_real_distribution<double> dist(0.0, total);
  double u = dist(rng);
  int last_positive = -1;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) last_positive = static_cast<int>(i);
    u -= weights[i];
    if (u < 0.0 && weights[i] > 0.0) return static_cast<int>(i);
  }
  // Rounding pushed u past the end; the draw belongs to the last positive bin.
  return last_positive;
}

}  // namespace mabsim
