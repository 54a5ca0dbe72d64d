#include "rliff/baselines.hpp"

#include <random>

namespace rliff {

WeightVector random_weights(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double w_rssi = unit(rng);
  const double w_aoa = unit(rng);
  return WeightVector(w_rssi, w_aoa);
}

WeightVector equal_weights() { return WeightVector(1.0 / 3.0, 1.0 / 3.0); }

}  // namespace rliff
