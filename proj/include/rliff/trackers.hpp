#pragma once

#include <cstdint>
#include <vector>

#include "rliff/fusion.hpp"

namespace rliff {

struct TrackerNoiseConfig {
  double sigma_rssi = 0.4;          // raw RSSI position noise std (m)
  double sigma_aoa = 0.15;          // AoA position noise std (m)
  double aoa_jump_prob = 0.02;      // per-step probability of a bias jump
  double aoa_jump_scale = 0.10;     // std of each re-drawn bias component (m)
  double pdr_step_noise = 0.05;     // multiplicative step-length error std
  double pdr_heading_noise = 0.035; // per-step heading error std (rad, ~2 deg)
  int pf_particles = 200;
  std::uint64_t seed = 1;

  void validate() const;
};

// RSSI path: i.i.d. Gaussian position noise smoothed by a constant-velocity
// Kalman filter and a bootstrap particle filter; the returned path is the
// per-step average of the two filters.
std::vector<Position2D> simulate_rssi_path(const std::vector<Position2D>& truth,
                                           const TrackerNoiseConfig& cfg);

// The individual filter outputs, for inspection.
struct RssiFilterOutputs {
  std::vector<Position2D> measurements;
  std::vector<Position2D> kalman;
  std::vector<Position2D> particle;
  std::vector<Position2D> combined;
};
RssiFilterOutputs simulate_rssi_filters(const std::vector<Position2D>& truth,
                                        const TrackerNoiseConfig& cfg);

// PDR path: dead reckoning from the true start point. Each true step is
// perturbed in length (multiplicative) and heading (additive) before being
// integrated, so the error accumulates with distance walked.
std::vector<Position2D> simulate_pdr_path(const std::vector<Position2D>& truth,
                                          const TrackerNoiseConfig& cfg);

// AoA path: low Gaussian noise plus a piecewise-constant bias that
// re-randomizes with probability aoa_jump_prob each step.
std::vector<Position2D> simulate_aoa_path(const std::vector<Position2D>& truth,
                                          const TrackerNoiseConfig& cfg);

}  // namespace rliff
