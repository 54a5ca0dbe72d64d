#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rliff/fusion.hpp"

namespace rliff {

struct EnvironmentSpec {
  std::string env_id = "second";
  double width = 8.0;   // meters
  double height = 6.0;  // meters
  double speed = 0.25;  // meters per step
  int n_steps = 800;

  void validate() const;
};

// Room presets: "first" 5x5 m, "second" 8x6 m, "third" 10x8 m.
EnvironmentSpec environment_preset(const std::string& name);

// Ground-truth walk through the room. Rectangular loops the perimeter,
// the diagonals shuttle corner to corner, and the random scenario is a
// smooth-turning walk with reflective walls. All points stay inside
// [0,width] x [0,height]; consecutive points are one speed step apart
// except where the path folds at a corner or wall.
std::vector<Position2D> generate_trajectory(const EnvironmentSpec& env,
                                            Scenario scenario,
                                            std::uint64_t seed);

}  // namespace rliff
