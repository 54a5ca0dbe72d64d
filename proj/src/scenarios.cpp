#include "rliff/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rliff/rng.hpp"

namespace rliff {

namespace {

constexpr double kRandomTurnSigma = 0.35;  // radians per step

Position2D perimeter_point(double arc, double w, double h) {
  // Counter-clockwise from (0,0): bottom, right, top, left.
  if (arc < w) return Position2D(arc, 0.0);
  arc -= w;
  if (arc < h) return Position2D(w, arc);
  arc -= h;
  if (arc < w) return Position2D(w - arc, h);
  arc -= w;
  return Position2D(0.0, h - arc);
}

std::vector<Position2D> rectangular_walk(const EnvironmentSpec& env) {
  const double perimeter = 2.0 * (env.width + env.height);
  std::vector<Position2D> out;
  out.reserve(env.n_steps);
  for (int k = 0; k < env.n_steps; ++k) {
    const double arc = std::fmod(k * env.speed, perimeter);
    out.push_back(perimeter_point(arc, env.width, env.height));
  }
  return out;
}

// Shuttle between `from` and `to` at fixed speed, folding at the ends.
std::vector<Position2D> shuttle_walk(const EnvironmentSpec& env,
                                     Position2D from, Position2D to) {
  const double length = distance(from, to);
  std::vector<Position2D> out;
  out.reserve(env.n_steps);
  for (int k = 0; k < env.n_steps; ++k) {
    const double cycle = std::fmod(k * env.speed, 2.0 * length);
    const double along = cycle <= length ? cycle : 2.0 * length - cycle;
    const double f = std::clamp(along / length, 0.0, 1.0);
    out.push_back(Position2D(from.x + f * (to.x - from.x),
                             from.y + f * (to.y - from.y)));
  }
  return out;
}

std::vector<Position2D> random_walk(const EnvironmentSpec& env, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> turn(0.0, 1.0);

  double heading = unit(rng) * 2.0 * std::numbers::pi;
  double x = env.width / 2.0;
  double y = env.height / 2.0;

  std::vector<Position2D> out;
  out.reserve(env.n_steps);
  out.push_back(Position2D(x, y));
  for (int k = 1; k < env.n_steps; ++k) {
    heading += kRandomTurnSigma * turn(rng);
    double nx = x + env.speed * std::cos(heading);
    double ny = y + env.speed * std::sin(heading);
    // Mirror position and heading off any wall the step crosses.
    if (nx < 0.0) { nx = -nx; heading = std::numbers::pi - heading; }
    if (nx > env.width) { nx = 2.0 * env.width - nx; heading = std::numbers::pi - heading; }
    if (ny < 0.0) { ny = -ny; heading = -heading; }
    if (ny > env.height) { ny = 2.0 * env.height - ny; heading = -heading; }
    x = std::clamp(nx, 0.0, env.width);
    y = std::clamp(ny, 0.0, env.height);
    out.push_back(Position2D(x, y));
  }
  return out;
}

}  // namespace

void EnvironmentSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("EnvironmentSpec: room dimensions must be positive");
  }
  if (n_steps < 10) {
    throw std::invalid_argument("EnvironmentSpec: n_steps must be at least 10");
  }
  if (!(speed > 0.0) || speed >= std::min(width, height)) {
    throw std::invalid_argument(
        "EnvironmentSpec: speed must be positive and smaller than the room");
  }
}

EnvironmentSpec environment_preset(const std::string& name) {
  EnvironmentSpec env;
  env.env_id = name;
  if (name == "first") {
    env.width = 5.0;
    env.height = 5.0;
  } else if (name == "second") {
    env.width = 8.0;
    env.height = 6.0;
  } else if (name == "third") {
    env.width = 10.0;
    env.height = 8.0;
  } else {
    throw std::invalid_argument("unknown environment preset: " + name);
  }
  return env;
}

std::vector<Position2D> generate_trajectory(const EnvironmentSpec& env,
                                            Scenario scenario,
                                            std::uint64_t seed) {
  env.validate();
  switch (scenario) {
    case Scenario::rectangular:
      return rectangular_walk(env);
    case Scenario::diagonal_a:
      return shuttle_walk(env, Position2D(0.0, 0.0),
                          Position2D(env.width, env.height));
    case Scenario::diagonal_b:
      return shuttle_walk(env, Position2D(0.0, env.height),
                          Position2D(env.width, 0.0));
    case Scenario::random_walk:
      return random_walk(env, seed);
  }
  throw std::invalid_argument("generate_trajectory: unknown scenario");
}

}  // namespace rliff
