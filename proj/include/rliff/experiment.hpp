#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rliff/baselines.hpp"
#include "rliff/fusion.hpp"
#include "rliff/qlearn.hpp"
#include "rliff/scenarios.hpp"
#include "rliff/trackers.hpp"

namespace rliff {

enum class Method { aoa, rssi, pdr, rl_iff, random, equal };

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::aoa, Method::rssi, Method::pdr,
    Method::rl_iff, Method::random, Method::equal};

const char* method_name(Method m);
Method parse_method(const std::string& name);

// One method's result on one trajectory. Single-path methods carry no
// weights or episode traces; the random baseline re-draws its weights per
// timestamp and so carries no single weight vector either.
struct RunReport {
  std::string env_id;
  Scenario scenario = Scenario::rectangular;
  Method method = Method::aoa;
  double mse = 0.0;
  std::optional<WeightVector> weights;
  std::vector<long long> episode_rewards;
  std::vector<double> episode_mses;
  std::uint64_t seed = 0;
};

// Selector weights: all mass on one path.
WeightVector selector_weights(Method m);

// Ground truth plus the three simulated tracker paths, zipped per step.
// The truth walk is seeded from the noise config's seed.
Trajectory build_trajectory(const EnvironmentSpec& env, Scenario scenario,
                            const TrackerNoiseConfig& noise);

// Evaluates all six methods on an existing trajectory (simulated or
// replayed): the three single paths, the trained fusion, and the random /
// equal weight baselines. test_episodes controls how many evaluation
// passes the baselines average over.
std::vector<RunReport> run_methods(const Trajectory& trajectory,
                                   const LearningConfig& learn,
                                   int test_episodes);

// build_trajectory + run_methods.
std::vector<RunReport> run_experiment(const EnvironmentSpec& env,
                                      Scenario scenario,
                                      const TrackerNoiseConfig& noise,
                                      const LearningConfig& learn,
                                      int test_episodes = 100);

// Mean absolute episode-to-episode change of cumulative reward over the
// final 10% of episodes; 0 for traces shorter than two episodes.
double stability_metric(const std::vector<long long>& episode_rewards);

struct MethodSummary {
  double mean_mse = 0.0;
  double std_mse = 0.0;  // sample standard deviation
  double min_mse = 0.0;
  double max_mse = 0.0;
  double stability = 0.0;  // mean per-run stability metric
};

struct ReliabilityReport {
  std::string env_id;
  Scenario scenario = Scenario::rectangular;
  int repetitions = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::vector<RunReport>> runs;  // runs[rep][method index]
  std::array<MethodSummary, kAllMethods.size()> summary;

  const MethodSummary& summary_for(Method m) const {
    return summary[static_cast<std::size_t>(m)];
  }
};

// Repeats run_experiment with per-repetition seeds (master seed + index)
// and aggregates per-method variance and stability statistics.
ReliabilityReport run_reliability(const EnvironmentSpec& env, Scenario scenario,
                                  const TrackerNoiseConfig& noise,
                                  const LearningConfig& learn, int repetitions,
                                  int test_episodes = 100);

}  // namespace rliff
