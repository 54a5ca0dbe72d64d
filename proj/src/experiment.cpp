#include "rliff/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rliff {

namespace {

constexpr std::uint64_t kTruthStream = 0;
constexpr std::uint64_t kRandomBaselineStream = 7;

// Walks the trajectory once with per-step weights from `draw`, returning
// the pass MSE and the cumulative reward over steps 1..n-1 (the same steps
// the learner is rewarded on).
template <typename DrawWeights>
std::pair<double, long long> evaluation_pass(const Trajectory& traj, DrawWeights&& draw) {
  double sum_sq = 0.0;
  long long cum_reward = 0;
  for (std::size_t k = 0; k < traj.records.size(); ++k) {
    const double err = tracking_error(traj.records[k], draw());
    sum_sq += err * err;
    if (k >= 1) cum_reward += reward(err);
  }
  return {sum_sq / static_cast<double>(traj.records.size()), cum_reward};
}

RunReport baseline_report(const Trajectory& traj, Method method,
                          const LearningConfig& learn, int test_episodes) {
  RunReport rep;
  rep.env_id = traj.env_id;
  rep.scenario = traj.scenario;
  rep.method = method;
  rep.seed = learn.seed;
  rep.episode_rewards.reserve(test_episodes);
  rep.episode_mses.reserve(test_episodes);

  Rng rng(derive_seed(learn.seed, kRandomBaselineStream));
  double mse_sum = 0.0;
  for (int e = 0; e < test_episodes; ++e) {
    auto [mse, cum_reward] =
        method == Method::random
            ? evaluation_pass(traj, [&] { return random_weights(rng); })
            : evaluation_pass(traj, [] { return equal_weights(); });
    rep.episode_rewards.push_back(cum_reward);
    rep.episode_mses.push_back(mse);
    mse_sum += mse;
  }
  rep.mse = mse_sum / test_episodes;
  if (method == Method::equal) rep.weights = equal_weights();
  return rep;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v, double m) {
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::aoa: return "aoa";
    case Method::rssi: return "rssi";
    case Method::pdr: return "pdr";
    case Method::rl_iff: return "rl_iff";
    case Method::random: return "random";
    case Method::equal: return "equal";
  }
  throw std::logic_error("method_name: invalid enum value");
}

Method parse_method(const std::string& name) {
  for (Method m : kAllMethods) {
    if (name == method_name(m)) return m;
  }
  throw std::invalid_argument("unknown method label: " + name);
}

WeightVector selector_weights(Method m) {
  switch (m) {
    case Method::rssi: return WeightVector(1.0, 0.0);
    case Method::aoa: return WeightVector(0.0, 1.0);
    case Method::pdr: return WeightVector(0.0, 0.0);  // w_pdr derives to 1
    default:
      throw std::invalid_argument("selector_weights: not a single-path method");
  }
}

Trajectory build_trajectory(const EnvironmentSpec& env, Scenario scenario,
                            const TrackerNoiseConfig& noise) {
  const std::vector<Position2D> truth =
      generate_trajectory(env, scenario, derive_seed(noise.seed, kTruthStream));
  const std::vector<Position2D> rssi = simulate_rssi_path(truth, noise);
  const std::vector<Position2D> pdr = simulate_pdr_path(truth, noise);
  const std::vector<Position2D> aoa = simulate_aoa_path(truth, noise);

  Trajectory traj;
  traj.env_id = env.env_id;
  traj.scenario = scenario;
  traj.records.reserve(truth.size());
  for (std::size_t k = 0; k < truth.size(); ++k) {
    traj.records.push_back(SyncedEstimates{static_cast<std::int64_t>(k),
                                           truth[k], rssi[k], pdr[k], aoa[k]});
  }
  return traj;
}

std::vector<RunReport> run_methods(const Trajectory& trajectory,
                                   const LearningConfig& learn,
                                   int test_episodes) {
  trajectory.validate();
  learn.validate();
  if (test_episodes < 1) {
    throw std::invalid_argument("run_methods: test_episodes must be positive");
  }

  std::vector<RunReport> reports;
  reports.reserve(kAllMethods.size());

  for (Method m : {Method::aoa, Method::rssi, Method::pdr}) {
    RunReport rep;
    rep.env_id = trajectory.env_id;
    rep.scenario = trajectory.scenario;
    rep.method = m;
    rep.mse = evaluate(trajectory, selector_weights(m));
    rep.seed = learn.seed;
    reports.push_back(std::move(rep));
  }

  {
    TrainResult trained = train(trajectory, learn);
    RunReport rep;
    rep.env_id = trajectory.env_id;
    rep.scenario = trajectory.scenario;
    rep.method = Method::rl_iff;
    rep.mse = trained.best_mse;
    rep.weights = trained.weights;
    rep.episode_rewards = std::move(trained.episode_rewards);
    rep.episode_mses = std::move(trained.episode_mses);
    rep.seed = learn.seed;
    reports.push_back(std::move(rep));
  }

  reports.push_back(baseline_report(trajectory, Method::random, learn, test_episodes));
  reports.push_back(baseline_report(trajectory, Method::equal, learn, test_episodes));
  return reports;
}

std::vector<RunReport> run_experiment(const EnvironmentSpec& env,
                                      Scenario scenario,
                                      const TrackerNoiseConfig& noise,
                                      const LearningConfig& learn,
                                      int test_episodes) {
  const Trajectory traj = build_trajectory(env, scenario, noise);
  return run_methods(traj, learn, test_episodes);
}

double stability_metric(const std::vector<long long>& episode_rewards) {
  if (episode_rewards.size() < 2) return 0.0;
  const std::size_t tail =
      std::max<std::size_t>(2, (episode_rewards.size() + 9) / 10);
  const std::size_t start = episode_rewards.size() - tail;
  double sum = 0.0;
  for (std::size_t i = start + 1; i < episode_rewards.size(); ++i) {
    sum += std::abs(static_cast<double>(episode_rewards[i]) -
                    static_cast<double>(episode_rewards[i - 1]));
  }
  return sum / static_cast<double>(tail - 1);
}

ReliabilityReport run_reliability(const EnvironmentSpec& env, Scenario scenario,
                                  const TrackerNoiseConfig& noise,
                                  const LearningConfig& learn, int repetitions,
                                  int test_episodes) {
  if (repetitions < 2) {
    throw std::invalid_argument("run_reliability: repetitions must be at least 2");
  }

  ReliabilityReport report;
  report.env_id = env.env_id;
  report.scenario = scenario;
  report.repetitions = repetitions;
  report.master_seed = learn.seed;
  report.runs.reserve(repetitions);

  for (int rep = 0; rep < repetitions; ++rep) {
    TrackerNoiseConfig noise_i = noise;
    LearningConfig learn_i = learn;
    noise_i.seed = noise.seed + static_cast<std::uint64_t>(rep);
    learn_i.seed = learn.seed + static_cast<std::uint64_t>(rep);
    report.runs.push_back(run_experiment(env, scenario, noise_i, learn_i, test_episodes));
  }

  for (std::size_t mi = 0; mi < kAllMethods.size(); ++mi) {
    std::vector<double> mses;
    double stability_sum = 0.0;
    mses.reserve(repetitions);
    for (const std::vector<RunReport>& run : report.runs) {
      mses.push_back(run[mi].mse);
      stability_sum += stability_metric(run[mi].episode_rewards);
    }
    MethodSummary& s = report.summary[mi];
    s.mean_mse = mean(mses);
    s.std_mse = sample_std(mses, s.mean_mse);
    s.min_mse = *std::min_element(mses.begin(), mses.end());
    s.max_mse = *std::max_element(mses.begin(), mses.end());
    s.stability = stability_sum / repetitions;
  }
  return report;
}

}  // namespace rliff
