#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rliff/fusion.hpp"
#include "rliff/rng.hpp"

namespace rliff {

// Error states 0..100: one per hundredth of a meter, plus a saturation
// state for errors of a meter or more.
inline constexpr int kNumStates = 101;
inline constexpr int kNumActions = 9;

// Visit count at which the effective learning rate has halved.
inline constexpr double kAlphaVisitScale = 200.0;

struct LearningConfig {
  double gamma = 0.9;
  double alpha = 0.1;
  double epsilon_start = 1.0;
  double epsilon_end = 0.0;
  double epsilon_decay = 0.999;  // per-episode multiplicative decay
  double step_pct = 0.02;        // multiplicative weight step
  int episodes = 20000;
  std::uint64_t seed = 1;

  void validate() const;  // throws on out-of-range parameters

  // Exploration probability for a given episode index.
  double epsilon_at(int episode) const;
};

// One of the nine weight-adjustment actions: the cross product of
// {increase, decrease, hold} applied to (w_rssi, w_aoa).
enum class WeightOp { increase, decrease, hold };

class ActionId {
 public:
  explicit ActionId(int id);

  int id() const { return id_; }
  WeightOp rssi_op() const;
  WeightOp aoa_op() const;

  friend bool operator==(ActionId a, ActionId b) { return a.id_ == b.id_; }

 private:
  int id_;  // 1..9
};

class QTable {
 public:
  QTable() : values_{}, visits_{} {}

  double value(int state, ActionId a) const { return values_[index(state, a)]; }
  std::uint64_t visits(int state, ActionId a) const { return visits_[index(state, a)]; }

  double max_value(int state) const;
  ActionId greedy_action(int state) const;  // ties break to the lowest id

  // Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a))
  void update(int state, ActionId a, double reward, int next_state,
              double alpha, double gamma);

  void set(int state, ActionId a, double value) { values_[index(state, a)] = value; }

 private:
  static std::size_t index(int state, ActionId a);

  std::array<double, kNumStates * kNumActions> values_;
  std::array<std::uint64_t, kNumStates * kNumActions> visits_;
};

// Maps a tracking error (meters) to its discrete state: errors of 1 m or
// more saturate at 100, otherwise the error is rounded to the nearest
// hundredth (half away from zero). Rejects negative or non-finite input.
int discretize_state(double error);

// Reward for a tracking error: +100 for a perfect estimate, -100 for an
// error of 1 m or more, otherwise the rounded reciprocal of the error
// rounded to two decimals (floored at 0.01, capping the reward at +100).
int reward(double error);

// Applies one of the nine adjustment actions, scaling the free weights by
// (1 +- step_pct). A held weight is untouched; a weight at exactly zero is
// nudged additively by +-0.01 since scaling cannot move it.
WeightVector apply_action(const WeightVector& w, ActionId a, double step_pct);

// Epsilon-greedy selection over the nine actions at the given state.
ActionId select_action(const QTable& q, int state, double epsilon, Rng& rng);

// Mean squared tracking error over the trajectory with fixed weights.
double evaluate(const Trajectory& trajectory, const WeightVector& w);

struct TrainResult {
  WeightVector weights;  // snapshot with the lowest full-trajectory MSE
  double best_mse = 0.0;
  QTable qtable;
  std::vector<long long> episode_rewards;  // cumulative reward per episode
  std::vector<double> episode_mses;        // end-of-episode full-trajectory MSE
};

// Runs the weight-learning loop: weights start random in [0,1] and evolve
// across episodes; each episode walks the trajectory once, adjusting the
// weights one action per step and updating the Q-table from the resulting
// error. Deterministic for a given config.
TrainResult train(const Trajectory& trajectory, const LearningConfig& cfg);

}  // namespace rliff
