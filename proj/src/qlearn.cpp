#include "rliff/qlearn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rliff {

namespace {

// Nearest integer to 100*error, half away from zero. The half-boundary
// test snaps values within 1e-9 of .5 upward so that decimal inputs like
// 0.145 (whose double product is one ulp below 14.5) round the way the
// decimal value would.
int round_hundredths(double error) {
  const double scaled = error * 100.0;
  const double base = std::floor(scaled);
  if (std::abs(scaled - base - 0.5) < 1e-9) {
    return static_cast<int>(base) + 1;
  }
  return static_cast<int>(std::lround(scaled));
}

void check_error_input(double error, const char* what) {
  if (std::isnan(error) || error < 0.0) {
    throw std::invalid_argument(std::string(what) +
                                ": error must be non-negative and not NaN");
  }
}

// Weights inside (-kZeroNudge, kZeroNudge) move additively: a scaling step
// is proportional to the current magnitude, so it can neither leave zero
// nor climb back out of the denormal range once a weight has decayed
// there, and it can never change sign (the learned weights do go
// negative). The additive band restores all three.
constexpr double kZeroNudge = 0.01;

double scale_or_nudge(double w, WeightOp op, double step_pct) {
  switch (op) {
    case WeightOp::hold:
      return w;
    case WeightOp::increase:
      return std::abs(w) < kZeroNudge ? w + kZeroNudge : w * (1.0 + step_pct);
    case WeightOp::decrease:
      return std::abs(w) < kZeroNudge ? w - kZeroNudge : w * (1.0 - step_pct);
  }
  throw std::logic_error("apply_action: invalid weight op");
}

}  // namespace

void LearningConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("LearningConfig: alpha must be in (0, 1]");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("LearningConfig: gamma must be in (0, 1]");
  }
  if (!(step_pct > 0.0 && step_pct < 1.0)) {
    throw std::invalid_argument("LearningConfig: step_pct must be in (0, 1)");
  }
  for (double e : {epsilon_start, epsilon_end, epsilon_decay}) {
    if (!(e >= 0.0 && e <= 1.0)) {
      throw std::invalid_argument("LearningConfig: epsilon parameters must be in [0, 1]");
    }
  }
  if (episodes < 1) {
    throw std::invalid_argument("LearningConfig: episodes must be positive");
  }
}

double LearningConfig::epsilon_at(int episode) const {
  return std::max(epsilon_end, epsilon_start * std::pow(epsilon_decay, episode));
}

ActionId::ActionId(int id) : id_(id) {
  if (id < 1 || id > kNumActions) {
    throw std::invalid_argument("ActionId: id must be in 1..9");
  }
}

WeightOp ActionId::rssi_op() const {
  // Actions 1-3 raise w_rssi, 4-6 lower it, 7-9 hold it.
  static constexpr WeightOp kOps[kNumActions] = {
      WeightOp::increase, WeightOp::increase, WeightOp::increase,
      WeightOp::decrease, WeightOp::decrease, WeightOp::decrease,
      WeightOp::hold,     WeightOp::hold,     WeightOp::hold};
  return kOps[id_ - 1];
}

WeightOp ActionId::aoa_op() const {
  static constexpr WeightOp kOps[kNumActions] = {
      WeightOp::increase, WeightOp::decrease, WeightOp::hold,
      WeightOp::decrease, WeightOp::increase, WeightOp::hold,
      WeightOp::increase, WeightOp::decrease, WeightOp::hold};
  return kOps[id_ - 1];
}

std::size_t QTable::index(int state, ActionId a) {
  if (state < 0 || state >= kNumStates) {
    throw std::out_of_range("QTable: state index out of range");
  }
  return static_cast<std::size_t>(state) * kNumActions + (a.id() - 1);
}

double QTable::max_value(int state) const {
  const std::size_t base = index(state, ActionId(1));
  double best = values_[base];
  for (int i = 1; i < kNumActions; ++i) {
    best = std::max(best, values_[base + i]);
  }
  return best;
}

ActionId QTable::greedy_action(int state) const {
  const std::size_t base = index(state, ActionId(1));
  int best = 0;
  for (int i = 1; i < kNumActions; ++i) {
    if (values_[base + i] > values_[base + best]) best = i;
  }
  return ActionId(best + 1);
}

void QTable::update(int state, ActionId a, double reward, int next_state,
                    double alpha, double gamma) {
  const std::size_t i = index(state, a);
  values_[i] += alpha * (reward + gamma * max_value(next_state) - values_[i]);
  visits_[i] += 1;
}

int discretize_state(double error) {
  check_error_input(error, "discretize_state");
  if (error >= 1.0) return kNumStates - 1;
  return round_hundredths(error);
}

int reward(double error) {
  check_error_input(error, "reward");
  if (error == 0.0) return 100;
  if (error >= 1.0) return -100;
  // 1 / (error rounded to two decimals), rounded half away from zero.
  // Exact in integer arithmetic: with k hundredths, round(100/k) is
  // (200 + k) / 2k.
  const int k = std::max(1, round_hundredths(error));
  return (200 + k) / (2 * k);
}

WeightVector apply_action(const WeightVector& w, ActionId a, double step_pct) {
  return WeightVector(scale_or_nudge(w.w_rssi(), a.rssi_op(), step_pct),
                      scale_or_nudge(w.w_aoa(), a.aoa_op(), step_pct));
}

ActionId select_action(const QTable& q, int state, double epsilon, Rng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < epsilon) {
    std::uniform_int_distribution<int> pick(1, kNumActions);
    return ActionId(pick(rng));
  }
  return q.greedy_action(state);
}

double evaluate(const Trajectory& trajectory, const WeightVector& w) {
  trajectory.validate();
  double sum = 0.0;
  for (const SyncedEstimates& rec : trajectory.records) {
    const double err = tracking_error(rec, w);
    sum += err * err;
  }
  return sum / static_cast<double>(trajectory.records.size());
}

TrainResult train(const Trajectory& trajectory, const LearningConfig& cfg) {
  trajectory.validate();
  cfg.validate();

  Rng rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightVector w(unit(rng), unit(rng));

  TrainResult result;
  result.episode_rewards.reserve(cfg.episodes);
  result.episode_mses.reserve(cfg.episodes);

  const std::vector<SyncedEstimates>& recs = trajectory.records;
  bool have_best = false;

  for (int episode = 0; episode < cfg.episodes; ++episode) {
    const double eps = cfg.epsilon_at(episode);
    int state = discretize_state(tracking_error(recs.front(), w));
    long long cumulative_reward = 0;

    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
      const ActionId action = select_action(result.qtable, state, eps, rng);
      w = apply_action(w, action, cfg.step_pct);
      const double err = tracking_error(recs[k + 1], w);
      const int r = reward(err);
      const int next_state = discretize_state(err);
      // Robbins-Monro step size per visited pair: the error state aliases
      // many weight configurations, so at a constant step size the table
      // oscillates forever and the greedy policy never settles.
      const double alpha =
          cfg.alpha / (1.0 + static_cast<double>(result.qtable.visits(state, action)) /
                                 kAlphaVisitScale);
      result.qtable.update(state, action, r, next_state, alpha, cfg.gamma);
      cumulative_reward += r;
      state = next_state;
    }

    const double mse = evaluate(trajectory, w);
    result.episode_rewards.push_back(cumulative_reward);
    result.episode_mses.push_back(mse);
    if (!have_best || mse < result.best_mse) {
      result.best_mse = mse;
      result.weights = w;
      have_best = true;
    }
  }
  return result;
}

}  // namespace rliff
