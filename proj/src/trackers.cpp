#include "rliff/trackers.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rliff/rng.hpp"

namespace rliff {

namespace {

// Seed streams within one noise config.
enum Stream : std::uint64_t { kRssiStream = 1, kPdrStream = 2, kAoaStream = 3 };

constexpr double kProcessNoise = 0.05;  // filter process noise, m/step

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Constant-velocity Kalman filter over (x, y, vx, vy), dt = 1 step.
class ConstantVelocityKalman {
 public:
  ConstantVelocityKalman(const Vec2& z0, double sigma_meas)
      : r_(sigma_meas * sigma_meas) {
    x_ << z0.x(), z0.y(), 0.0, 0.0;
    p_ = Mat4::Identity();
    p_(0, 0) = p_(1, 1) = std::max(r_, 1e-6);
    f_ = Mat4::Identity();
    f_(0, 2) = f_(1, 3) = 1.0;
    q_ = Mat4::Identity() * (kProcessNoise * kProcessNoise);
  }

  Vec2 step(const Vec2& z) {
    x_ = f_ * x_;
    p_ = f_ * p_ * f_.transpose() + q_;

    const Mat2 s = p_.topLeftCorner<2, 2>() + Mat2::Identity() * r_;
    const Eigen::Matrix<double, 4, 2> k = p_.leftCols<2>() * s.inverse();
    x_ += k * (z - x_.head<2>());
    p_ = (Mat4::Identity() - k * Mat4::Identity().leftCols<2>().transpose()) * p_;
    return x_.head<2>();
  }

 private:
  Vec4 x_;
  Mat4 p_;
  Mat4 f_;
  Mat4 q_;
  double r_;
};

// Bootstrap particle filter with multinomial resampling every step. When
// the measurement noise is so small that every particle weight underflows,
// the cloud is re-centered on the measurement.
class BootstrapParticleFilter {
 public:
  BootstrapParticleFilter(const Vec2& z0, double sigma_meas, int n, Rng& rng)
      : sigma_(std::max(sigma_meas, 1e-6)), rng_(rng) {
    particles_.resize(n, Particle{z0.x(), z0.y(), 0.0, 0.0});
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Particle& p : particles_) {
      p.x += sigma_meas * gauss(rng_);
      p.y += sigma_meas * gauss(rng_);
    }
  }

  Vec2 step(const Vec2& z) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    weights_.resize(particles_.size());

    double sum = 0.0;
    for (std::size_t i = 0; i < particles_.size(); ++i) {
      Particle& p = particles_[i];
      p.x += p.vx + kProcessNoise * gauss(rng_);
      p.y += p.vy + kProcessNoise * gauss(rng_);
      p.vx += kProcessNoise * gauss(rng_);
      p.vy += kProcessNoise * gauss(rng_);
      const double dx = p.x - z.x();
      const double dy = p.y - z.y();
      weights_[i] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma_ * sigma_));
      sum += weights_[i];
    }

    if (!(sum > 0.0) || !std::isfinite(sum)) {
      for (Particle& p : particles_) {
        p.x = z.x();
        p.y = z.y();
      }
      std::fill(weights_.begin(), weights_.end(), 1.0);
      sum = static_cast<double>(weights_.size());
    }

    Vec2 estimate(0.0, 0.0);
    for (std::size_t i = 0; i < particles_.size(); ++i) {
      estimate.x() += weights_[i] / sum * particles_[i].x;
      estimate.y() += weights_[i] / sum * particles_[i].y;
    }

    std::discrete_distribution<std::size_t> resample(weights_.begin(), weights_.end());
    std::vector<Particle> next(particles_.size());
    for (Particle& p : next) p = particles_[resample(rng_)];
    particles_ = std::move(next);
    return estimate;
  }

 private:
  struct Particle {
    double x, y, vx, vy;
  };

  std::vector<Particle> particles_;
  std::vector<double> weights_;
  double sigma_;
  Rng& rng_;
};

void require_points(const std::vector<Position2D>& truth, std::size_t n, const char* what) {
  if (truth.size() < n) {
    throw std::invalid_argument(std::string(what) + ": too few truth points");
  }
}

}  // namespace

void TrackerNoiseConfig::validate() const {
  if (sigma_rssi < 0.0 || sigma_aoa < 0.0 || aoa_jump_scale < 0.0 ||
      pdr_step_noise < 0.0 || pdr_heading_noise < 0.0) {
    throw std::invalid_argument("TrackerNoiseConfig: noise scales must be non-negative");
  }
  if (aoa_jump_prob < 0.0 || aoa_jump_prob > 1.0) {
    throw std::invalid_argument("TrackerNoiseConfig: aoa_jump_prob must be in [0, 1]");
  }
  if (pf_particles < 10) {
    throw std::invalid_argument("TrackerNoiseConfig: pf_particles must be at least 10");
  }
}

RssiFilterOutputs simulate_rssi_filters(const std::vector<Position2D>& truth,
                                        const TrackerNoiseConfig& cfg) {
  cfg.validate();
  require_points(truth, 2, "simulate_rssi_path");

  Rng rng(derive_seed(cfg.seed, kRssiStream));
  std::normal_distribution<double> gauss(0.0, 1.0);

  RssiFilterOutputs out;
  out.measurements.reserve(truth.size());
  for (const Position2D& p : truth) {
    out.measurements.push_back(Position2D(p.x + cfg.sigma_rssi * gauss(rng),
                                          p.y + cfg.sigma_rssi * gauss(rng)));
  }

  const Vec2 z0(out.measurements[0].x, out.measurements[0].y);
  ConstantVelocityKalman kf(z0, cfg.sigma_rssi);
  BootstrapParticleFilter pf(z0, cfg.sigma_rssi, cfg.pf_particles, rng);

  out.kalman.push_back(out.measurements[0]);
  out.particle.push_back(out.measurements[0]);
  out.combined.push_back(out.measurements[0]);
  for (std::size_t k = 1; k < out.measurements.size(); ++k) {
    const Vec2 z(out.measurements[k].x, out.measurements[k].y);
    const Vec2 kf_est = kf.step(z);
    const Vec2 pf_est = pf.step(z);
    out.kalman.push_back(Position2D(kf_est.x(), kf_est.y()));
    out.particle.push_back(Position2D(pf_est.x(), pf_est.y()));
    out.combined.push_back(Position2D(0.5 * (kf_est.x() + pf_est.x()),
                                      0.5 * (kf_est.y() + pf_est.y())));
  }
  return out;
}

std::vector<Position2D> simulate_rssi_path(const std::vector<Position2D>& truth,
                                           const TrackerNoiseConfig& cfg) {
  return simulate_rssi_filters(truth, cfg).combined;
}

std::vector<Position2D> simulate_pdr_path(const std::vector<Position2D>& truth,
                                          const TrackerNoiseConfig& cfg) {
  cfg.validate();
  require_points(truth, 2, "simulate_pdr_path");

  Rng rng(derive_seed(cfg.seed, kPdrStream));
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Position2D> out;
  out.reserve(truth.size());
  out.push_back(truth.front());
  double x = truth.front().x;
  double y = truth.front().y;
  for (std::size_t k = 1; k < truth.size(); ++k) {
    const double dx = truth[k].x - truth[k - 1].x;
    const double dy = truth[k].y - truth[k - 1].y;
    // Rotate the true step by the heading error and scale by the length
    // error; with zero noise this reproduces the step bit for bit.
    const double scale = 1.0 + cfg.pdr_step_noise * gauss(rng);
    const double dtheta = cfg.pdr_heading_noise * gauss(rng);
    const double c = std::cos(dtheta);
    const double s = std::sin(dtheta);
    x += scale * (c * dx - s * dy);
    y += scale * (s * dx + c * dy);
    out.push_back(Position2D(x, y));
  }
  return out;
}

std::vector<Position2D> simulate_aoa_path(const std::vector<Position2D>& truth,
                                          const TrackerNoiseConfig& cfg) {
  cfg.validate();
  require_points(truth, 1, "simulate_aoa_path");

  Rng rng(derive_seed(cfg.seed, kAoaStream));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double bias_x = 0.0;
  double bias_y = 0.0;
  std::vector<Position2D> out;
  out.reserve(truth.size());
  for (const Position2D& p : truth) {
    if (unit(rng) < cfg.aoa_jump_prob) {
      bias_x = cfg.aoa_jump_scale * gauss(rng);
      bias_y = cfg.aoa_jump_scale * gauss(rng);
    }
    out.push_back(Position2D(p.x + cfg.sigma_aoa * gauss(rng) + bias_x,
                             p.y + cfg.sigma_aoa * gauss(rng) + bias_y));
  }
  return out;
}

}  // namespace rliff
