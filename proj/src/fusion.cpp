#include "rliff/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rliff {

Position2D::Position2D(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("Position2D: coordinates must be finite");
  }
}

bool operator==(const Position2D& a, const Position2D& b) {
  return a.x == b.x && a.y == b.y;
}

double distance(const Position2D& a, const Position2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

WeightVector::WeightVector() : WeightVector(1.0 / 3.0, 1.0 / 3.0) {}

WeightVector::WeightVector(double w_rssi, double w_aoa) {
  if (!std::isfinite(w_rssi) || !std::isfinite(w_aoa)) {
    throw std::invalid_argument("WeightVector: weights must be finite");
  }
  w_rssi_ = std::clamp(w_rssi, kMinWeight, kMaxWeight);
  w_aoa_ = std::clamp(w_aoa, kMinWeight, kMaxWeight);
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  return a.w_rssi() == b.w_rssi() && a.w_aoa() == b.w_aoa();
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::rectangular: return "rectangular";
    case Scenario::diagonal_a: return "diagonal_a";
    case Scenario::diagonal_b: return "diagonal_b";
    case Scenario::random_walk: return "random";
  }
  throw std::logic_error("scenario_name: invalid enum value");
}

Scenario parse_scenario(const std::string& name) {
  if (name == "rectangular") return Scenario::rectangular;
  if (name == "diagonal_a") return Scenario::diagonal_a;
  if (name == "diagonal_b") return Scenario::diagonal_b;
  if (name == "random") return Scenario::random_walk;
  throw std::invalid_argument("unknown scenario label: " + name);
}

void Trajectory::validate() const {
  if (records.empty()) {
    throw std::invalid_argument("Trajectory: must contain at least one record");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].t <= records[i - 1].t) {
      throw std::invalid_argument(
          "Trajectory: timestamps must be strictly increasing (record " +
          std::to_string(i) + ")");
    }
  }
}

Position2D fuse(const SyncedEstimates& estimates, const WeightVector& w) {
  const double x = w.w_rssi() * estimates.rssi.x + w.w_pdr() * estimates.pdr.x +
                   w.w_aoa() * estimates.aoa.x;
  const double y = w.w_rssi() * estimates.rssi.y + w.w_pdr() * estimates.pdr.y +
                   w.w_aoa() * estimates.aoa.y;
  return Position2D(x, y);
}

double tracking_error(const SyncedEstimates& estimates, const WeightVector& w) {
  return distance(estimates.truth, fuse(estimates, w));
}

}  // namespace rliff
