#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rliff {

// Planar position in meters. Coordinates are always finite; arithmetic
// that could produce NaN/Inf is rejected at construction.
struct Position2D {
  double x = 0.0;
  double y = 0.0;

  Position2D() = default;
  Position2D(double x_, double y_);
};

bool operator==(const Position2D& a, const Position2D& b);
double distance(const Position2D& a, const Position2D& b);

// Fusion coefficients for the three tracking paths. Only w_rssi and w_aoa
// are free parameters; w_pdr is derived as 1 - w_rssi - w_aoa, so the
// weights sum to one by construction. Free weights live in [-1, 2]
// (negative weights are legitimate; the clamp only guards divergence).
class WeightVector {
 public:
  static constexpr double kMinWeight = -1.0;
  static constexpr double kMaxWeight = 2.0;

  WeightVector();  // equal weights
  WeightVector(double w_rssi, double w_aoa);

  double w_rssi() const { return w_rssi_; }
  double w_aoa() const { return w_aoa_; }
  double w_pdr() const { return 1.0 - w_rssi_ - w_aoa_; }

 private:
  double w_rssi_;
  double w_aoa_;
};

bool operator==(const WeightVector& a, const WeightVector& b);

// One timestamp's synchronized estimates from the three tracking paths,
// plus the ground-truth position.
struct SyncedEstimates {
  std::int64_t t = 0;
  Position2D truth;
  Position2D rssi;
  Position2D pdr;
  Position2D aoa;
};

enum class Scenario { rectangular, diagonal_a, diagonal_b, random_walk };

const char* scenario_name(Scenario s);
Scenario parse_scenario(const std::string& name);  // throws on unknown label

struct Trajectory {
  std::string env_id;
  Scenario scenario = Scenario::rectangular;
  std::vector<SyncedEstimates> records;

  // Throws unless non-empty with strictly increasing timestamps.
  void validate() const;
};

// Weighted combination of the three path estimates. Because the weights
// sum to one this is an affine combination: equal inputs map to
// themselves and translating all inputs translates the output.
Position2D fuse(const SyncedEstimates& estimates, const WeightVector& w);

// Euclidean distance between ground truth and the fused estimate.
double tracking_error(const SyncedEstimates& estimates, const WeightVector& w);

}  // namespace rliff
