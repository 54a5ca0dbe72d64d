#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "rliff/fusion.hpp"

using namespace rliff;

namespace {

SyncedEstimates make_est(Position2D truth, Position2D rssi, Position2D pdr,
                         Position2D aoa, std::int64_t t = 0) {
  return SyncedEstimates{t, truth, rssi, pdr, aoa};
}

}  // namespace

TEST_CASE("Position2D rejects non-finite coordinates") {
  CHECK_THROWS_AS(Position2D(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Position2D(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_NOTHROW(Position2D(1e10, -1e10));
}

TEST_CASE("weights sum to one by construction and clamp to [-1, 2]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> wide(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const WeightVector w(wide(rng), wide(rng));
    CHECK(std::abs(w.w_rssi() + w.w_pdr() + w.w_aoa() - 1.0) < 1e-9);
    CHECK(w.w_rssi() >= WeightVector::kMinWeight);
    CHECK(w.w_rssi() <= WeightVector::kMaxWeight);
    CHECK(w.w_aoa() >= WeightVector::kMinWeight);
    CHECK(w.w_aoa() <= WeightVector::kMaxWeight);
  }
  CHECK_THROWS_AS(WeightVector(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("fuse: identical inputs are a fixed point for any valid weights") {
  const auto est = make_est({2, 3}, {2, 3}, {2, 3}, {2, 3});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(-1.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const WeightVector w(unit(rng), unit(rng));
    const Position2D fused = fuse(est, w);
    CHECK(fused.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fused.y == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("fuse: selector weight returns the selected path") {
  const auto est = make_est({0, 0}, {1.5, 0.5}, {9, 9}, {-3, 4});
  const Position2D fused = fuse(est, WeightVector(1.0, 0.0));
  CHECK(fused.x == 1.5);
  CHECK(fused.y == 0.5);
}

TEST_CASE("fuse: equal weights average the three paths") {
  const auto est = make_est({0, 0}, {0, 0}, {3, 0}, {0, 3});
  const Position2D fused = fuse(est, WeightVector(1.0 / 3.0, 1.0 / 3.0));
  CHECK(fused.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fused.y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fuse commutes with translating every input") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> weight(-1.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const auto est = make_est({coord(rng), coord(rng)}, {coord(rng), coord(rng)},
                              {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    const double dx = coord(rng);
    const double dy = coord(rng);
    SyncedEstimates shifted = est;
    for (Position2D* p : {&shifted.truth, &shifted.rssi, &shifted.pdr, &shifted.aoa}) {
      *p = Position2D(p->x + dx, p->y + dy);
    }
    const WeightVector w(weight(rng), weight(rng));
    const Position2D a = fuse(est, w);
    const Position2D b = fuse(shifted, w);
    CHECK(b.x - dx == doctest::Approx(a.x).epsilon(1e-9));
    CHECK(b.y - dy == doctest::Approx(a.y).epsilon(1e-9));
  }
}

TEST_CASE("tracking_error: exact hit gives zero") {
  const auto est = make_est({1, 1}, {1, 1}, {1, 1}, {1, 1});
  CHECK(tracking_error(est, WeightVector(0.2, 0.3)) == 0.0);
}

TEST_CASE("tracking_error: 3-4-5 triangle") {
  const auto est = make_est({0, 0}, {0.3, 0.4}, {9, 9}, {9, 9});
  CHECK(tracking_error(est, WeightVector(1.0, 0.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("tracking_error: equal-weight spread example") {
  const auto est = make_est({0, 0}, {0, 0}, {3, 0}, {0, 3});
  CHECK(tracking_error(est, WeightVector(1.0 / 3.0, 1.0 / 3.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("tracking_error is symmetric in truth and fused point") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    auto est = make_est({coord(rng), coord(rng)}, {coord(rng), coord(rng)},
                        {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    const WeightVector w(0.25, 0.5);
    const Position2D fused = fuse(est, w);
    const double err = tracking_error(est, w);
    CHECK(err >= 0.0);
    CHECK(err == distance(fused, est.truth));
    CHECK(err == distance(est.truth, fused));
  }
}

TEST_CASE("trajectory validation") {
  Trajectory traj;
  traj.env_id = "first";
  CHECK_THROWS_AS(traj.validate(), std::invalid_argument);
  traj.records.push_back(make_est({0, 0}, {0, 0}, {0, 0}, {0, 0}, 0));
  traj.records.push_back(make_est({1, 0}, {1, 0}, {1, 0}, {1, 0}, 0));
  CHECK_THROWS_AS(traj.validate(), std::invalid_argument);
  traj.records[1].t = 1;
  CHECK_NOTHROW(traj.validate());
}

TEST_CASE("scenario labels round-trip") {
  for (Scenario s : {Scenario::rectangular, Scenario::diagonal_a,
                     Scenario::diagonal_b, Scenario::random_walk}) {
    CHECK(parse_scenario(scenario_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_scenario("zigzag"), std::invalid_argument);
}
