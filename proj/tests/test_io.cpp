#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "rliff/config.hpp"
#include "rliff/io.hpp"

using namespace rliff;

namespace {

Trajectory sample_trajectory(int n = 20) {
  Trajectory traj;
  traj.env_id = "first";
  traj.scenario = Scenario::diagonal_a;
  for (int k = 0; k < n; ++k) {
    const Position2D p(0.123456 * k, 1.0 + 0.01 * k);
    traj.records.push_back(SyncedEstimates{
        k, p, Position2D(p.x + 0.1, p.y), Position2D(p.x, p.y + 0.2),
        Position2D(p.x - 0.05, p.y - 0.05)});
  }
  return traj;
}

}  // namespace

TEST_CASE("trajectory csv round-trips at 6-decimal precision") {
  const Trajectory traj = sample_trajectory();
  const std::string csv = trajectory_to_csv(traj);
  CHECK(csv.substr(0, csv.find('\n')) == kTrajectoryCsvHeader);
  CHECK(csv.find("\r") == std::string::npos);

  const Trajectory back = trajectory_from_csv(csv, "mem", "first", Scenario::diagonal_a);
  REQUIRE(back.records.size() == traj.records.size());
  for (std::size_t i = 0; i < traj.records.size(); ++i) {
    CHECK(back.records[i].t == traj.records[i].t);
    CHECK(std::abs(back.records[i].truth.x - traj.records[i].truth.x) < 5e-7);
    CHECK(std::abs(back.records[i].pdr.y - traj.records[i].pdr.y) < 5e-7);
  }
}

TEST_CASE("csv writer emits identical bytes for identical input") {
  const Trajectory traj = sample_trajectory();
  CHECK(trajectory_to_csv(traj) == trajectory_to_csv(traj));
}

TEST_CASE("csv reader rejects malformed input with the offending line") {
  const std::string header = std::string(kTrajectoryCsvHeader) + "\n";

  SUBCASE("bad header") {
    CHECK_THROWS_WITH_AS(
        trajectory_from_csv("a,b,c\n", "f.csv", "e", Scenario::rectangular),
        doctest::Contains("f.csv:1"), InputError);
  }
  SUBCASE("nan cell cites the row") {
    const std::string text =
        header + "0,0,0,0,0,0,0,0,0\n1,0.5,0.5,nan,0.5,0.5,0.5,0.5,0.5\n";
    CHECK_THROWS_WITH_AS(
        trajectory_from_csv(text, "f.csv", "e", Scenario::rectangular),
        doctest::Contains("f.csv:3"), InputError);
  }
  SUBCASE("non-monotone timestamps") {
    const std::string text =
        header + "0,0,0,0,0,0,0,0,0\n0,1,1,1,1,1,1,1,1\n";
    CHECK_THROWS_WITH_AS(
        trajectory_from_csv(text, "f.csv", "e", Scenario::rectangular),
        doctest::Contains("strictly increasing"), InputError);
  }
  SUBCASE("wrong field count") {
    const std::string text = header + "0,1,2\n";
    CHECK_THROWS_WITH_AS(
        trajectory_from_csv(text, "f.csv", "e", Scenario::rectangular),
        doctest::Contains("9 fields"), InputError);
  }
  SUBCASE("no data rows") {
    CHECK_THROWS_AS(trajectory_from_csv(header, "f.csv", "e", Scenario::rectangular),
                    InputError);
  }
}

TEST_CASE("run report json carries weights and traces") {
  RunReport rep;
  rep.env_id = "second";
  rep.scenario = Scenario::random_walk;
  rep.method = Method::rl_iff;
  rep.mse = 0.0125;
  rep.weights = WeightVector(0.6, 0.3);
  rep.episode_rewards = {10, 20};
  rep.episode_mses = {0.5, 0.25};
  rep.seed = 9;

  const nlohmann::json j = to_json(rep);
  CHECK(j["method"] == "rl_iff");
  CHECK(j["scenario"] == "random");
  CHECK(j["weights"]["w_rssi"] == doctest::Approx(0.6));
  CHECK(j["weights"]["w_pdr"] == doctest::Approx(0.1));
  CHECK(j["episode_rewards"].size() == 2);

  rep.method = Method::rssi;
  rep.weights.reset();
  CHECK(to_json(rep)["weights"].is_null());
}

TEST_CASE("config parsing: defaults, overrides, diagnostics") {
  const CliConfig def = default_config();
  CHECK(def.env.env_id == "second");
  CHECK(def.learn.gamma == 0.9);
  CHECK(def.learn.alpha == 0.1);
  CHECK(def.learn.step_pct == 0.02);
  CHECK(def.learn.epsilon_start == 1.0);
  CHECK(def.learn.epsilon_end == 0.0);
  CHECK(def.learn.epsilon_decay == 0.999);
  CHECK(def.noise.sigma_rssi == 0.4);
  CHECK(def.noise.sigma_aoa == 0.15);
  CHECK(def.repetitions == 20);
  CHECK(def.test_episodes == 100);

  const CliConfig cfg = parse_config_text(
      "# comment\n"
      "env_id = first\n"
      "scenario = diagonal_b   # trailing comment\n"
      "gamma = 0.8\n"
      "seed = 42\n"
      "episodes = 500\n",
      "cfg");
  CHECK(cfg.env.width == 5.0);
  CHECK(cfg.scenario == Scenario::diagonal_b);
  CHECK(cfg.learn.gamma == 0.8);
  CHECK(cfg.learn.seed == 42);
  CHECK(cfg.noise.seed == 42);
  CHECK(cfg.learn.episodes == 500);

  // width/height override the preset regardless of key order.
  const CliConfig custom = parse_config_text("width = 3.5\nenv_id = first\n", "cfg");
  CHECK(custom.env.width == 3.5);
  CHECK(custom.env.height == 5.0);

  CHECK_THROWS_WITH_AS(parse_config_text("bogus = 1\n", "cfg"),
                       doctest::Contains("cfg:1"), InputError);
  CHECK_THROWS_WITH_AS(parse_config_text("gamma = fast\n", "cfg"),
                       doctest::Contains("malformed"), InputError);
  CHECK_THROWS_WITH_AS(parse_config_text("scenario = circle\n", "cfg"),
                       doctest::Contains("unknown scenario"), InputError);
  CHECK_THROWS_AS(parse_config_text("gamma = 2.0\n", "cfg"), InputError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/rliff.cfg"), InputError);
}

TEST_CASE("atomic write leaves no temp file behind") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::filesystem::path path = dir / "rliff_io_test.txt";
  write_file_atomic(path, "hello\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "hello\n");
  CHECK(!std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("reliability traces csv shape") {
  ReliabilityReport rel;
  rel.env_id = "first";
  rel.scenario = Scenario::rectangular;
  rel.repetitions = 1;
  RunReport rep;
  rep.method = Method::rl_iff;
  rep.episode_rewards = {1, 2, 3};
  rel.runs.push_back({rep});
  const std::string csv = reliability_traces_csv(rel);
  CHECK(csv == "method,repetition,episode,cumulative_reward\n"
               "rl_iff,0,0,1\nrl_iff,0,1,2\nrl_iff,0,2,3\n");
}
