#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kWorkDir = fs::temp_directory_path() / "rliff_cli_tests";

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd =
      std::string(RLIFF_CLI_PATH) + " " + args + " >" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct Workspace {
  Workspace() {
    fs::remove_all(kWorkDir);
    fs::create_directories(kWorkDir);
  }
};

const std::string kSmallConfig =
    "env_id = first\n"
    "n_steps = 60\n"
    "episodes = 300\n"
    "test_episodes = 10\n"
    "repetitions = 3\n"
    "seed = 7\n";

}  // namespace

TEST_CASE("simulate: csv with header and one row per step") {
  Workspace ws;
  const fs::path cfg = kWorkDir / "cfg.txt";
  const fs::path out = kWorkDir / "traj.csv";
  const fs::path log = kWorkDir / "log.txt";
  write(cfg, kSmallConfig);

  CHECK(run_cli("simulate --config " + cfg.string() + " --out " + out.string(), log) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("t,x_true,y_true,x_rssi,y_rssi,x_pdr,y_pdr,x_aoa,y_aoa\n", 0) == 0);
  int rows = -1;  // discount the header
  for (char c : csv) rows += (c == '\n');
  CHECK(rows == 60);
}

TEST_CASE("simulate: same config and seed produce identical bytes") {
  Workspace ws;
  const fs::path cfg = kWorkDir / "cfg.txt";
  const fs::path log = kWorkDir / "log.txt";
  write(cfg, kSmallConfig);
  const fs::path a = kWorkDir / "a.csv";
  const fs::path b = kWorkDir / "b.csv";
  CHECK(run_cli("simulate --config " + cfg.string() + " --out " + a.string(), log) == 0);
  CHECK(run_cli("simulate --config " + cfg.string() + " --out " + b.string(), log) == 0);
  CHECK(slurp(a) == slurp(b));

  const fs::path c = kWorkDir / "c.csv";
  CHECK(run_cli("simulate --config " + cfg.string() + " --seed 8 --out " + c.string(), log) == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("missing config file exits 2 and names the path") {
  Workspace ws;
  const fs::path log = kWorkDir / "log.txt";
  const fs::path out = kWorkDir / "out.csv";
  CHECK(run_cli("simulate --config " + (kWorkDir / "absent.cfg").string() +
                    " --out " + out.string(),
                log) == 2);
  CHECK(slurp(log).find("absent.cfg") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  Workspace ws;
  const fs::path log = kWorkDir / "log.txt";
  CHECK(run_cli("frobnicate", log) == 2);
  CHECK(run_cli("simulate", log) == 2);  // --out is required
  const fs::path out = kWorkDir / "out.csv";
  CHECK(run_cli("simulate --scenario circle --out " + out.string(), log) == 2);
}

TEST_CASE("train: round-trip from simulate, report has rl_iff mse") {
  Workspace ws;
  const fs::path cfg = kWorkDir / "cfg.txt";
  const fs::path traj = kWorkDir / "traj.csv";
  const fs::path report = kWorkDir / "report.json";
  const fs::path log = kWorkDir / "log.txt";
  write(cfg, kSmallConfig);
  REQUIRE(run_cli("simulate --config " + cfg.string() + " --out " + traj.string(), log) == 0);
  CHECK(run_cli("train " + traj.string() + " --config " + cfg.string() +
                    " --out " + report.string(),
                log) == 0);

  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  bool found = false;
  for (const auto& rep : j["reports"]) {
    if (rep["method"] == "rl_iff") {
      found = true;
      CHECK(rep["mse"].is_number());
      CHECK(rep["weights"]["w_rssi"].is_number());
    }
  }
  CHECK(found);
}

TEST_CASE("train: nan cell is rejected citing the row") {
  Workspace ws;
  const fs::path traj = kWorkDir / "bad.csv";
  const fs::path report = kWorkDir / "report.json";
  const fs::path log = kWorkDir / "log.txt";
  write(traj,
        "t,x_true,y_true,x_rssi,y_rssi,x_pdr,y_pdr,x_aoa,y_aoa\n"
        "0,0,0,0,0,0,0,0,0\n"
        "1,1,1,1,1,nan,1,1,1\n");
  CHECK(run_cli("train " + traj.string() + " --out " + report.string(), log) == 2);
  CHECK(slurp(log).find("bad.csv:3") != std::string::npos);
}

TEST_CASE("train: perfect trackers give zero rl_iff mse") {
  Workspace ws;
  const fs::path traj = kWorkDir / "perfect.csv";
  const fs::path report = kWorkDir / "report.json";
  const fs::path log = kWorkDir / "log.txt";
  std::ostringstream csv;
  csv << "t,x_true,y_true,x_rssi,y_rssi,x_pdr,y_pdr,x_aoa,y_aoa\n";
  for (int k = 0; k < 40; ++k) {
    const double x = 0.1 * k;
    csv << k;
    for (int rep = 0; rep < 4; ++rep) csv << "," << x << "," << 2.5;
    csv << "\n";
  }
  write(traj, csv.str());
  const fs::path cfg = kWorkDir / "cfg.txt";
  write(cfg, "episodes = 50\ntest_episodes = 5\n");
  REQUIRE(run_cli("train " + traj.string() + " --config " + cfg.string() +
                      " --out " + report.string(),
                  log) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  for (const auto& rep : j["reports"]) {
    // Fused methods sit within one weight-sum ulp of the truth.
    CHECK(rep["mse"].get<double>() <= 1e-24);
  }
}

TEST_CASE("reliability: rejects repetitions < 2, writes summary and traces") {
  Workspace ws;
  const fs::path cfg = kWorkDir / "cfg.txt";
  const fs::path report = kWorkDir / "rel.json";
  const fs::path log = kWorkDir / "log.txt";

  write(cfg, kSmallConfig + "repetitions = 1\n");
  CHECK(run_cli("reliability --config " + cfg.string() + " --out " + report.string(), log) == 2);

  write(cfg, kSmallConfig + "episodes = 100\nrepetitions = 2\n");
  CHECK(run_cli("reliability --config " + cfg.string() + " --out " + report.string(), log) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  for (const char* m : {"aoa", "rssi", "pdr", "rl_iff", "random", "equal"}) {
    CHECK(j["summary"].contains(m));
    CHECK(j["summary"][m]["std_mse"].is_number());
  }
  CHECK(fs::exists(kWorkDir / "rel.traces.csv"));
  const std::string traces = slurp(kWorkDir / "rel.traces.csv");
  CHECK(traces.rfind("method,repetition,episode,cumulative_reward\n", 0) == 0);
}
