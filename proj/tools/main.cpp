#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "rliff/config.hpp"
#include "rliff/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scenario;
  std::optional<std::string> env;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool out_required = true) {
  cmd->add_option("--config", args.config_path, "config file (key = value)");
  auto* out = cmd->add_option("--out", args.out_path, "output file");
  if (out_required) out->required();
  cmd->add_option("--seed", args.seed, "master seed (overrides config)");
  cmd->add_option("--scenario", args.scenario,
                  "rectangular | diagonal_a | diagonal_b | random");
  cmd->add_option("--env", args.env, "environment preset: first | second | third");
}

rliff::CliConfig resolve_config(const CommonArgs& args) {
  rliff::CliConfig cfg = args.config_path.empty()
                             ? rliff::default_config()
                             : rliff::load_config_file(args.config_path);
  if (args.env) {
    // Selects the room; speed and n_steps stay as configured.
    const rliff::EnvironmentSpec preset = rliff::environment_preset(*args.env);
    cfg.env.env_id = preset.env_id;
    cfg.env.width = preset.width;
    cfg.env.height = preset.height;
  }
  if (args.scenario) cfg.scenario = rliff::parse_scenario(*args.scenario);
  if (args.seed) cfg.set_seed(*args.seed);
  cfg.env.validate();
  return cfg;
}

std::filesystem::path traces_path_for(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension();
  p += ".traces.csv";
  return p;
}

int cmd_simulate(const CommonArgs& args) {
  const rliff::CliConfig cfg = resolve_config(args);
  const rliff::Trajectory traj =
      rliff::build_trajectory(cfg.env, cfg.scenario, cfg.noise);
  rliff::write_file_atomic(args.out_path, rliff::trajectory_to_csv(traj));
  std::printf("wrote %zu records to %s\n", traj.records.size(),
              args.out_path.c_str());
  return kExitOk;
}

int cmd_train(const std::string& trajectory_path, const CommonArgs& args) {
  const rliff::CliConfig cfg = resolve_config(args);
  const rliff::Trajectory traj = rliff::read_trajectory_csv(
      trajectory_path, cfg.env.env_id, cfg.scenario);
  const std::vector<rliff::RunReport> reports =
      rliff::run_methods(traj, cfg.learn, cfg.test_episodes);

  nlohmann::json j{{"env_id", traj.env_id},
                   {"scenario", rliff::scenario_name(traj.scenario)},
                   {"master_seed", cfg.seed()},
                   {"reports", nlohmann::json::array()}};
  for (const rliff::RunReport& r : reports) j["reports"].push_back(rliff::to_json(r));
  rliff::write_file_atomic(args.out_path, j.dump(2) + "\n");

  for (const rliff::RunReport& r : reports) {
    std::printf("%-8s mse = %.6f\n", rliff::method_name(r.method), r.mse);
  }
  return kExitOk;
}

int cmd_reliability(const CommonArgs& args) {
  const rliff::CliConfig cfg = resolve_config(args);
  if (cfg.repetitions < 2) {
    throw rliff::InputError("reliability requires repetitions >= 2");
  }
  const rliff::ReliabilityReport report =
      rliff::run_reliability(cfg.env, cfg.scenario, cfg.noise, cfg.learn,
                             cfg.repetitions, cfg.test_episodes);
  rliff::write_file_atomic(args.out_path, rliff::to_json(report).dump(2) + "\n");
  const std::filesystem::path traces = traces_path_for(args.out_path);
  rliff::write_file_atomic(traces, rliff::reliability_traces_csv(report));

  for (rliff::Method m : rliff::kAllMethods) {
    const rliff::MethodSummary& s = report.summary_for(m);
    std::printf("%-8s mse mean = %.6f  std = %.6f  stability = %.3f\n",
                rliff::method_name(m), s.mean_mse, s.std_mse, s.stability);
  }
  std::printf("report: %s\ntraces: %s\n", args.out_path.c_str(),
              traces.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RL-driven fusion of RSSI/PDR/AoA indoor tracking paths"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "generate a trajectory CSV");
  add_common(sim, sim_args);

  CommonArgs train_args;
  std::string trajectory_path;
  CLI::App* train = app.add_subcommand("train", "learn fusion weights from a trajectory CSV");
  train->add_option("trajectory", trajectory_path, "input trajectory CSV")->required();
  add_common(train, train_args);

  CommonArgs rel_args;
  CLI::App* rel = app.add_subcommand("reliability", "multi-seed reliability study");
  add_common(rel, rel_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_args);
    if (train->parsed()) return cmd_train(trajectory_path, train_args);
    if (rel->parsed()) return cmd_reliability(rel_args);
  } catch (const rliff::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
