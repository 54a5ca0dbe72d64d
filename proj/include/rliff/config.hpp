#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "rliff/experiment.hpp"

namespace rliff {

// Bad user input: unreadable/ill-formed config files, malformed CSV rows,
// out-of-range values. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a CLI run needs, with the documented defaults. The single
// `seed` key is the master seed; it is mirrored into the tracker and
// learning configs.
struct CliConfig {
  EnvironmentSpec env;
  TrackerNoiseConfig noise;
  LearningConfig learn;
  Scenario scenario = Scenario::rectangular;
  int test_episodes = 100;
  int repetitions = 20;

  void set_seed(std::uint64_t seed);
  std::uint64_t seed() const { return learn.seed; }
};

CliConfig default_config();

// Flat `key = value` file with '#' comments. Unknown keys and malformed
// values are rejected with file:line diagnostics. env_id values first /
// second / third select the room presets; explicit width/height override.
CliConfig parse_config_text(const std::string& text, const std::string& origin);
CliConfig load_config_file(const std::filesystem::path& path);

}  // namespace rliff
