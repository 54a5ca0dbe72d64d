#include "rliff/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace rliff {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(const std::string& value, const std::string& where) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw InputError(where + ": malformed value '" + value + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) {
      throw InputError(where + ": value must be finite, got '" + value + "'");
    }
  }
  return out;
}

}  // namespace

void CliConfig::set_seed(std::uint64_t seed) {
  learn.seed = seed;
  noise.seed = seed;
}

CliConfig default_config() {
  CliConfig cfg;
  cfg.env = environment_preset("second");
  cfg.set_seed(1);
  return cfg;
}

CliConfig parse_config_text(const std::string& text, const std::string& origin) {
  CliConfig cfg = default_config();
  bool have_width = false;
  bool have_height = false;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = origin + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(where + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InputError(where + ": expected 'key = value'");
    }

    if (key == "env_id") {
      cfg.env.env_id = value;
      if (value == "first" || value == "second" || value == "third") {
        const EnvironmentSpec preset = environment_preset(value);
        if (!have_width) cfg.env.width = preset.width;
        if (!have_height) cfg.env.height = preset.height;
      }
    } else if (key == "width") {
      cfg.env.width = parse_number<double>(value, where);
      have_width = true;
    } else if (key == "height") {
      cfg.env.height = parse_number<double>(value, where);
      have_height = true;
    } else if (key == "speed") {
      cfg.env.speed = parse_number<double>(value, where);
    } else if (key == "n_steps") {
      cfg.env.n_steps = parse_number<int>(value, where);
    } else if (key == "sigma_rssi") {
      cfg.noise.sigma_rssi = parse_number<double>(value, where);
    } else if (key == "sigma_aoa") {
      cfg.noise.sigma_aoa = parse_number<double>(value, where);
    } else if (key == "aoa_jump_prob") {
      cfg.noise.aoa_jump_prob = parse_number<double>(value, where);
    } else if (key == "aoa_jump_scale") {
      cfg.noise.aoa_jump_scale = parse_number<double>(value, where);
    } else if (key == "pdr_step_noise") {
      cfg.noise.pdr_step_noise = parse_number<double>(value, where);
    } else if (key == "pdr_heading_noise") {
      cfg.noise.pdr_heading_noise = parse_number<double>(value, where);
    } else if (key == "pf_particles") {
      cfg.noise.pf_particles = parse_number<int>(value, where);
    } else if (key == "gamma") {
      cfg.learn.gamma = parse_number<double>(value, where);
    } else if (key == "alpha") {
      cfg.learn.alpha = parse_number<double>(value, where);
    } else if (key == "epsilon_start") {
      cfg.learn.epsilon_start = parse_number<double>(value, where);
    } else if (key == "epsilon_end") {
      cfg.learn.epsilon_end = parse_number<double>(value, where);
    } else if (key == "epsilon_decay") {
      cfg.learn.epsilon_decay = parse_number<double>(value, where);
    } else if (key == "step_pct") {
      cfg.learn.step_pct = parse_number<double>(value, where);
    } else if (key == "episodes") {
      cfg.learn.episodes = parse_number<int>(value, where);
    } else if (key == "test_episodes") {
      cfg.test_episodes = parse_number<int>(value, where);
    } else if (key == "repetitions") {
      cfg.repetitions = parse_number<int>(value, where);
    } else if (key == "seed") {
      cfg.set_seed(parse_number<std::uint64_t>(value, where));
    } else if (key == "scenario") {
      try {
        cfg.scenario = parse_scenario(value);
      } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
      }
    } else {
      throw InputError(where + ": unknown key '" + key + "'");
    }
  }

  try {
    cfg.env.validate();
    cfg.noise.validate();
    cfg.learn.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (cfg.test_episodes < 1) {
    throw InputError(origin + ": test_episodes must be positive");
  }
  return cfg;
}

CliConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read config file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

}  // namespace rliff
