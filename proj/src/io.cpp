#include "rliff/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "rliff/config.hpp"

namespace rliff {

const char* const kTrajectoryCsvHeader =
    "t,x_true,y_true,x_rssi,y_rssi,x_pdr,y_pdr,x_aoa,y_aoa";

namespace {

constexpr const char* kColumnNames[9] = {"t",      "x_true", "y_true",
                                         "x_rssi", "y_rssi", "x_pdr",
                                         "y_pdr",  "x_aoa",  "y_aoa"};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_coordinate(const std::string& field, const std::string& where,
                        const char* column) {
  double out = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw InputError(where + ": malformed value '" + field + "' in column " + column);
  }
  if (!std::isfinite(out)) {
    throw InputError(where + ": non-finite value in column " + std::string(column));
  }
  return out;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  traj.validate();
  std::string out;
  out.reserve(traj.records.size() * 80 + 64);
  out += kTrajectoryCsvHeader;
  out += '\n';
  char buf[256];
  for (const SyncedEstimates& r : traj.records) {
    std::snprintf(buf, sizeof(buf),
                  "%lld,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                  static_cast<long long>(r.t), r.truth.x, r.truth.y, r.rssi.x,
                  r.rssi.y, r.pdr.x, r.pdr.y, r.aoa.x, r.aoa.y);
    out += buf;
  }
  return out;
}

Trajectory trajectory_from_csv(const std::string& text, const std::string& origin,
                               const std::string& env_id, Scenario scenario) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;

  if (!std::getline(stream, line)) {
    throw InputError(origin + ": empty file");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader) {
    throw InputError(origin + ":1: expected header '" +
                     std::string(kTrajectoryCsvHeader) + "'");
  }

  Trajectory traj;
  traj.env_id = env_id;
  traj.scenario = scenario;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);

    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 9) {
      throw InputError(where + ": expected 9 fields, found " +
                       std::to_string(fields.size()));
    }

    SyncedEstimates rec;
    {
      const char* first = fields[0].data();
      const char* last = fields[0].data() + fields[0].size();
      const auto [ptr, ec] = std::from_chars(first, last, rec.t);
      if (ec != std::errc() || ptr != last || rec.t < 0) {
        throw InputError(where + ": malformed timestamp '" + fields[0] + "'");
      }
    }
    if (!traj.records.empty() && rec.t <= traj.records.back().t) {
      throw InputError(where + ": timestamps must be strictly increasing");
    }

    double v[8];
    for (int i = 0; i < 8; ++i) {
      v[i] = parse_coordinate(fields[i + 1], where, kColumnNames[i + 1]);
    }
    rec.truth = Position2D(v[0], v[1]);
    rec.rssi = Position2D(v[2], v[3]);
    rec.pdr = Position2D(v[4], v[5]);
    rec.aoa = Position2D(v[6], v[7]);
    traj.records.push_back(rec);
  }

  if (traj.records.empty()) {
    throw InputError(origin + ": no data rows");
  }
  return traj;
}

Trajectory read_trajectory_csv(const std::filesystem::path& path,
                               const std::string& env_id, Scenario scenario) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read trajectory file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return trajectory_from_csv(buf.str(), path.string(), env_id, scenario);
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json j{
      {"env_id", report.env_id},
      {"scenario", scenario_name(report.scenario)},
      {"method", method_name(report.method)},
      {"mse", report.mse},
      {"seed", report.seed},
      {"episode_rewards", report.episode_rewards},
      {"episode_mses", report.episode_mses},
  };
  if (report.weights.has_value()) {
    j["weights"] = {{"w_rssi", report.weights->w_rssi()},
                    {"w_pdr", report.weights->w_pdr()},
                    {"w_aoa", report.weights->w_aoa()}};
  } else {
    j["weights"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const ReliabilityReport& report) {
  nlohmann::json summary = nlohmann::json::object();
  for (Method m : kAllMethods) {
    const MethodSummary& s = report.summary_for(m);
    summary[method_name(m)] = {{"mean_mse", s.mean_mse},
                               {"std_mse", s.std_mse},
                               {"min_mse", s.min_mse},
                               {"max_mse", s.max_mse},
                               {"stability", s.stability}};
  }

  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t rep = 0; rep < report.runs.size(); ++rep) {
    nlohmann::json reports = nlohmann::json::array();
    for (const RunReport& r : report.runs[rep]) reports.push_back(to_json(r));
    runs.push_back({{"repetition", rep}, {"reports", std::move(reports)}});
  }

  return nlohmann::json{{"env_id", report.env_id},
                        {"scenario", scenario_name(report.scenario)},
                        {"repetitions", report.repetitions},
                        {"master_seed", report.master_seed},
                        {"summary", std::move(summary)},
                        {"runs", std::move(runs)}};
}

std::string reliability_traces_csv(const ReliabilityReport& report) {
  std::string out = "method,repetition,episode,cumulative_reward\n";
  char buf[128];
  for (std::size_t rep = 0; rep < report.runs.size(); ++rep) {
    for (const RunReport& r : report.runs[rep]) {
      for (std::size_t e = 0; e < r.episode_rewards.size(); ++e) {
        std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%lld\n",
                      method_name(r.method), rep, e, r.episode_rewards[e]);
        out += buf;
      }
    }
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rliff
