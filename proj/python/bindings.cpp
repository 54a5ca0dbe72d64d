#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rliff/config.hpp"
#include "rliff/experiment.hpp"
#include "rliff/io.hpp"

namespace py = pybind11;
using namespace rliff;

namespace {

py::dict report_to_dict(const RunReport& r) {
  py::dict d;
  d["env_id"] = r.env_id;
  d["scenario"] = scenario_name(r.scenario);
  d["method"] = method_name(r.method);
  d["mse"] = r.mse;
  d["seed"] = r.seed;
  d["episode_rewards"] = r.episode_rewards;
  d["episode_mses"] = r.episode_mses;
  if (r.weights.has_value()) {
    py::dict w;
    w["w_rssi"] = r.weights->w_rssi();
    w["w_pdr"] = r.weights->w_pdr();
    w["w_aoa"] = r.weights->w_aoa();
    d["weights"] = w;
  } else {
    d["weights"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_rliff, m) {
  m.doc() = "RL-driven fusion of RSSI/PDR/AoA indoor tracking paths";

  py::class_<Position2D>(m, "Position2D")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &Position2D::x)
      .def_readonly("y", &Position2D::y)
      .def("__eq__", [](const Position2D& a, const Position2D& b) { return a == b; })
      .def("__repr__", [](const Position2D& p) {
        std::ostringstream s;
        s << "Position2D(" << p.x << ", " << p.y << ")";
        return s.str();
      });

  py::class_<WeightVector>(m, "WeightVector")
      .def(py::init<double, double>(), py::arg("w_rssi"), py::arg("w_aoa"))
      .def_property_readonly("w_rssi", &WeightVector::w_rssi)
      .def_property_readonly("w_pdr", &WeightVector::w_pdr)
      .def_property_readonly("w_aoa", &WeightVector::w_aoa)
      .def("__repr__", [](const WeightVector& w) {
        std::ostringstream s;
        s << "WeightVector(w_rssi=" << w.w_rssi() << ", w_pdr=" << w.w_pdr()
          << ", w_aoa=" << w.w_aoa() << ")";
        return s.str();
      });

  py::class_<SyncedEstimates>(m, "SyncedEstimates")
      .def(py::init([](std::int64_t t, Position2D truth, Position2D rssi,
                       Position2D pdr, Position2D aoa) {
             return SyncedEstimates{t, truth, rssi, pdr, aoa};
           }),
           py::arg("t"), py::arg("truth"), py::arg("rssi"), py::arg("pdr"),
           py::arg("aoa"))
      .def_readonly("t", &SyncedEstimates::t)
      .def_readonly("truth", &SyncedEstimates::truth)
      .def_readonly("rssi", &SyncedEstimates::rssi)
      .def_readonly("pdr", &SyncedEstimates::pdr)
      .def_readonly("aoa", &SyncedEstimates::aoa);

  py::class_<Trajectory>(m, "Trajectory")
      .def(py::init([](const std::string& env_id, const std::string& scenario,
                       std::vector<SyncedEstimates> records) {
             Trajectory t;
             t.env_id = env_id;
             t.scenario = parse_scenario(scenario);
             t.records = std::move(records);
             t.validate();
             return t;
           }),
           py::arg("env_id"), py::arg("scenario"), py::arg("records"))
      .def_readonly("env_id", &Trajectory::env_id)
      .def_property_readonly(
          "scenario", [](const Trajectory& t) { return scenario_name(t.scenario); })
      .def_readonly("records", &Trajectory::records)
      .def("__len__", [](const Trajectory& t) { return t.records.size(); });

  py::class_<LearningConfig>(m, "LearningConfig")
      .def(py::init<>())
      .def_readwrite("gamma", &LearningConfig::gamma)
      .def_readwrite("alpha", &LearningConfig::alpha)
      .def_readwrite("epsilon_start", &LearningConfig::epsilon_start)
      .def_readwrite("epsilon_end", &LearningConfig::epsilon_end)
      .def_readwrite("epsilon_decay", &LearningConfig::epsilon_decay)
      .def_readwrite("step_pct", &LearningConfig::step_pct)
      .def_readwrite("episodes", &LearningConfig::episodes)
      .def_readwrite("seed", &LearningConfig::seed);

  py::class_<TrackerNoiseConfig>(m, "TrackerNoiseConfig")
      .def(py::init<>())
      .def_readwrite("sigma_rssi", &TrackerNoiseConfig::sigma_rssi)
      .def_readwrite("sigma_aoa", &TrackerNoiseConfig::sigma_aoa)
      .def_readwrite("aoa_jump_prob", &TrackerNoiseConfig::aoa_jump_prob)
      .def_readwrite("aoa_jump_scale", &TrackerNoiseConfig::aoa_jump_scale)
      .def_readwrite("pdr_step_noise", &TrackerNoiseConfig::pdr_step_noise)
      .def_readwrite("pdr_heading_noise", &TrackerNoiseConfig::pdr_heading_noise)
      .def_readwrite("pf_particles", &TrackerNoiseConfig::pf_particles)
      .def_readwrite("seed", &TrackerNoiseConfig::seed);

  py::class_<EnvironmentSpec>(m, "EnvironmentSpec")
      .def(py::init<>())
      .def_readwrite("env_id", &EnvironmentSpec::env_id)
      .def_readwrite("width", &EnvironmentSpec::width)
      .def_readwrite("height", &EnvironmentSpec::height)
      .def_readwrite("speed", &EnvironmentSpec::speed)
      .def_readwrite("n_steps", &EnvironmentSpec::n_steps);

  py::class_<TrainResult>(m, "TrainResult")
      .def_readonly("weights", &TrainResult::weights)
      .def_readonly("best_mse", &TrainResult::best_mse)
      .def_readonly("episode_rewards", &TrainResult::episode_rewards)
      .def_readonly("episode_mses", &TrainResult::episode_mses)
      .def("q_values", [](const TrainResult& r) {
        std::vector<std::vector<double>> values(kNumStates,
                                                std::vector<double>(kNumActions));
        for (int s = 0; s < kNumStates; ++s) {
          for (int a = 1; a <= kNumActions; ++a) {
            values[s][a - 1] = r.qtable.value(s, ActionId(a));
          }
        }
        return values;
      });

  m.def("fuse", &fuse, py::arg("estimates"), py::arg("weights"));
  m.def("tracking_error", &tracking_error, py::arg("estimates"), py::arg("weights"));
  m.def("discretize_state", &discretize_state, py::arg("error"));
  m.def("reward", &reward, py::arg("error"));
  m.def(
      "apply_action",
      [](const WeightVector& w, int action, double step_pct) {
        return apply_action(w, ActionId(action), step_pct);
      },
      py::arg("weights"), py::arg("action"), py::arg("step_pct") = 0.10);
  m.def("train", &train, py::arg("trajectory"), py::arg("config"));
  m.def("evaluate", &evaluate, py::arg("trajectory"), py::arg("weights"));
  m.def("equal_weights", &equal_weights);
  m.def(
      "random_weights",
      [](std::uint64_t seed) {
        Rng rng(seed);
        return random_weights(rng);
      },
      py::arg("seed"));

  m.def(
      "generate_trajectory",
      [](const EnvironmentSpec& env, const std::string& scenario, std::uint64_t seed) {
        return generate_trajectory(env, parse_scenario(scenario), seed);
      },
      py::arg("env"), py::arg("scenario"), py::arg("seed"));
  m.def("environment_preset", &environment_preset, py::arg("name"));
  m.def("simulate_rssi_path", &simulate_rssi_path, py::arg("truth"), py::arg("config"));
  m.def("simulate_pdr_path", &simulate_pdr_path, py::arg("truth"), py::arg("config"));
  m.def("simulate_aoa_path", &simulate_aoa_path, py::arg("truth"), py::arg("config"));

  m.def(
      "build_trajectory",
      [](const EnvironmentSpec& env, const std::string& scenario,
         const TrackerNoiseConfig& noise) {
        return build_trajectory(env, parse_scenario(scenario), noise);
      },
      py::arg("env"), py::arg("scenario"), py::arg("noise"));
  m.def(
      "run_experiment",
      [](const EnvironmentSpec& env, const std::string& scenario,
         const TrackerNoiseConfig& noise, const LearningConfig& learn,
         int test_episodes) {
        const auto reports =
            run_experiment(env, parse_scenario(scenario), noise, learn, test_episodes);
        py::list out;
        for (const RunReport& r : reports) out.append(report_to_dict(r));
        return out;
      },
      py::arg("env"), py::arg("scenario"), py::arg("noise"), py::arg("learn"),
      py::arg("test_episodes") = 100);
  m.def(
      "run_reliability",
      [](const EnvironmentSpec& env, const std::string& scenario,
         const TrackerNoiseConfig& noise, const LearningConfig& learn,
         int repetitions, int test_episodes) {
        const ReliabilityReport rel = run_reliability(
            env, parse_scenario(scenario), noise, learn, repetitions, test_episodes);
        py::dict out;
        out["env_id"] = rel.env_id;
        out["scenario"] = scenario_name(rel.scenario);
        out["repetitions"] = rel.repetitions;
        out["master_seed"] = rel.master_seed;
        py::dict summary;
        for (Method method : kAllMethods) {
          const MethodSummary& s = rel.summary_for(method);
          py::dict ms;
          ms["mean_mse"] = s.mean_mse;
          ms["std_mse"] = s.std_mse;
          ms["min_mse"] = s.min_mse;
          ms["max_mse"] = s.max_mse;
          ms["stability"] = s.stability;
          summary[method_name(method)] = ms;
        }
        out["summary"] = summary;
        py::list runs;
        for (const auto& run : rel.runs) {
          py::list reports;
          for (const RunReport& r : run) reports.append(report_to_dict(r));
          runs.append(reports);
        }
        out["runs"] = runs;
        return out;
      },
      py::arg("env"), py::arg("scenario"), py::arg("noise"), py::arg("learn"),
      py::arg("repetitions"), py::arg("test_episodes") = 100);

  m.def("trajectory_to_csv", &trajectory_to_csv, py::arg("trajectory"));
  m.def(
      "trajectory_from_csv",
      [](const std::string& text, const std::string& env_id, const std::string& scenario) {
        return trajectory_from_csv(text, "<string>", env_id, parse_scenario(scenario));
      },
      py::arg("text"), py::arg("env_id") = "replay",
      py::arg("scenario") = "rectangular");

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
}
