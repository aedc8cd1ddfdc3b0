#include "qfrenet/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "qfrenet/csv.hpp"
#include "qfrenet/pauli.hpp"
#include "qfrenet/svg.hpp"

namespace qfrenet {

using nlohmann::json;

double ScenarioConfig::param(const std::string& name, double fallback) const {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

namespace {

const std::set<std::string> kMethods{"bloch", "expectation", "projector", "exact"};
const std::set<std::string> kOutputs{"csv", "svg"};

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("config: missing key '" + key + "'");
  if (!j[key].is_number()) throw ConfigError("config: key '" + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }

  ScenarioConfig cfg;
  if (!j.contains("scenario") || !j["scenario"].is_string())
    throw ConfigError("config: missing string key 'scenario'");
  const std::string kind = j["scenario"].get<std::string>();
  if (kind == "rabi")
    cfg.scenario = ScenarioKind::rabi;
  else if (kind == "custom_qubit")
    cfg.scenario = ScenarioKind::custom_qubit;
  else if (kind == "qutrit_demo")
    cfg.scenario = ScenarioKind::qutrit_demo;
  else
    throw ConfigError("config: unknown scenario '" + kind +
                      "' (expected rabi | custom_qubit | qutrit_demo)");

  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError("config: 'params' must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_number())
        throw ConfigError("config: params." + key + " must be a number");
      cfg.params[key] = value.get<double>();
    }
  }
  if (cfg.scenario == ScenarioKind::rabi || cfg.scenario == ScenarioKind::qutrit_demo) {
    for (const char* key : {"omega0", "Omega0", "omega"})
      if (!cfg.params.count(key))
        throw ConfigError(std::string("config: params.") + key +
                          " is required for this scenario");
  }

  if (!j.contains("grid") || !j["grid"].is_object())
    throw ConfigError("config: missing object key 'grid'");
  cfg.grid.t_max = require_number(j["grid"], "t_max");
  const double steps = require_number(j["grid"], "steps");
  if (!std::isfinite(cfg.grid.t_max) || !(cfg.grid.t_max > 0.0))
    throw ConfigError("config: grid.t_max must be a finite number > 0");
  if (!std::isfinite(steps) || steps < 16 || steps > 1e8 ||
      steps != std::floor(steps))
    throw ConfigError("config: grid.steps must be an integer in [16, 1e8]");
  cfg.grid.steps = static_cast<int>(steps);

  if (!j.contains("initial_state") || !j["initial_state"].is_object())
    throw ConfigError("config: missing object key 'initial_state'");
  const json& init = j["initial_state"];
  if (init.contains("theta") || init.contains("phi")) {
    cfg.theta = require_number(init, "theta");
    cfg.phi = require_number(init, "phi");
    if (*cfg.theta < 0.0 || *cfg.theta > std::numbers::pi)
      throw ConfigError("config: initial_state.theta must lie in [0, pi]");
    if (*cfg.phi < 0.0 || *cfg.phi >= 2.0 * std::numbers::pi)
      throw ConfigError("config: initial_state.phi must lie in [0, 2 pi)");
  } else if (init.contains("amplitudes")) {
    const json& amp = init["amplitudes"];
    if (!amp.is_array() || amp.size() < 2)
      throw ConfigError("config: initial_state.amplitudes must be an array of >= 2 pairs");
    CVector psi(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (!amp[i].is_array() || amp[i].size() != 2 || !amp[i][0].is_number() ||
          !amp[i][1].is_number())
        throw ConfigError("config: initial_state.amplitudes[" + std::to_string(i) +
                          "] must be a [re, im] pair");
      psi(i) = cx(amp[i][0].get<double>(), amp[i][1].get<double>());
    }
    const double norm = psi.norm();
    if (norm < 1e-12)
      throw ConfigError("config: initial_state.amplitudes has zero norm");
    cfg.amplitudes = psi / norm;
  } else {
    throw ConfigError("config: initial_state needs either theta/phi or amplitudes");
  }

  if (j.contains("methods")) {
    if (!j["methods"].is_array()) throw ConfigError("config: 'methods' must be an array");
    cfg.methods.clear();
    for (const auto& m : j["methods"]) {
      const std::string name = m.is_string() ? m.get<std::string>() : "";
      if (!kMethods.count(name))
        throw ConfigError("config: methods entry '" + name +
                          "' not in {bloch, expectation, projector, exact}");
      cfg.methods.insert(name);
    }
  }
  if (j.contains("outputs")) {
    if (!j["outputs"].is_array()) throw ConfigError("config: 'outputs' must be an array");
    cfg.outputs.clear();
    for (const auto& o : j["outputs"]) {
      const std::string name = o.is_string() ? o.get<std::string>() : "";
      if (!kOutputs.count(name))
        throw ConfigError("config: outputs entry '" + name + "' not in {csv, svg}");
      cfg.outputs.insert(name);
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file: " + path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::set<std::string> known_params(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::rabi:
    case ScenarioKind::qutrit_demo:
      return {"omega0", "Omega0", "omega"};
    case ScenarioKind::custom_qubit:
      return {"m0x", "m0y", "m0z", "m1x", "m1y", "m1z"};
  }
  return {};
}

namespace {

CVector qubit_initial_state(const ScenarioConfig& cfg) {
  if (cfg.amplitudes) {
    if (cfg.amplitudes->size() != 2)
      throw ConfigError("config: qubit scenario needs 2 amplitudes");
    return *cfg.amplitudes;
  }
  return state_from_angles(*cfg.theta, *cfg.phi);
}

}  // namespace

ScenarioSetup build_scenario(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case ScenarioKind::rabi: {
      RabiParams p;
      p.omega0 = cfg.param("omega0", 1.0);
      p.Omega0 = cfg.param("Omega0", 0.1);
      p.omega = cfg.param("omega", 0.9);
      return ScenarioSetup{rabi_schedule(p, cfg.grid.t_max), qubit_initial_state(cfg), p,
                           rabi_field_schedule(p)};
    }
    case ScenarioKind::custom_qubit: {
      // Linearly ramped field m(t) = m0 + t * m1.
      const Vec3 m0(cfg.param("m0x", 0.0), cfg.param("m0y", 0.0), cfg.param("m0z", 0.5));
      const Vec3 m1(cfg.param("m1x", 0.0), cfg.param("m1y", 0.0), cfg.param("m1z", 0.0));
      FieldSchedule field = [m0, m1](double t) { return FieldSample{m0 + t * m1, m1}; };
      return ScenarioSetup{field_to_schedule(field, "custom_qubit", cfg.grid.t_max),
                           qubit_initial_state(cfg), std::nullopt, field};
    }
    case ScenarioKind::qutrit_demo: {
      // Spin-1 analog of the driven two-level problem; torsion no longer
      // vanishes in three dimensions.
      const double omega0 = cfg.param("omega0", 1.0);
      const double Omega0 = cfg.param("Omega0", 0.5);
      const double omega = cfg.param("omega", 0.9);
      const CMatrix jx = spin1_jx(), jy = spin1_jy(), jz = spin1_jz();
      auto h = [=](double t) -> CMatrix {
        return omega0 * jz +
               Omega0 * (std::cos(omega * t) * jx + std::sin(omega * t) * jy);
      };
      auto hdot = [=](double t) -> CMatrix {
        return Omega0 * omega * (-std::sin(omega * t) * jx + std::cos(omega * t) * jy);
      };
      CVector psi0;
      if (cfg.amplitudes) {
        if (cfg.amplitudes->size() != 3)
          throw ConfigError("config: qutrit_demo needs 3 amplitudes");
        psi0 = *cfg.amplitudes;
      } else {
        // Generic superposition; avoids symmetry-protected zero torsion.
        psi0 = CVector(3);
        psi0 << cx(0.6, 0.1), cx(0.5, -0.3), cx(0.2, 0.4);
        psi0 /= psi0.norm();
      }
      return ScenarioSetup{
          HamiltonianSchedule(3, h, hdot, "qutrit_demo", cfg.grid.t_max), psi0,
          std::nullopt, std::nullopt};
    }
  }
  throw ConfigError("config: unreachable scenario kind");
}

namespace {

// Exact-propagator trajectory for the rabi scenario.
Trajectory exact_rabi_trajectory(const RabiParams& p, const HamiltonianSchedule& schedule,
                                 const CVector& psi0, const TimeGrid& grid) {
  Trajectory traj;
  const double dt = grid.dt();
  const std::size_t n = grid.steps + 1;
  traj.times.resize(n);
  traj.raw_states.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    traj.times[i] = i * dt;
    traj.raw_states[i] = rabi_propagator(p, traj.times[i]) * psi0;
  }
  complete_trajectory(schedule, traj);
  return traj;
}

}  // namespace

RunRecord run_scenario(const ScenarioConfig& cfg) {
  const ScenarioSetup setup = build_scenario(cfg);
  const bool is_qubit = setup.schedule.dimension() == 2;

  Trajectory traj;
  if (cfg.methods.count("exact") && setup.rabi)
    traj = exact_rabi_trajectory(*setup.rabi, setup.schedule, setup.psi0, cfg.grid);
  else
    traj = propagate(setup.schedule, setup.psi0, cfg.grid, PropagationMethod::rk4);

  RunRecord record;
  record.config = cfg;
  record.diagnostics.max_norm_drift = traj.max_norm_drift;
  record.diagnostics.parallel_transport_residual = parallel_transport_residual(traj);

  std::vector<double> kappa2_proj;
  if (cfg.methods.count("projector"))
    kappa2_proj = curvature_projector(traj, setup.schedule);

  const std::size_t n = traj.size();
  record.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    FrenetSample& sm = record.samples[i];
    sm.t = traj.times[i];
    sm.s = traj.s[i];
    sm.v = traj.v[i];
    sm.v_dot = traj.v_dot[i];

    const CMatrix h = setup.schedule.evaluate(sm.t);
    const CMatrix hdot = setup.schedule.derivative(sm.t);
    const bool live = traj.v[i] > speed_floor(h);

    if (is_qubit) sm.bloch = bloch_from_state(traj.raw_states[i]);

    if (cfg.methods.count("expectation") && live) {
      const FrenetPoint pt = frenet_expectation(h, hdot, traj.raw_states[i]);
      sm.kappa2_expect = pt.kappa2;
      sm.tau2_expect = pt.tau2;
    }
    if (cfg.methods.count("bloch") && is_qubit && setup.field && live) {
      const FieldSample f = (*setup.field)(sm.t);
      sm.kappa2_bloch = curvature_bloch(sm.bloch, f.m, f.mdot);
      sm.tau2_residual = torsion_bloch(sm.bloch, f.m, f.mdot).residual;
    }
    if (!kappa2_proj.empty()) sm.kappa2_projector = kappa2_proj[i];

    if (!std::isnan(sm.kappa2_bloch) && !std::isnan(sm.kappa2_expect))
      record.diagnostics.max_bloch_expect_gap =
          std::max(record.diagnostics.max_bloch_expect_gap,
                   std::abs(sm.kappa2_bloch - sm.kappa2_expect));
    if (!std::isnan(sm.kappa2_expect) && !std::isnan(sm.kappa2_projector))
      record.diagnostics.max_expect_projector_gap =
          std::max(record.diagnostics.max_expect_projector_gap,
                   std::abs(sm.kappa2_expect - sm.kappa2_projector));
  }
  return record;
}

void write_outputs(const RunRecord& record, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);

  // CSV first; plot failures must never corrupt it.
  if (record.config.outputs.count("csv"))
    write_file(out_dir + "/trajectory.csv", trajectory_csv(record.samples));

  if (!record.config.outputs.count("svg")) return;

  std::vector<double> t, kappa, v, vd;
  std::vector<Vec3> orbit;
  for (const FrenetSample& sm : record.samples) {
    t.push_back(sm.t);
    const double k2 = !std::isnan(sm.kappa2_expect) ? sm.kappa2_expect : sm.kappa2_bloch;
    kappa.push_back(std::isnan(k2) ? k2 : std::sqrt(std::max(0.0, k2)));
    v.push_back(sm.v);
    vd.push_back(sm.v_dot);
    if (!std::isnan(sm.bloch.x())) orbit.push_back(sm.bloch);
  }
  write_file(out_dir + "/kappa.svg",
             line_chart_svg("curvature kappa(t)", {{"kappa", "#1660a8", t, kappa}}));
  write_file(out_dir + "/speed.svg",
             line_chart_svg("speed and acceleration",
                            {{"v", "#1660a8", t, v}, {"v_dot", "#c0392b", t, vd}}));
  if (!orbit.empty())
    write_file(out_dir + "/orbit.svg", bloch_orbit_svg("Bloch orbit", orbit));
}

}  // namespace qfrenet
