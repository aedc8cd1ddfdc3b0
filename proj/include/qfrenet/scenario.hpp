#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfrenet/frenet.hpp"
#include "qfrenet/qubit.hpp"
#include "qfrenet/rabi.hpp"

namespace qfrenet {

enum class ScenarioKind { rabi, custom_qubit, qutrit_demo };

// Scenario description parsed from a flat JSON document. Angles are radians;
// theta in [0, pi], phi in [0, 2 pi).
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::rabi;
  std::map<std::string, double> params;
  std::optional<double> theta;  // qubit initial state
  std::optional<double> phi;
  std::optional<CVector> amplitudes;  // qudit initial state
  TimeGrid grid{1.0, 100};
  std::set<std::string> methods{"bloch", "expectation", "projector", "exact"};
  std::set<std::string> outputs{"csv"};

  double param(const std::string& name, double fallback) const;
};

ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);

// Parameter names a scenario actually reads; sweeps over anything else are
// rejected up front.
std::set<std::string> known_params(ScenarioKind kind);

// Concrete scenario pieces resolved from the config.
struct ScenarioSetup {
  HamiltonianSchedule schedule;
  CVector psi0;
  std::optional<RabiParams> rabi;       // set for the rabi scenario
  std::optional<FieldSchedule> field;   // set for qubit scenarios
};

ScenarioSetup build_scenario(const ScenarioConfig& config);

struct RunDiagnostics {
  double max_norm_drift = 0.0;
  double parallel_transport_residual = 0.0;
  double max_bloch_expect_gap = 0.0;      // max |kappa2_bloch - kappa2_expect|
  double max_expect_projector_gap = 0.0;  // max |kappa2_expect - kappa2_projector|
};

struct RunRecord {
  ScenarioConfig config;
  std::vector<FrenetSample> samples;
  RunDiagnostics diagnostics;
};

// Full pipeline: propagate, apply the requested routes, assemble per-time
// samples. `methods` controls which columns are filled; "exact" switches the
// rabi trajectory to the analytic propagator instead of rk4.
RunRecord run_scenario(const ScenarioConfig& config);

// Writes trajectory.csv (always first) and the optional SVG plots.
void write_outputs(const RunRecord& record, const std::string& out_dir);

}  // namespace qfrenet
