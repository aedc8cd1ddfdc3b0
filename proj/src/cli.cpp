#include "qfrenet/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "qfrenet/csv.hpp"
#include "qfrenet/scenario.hpp"
#include "qfrenet/validate.hpp"

namespace qfrenet {

namespace {

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  ScenarioConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }

  RunRecord record;
  try {
    record = run_scenario(cfg);
  } catch (const NonFiniteState& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    write_outputs(record, out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "i/o failure: %s\n", e.what());
    return 4;
  }

  std::printf("run: %zu samples -> %s\n", record.samples.size(), out_dir.c_str());
  std::printf("  norm drift (rk4):            %.3e\n", record.diagnostics.max_norm_drift);
  std::printf("  parallel-transport residual: %.3e\n",
              record.diagnostics.parallel_transport_residual);
  std::printf("  max |k2_bloch - k2_expect|:  %.3e\n",
              record.diagnostics.max_bloch_expect_gap);
  std::printf("  max |k2_expect - k2_proj|:   %.3e\n",
              record.diagnostics.max_expect_projector_gap);
  return 0;
}

int cmd_validate(std::uint64_t seed) {
  const auto results = run_invariant_suite(seed);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.passed;
    std::printf("%-*s  %s  (%s)\n", static_cast<int>(width), r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.detail.c_str());
  }
  std::printf("%zu checks, %zu failed\n", results.size(),
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(),
                                [](const CheckResult& r) { return !r.passed; })));
  return all_ok ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::string& values_csv, const std::string& out_dir) {
  ScenarioConfig base;
  try {
    base = load_config(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }

  if (!known_params(base.scenario).count(param)) {
    std::fprintf(stderr, "error: scenario does not read parameter '%s'\n", param.c_str());
    return 2;
  }

  std::vector<double> values;
  std::stringstream ss(values_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      const double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      values.push_back(v);
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: sweep value '%s' is not a number\n", tok.c_str());
      return 2;
    }
  }
  if (values.empty()) {
    std::fprintf(stderr, "error: sweep needs a non-empty values list\n");
    return 2;
  }

  std::string summary = "param,value,max_kappa2_expect,mean_v,regimes\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    ScenarioConfig cfg = base;
    cfg.params[param] = values[i];

    RunRecord record;
    try {
      record = run_scenario(cfg);
    } catch (const NonFiniteState& e) {
      std::fprintf(stderr, "numerical failure at %s=%g: %s\n", param.c_str(), values[i],
                   e.what());
      return 3;
    } catch (const ConfigError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }

    const std::string run_dir =
        out_dir + "/run_" + std::to_string(i) + "_" + param + "_" + format_double(values[i]);
    try {
      write_outputs(record, run_dir);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "i/o failure: %s\n", e.what());
      return 4;
    }

    double max_kappa2 = 0.0, v_sum = 0.0;
    for (const FrenetSample& sm : record.samples) {
      if (!std::isnan(sm.kappa2_expect)) max_kappa2 = std::max(max_kappa2, sm.kappa2_expect);
      v_sum += sm.v;
    }
    const double mean_v = record.samples.empty() ? 0.0 : v_sum / record.samples.size();

    std::string regimes;
    if (cfg.scenario == ScenarioKind::rabi) {
      RabiParams p;
      p.omega0 = cfg.param("omega0", 1.0);
      p.Omega0 = cfg.param("Omega0", 0.1);
      p.omega = cfg.param("omega", 0.9);
      for (const std::string& label : classify_regime(p)) {
        if (!regimes.empty()) regimes += ';';
        regimes += label;
      }
    }
    summary += param + "," + format_double(values[i]) + "," + format_double(max_kappa2) +
               "," + format_double(mean_v) + "," + regimes + "\n";
  }

  try {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/summary.csv", summary);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "i/o failure: %s\n", e.what());
    return 4;
  }
  std::printf("sweep: %zu runs -> %s\n", values.size(), out_dir.c_str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"quantum curve geometry toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", param, values_csv;
  std::uint64_t seed = 0x9fce11ed5eedULL;

  CLI::App* run = app.add_subcommand("run", "run a scenario and emit CSV/SVG");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("-o,--out", out_dir, "output directory")->required();

  CLI::App* validate = app.add_subcommand("validate", "run the invariant suite");
  validate->add_option("--seed", seed, "RNG seed for the suite draws");

  CLI::App* sweep = app.add_subcommand("sweep", "run a scenario across parameter values");
  sweep->add_option("config", config_path, "scenario config (JSON)")->required();
  sweep->add_option("--param", param, "parameter name to sweep")->required();
  sweep->add_option("--values", values_csv, "comma-separated values")->required();
  sweep->add_option("-o,--out", out_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) return cmd_run(config_path, out_dir);
  if (validate->parsed()) return cmd_validate(seed);
  if (sweep->parsed()) return cmd_sweep(config_path, param, values_csv, out_dir);
  return 2;
}

}  // namespace qfrenet
