#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gie/decoherence.hpp"
#include "gie/interferometer.hpp"
#include "gie/mediator.hpp"

namespace gie {

struct SweepSpec {
  std::string parameter;  // dotted path, e.g. "experiment.d2_m"
  double from = 0.0;
  double to = 0.0;
  int steps = 2;                 // >= 2
  std::string scale = "linear";  // "linear" | "log"
};

// Declarative environmental budget: power-law coupling and mode density,
// g(k) = g_scale * k^g_power,  rho(k) = rho_scale * k^rho_power,
// integrated up to the angular-frequency cutoff.
struct BudgetSpec {
  double g_scale = 0.0;
  double g_power = 0.0;
  double rho_scale = 0.0;
  double rho_power = 0.0;
  double omega_cutoff = 0.0;          // rad/s
  double dispersion = constants.c;    // m/s
};

struct DiscriminationSpec {
  NoiseModel noise;
  double total_time = 0.0;          // s
  double classify_threshold = 0.9;  // "visibility recovered" bar
};

struct ScenarioConfig {
  int schema_version = 1;
  std::uint64_t seed = 0;
  ExperimentParams experiment;
  // When set, outputs are computed on the analytic branch state at these
  // phases instead of running a mediator protocol.
  std::optional<PhasePair> phase_override;
  std::vector<MediatorModel> mediators;  // one for simulate, >= 2 for compare
  std::optional<BudgetSpec> budget;
  std::optional<DiscriminationSpec> discrimination;
  std::optional<SweepSpec> sweep;
  std::vector<std::string> outputs;  // empty -> default output set
  double plan_slack = 0.8;
};

// Parse and validate a config. Throws ConfigError carrying the dotted path
// of the offending field on any schema violation.
ScenarioConfig load_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

// Overwrites one numeric parameter by dotted path (the sweep mechanism).
// Throws ConfigError for unknown paths or model mismatches.
void set_parameter(ScenarioConfig& cfg, const std::string& path, double value);

// Short tag naming a mediator variant ("gate", "lqg", "mean_field",
// "measured", "collapse", "dephasing", "hybrid").
std::string mediator_tag(const MediatorModel& m);

// Materializes the power-law budget into an integrable environment spec.
DecoherenceSpec to_decoherence_spec(const BudgetSpec& b);

}  // namespace gie
