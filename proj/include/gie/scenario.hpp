#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "gie/config.hpp"

namespace gie {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunOptions {
  std::optional<std::uint64_t> seed_override;
  int threads = 0;  // sweep workers; 0 = one per hardware thread
};

struct RunArtifacts {
  std::string report_json;  // canonical report
  std::string table_csv;    // flat table rendering of the same results
  std::string summary;      // short human-readable recap for stdout
};

// Single protocol (or analytic phase-override) evaluation.
RunArtifacts run_scenario(const ScenarioConfig& cfg, const RunOptions& opt);

// One row per configured mediator variant; requires >= 2 variants.
RunArtifacts compare_mediators(const ScenarioConfig& cfg,
                               const RunOptions& opt);

// Grid evaluation over the configured sweep block (parallel workers).
RunArtifacts run_sweep(const ScenarioConfig& cfg, const RunOptions& opt);

// Spin-echo noise discrimination over the configured noise model.
RunArtifacts run_discriminate(const ScenarioConfig& cfg, const RunOptions& opt);

// Feasibility planner report.
RunArtifacts run_plan(const ScenarioConfig& cfg, const RunOptions& opt);

// Schema check: re-emits the normalized config.
RunArtifacts check_config(const ScenarioConfig& cfg, const RunOptions& opt);

// Deterministic per-point seed derivation for sweeps.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace gie
