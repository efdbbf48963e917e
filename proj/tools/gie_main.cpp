// Command-line front end: parses a scenario config, dispatches one of the
// six subcommands, and writes deterministic JSON/CSV reports.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gie/config.hpp"
#include "gie/errors.hpp"
#include "gie/scenario.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  std::string out;
  std::string format = "both";
  std::optional<std::int64_t> seed;
  int threads = 0;
  bool quiet = false;
};

std::string default_out_dir() {
  const char* env = std::getenv("GIE_OUT_DIR");
  return (env && *env) ? env : ".";
}

// Resolve the output basename: --out wins; otherwise <config stem>_<command>
// inside GIE_OUT_DIR (or the current directory).
fs::path output_base(const GlobalOptions& g, const std::string& config_path,
                     const std::string& command) {
  if (!g.out.empty()) return fs::path(g.out);
  const std::string stem = fs::path(config_path).stem().string();
  return fs::path(default_out_dir()) / (stem + "_" + command);
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw gie::ConfigError("output: cannot open '" + path.string() +
                           "' for writing");
  }
  out << content;
}

int run_command(const std::string& command, const std::string& config_path,
                const GlobalOptions& g) {
  const gie::ScenarioConfig cfg = gie::load_config_file(config_path);

  gie::RunOptions opt;
  if (g.seed) opt.seed_override = static_cast<std::uint64_t>(*g.seed);
  opt.threads = g.threads;

  gie::RunArtifacts art;
  if (command == "simulate") {
    art = gie::run_scenario(cfg, opt);
  } else if (command == "sweep") {
    art = gie::run_sweep(cfg, opt);
  } else if (command == "compare") {
    art = gie::compare_mediators(cfg, opt);
  } else if (command == "discriminate") {
    art = gie::run_discriminate(cfg, opt);
  } else if (command == "plan") {
    art = gie::run_plan(cfg, opt);
  } else {
    art = gie::check_config(cfg, opt);
  }

  const fs::path base = output_base(g, config_path, command);
  if (g.format == "json" || g.format == "both") {
    write_file(fs::path(base).concat(".json"), art.report_json);
  }
  if (g.format == "csv" || g.format == "both") {
    write_file(fs::path(base).concat(".csv"), art.table_csv);
  }
  if (!g.quiet) {
    std::cout << art.summary << "\n";
    std::cout << "wrote " << base.string()
              << (g.format == "both" ? ".{json,csv}" : "." + g.format)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gie: simulator and analysis toolkit for gravitationally induced "
      "entanglement experiments"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--out", g.out,
                 "Output basename (may include a directory); extensions "
                 ".json/.csv are appended");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
  std::int64_t seed_arg = 0;
  CLI::Option* seed_opt =
      app.add_option("--seed", seed_arg, "Override the config seed");
  app.add_option("--threads", g.threads,
                 "Worker threads for sweeps (0 = auto)");
  app.add_flag("--quiet", g.quiet, "Suppress the stdout summary");

  std::string config_path;
  const char* commands[] = {"simulate",     "sweep", "compare",
                            "discriminate", "plan",  "check"};
  const char* descriptions[] = {
      "Run one scenario and report entanglement diagnostics",
      "Scan one parameter across a grid",
      "Evaluate several mediator models side by side",
      "Classify a decoherence record (free evolution vs spin echo)",
      "Check experimental feasibility against phase and decoherence limits",
      "Validate a config file and echo its normalized form"};
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->fallthrough();  // let global flags appear after the subcommand
    sub->add_option("config", config_path, "Scenario config (JSON)")
        ->required();
  }

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) g.seed = seed_arg;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, config_path, g);
  } catch (const gie::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const gie::TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return 4;
  } catch (const gie::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
