#include "gie/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gie {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ConfigError(path + ": " + why);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(path + "." + it.key(), "unknown key");
  }
}

const json& require_object(const json& obj, const std::string& path,
                           const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required section is missing");
  const json& v = obj.at(key);
  if (!v.is_object()) fail(path + "." + key, "expected an object");
  return v;
}

double get_number(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required number is missing");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& path, const char* key,
                     double def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::optional<double> get_opt_number(const json& obj, const std::string& path,
                                     const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_int_or(const json& obj, const std::string& path, const char* key,
               int def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

bool get_bool_or(const json& obj, const std::string& path, const char* key,
                 bool def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path,
                       const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required string is missing");
  const json& v = obj.at(key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> get_number_array(const json& obj, const std::string& path,
                                     const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required array is missing");
  const json& v = obj.at(key);
  if (!v.is_array()) fail(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      fail(path + "." + key + "[" + std::to_string(i) + "]",
           "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::array<double, 2> get_pair_or(const json& obj, const std::string& path,
                                  const char* key, std::array<double, 2> def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    fail(path + "." + key, "expected an array of two numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::complex<double> get_complex_or(const json& obj, const std::string& path,
                                    const char* key,
                                    std::complex<double> def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(path + "." + key, "expected a number or an array [re, im]");
}

MediatorModel parse_mediator(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string model = get_string(j, path, "model");
  if (model == "gate") {
    check_keys(j, path, {"model", "alpha", "w", "cutoff", "inelasticity"});
    GateModel g;
    g.alpha = get_complex_or(j, path, "alpha", g.alpha);
    g.w = get_opt_number(j, path, "w");
    g.cutoff = get_int_or(j, path, "cutoff", g.cutoff);
    g.inelasticity = get_number_or(j, path, "inelasticity", g.inelasticity);
    return g;
  }
  if (model == "lqg") {
    check_keys(j, path,
               {"model", "mode_freqs_radps", "couplings", "x1_m", "x2_m",
                "cutoff", "wave_speed_mps", "k_max_times_min_distance",
                "shells"});
    LqgField l;
    if (j.contains("mode_freqs_radps")) {
      l.mode_freqs = get_number_array(j, path, "mode_freqs_radps");
    }
    if (j.contains("couplings")) {
      l.couplings = get_number_array(j, path, "couplings");
    }
    l.x1 = get_pair_or(j, path, "x1_m", l.x1);
    l.x2 = get_pair_or(j, path, "x2_m", l.x2);
    l.cutoff = get_int_or(j, path, "cutoff", l.cutoff);
    l.wave_speed = get_number_or(j, path, "wave_speed_mps", l.wave_speed);
    l.k_max_times_min_distance = get_number_or(
        j, path, "k_max_times_min_distance", l.k_max_times_min_distance);
    l.shells = get_int_or(j, path, "shells", l.shells);
    return l;
  }
  if (model == "mean_field") {
    check_keys(j, path, {"model"});
    return MeanField{};
  }
  if (model == "measured") {
    check_keys(j, path, {"model", "strength", "cutoff", "alpha"});
    MeasuredChannel m;
    m.strength = get_number_or(j, path, "strength", m.strength);
    m.cutoff = get_int_or(j, path, "cutoff", m.cutoff);
    m.alpha = get_complex_or(j, path, "alpha", m.alpha);
    return m;
  }
  if (model == "collapse") {
    check_keys(j, path, {"model", "rate_hz", "steps"});
    Collapse c;
    c.rate = get_opt_number(j, path, "rate_hz");
    c.steps = get_int_or(j, path, "steps", c.steps);
    return c;
  }
  if (model == "dephasing") {
    check_keys(j, path, {"model", "noise"});
    ClassicalDephasing d;
    if (j.contains("noise")) {
      const json& n = j.at("noise");
      const std::string npath = path + ".noise";
      if (!n.is_object()) fail(npath, "expected an object");
      check_keys(n, npath, {"means_rad", "sigmas_rad", "correlation", "draws"});
      PhaseNoiseSpec spec;
      spec.means = get_pair_or(n, npath, "means_rad", spec.means);
      spec.sigmas = get_pair_or(n, npath, "sigmas_rad", spec.sigmas);
      spec.correlation = get_number_or(n, npath, "correlation",
                                       spec.correlation);
      spec.draws = get_int_or(n, npath, "draws", spec.draws);
      if (spec.draws < 1) fail(npath + ".draws", "must be >= 1");
      if (std::abs(spec.correlation) > 1.0) {
        fail(npath + ".correlation", "must lie in [-1, 1]");
      }
      d.noise = spec;
    }
    return d;
  }
  if (model == "hybrid") {
    check_keys(j, path, {"model", "g1", "g2", "t"});
    HybridEnsemble h;
    h.g1 = get_number_or(j, path, "g1", h.g1);
    h.g2 = get_number_or(j, path, "g2", h.g2);
    h.t = get_number_or(j, path, "t", h.t);
    return h;
  }
  fail(path + ".model",
       "unknown mediator model '" + model +
           "' (expected gate|lqg|mean_field|measured|collapse|dephasing|"
           "hybrid)");
}

NoiseModel parse_noise(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string type = get_string(j, path, "type");
  if (type == "entangling_field") {
    check_keys(j, path,
               {"type", "mode_omegas_radps", "mode_couplings", "convention"});
    EntanglingFieldNoise n;
    n.mode_omegas = get_number_array(j, path, "mode_omegas_radps");
    n.mode_couplings = get_number_array(j, path, "mode_couplings");
    if (n.mode_omegas.size() != n.mode_couplings.size()) {
      fail(path + ".mode_couplings", "length must match mode_omegas_radps");
    }
    if (j.contains("convention")) {
      const std::string c = get_string(j, path, "convention");
      if (c == "printed") {
        n.convention = OverlapConvention::printed;
      } else if (c == "symmetric_branching") {
        n.convention = OverlapConvention::symmetric_branching;
      } else {
        fail(path + ".convention",
             "expected 'printed' or 'symmetric_branching'");
      }
    }
    return n;
  }
  if (type == "classical_dephasing") {
    check_keys(j, path,
               {"type", "sigma_rate_a_radps", "sigma_rate_b_radps",
                "correlation", "deterministic_rate_radps"});
    ClassicalDephasingNoise n;
    n.sigma_rate_a = get_number_or(j, path, "sigma_rate_a_radps", 0.0);
    n.sigma_rate_b = get_number_or(j, path, "sigma_rate_b_radps", 0.0);
    n.correlation = get_number_or(j, path, "correlation", n.correlation);
    n.deterministic_rate =
        get_number_or(j, path, "deterministic_rate_radps", 0.0);
    if (std::abs(n.correlation) > 1.0) {
      fail(path + ".correlation", "must lie in [-1, 1]");
    }
    return n;
  }
  if (type == "objective_collapse") {
    check_keys(j, path, {"type", "rate_hz"});
    ObjectiveCollapseNoise n;
    n.rate = get_number(j, path, "rate_hz");
    if (n.rate < 0.0) fail(path + ".rate_hz", "must be >= 0");
    return n;
  }
  fail(path + ".type",
       "unknown noise type '" + type +
           "' (expected entangling_field|classical_dephasing|objective_"
           "collapse)");
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail("config", "top level must be an object");
  check_keys(j, "config",
             {"schema_version", "seed", "experiment", "phases", "mediator",
              "mediators", "decoherence", "plan", "sweep", "outputs"});

  ScenarioConfig cfg;
  cfg.schema_version = get_int_or(j, "config", "schema_version", 1);
  if (cfg.schema_version != 1) {
    fail("config.schema_version", "unsupported version (expected 1)");
  }
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_integer() ||
        (s.is_number_integer() && !s.is_number_unsigned() &&
         s.get<long long>() < 0)) {
      fail("config.seed", "expected a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }

  const json& exp = require_object(j, "config", "experiment");
  check_keys(exp, "experiment",
             {"mass_kg", "d1_m", "d2_m", "d3_m", "arm_length_m",
              "velocity_mps", "interaction_time_s", "include_far_pair"});
  cfg.experiment.m = get_number(exp, "experiment", "mass_kg");
  cfg.experiment.d1 = get_number(exp, "experiment", "d1_m");
  cfg.experiment.d2 = get_number(exp, "experiment", "d2_m");
  cfg.experiment.d3 = get_opt_number(exp, "experiment", "d3_m");
  cfg.experiment.L = get_opt_number(exp, "experiment", "arm_length_m");
  cfg.experiment.v = get_opt_number(exp, "experiment", "velocity_mps");
  cfg.experiment.dt = get_number(exp, "experiment", "interaction_time_s");
  cfg.experiment.include_far_pair =
      get_bool_or(exp, "experiment", "include_far_pair", true);
  validate(cfg.experiment);

  if (j.contains("phases")) {
    const json& ph = j.at("phases");
    if (!ph.is_object()) fail("config.phases", "expected an object");
    check_keys(ph, "phases", {"phi1_rad", "delta_phi_rad"});
    PhasePair pp{};
    pp.phi1 = get_number_or(ph, "phases", "phi1_rad", 0.0);
    pp.delta_phi = get_number_or(ph, "phases", "delta_phi_rad", 0.0);
    cfg.phase_override = pp;
  }

  if (j.contains("mediator") && j.contains("mediators")) {
    fail("config.mediator", "give either 'mediator' or 'mediators', not both");
  }
  if (j.contains("mediator")) {
    cfg.mediators.push_back(parse_mediator(j.at("mediator"), "mediator"));
  }
  if (j.contains("mediators")) {
    const json& arr = j.at("mediators");
    if (!arr.is_array() || arr.empty()) {
      fail("config.mediators", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      cfg.mediators.push_back(
          parse_mediator(arr[i], "mediators[" + std::to_string(i) + "]"));
    }
  }
  if (cfg.phase_override && !cfg.mediators.empty()) {
    fail("config.phases",
         "the analytic phase override and a mediator block are mutually "
         "exclusive");
  }

  if (j.contains("decoherence")) {
    const json& dec = j.at("decoherence");
    if (!dec.is_object()) fail("config.decoherence", "expected an object");
    check_keys(dec, "decoherence",
               {"noise", "total_time_s", "threshold", "budget"});
    if (dec.contains("noise")) {
      DiscriminationSpec d;
      d.noise = parse_noise(dec.at("noise"), "decoherence.noise");
      d.total_time = get_number(dec, "decoherence", "total_time_s");
      if (!(d.total_time > 0.0)) {
        fail("decoherence.total_time_s", "must be > 0");
      }
      d.classify_threshold =
          get_number_or(dec, "decoherence", "threshold", 0.9);
      if (!(d.classify_threshold > 0.0 && d.classify_threshold < 1.0)) {
        fail("decoherence.threshold", "must lie in (0, 1)");
      }
      cfg.discrimination = d;
    } else if (dec.contains("total_time_s") || dec.contains("threshold")) {
      fail("decoherence.noise",
           "required when total_time_s or threshold is given");
    }
    if (dec.contains("budget")) {
      const json& b = dec.at("budget");
      const std::string bpath = "decoherence.budget";
      if (!b.is_object()) fail(bpath, "expected an object");
      check_keys(b, bpath,
                 {"g_scale", "g_power", "rho_scale", "rho_power",
                  "omega_cutoff_radps", "dispersion_mps"});
      BudgetSpec spec;
      spec.g_scale = get_number(b, bpath, "g_scale");
      spec.g_power = get_number_or(b, bpath, "g_power", 0.0);
      spec.rho_scale = get_number(b, bpath, "rho_scale");
      spec.rho_power = get_number_or(b, bpath, "rho_power", 0.0);
      spec.omega_cutoff = get_number(b, bpath, "omega_cutoff_radps");
      spec.dispersion = get_number_or(b, bpath, "dispersion_mps",
                                      spec.dispersion);
      if (!(spec.omega_cutoff > 0.0)) {
        fail(bpath + ".omega_cutoff_radps", "must be > 0");
      }
      if (!(spec.dispersion > 0.0)) {
        fail(bpath + ".dispersion_mps", "must be > 0");
      }
      cfg.budget = spec;
    }
  }

  if (j.contains("plan")) {
    const json& pl = j.at("plan");
    if (!pl.is_object()) fail("config.plan", "expected an object");
    check_keys(pl, "plan", {"slack"});
    cfg.plan_slack = get_number_or(pl, "plan", "slack", cfg.plan_slack);
    if (!(cfg.plan_slack >= 0.0 && cfg.plan_slack < 1.0)) {
      fail("plan.slack", "must lie in [0, 1)");
    }
  }

  if (j.contains("sweep")) {
    const json& sw = j.at("sweep");
    if (!sw.is_object()) fail("config.sweep", "expected an object");
    check_keys(sw, "sweep", {"parameter", "from", "to", "steps", "scale"});
    SweepSpec spec;
    spec.parameter = get_string(sw, "sweep", "parameter");
    spec.from = get_number(sw, "sweep", "from");
    spec.to = get_number(sw, "sweep", "to");
    spec.steps = get_int_or(sw, "sweep", "steps", 0);
    if (spec.steps < 2) fail("sweep.steps", "must be >= 2");
    spec.scale = sw.contains("scale") ? get_string(sw, "sweep", "scale")
                                      : std::string("linear");
    if (spec.scale != "linear" && spec.scale != "log") {
      fail("sweep.scale", "expected 'linear' or 'log'");
    }
    if (spec.scale == "log" && !(spec.from > 0.0 && spec.to > 0.0)) {
      fail("sweep.from", "log scale requires positive endpoints");
    }
    cfg.sweep = spec;
    // Referenced parameter paths must exist: probe on a copy.
    ScenarioConfig probe = cfg;
    set_parameter(probe, spec.parameter, spec.from);
  }

  if (j.contains("outputs")) {
    const json& outs = j.at("outputs");
    if (!outs.is_array()) {
      fail("config.outputs", "expected an array of strings");
    }
    static const std::vector<std::string> allowed = {
        "probabilities", "witness",  "negativity", "entropy",
        "decay",         "phases",   "correlations", "report"};
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (!outs[i].is_string()) {
        fail("config.outputs[" + std::to_string(i) + "]", "expected a string");
      }
      const std::string o = outs[i].get<std::string>();
      bool known = false;
      for (const auto& a : allowed) known = known || a == o;
      if (!known) {
        fail("config.outputs[" + std::to_string(i) + "]",
             "unknown output '" + o + "'");
      }
      cfg.outputs.push_back(o);
    }
  }
  if (cfg.outputs.empty()) {
    cfg.outputs = {"probabilities", "witness", "negativity", "entropy"};
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

void set_parameter(ScenarioConfig& cfg, const std::string& path,
                   double value) {
  ExperimentParams& p = cfg.experiment;
  if (path == "experiment.mass_kg") {
    p.m = value;
    return;
  }
  if (path == "experiment.d1_m") {
    p.d1 = value;
    return;
  }
  if (path == "experiment.d2_m") {
    p.d2 = value;
    return;
  }
  if (path == "experiment.d3_m") {
    p.d3 = value;
    return;
  }
  if (path == "experiment.interaction_time_s") {
    p.dt = value;
    return;
  }
  if (path == "experiment.arm_length_m") {
    p.L = value;
    return;
  }
  if (path == "experiment.velocity_mps") {
    p.v = value;
    return;
  }
  if (path == "phases.phi1_rad" || path == "phases.delta_phi_rad") {
    if (!cfg.phase_override) {
      if (!cfg.mediators.empty()) {
        throw ConfigError(
            "sweep.parameter: phase paths require the analytic mode (no "
            "mediator block)");
      }
      cfg.phase_override = PhasePair{0.0, 0.0};
    }
    if (path == "phases.phi1_rad") {
      cfg.phase_override->phi1 = value;
    } else {
      cfg.phase_override->delta_phi = value;
    }
    return;
  }
  if (path.rfind("mediator.", 0) == 0) {
    if (cfg.mediators.size() != 1) {
      throw ConfigError(
          "sweep.parameter: mediator paths require exactly one mediator");
    }
    MediatorModel& m = cfg.mediators.front();
    const std::string field = path.substr(std::string("mediator.").size());
    auto wrong_model = [&](const char* needed) -> ConfigError {
      return ConfigError("sweep.parameter: '" + path + "' requires the " +
                         needed + " model (have '" + mediator_tag(m) + "')");
    };
    if (field == "w" || field == "inelasticity") {
      auto* g = std::get_if<GateModel>(&m);
      if (!g) throw wrong_model("gate");
      if (field == "w") {
        g->w = value;
      } else {
        g->inelasticity = value;
      }
      return;
    }
    if (field == "strength") {
      auto* mc = std::get_if<MeasuredChannel>(&m);
      if (!mc) throw wrong_model("measured");
      mc->strength = value;
      return;
    }
    if (field == "rate_hz") {
      auto* c = std::get_if<Collapse>(&m);
      if (!c) throw wrong_model("collapse");
      c->rate = value;
      return;
    }
    if (field == "g1" || field == "g2" || field == "t") {
      auto* h = std::get_if<HybridEnsemble>(&m);
      if (!h) throw wrong_model("hybrid");
      if (field == "g1") {
        h->g1 = value;
      } else if (field == "g2") {
        h->g2 = value;
      } else {
        h->t = value;
      }
      return;
    }
    if (field == "sigma_rad") {
      auto* d = std::get_if<ClassicalDephasing>(&m);
      if (!d) throw wrong_model("dephasing");
      if (!d->noise) d->noise = PhaseNoiseSpec{};
      d->noise->sigmas = {value, value};
      return;
    }
  }
  throw ConfigError("sweep.parameter: unknown parameter path '" + path + "'");
}

std::string mediator_tag(const MediatorModel& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GateModel>) return "gate";
        if constexpr (std::is_same_v<T, LqgField>) return "lqg";
        if constexpr (std::is_same_v<T, MeanField>) return "mean_field";
        if constexpr (std::is_same_v<T, MeasuredChannel>) return "measured";
        if constexpr (std::is_same_v<T, Collapse>) return "collapse";
        if constexpr (std::is_same_v<T, ClassicalDephasing>)
          return "dephasing";
        if constexpr (std::is_same_v<T, HybridEnsemble>) return "hybrid";
      },
      m);
}

DecoherenceSpec to_decoherence_spec(const BudgetSpec& b) {
  DecoherenceSpec spec;
  spec.g = [gs = b.g_scale, gp = b.g_power](double k) {
    return gs * std::pow(k, gp);
  };
  spec.rho = [rs = b.rho_scale, rp = b.rho_power](double k) {
    return rs * std::pow(k, rp);
  };
  spec.Omega = b.omega_cutoff;
  spec.c_disp = b.dispersion;
  return spec;
}

}  // namespace gie
