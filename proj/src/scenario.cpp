#include "obslab/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace obslab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

const json& require(const json& j, const std::string& field, const std::string& scope) {
  auto it = j.find(field);
  if (it == j.end()) fail(scope.empty() ? field : scope + "." + field, "missing");
  return *it;
}

double get_num(const json& j, const std::string& field, const std::string& scope) {
  const json& v = require(j, field, scope);
  if (!v.is_number()) fail(scope.empty() ? field : scope + "." + field, "must be a number");
  return v.get<double>();
}

double get_num_or(const json& j, const std::string& field, double fallback) {
  auto it = j.find(field);
  if (it == j.end()) return fallback;
  return it->get<double>();
}

std::array<double, 2> get_vec2(const json& j, const std::string& field,
                               const std::string& scope, std::array<double, 2> fallback) {
  auto it = j.find(field);
  if (it == j.end()) return fallback;
  if (!it->is_array() || it->size() != 2)
    fail(scope + "." + field, "must be a 2-element array");
  return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

// ---- plant -----------------------------------------------------------------

void apply_pendulum_overrides(PendulumParams& p, const json& o) {
  p.J = get_num_or(o, "J", p.J);
  p.m = get_num_or(o, "m", p.m);
  p.l_b = get_num_or(o, "l_b", p.l_b);
  p.g = get_num_or(o, "g", p.g);
  p.theta1 = get_num_or(o, "theta1", p.theta1);
  p.theta2 = get_num_or(o, "theta2", p.theta2);
  p.vartheta = get_num_or(o, "vartheta", p.vartheta);
}

void apply_hydro_overrides(HydroParams& p, const json& o) {
  p.a1 = get_num_or(o, "a1", p.a1);
  p.a2 = get_num_or(o, "a2", p.a2);
  p.a3 = get_num_or(o, "a3", p.a3);
  p.theta1 = get_num_or(o, "theta1", p.theta1);
  p.theta2 = get_num_or(o, "theta2", p.theta2);
  p.vartheta = get_num_or(o, "vartheta", p.vartheta);
}

json pendulum_to_json(const PendulumParams& p) {
  return json{{"J", p.J},           {"m", p.m},           {"l_b", p.l_b},
              {"g", p.g},           {"theta1", p.theta1}, {"theta2", p.theta2},
              {"vartheta", p.vartheta}};
}

json hydro_to_json(const HydroParams& p) {
  return json{{"a1", p.a1},         {"a2", p.a2},         {"a3", p.a3},
              {"theta1", p.theta1}, {"theta2", p.theta2}, {"vartheta", p.vartheta}};
}

// ---- observers -------------------------------------------------------------

ObserverKind observer_kind_from_string(const std::string& s) {
  if (s == "ii_pendulum") return ObserverKind::ii_pendulum;
  if (s == "sm_pendulum") return ObserverKind::sm_pendulum;
  if (s == "ii_hydro") return ObserverKind::ii_hydro;
  if (s == "hosm") return ObserverKind::hosm;
  throw ConfigError("config field 'observers[].kind': unknown observer kind '" + s + "'");
}

std::string to_string(ObserverKind k) {
  switch (k) {
    case ObserverKind::ii_pendulum: return "ii_pendulum";
    case ObserverKind::sm_pendulum: return "sm_pendulum";
    case ObserverKind::ii_hydro: return "ii_hydro";
    case ObserverKind::hosm: return "hosm";
  }
  throw std::logic_error("unreachable");
}

ObserverConfig parse_observer(const json& j, std::size_t index) {
  const std::string scope = "observers[" + std::to_string(index) + "]";
  ObserverConfig cfg;
  cfg.kind = observer_kind_from_string(
      require(j, "kind", scope).get<std::string>());
  cfg.name = j.value("name", to_string(cfg.kind));

  switch (cfg.kind) {
    case ObserverKind::ii_pendulum: {
      IIPendObsState o;
      o.k1 = get_num(j, "k1", scope);
      o.gamma1 = get_num_or(j, "gamma1", 1.0);
      o.gamma2 = get_num_or(j, "gamma2", 1.0);
      o.x2I = get_num_or(j, "x2I", 0.0);
      o.theta1I = get_num_or(j, "theta1I", 0.0);
      o.theta2I = get_num_or(j, "theta2I", 0.0);
      o.freeze_adaptation = j.value("freeze_adaptation", false);
      cfg.initial = o;
      break;
    }
    case ObserverKind::sm_pendulum: {
      SMObsState o;
      o.alpha1 = get_num(j, "alpha1", scope);
      o.alpha2 = get_num(j, "alpha2", scope);
      o.theta_bar = get_vec2(j, "theta_bar", scope, {0.0, 0.0});
      o.x1hat = get_num_or(j, "x1hat", 0.0);
      o.x2hat = get_num_or(j, "x2hat", 0.0);
      o.delta_theta = get_vec2(j, "delta_theta", scope, {0.0, 0.0});
      if (auto it = j.find("Gamma0"); it != j.end()) {
        if (it->is_number()) {
          o.Gamma = Mat2::scaled_identity(it->get<double>());
        } else if (it->is_array() && it->size() == 3) {
          const double g11 = (*it)[0].get<double>();
          const double g12 = (*it)[1].get<double>();
          const double g22 = (*it)[2].get<double>();
          o.Gamma = Mat2{g11, g12, g12, g22};
        } else {
          fail(scope + ".Gamma0", "must be a scalar or [g11, g12, g22]");
        }
      }
      o.freeze_adaptation = j.value("freeze_adaptation", false);
      cfg.initial = o;
      break;
    }
    case ObserverKind::ii_hydro: {
      IIHydroObsState o;
      o.k1 = get_num(j, "k1", scope);
      o.x2I = get_num_or(j, "x2I", 0.0);
      o.theta1I = get_num_or(j, "theta1I", 0.0);
      o.theta2I = get_num_or(j, "theta2I", 0.0);
      o.x3hat = get_num_or(j, "x3hat", 0.0);
      o.freeze_adaptation = j.value("freeze_adaptation", false);
      cfg.initial = o;
      break;
    }
    case ObserverKind::hosm: {
      HOSMObsState o;
      o.L = get_num(j, "L", scope);
      o.c1 = get_num(j, "c1", scope);
      o.c2 = get_num(j, "c2", scope);
      o.c3 = get_num(j, "c3", scope);
      o.c4 = get_num(j, "c4", scope);
      o.a4 = get_num_or(j, "a4", 1.0);
      o.a5 = get_num_or(j, "a5", 1.0);
      if (auto it = j.find("zeta"); it != j.end()) {
        if (!it->is_array() || it->size() != 4)
          fail(scope + ".zeta", "must be a 4-element array");
        for (std::size_t i = 0; i < 4; ++i) o.zeta[i] = (*it)[i].get<double>();
      }
      cfg.initial = o;
      break;
    }
  }
  return cfg;
}

json observer_to_json(const ObserverConfig& cfg) {
  json j{{"kind", to_string(cfg.kind)}, {"name", cfg.name}};
  std::visit(
      [&j](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, IIPendObsState>) {
          j["k1"] = o.k1;
          j["gamma1"] = o.gamma1;
          j["gamma2"] = o.gamma2;
          j["x2I"] = o.x2I;
          j["theta1I"] = o.theta1I;
          j["theta2I"] = o.theta2I;
          j["freeze_adaptation"] = o.freeze_adaptation;
        } else if constexpr (std::is_same_v<T, SMObsState>) {
          j["alpha1"] = o.alpha1;
          j["alpha2"] = o.alpha2;
          j["theta_bar"] = o.theta_bar;
          j["x1hat"] = o.x1hat;
          j["x2hat"] = o.x2hat;
          j["delta_theta"] = o.delta_theta;
          j["Gamma0"] = json::array({o.Gamma.a11, o.Gamma.a12, o.Gamma.a22});
          j["freeze_adaptation"] = o.freeze_adaptation;
        } else if constexpr (std::is_same_v<T, IIHydroObsState>) {
          j["k1"] = o.k1;
          j["x2I"] = o.x2I;
          j["theta1I"] = o.theta1I;
          j["theta2I"] = o.theta2I;
          j["x3hat"] = o.x3hat;
          j["freeze_adaptation"] = o.freeze_adaptation;
        } else {
          j["L"] = o.L;
          j["c1"] = o.c1;
          j["c2"] = o.c2;
          j["c3"] = o.c3;
          j["c4"] = o.c4;
          j["a4"] = o.a4;
          j["a5"] = o.a5;
          j["zeta"] = o.zeta;
        }
      },
      cfg.initial);
  return j;
}

}  // namespace

// ---- validation ------------------------------------------------------------

void ScenarioConfig::validate() const {
  if (!(integrator.duration > 0.0)) fail("integrator.duration", "must be > 0");
  if (!(integrator.step > 0.0)) fail("integrator.step", "must be > 0");
  if (!(integrator.sample_period > 0.0)) fail("integrator.sample_period", "must be > 0");

  const double steps_per_sample = integrator.sample_period / integrator.step;
  if (std::fabs(steps_per_sample - std::round(steps_per_sample)) > 1e-6)
    fail("integrator.sample_period", "must be an integer multiple of step");
  const double samples = integrator.duration / integrator.sample_period;
  if (std::fabs(samples - std::round(samples)) > 1e-6 * std::max(1.0, samples))
    fail("integrator.duration", "must be an integer multiple of sample_period");

  if (observers.empty()) fail("observers", "at least one observer is required");

  for (const auto& o : observers) {
    if (o.name.empty()) fail("observers[].name", "must not be empty");
    for (const auto& other : observers)
      if (&o != &other && o.name == other.name)
        fail("observers[].name", "duplicate observer name '" + o.name + "'");
    const bool pend_kind =
        o.kind == ObserverKind::ii_pendulum || o.kind == ObserverKind::sm_pendulum;
    if (plant_kind == PlantKind::pendulum && !pend_kind)
      fail("observers[].kind", "'" + to_string(o.kind) + "' does not observe the pendulum");
    if (plant_kind == PlantKind::hydro && pend_kind)
      fail("observers[].kind", "'" + to_string(o.kind) + "' does not observe the hydro plant");
    std::visit([](const auto& s) { s.validate(); }, o.initial);
  }

  std::visit([](const auto& p) { p.validate(); }, plant);

  if (mode == Mode::closed_loop) {
    if (plant_kind != PlantKind::pendulum)
      fail("mode", "closed_loop is only valid for the pendulum plant");
    if (!controller) fail("controller", "missing (required in closed_loop mode)");
    controller->gains.validate();
    if (controller->law == ControlLaw::adaptive) {
      bool found = false;
      for (const auto& o : observers)
        if (o.name == controller->observer) {
          found = true;
          if (o.kind == ObserverKind::hosm || o.kind == ObserverKind::ii_hydro)
            fail("controller.observer", "'" + o.name + "' provides no pendulum estimates");
        }
      if (!found)
        fail("controller.observer", "no observer named '" + controller->observer + "'");
    }
    if (controller->saturation.enabled && !(controller->saturation.limit > 0.0))
      fail("controller.saturation.limit", "must be > 0");
  }

  if (noise.kind == NoiseKind::gaussian) {
    if (noise.variance < 0.0) fail("noise.variance", "must be >= 0");
    if (noise.target != "x1") fail("noise.target", "only the x1 measurement can be corrupted");
  }

  if (excitation) {
    bool found = false;
    for (const auto& o : observers)
      if (o.name == excitation->observer) found = true;
    if (!found)
      fail("excitation.observer", "no observer named '" + excitation->observer + "'");
    if (!(excitation->window > 0.0)) fail("excitation.window", "must be > 0");
    if (excitation->stride < excitation->window)
      fail("excitation.stride", "must be >= window");
    if (excitation->window > integrator.duration)
      fail("excitation.window", "must not exceed the run duration");
  }
}

// ---- parse / serialize ------------------------------------------------------

ScenarioConfig parse_scenario(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }

  // A file may start from a canned preset and override run-level fields.
  if (auto it = j.find("preset"); it != j.end()) {
    ScenarioConfig cfg = preset_scenario(it->get<std::string>());
    cfg.name = j.value("name", cfg.name);
    cfg.seed = j.value("seed", cfg.seed);
    if (auto ij = j.find("integrator"); ij != j.end()) {
      cfg.integrator.step = get_num_or(*ij, "step", cfg.integrator.step);
      cfg.integrator.sample_period =
          get_num_or(*ij, "sample_period", cfg.integrator.sample_period);
      cfg.integrator.duration = get_num_or(*ij, "duration", cfg.integrator.duration);
    }
    if (auto nj = j.find("noise"); nj != j.end()) {
      const std::string kind = nj->value("kind", std::string("none"));
      if (kind == "none") {
        cfg.noise = NoiseSpec{};
      } else if (kind == "gaussian") {
        cfg.noise.kind = NoiseKind::gaussian;
        cfg.noise.variance = get_num(*nj, "variance", "noise");
        cfg.noise.seed = nj->value("seed", cfg.seed);
        cfg.noise.target = nj->value("target", std::string("x1"));
      } else {
        fail("noise.kind", "must be 'none' or 'gaussian'");
      }
    }
    if (auto cj = j.find("channels"); cj != j.end())
      cfg.channels = cj->get<std::vector<std::string>>();
    cfg.validate();
    return cfg;
  }

  ScenarioConfig cfg;
  cfg.name = j.value("name", std::string("scenario"));

  const json& plant = require(j, "plant", "");
  const std::string plant_kind = require(plant, "kind", "plant").get<std::string>();
  if (plant_kind == "pendulum") {
    cfg.plant_kind = PlantKind::pendulum;
    PendulumParams p = plant.contains("preset")
                           ? pendulum_preset(plant["preset"].get<std::string>())
                           : PendulumParams{};
    if (plant.contains("params")) apply_pendulum_overrides(p, plant["params"]);
    if (plant.contains("overrides")) apply_pendulum_overrides(p, plant["overrides"]);
    cfg.plant = p;
  } else if (plant_kind == "hydro") {
    cfg.plant_kind = PlantKind::hydro;
    HydroParams p = plant.contains("preset")
                        ? hydro_preset(plant["preset"].get<std::string>())
                        : HydroParams{};
    if (plant.contains("params")) apply_hydro_overrides(p, plant["params"]);
    if (plant.contains("overrides")) apply_hydro_overrides(p, plant["overrides"]);
    cfg.plant = p;
  } else {
    fail("plant.kind", "must be 'pendulum' or 'hydro'");
  }

  if (auto it = plant.find("initial"); it != plant.end()) {
    cfg.plant_ic[0] = get_num_or(*it, "x1", 0.0);
    cfg.plant_ic[1] = get_num_or(*it, "x2", 0.0);
    cfg.plant_ic[2] = get_num_or(*it, "x3", 0.0);
  }

  const std::string mode = j.value("mode", std::string("open_loop"));
  if (mode == "open_loop") {
    cfg.mode = Mode::open_loop;
  } else if (mode == "closed_loop") {
    cfg.mode = Mode::closed_loop;
  } else {
    fail("mode", "must be 'open_loop' or 'closed_loop'");
  }

  if (cfg.mode == Mode::open_loop) {
    const json& input = require(j, "input", "");
    try {
      cfg.input = input_kind_from_string(require(input, "kind", "input").get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("input.kind", e.what());
    }
  } else {
    const json& c = require(j, "controller", "");
    ControllerConfig ctl;
    const std::string law = c.value("law", std::string("adaptive"));
    if (law == "ideal") {
      ctl.law = ControlLaw::ideal;
    } else if (law == "adaptive") {
      ctl.law = ControlLaw::adaptive;
    } else {
      fail("controller.law", "must be 'ideal' or 'adaptive'");
    }
    ctl.gains.kp = get_num(c, "kp", "controller");
    ctl.gains.kv = get_num(c, "kv", "controller");
    try {
      ctl.reference = reference_kind_from_string(
          require(j, "reference", "").value("kind", std::string("t2")));
    } catch (const std::invalid_argument& e) {
      fail("reference.kind", e.what());
    }
    ctl.observer = c.value("observer", std::string());
    if (auto it = c.find("saturation"); it != c.end()) {
      ctl.saturation.enabled = it->value("enabled", true);
      ctl.saturation.limit = get_num_or(*it, "limit", 200.0);
    }
    cfg.controller = ctl;
  }

  const json& obs = require(j, "observers", "");
  if (!obs.is_array()) fail("observers", "must be an array");
  for (std::size_t i = 0; i < obs.size(); ++i)
    cfg.observers.push_back(parse_observer(obs[i], i));

  const json& integ = require(j, "integrator", "");
  cfg.integrator.step = get_num_or(integ, "step", 1e-4);
  cfg.integrator.sample_period = get_num_or(integ, "sample_period", cfg.integrator.step);
  cfg.integrator.duration = get_num(integ, "duration", "integrator");

  cfg.seed = j.value("seed", std::uint64_t{0});

  if (auto it = j.find("noise"); it != j.end()) {
    const std::string kind = it->value("kind", std::string("none"));
    if (kind == "none") {
      cfg.noise.kind = NoiseKind::none;
    } else if (kind == "gaussian") {
      cfg.noise.kind = NoiseKind::gaussian;
      cfg.noise.variance = get_num(*it, "variance", "noise");
      cfg.noise.seed = it->value("seed", cfg.seed);
      cfg.noise.target = it->value("target", std::string("x1"));
    } else {
      fail("noise.kind", "must be 'none' or 'gaussian'");
    }
  }

  if (auto it = j.find("channels"); it != j.end()) {
    if (!it->is_array()) fail("channels", "must be an array of channel names");
    cfg.channels = it->get<std::vector<std::string>>();
  }

  if (auto it = j.find("excitation"); it != j.end()) {
    ExcitationConfig e;
    e.observer = require(*it, "observer", "excitation").get<std::string>();
    e.window = get_num_or(*it, "window", 2.0);
    e.stride = get_num_or(*it, "stride", e.window);
    e.lambda_floor = get_num_or(*it, "lambda_floor", 1e-6);
    cfg.excitation = e;
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
  json j;
  j["name"] = cfg.name;

  json plant;
  if (cfg.plant_kind == PlantKind::pendulum) {
    plant["kind"] = "pendulum";
    plant["params"] = pendulum_to_json(cfg.pendulum());
  } else {
    plant["kind"] = "hydro";
    plant["params"] = hydro_to_json(cfg.hydro());
  }
  plant["initial"] = json{{"x1", cfg.plant_ic[0]}, {"x2", cfg.plant_ic[1]}};
  if (cfg.plant_kind == PlantKind::hydro) plant["initial"]["x3"] = cfg.plant_ic[2];
  j["plant"] = plant;

  j["mode"] = cfg.mode == Mode::open_loop ? "open_loop" : "closed_loop";
  if (cfg.mode == Mode::open_loop) {
    j["input"] = json{{"kind", to_string(cfg.input)}};
  } else {
    const ControllerConfig& c = *cfg.controller;
    j["controller"] = json{{"law", c.law == ControlLaw::ideal ? "ideal" : "adaptive"},
                           {"kp", c.gains.kp},
                           {"kv", c.gains.kv},
                           {"observer", c.observer},
                           {"saturation", json{{"enabled", c.saturation.enabled},
                                               {"limit", c.saturation.limit}}}};
    j["reference"] = json{{"kind", to_string(c.reference)}};
  }

  j["observers"] = json::array();
  for (const auto& o : cfg.observers) j["observers"].push_back(observer_to_json(o));

  j["integrator"] = json{{"step", cfg.integrator.step},
                         {"sample_period", cfg.integrator.sample_period},
                         {"duration", cfg.integrator.duration}};
  j["seed"] = cfg.seed;

  if (cfg.noise.kind == NoiseKind::none) {
    j["noise"] = json{{"kind", "none"}};
  } else {
    j["noise"] = json{{"kind", "gaussian"},
                      {"variance", cfg.noise.variance},
                      {"seed", cfg.noise.seed},
                      {"target", cfg.noise.target}};
  }

  if (cfg.channels) j["channels"] = *cfg.channels;
  if (cfg.excitation)
    j["excitation"] = json{{"observer", cfg.excitation->observer},
                           {"window", cfg.excitation->window},
                           {"stride", cfg.excitation->stride},
                           {"lambda_floor", cfg.excitation->lambda_floor}};

  return j.dump(2) + "\n";
}

// ---- presets ---------------------------------------------------------------

namespace {

ObserverConfig ii_pend_observer(const std::string& name, double k1, double gamma1,
                                double gamma2) {
  IIPendObsState o;
  o.k1 = k1;
  o.gamma1 = gamma1;
  o.gamma2 = gamma2;
  return {ObserverKind::ii_pendulum, name, o};
}

ObserverConfig sm_pend_observer(const std::string& name, double alpha1, double alpha2,
                                std::array<double, 2> theta_bar, double gamma0) {
  SMObsState o;
  o.alpha1 = alpha1;
  o.alpha2 = alpha2;
  o.theta_bar = theta_bar;
  o.Gamma = Mat2::scaled_identity(gamma0);
  return {ObserverKind::sm_pendulum, name, o};
}

ObserverConfig hosm_observer(const std::string& name, double c4) {
  HOSMObsState o;
  o.L = 650.0;
  o.c1 = 3.0;
  o.c2 = 4.16;
  o.c3 = 3.06;
  o.c4 = c4;
  o.a4 = 1.0;
  o.a5 = 1.0;
  return {ObserverKind::hosm, name, o};
}

ObserverConfig ii_hydro_observer(const std::string& name, double k1) {
  IIHydroObsState o;
  o.k1 = k1;
  return {ObserverKind::ii_hydro, name, o};
}

ScenarioConfig open_loop_pendulum_base(const std::string& name, InputKind input,
                                       double vartheta, double duration) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.plant_kind = PlantKind::pendulum;
  PendulumParams p = pendulum_preset("identified");
  p.vartheta = vartheta;
  cfg.plant = p;
  cfg.mode = Mode::open_loop;
  cfg.input = input;
  cfg.integrator = {1e-4, 1e-3, duration};
  return cfg;
}

ScenarioConfig tracking_base(const std::string& name) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.plant_kind = PlantKind::pendulum;
  PendulumParams p = pendulum_preset("identified");
  p.vartheta = 330.0;
  cfg.plant = p;
  cfg.mode = Mode::closed_loop;
  ControllerConfig ctl;
  ctl.law = ControlLaw::adaptive;
  ctl.gains = {1600.0, 1100.0};
  ctl.reference = ReferenceKind::t2;
  ctl.saturation = {true, 200.0};
  cfg.controller = ctl;
  cfg.integrator = {1e-4, 1e-3, 20.0};
  return cfg;
}

ScenarioConfig hydro_base(const std::string& name, double c4) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.plant_kind = PlantKind::hydro;
  cfg.plant = hydro_preset("benchmark");
  cfg.mode = Mode::open_loop;
  cfg.input = InputKind::hydro_sine;
  cfg.observers.push_back(ii_hydro_observer("ii", 0.005));
  cfg.observers.push_back(hosm_observer("hosm", c4));
  cfg.integrator = {1e-4, 1e-4, 10.0};
  return cfg;
}

}  // namespace

std::vector<PresetInfo> preset_list() {
  return {
      {"openloop_sine", "open-loop observers, u = 25 sin(5t), SM prior near the true values"},
      {"openloop_sine_badprior", "open-loop observers, u = 25 sin(5t), SM prior (0.01, 0.01)"},
      {"openloop_sine_highgain", "open-loop observers, u = 25 sin(5t), SM gains (100, 1000)"},
      {"openloop_square", "open-loop observers, u = 14 sign(sin(pi t/3)), vartheta = 500"},
      {"tracking_ii", "adaptive tracking of the smoothed-step reference, estimates from the adaptive observer"},
      {"tracking_sm", "adaptive tracking of the smoothed-step reference, estimates from the SM observer"},
      {"tracking_ideal", "tracking with the ideal law (true velocity and parameters)"},
      {"hydro_tuned", "hydro plant, u = 15 sin(200t), tuned HOSM (c4 = 1.1e-4) vs adaptive observer"},
      {"hydro_published_gains", "hydro plant with the published HOSM gains (c4 = 1.1)"},
      {"hydro_noise", "tuned hydro comparison with Gaussian measurement noise, variance 1e-4"},
  };
}

ScenarioConfig preset_scenario(const std::string& name) {
  if (name == "openloop_sine") {
    ScenarioConfig cfg = open_loop_pendulum_base(name, InputKind::sine25, 50.0, 20.0);
    cfg.observers.push_back(ii_pend_observer("ii", 1.0, 1.0, 1.0));
    cfg.observers.push_back(sm_pend_observer("sm", 10.0, 100.0, {7.0, 15.0}, 1.0));
    cfg.excitation = ExcitationConfig{"ii", 2.0, 2.0, 1e-6};
    return cfg;
  }
  if (name == "openloop_sine_badprior") {
    ScenarioConfig cfg = open_loop_pendulum_base(name, InputKind::sine25, 50.0, 20.0);
    cfg.observers.push_back(ii_pend_observer("ii", 1.0, 1.0, 1.0));
    cfg.observers.push_back(sm_pend_observer("sm", 10.0, 100.0, {0.01, 0.01}, 1.0));
    cfg.excitation = ExcitationConfig{"ii", 2.0, 2.0, 1e-6};
    return cfg;
  }
  if (name == "openloop_sine_highgain") {
    ScenarioConfig cfg = open_loop_pendulum_base(name, InputKind::sine25, 50.0, 20.0);
    cfg.observers.push_back(ii_pend_observer("ii", 1.0, 1.0, 1.0));
    cfg.observers.push_back(sm_pend_observer("sm", 100.0, 1000.0, {7.0, 15.0}, 1.0));
    cfg.excitation = ExcitationConfig{"ii", 2.0, 2.0, 1e-6};
    return cfg;
  }
  if (name == "openloop_square") {
    ScenarioConfig cfg = open_loop_pendulum_base(name, InputKind::square14, 500.0, 60.0);
    cfg.observers.push_back(ii_pend_observer("ii", 0.7, 0.7, 1.0));
    cfg.observers.push_back(sm_pend_observer("sm", 200.0, 2000.0, {7.0, 15.0}, 1000.0));
    cfg.excitation = ExcitationConfig{"ii", 6.0, 6.0, 1e-6};
    return cfg;
  }
  if (name == "tracking_ii") {
    ScenarioConfig cfg = tracking_base(name);
    cfg.observers.push_back(ii_pend_observer("ii", 1.0, 0.03, 1.0));
    cfg.controller->observer = "ii";
    return cfg;
  }
  if (name == "tracking_sm") {
    ScenarioConfig cfg = tracking_base(name);
    cfg.observers.push_back(sm_pend_observer("sm", 100.0, 1500.0, {7.0, 15.0}, 100.0));
    cfg.controller->observer = "sm";
    return cfg;
  }
  if (name == "tracking_ideal") {
    ScenarioConfig cfg = tracking_base(name);
    cfg.controller->law = ControlLaw::ideal;
    cfg.observers.push_back(ii_pend_observer("ii", 1.0, 0.03, 1.0));
    return cfg;
  }
  if (name == "hydro_tuned") return hydro_base(name, 1.1e-4);
  if (name == "hydro_published_gains") return hydro_base(name, 1.1);
  if (name == "hydro_noise") {
    ScenarioConfig cfg = hydro_base(name, 1.1e-4);
    cfg.seed = 20250809;
    cfg.noise = NoiseSpec{NoiseKind::gaussian, 1e-4, cfg.seed, "x1"};
    return cfg;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace obslab
