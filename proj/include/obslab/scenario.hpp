#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "obslab/control.hpp"
#include "obslab/noise.hpp"
#include "obslab/observers.hpp"
#include "obslab/plants.hpp"

namespace obslab {

/// Configuration problem: bad file, bad field, violated invariant. The
/// message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PlantKind { pendulum, hydro };
enum class Mode { open_loop, closed_loop };
enum class ControlLaw { ideal, adaptive };
enum class ObserverKind { ii_pendulum, sm_pendulum, ii_hydro, hosm };

using ObserverInit = std::variant<IIPendObsState, SMObsState, IIHydroObsState, HOSMObsState>;

struct ObserverConfig {
  ObserverKind kind;
  std::string name;     // channel prefix; unique per scenario
  ObserverInit initial; // gains and initial internal states

  bool operator==(const ObserverConfig&) const = default;
};

struct IntegratorConfig {
  double step = 1e-4;           // RK4 step, s
  double sample_period = 1e-3;  // measurement/control/recording period, s
  double duration = 0.0;        // s

  bool operator==(const IntegratorConfig&) const = default;
};

struct SaturationConfig {
  bool enabled = true;
  double limit = 200.0;  // N m, symmetric

  bool operator==(const SaturationConfig&) const = default;
};

struct ControllerConfig {
  ControlLaw law = ControlLaw::adaptive;
  ControllerGains gains;
  ReferenceKind reference = ReferenceKind::t2;
  std::string observer;  // estimate source for the adaptive law
  SaturationConfig saturation;

  bool operator==(const ControllerConfig&) const = default;
};

struct ExcitationConfig {
  std::string observer;  // whose x2hat feeds the regressor
  double window = 2.0;
  double stride = 2.0;
  double lambda_floor = 1e-6;

  bool operator==(const ExcitationConfig&) const = default;
};

struct ScenarioConfig {
  std::string name = "scenario";
  PlantKind plant_kind = PlantKind::pendulum;
  std::variant<PendulumParams, HydroParams> plant;  // fully resolved parameters
  std::array<double, 3> plant_ic{0.0, 0.0, 0.0};    // x1, x2, x3 (x3 hydro only)
  Mode mode = Mode::open_loop;
  InputKind input = InputKind::zero;                // open loop drive
  std::optional<ControllerConfig> controller;       // closed loop only
  std::vector<ObserverConfig> observers;
  IntegratorConfig integrator;
  NoiseSpec noise;
  std::uint64_t seed = 0;
  std::optional<std::vector<std::string>> channels;  // output selection; nullopt = all
  std::optional<ExcitationConfig> excitation;

  const PendulumParams& pendulum() const { return std::get<PendulumParams>(plant); }
  const HydroParams& hydro() const { return std::get<HydroParams>(plant); }

  /// Throws ConfigError naming the violated invariant.
  void validate() const;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parse + validate a config file; every field is either set or defaulted and
/// the result is fully resolved (presets expanded).
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& json_text, const std::string& origin);

/// Resolved config as a JSON document (round-trips through parse_scenario).
std::string serialize_scenario(const ScenarioConfig& cfg);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> preset_list();
ScenarioConfig preset_scenario(const std::string& name);

}  // namespace obslab
