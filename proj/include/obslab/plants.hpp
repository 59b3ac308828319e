#pragma once

#include <array>
#include <string>

namespace obslab {

/// Pendulum with viscous + Coulomb friction, the Coulomb relay smoothed by
/// tanh(vartheta * velocity):
///   J q'' + theta1 q' + theta2 tanh(vartheta q') + m l_b g sin(q) = u
struct PendulumParams {
  double J = 0.7013;        // inertia, kg m^2
  double m = 22.4466;       // link mass, kg
  double l_b = 0.0641;      // distance to center of mass, m
  double g = 9.81;          // m/s^2
  double theta1 = 5.317;    // viscous coefficient, N m s/rad
  double theta2 = 11.6403;  // Coulomb coefficient, N m
  double vartheta = 50.0;   // tanh sharpness

  void validate() const;
  double gravity_torque_coeff() const { return m * l_b * g; }
  bool operator==(const PendulumParams&) const = default;
};

struct PendulumState {
  double x1 = 0.0;  // angle, rad
  double x2 = 0.0;  // angular velocity, rad/s
};

/// Linearized hydro-mechanical cylinder; a1..a3 are known lumped constants,
/// theta1/theta2 the unknown friction parameters:
///   x1' = x2
///   x2' = -theta1 x2 - theta2 tanh(vartheta x2) + a1 x3
///   x3' = -a2 x2 - a3 x3 + u
struct HydroParams {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;
  double theta1 = 0.01;
  double theta2 = 0.01;
  double vartheta = 100.0;

  void validate() const;
  bool operator==(const HydroParams&) const = default;
};

struct HydroState {
  double x1 = 0.0;  // displacement
  double x2 = 0.0;  // velocity
  double x3 = 0.0;  // differential load pressure
};

std::array<double, 2> pendulum_dynamics(const PendulumState& s, double u,
                                        const PendulumParams& p);
std::array<double, 3> hydro_dynamics(const HydroState& s, double u, const HydroParams& p);

/// Canned open-loop drive signals.
enum class InputKind { zero, sine25, square14, hydro_sine };

InputKind input_kind_from_string(const std::string& s);
std::string to_string(InputKind k);

double test_input(InputKind kind, double t);

/// Named parameter presets. Pendulum: "nominal" (theta = 5.317, 11.6403) and
/// "identified" (theta = 7.5816, 16.5981, the values quoted as true in the
/// open-loop tests). Hydro: "benchmark".
PendulumParams pendulum_preset(const std::string& name);
HydroParams hydro_preset(const std::string& name);

}  // namespace obslab
