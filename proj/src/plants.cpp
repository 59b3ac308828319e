#include "obslab/plants.hpp"

#include <cmath>
#include <stdexcept>

#include "obslab/signum.hpp"

namespace obslab {

void PendulumParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0))
      throw std::invalid_argument(std::string("PendulumParams: ") + name + " must be > 0");
  };
  positive(J, "J");
  positive(m, "m");
  positive(l_b, "l_b");
  positive(g, "g");
  positive(theta1, "theta1");
  positive(theta2, "theta2");
  positive(vartheta, "vartheta");
}

void HydroParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0))
      throw std::invalid_argument(std::string("HydroParams: ") + name + " must be > 0");
  };
  positive(a1, "a1");
  positive(a2, "a2");
  positive(a3, "a3");
  positive(theta1, "theta1");
  positive(theta2, "theta2");
  positive(vartheta, "vartheta");
}

std::array<double, 2> pendulum_dynamics(const PendulumState& s, double u,
                                        const PendulumParams& p) {
  const double friction = p.theta1 * s.x2 + p.theta2 * std::tanh(p.vartheta * s.x2);
  const double gravity = p.gravity_torque_coeff() * std::sin(s.x1);
  return {s.x2, (u - friction - gravity) / p.J};
}

std::array<double, 3> hydro_dynamics(const HydroState& s, double u, const HydroParams& p) {
  return {s.x2,
          -p.theta1 * s.x2 - p.theta2 * std::tanh(p.vartheta * s.x2) + p.a1 * s.x3,
          -p.a2 * s.x2 - p.a3 * s.x3 + u};
}

InputKind input_kind_from_string(const std::string& s) {
  if (s == "zero") return InputKind::zero;
  if (s == "sine25") return InputKind::sine25;
  if (s == "square14") return InputKind::square14;
  if (s == "hydro_sine") return InputKind::hydro_sine;
  throw std::invalid_argument("unknown input kind '" + s + "'");
}

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::zero: return "zero";
    case InputKind::sine25: return "sine25";
    case InputKind::square14: return "square14";
    case InputKind::hydro_sine: return "hydro_sine";
  }
  throw std::logic_error("unreachable");
}

double test_input(InputKind kind, double t) {
  switch (kind) {
    case InputKind::zero:
      return 0.0;
    case InputKind::sine25:
      return 25.0 * std::sin(5.0 * t);
    case InputKind::square14:
      // relay keeps the value 0 exactly at the zero crossings
      return 14.0 * relay(std::sin(M_PI * t / 3.0));
    case InputKind::hydro_sine:
      return 15.0 * std::sin(200.0 * t);
  }
  throw std::logic_error("unreachable");
}

PendulumParams pendulum_preset(const std::string& name) {
  PendulumParams p;  // defaults are the published physical-parameter table
  if (name == "nominal") return p;
  if (name == "identified") {
    p.theta1 = 7.5816;
    p.theta2 = 16.5981;
    return p;
  }
  throw std::invalid_argument("unknown pendulum preset '" + name + "'");
}

HydroParams hydro_preset(const std::string& name) {
  if (name == "benchmark") return HydroParams{};
  throw std::invalid_argument("unknown hydro preset '" + name + "'");
}

}  // namespace obslab
