#pragma once

#include <array>
#include <complex>
#include <string>

#include "obslab/plants.hpp"

namespace obslab {

struct ReferenceSample {
  double xd = 0.0;       // rad
  double xd_dot = 0.0;   // rad/s
  double xd_ddot = 0.0;  // rad/s^2
};

struct ControllerGains {
  double kp = 1600.0;  // 1/s^2
  double kv = 1100.0;  // 1/s

  void validate() const;
  bool operator==(const ControllerGains&) const = default;
};

enum class ReferenceKind { t2, rich_sine };

ReferenceKind reference_kind_from_string(const std::string& s);
std::string to_string(ReferenceKind k);

/// t2:        xd = 0.3 (1 - e^(-2 t^3) sin(7t)), derivatives in closed form.
/// rich_sine: xd = 0.5 sin(5t).
ReferenceSample reference(ReferenceKind kind, double t);

/// Exact-cancellation law using the true velocity and friction parameters:
///   u* = theta1 x2 + theta2 tanh(vartheta x2) + m l_b g sin(x1)
///        + J (xd'' - kp e1 - kv (x2 - xd'))
double ideal_control(const PendulumState& s, const ReferenceSample& r,
                     const PendulumParams& p, const ControllerGains& g);

/// Certainty-equivalent version: estimated velocity and parameters replace
/// the true ones.
double adaptive_control(double x1, double x2hat, double theta1hat, double theta2hat,
                        const ReferenceSample& r, const PendulumParams& p,
                        const ControllerGains& g);

/// Roots of s^2 + kv s + kp, sorted by real part (ascending).
std::array<std::complex<double>, 2> closed_loop_poles(const ControllerGains& g);

}  // namespace obslab
