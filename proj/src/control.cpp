#include "obslab/control.hpp"

#include <cmath>
#include <stdexcept>

namespace obslab {

void ControllerGains::validate() const {
  if (!(kp > 0.0)) throw std::invalid_argument("ControllerGains: kp must be > 0");
  if (!(kv > 0.0)) throw std::invalid_argument("ControllerGains: kv must be > 0");
}

ReferenceKind reference_kind_from_string(const std::string& s) {
  if (s == "t2") return ReferenceKind::t2;
  if (s == "rich_sine") return ReferenceKind::rich_sine;
  throw std::invalid_argument("unknown reference kind '" + s + "'");
}

std::string to_string(ReferenceKind k) {
  switch (k) {
    case ReferenceKind::t2: return "t2";
    case ReferenceKind::rich_sine: return "rich_sine";
  }
  throw std::logic_error("unreachable");
}

ReferenceSample reference(ReferenceKind kind, double t) {
  switch (kind) {
    case ReferenceKind::t2: {
      // xd = 0.3 (1 - e^(-2 t^3) sin 7t)
      // d/dt [e^(-2 t^3) sin 7t] = e^(-2 t^3) (7 cos 7t - 6 t^2 sin 7t)
      const double env = std::exp(-2.0 * t * t * t);
      const double s7 = std::sin(7.0 * t);
      const double c7 = std::cos(7.0 * t);
      const double t2 = t * t;
      ReferenceSample r;
      r.xd = 0.3 * (1.0 - env * s7);
      r.xd_dot = -0.3 * env * (7.0 * c7 - 6.0 * t2 * s7);
      r.xd_ddot = -0.3 * env *
                  ((36.0 * t2 * t2 - 12.0 * t - 49.0) * s7 - 84.0 * t2 * c7);
      return r;
    }
    case ReferenceKind::rich_sine: {
      ReferenceSample r;
      r.xd = 0.5 * std::sin(5.0 * t);
      r.xd_dot = 2.5 * std::cos(5.0 * t);
      r.xd_ddot = -12.5 * std::sin(5.0 * t);
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

double ideal_control(const PendulumState& s, const ReferenceSample& r,
                     const PendulumParams& p, const ControllerGains& g) {
  const double e1 = s.x1 - r.xd;
  return p.theta1 * s.x2 + p.theta2 * std::tanh(p.vartheta * s.x2) +
         p.gravity_torque_coeff() * std::sin(s.x1) +
         p.J * (r.xd_ddot - g.kp * e1 - g.kv * (s.x2 - r.xd_dot));
}

double adaptive_control(double x1, double x2hat, double theta1hat, double theta2hat,
                        const ReferenceSample& r, const PendulumParams& p,
                        const ControllerGains& g) {
  const double e1 = x1 - r.xd;
  return theta1hat * x2hat + theta2hat * std::tanh(p.vartheta * x2hat) +
         p.gravity_torque_coeff() * std::sin(x1) +
         p.J * (r.xd_ddot - g.kp * e1 - g.kv * (x2hat - r.xd_dot));
}

std::array<std::complex<double>, 2> closed_loop_poles(const ControllerGains& g) {
  g.validate();
  const double disc = g.kv * g.kv - 4.0 * g.kp;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    std::complex<double> p1(0.5 * (-g.kv - root), 0.0);
    std::complex<double> p2(0.5 * (-g.kv + root), 0.0);
    return {p1, p2};
  }
  const double imag = 0.5 * std::sqrt(-disc);
  return {std::complex<double>(-0.5 * g.kv, -imag), std::complex<double>(-0.5 * g.kv, imag)};
}

}  // namespace obslab
