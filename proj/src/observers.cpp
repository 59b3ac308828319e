#include "obslab/observers.hpp"

#include <cmath>
#include <stdexcept>

#include "obslab/integrate.hpp"
#include "obslab/signum.hpp"

namespace obslab {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::invalid_argument(std::string("observer gain ") + name + " must be > 0");
}

}  // namespace

// ---------------------------------------------------------------------------
// I&I pendulum observer
// ---------------------------------------------------------------------------

void IIPendObsState::validate() const {
  require_positive(k1, "k1");
  if (!freeze_adaptation) {
    require_positive(gamma1, "gamma1");
    require_positive(gamma2, "gamma2");
  }
}

IIPendOutput ii_pend_output(const IIPendObsState& o, double x1, const PendulumParams& p) {
  const double x2hat = o.x2I + (o.k1 / p.J) * x1;
  if (o.freeze_adaptation) return {x2hat, o.theta1I, o.theta2I};
  const double theta1hat = o.theta1I - o.gamma1 * (p.vartheta / (2.0 * o.k1)) * x2hat * x2hat;
  const double theta2hat =
      o.theta2I - o.gamma2 * (1.0 / o.k1) * log_cosh(p.vartheta * x2hat);
  return {x2hat, theta1hat, theta2hat};
}

std::array<double, 3> ii_pend_derivative(const IIPendObsState& o, double x1, double u,
                                         const PendulumParams& p) {
  const IIPendOutput est = ii_pend_output(o, x1, p);
  const double x2I_dot = (u - p.gravity_torque_coeff() * std::sin(x1) -
                          (est.theta1hat + o.k1) * est.x2hat -
                          est.theta2hat * std::tanh(p.vartheta * est.x2hat)) /
                         p.J;
  if (o.freeze_adaptation) return {x2I_dot, 0.0, 0.0};
  // the adaptation laws reuse the freshly computed x2I_dot
  const double bracket = (o.k1 / p.J) * est.x2hat + x2I_dot;
  const double theta1I_dot = o.gamma1 * (p.vartheta / o.k1) * est.x2hat * bracket;
  const double theta2I_dot =
      o.gamma2 * (p.vartheta / o.k1) * std::tanh(p.vartheta * est.x2hat) * bracket;
  return {x2I_dot, theta1I_dot, theta2I_dot};
}

void observer_step(IIPendObsState& o, double x1, double u, const PendulumParams& p,
                   double h) {
  std::array<double, 3> x{o.x2I, o.theta1I, o.theta2I};
  auto f = [&](double, const std::array<double, 3>& s, std::array<double, 3>& dx) {
    IIPendObsState tmp = o;
    tmp.x2I = s[0];
    tmp.theta1I = s[1];
    tmp.theta2I = s[2];
    dx = ii_pend_derivative(tmp, x1, u, p);
  };
  std::array<double, 3> k1{}, k2{}, k3{}, k4{}, t{};
  rk4_apply(f, x, 0.0, h, k1, k2, k3, k4, t);
  if (!all_finite(x)) throw IntegrationFault(0.0, {o.x2I, o.theta1I, o.theta2I});
  o.x2I = x[0];
  o.theta1I = x[1];
  o.theta2I = x[2];
}

// ---------------------------------------------------------------------------
// SM adaptive observer
// ---------------------------------------------------------------------------

void SMObsState::validate() const {
  require_positive(alpha1, "alpha1");
  require_positive(alpha2, "alpha2");
  if (Gamma.asymmetry() > 1e-12)
    throw std::invalid_argument("SMObsState: Gamma must be symmetric");
  if (!(Gamma.min_eigenvalue() > 0.0))
    throw std::invalid_argument("SMObsState: Gamma must be positive definite");
}

std::array<double, 2> SMObsState::theta_hat(const PendulumParams& p) const {
  return {p.J * (delta_theta[0] + theta_bar[0]), p.J * (delta_theta[1] + theta_bar[1])};
}

std::array<double, 2> sm_regressor(double x2hat, double vartheta) {
  return {-x2hat, -std::tanh(vartheta * x2hat)};
}

std::array<double, 8> sm_derivative(const SMObsState& o, double x1, double u,
                                    const PendulumParams& p) {
  const double x1err = o.x1hat - x1;
  const double x1hat_dot = o.x2hat + o.alpha2 * frac_pow_sign(x1err, 0.5);
  const double x2hat_dot =
      (u - p.gravity_torque_coeff() * std::sin(x1) - o.theta_bar[0] * o.x2hat -
       o.theta_bar[1] * std::tanh(p.vartheta * o.x2hat)) /
          p.J +
      o.alpha1 * relay(x1err);

  if (o.freeze_adaptation)
    return {x1hat_dot, x2hat_dot, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  const std::array<double, 2> phi = sm_regressor(o.x2hat, p.vartheta);
  const double innovation =
      -(phi[0] * o.delta_theta[0] + phi[1] * o.delta_theta[1]) + o.alpha1 * relay(x1err);
  const std::array<double, 2> gphi = o.Gamma * phi;
  // Gamma' = -Gamma phi phi^T Gamma = -(Gamma phi)(Gamma phi)^T while Gamma is
  // symmetric; writing it this way keeps the integrated Gamma symmetric.
  return {x1hat_dot,
          x2hat_dot,
          gphi[0] * innovation,
          gphi[1] * innovation,
          -gphi[0] * gphi[0],
          -gphi[0] * gphi[1],
          -gphi[1] * gphi[0],
          -gphi[1] * gphi[1]};
}

void observer_step(SMObsState& o, double x1, double u, const PendulumParams& p, double h) {
  std::array<double, 8> x{o.x1hat,     o.x2hat,     o.delta_theta[0], o.delta_theta[1],
                          o.Gamma.a11, o.Gamma.a12, o.Gamma.a21,      o.Gamma.a22};
  auto f = [&](double, const std::array<double, 8>& s, std::array<double, 8>& dx) {
    SMObsState tmp = o;
    tmp.x1hat = s[0];
    tmp.x2hat = s[1];
    tmp.delta_theta = {s[2], s[3]};
    tmp.Gamma = {s[4], s[5], s[6], s[7]};
    dx = sm_derivative(tmp, x1, u, p);
  };
  std::array<double, 8> k1{}, k2{}, k3{}, k4{}, t{};
  const std::array<double, 8> before = x;
  rk4_apply(f, x, 0.0, h, k1, k2, k3, k4, t);
  if (!all_finite(x)) throw IntegrationFault(0.0, {before.begin(), before.end()});
  o.x1hat = x[0];
  o.x2hat = x[1];
  o.delta_theta = {x[2], x[3]};
  o.Gamma = {x[4], x[5], x[6], x[7]};
}

// ---------------------------------------------------------------------------
// I&I hydro observer
// ---------------------------------------------------------------------------

void IIHydroObsState::validate() const { require_positive(k1, "k1"); }

IIHydroOutput ii_hydro_output(const IIHydroObsState& o, double x1, const HydroParams& p) {
  const double x2hat = o.x2I + o.k1 * x1;
  if (o.freeze_adaptation) return {x2hat, o.x3hat, o.theta1I, o.theta2I};
  const double theta1hat = o.theta1I - (p.vartheta / (2.0 * o.k1)) * x2hat * x2hat;
  const double theta2hat = o.theta2I - (1.0 / o.k1) * log_cosh(p.vartheta * x2hat);
  return {x2hat, o.x3hat, theta1hat, theta2hat};
}

std::array<double, 4> ii_hydro_derivative(const IIHydroObsState& o, double x1, double u,
                                          const HydroParams& p) {
  const IIHydroOutput est = ii_hydro_output(o, x1, p);
  const double x2I_dot = p.a1 * o.x3hat - (est.theta1hat + o.k1) * est.x2hat -
                         est.theta2hat * std::tanh(p.vartheta * est.x2hat);
  const double x3hat_dot = -p.a2 * est.x2hat - p.a3 * o.x3hat + u;
  if (o.freeze_adaptation) return {x2I_dot, 0.0, 0.0, x3hat_dot};
  const double bracket = o.k1 * est.x2hat + x2I_dot;
  const double theta1I_dot = (p.vartheta / o.k1) * est.x2hat * bracket;
  const double theta2I_dot =
      (p.vartheta / o.k1) * std::tanh(p.vartheta * est.x2hat) * bracket;
  return {x2I_dot, theta1I_dot, theta2I_dot, x3hat_dot};
}

void observer_step(IIHydroObsState& o, double x1, double u, const HydroParams& p,
                   double h) {
  std::array<double, 4> x{o.x2I, o.theta1I, o.theta2I, o.x3hat};
  auto f = [&](double, const std::array<double, 4>& s, std::array<double, 4>& dx) {
    IIHydroObsState tmp = o;
    tmp.x2I = s[0];
    tmp.theta1I = s[1];
    tmp.theta2I = s[2];
    tmp.x3hat = s[3];
    dx = ii_hydro_derivative(tmp, x1, u, p);
  };
  std::array<double, 4> k1{}, k2{}, k3{}, k4{}, t{};
  const std::array<double, 4> before = x;
  rk4_apply(f, x, 0.0, h, k1, k2, k3, k4, t);
  if (!all_finite(x)) throw IntegrationFault(0.0, {before.begin(), before.end()});
  o.x2I = x[0];
  o.theta1I = x[1];
  o.theta2I = x[2];
  o.x3hat = x[3];
}

// ---------------------------------------------------------------------------
// HOSM observer
// ---------------------------------------------------------------------------

void HOSMObsState::validate() const {
  require_positive(L, "L");
  require_positive(c1, "c1");
  require_positive(c2, "c2");
  require_positive(c3, "c3");
  require_positive(c4, "c4");
}

std::array<double, 4> hosm_derivative(const HOSMObsState& o, double x1, double u) {
  const double e1 = o.zeta[0] - x1;
  const double L14 = std::pow(o.L, 0.25);
  const double L12 = std::sqrt(o.L);
  const double L34 = L14 * L12;
  return {-L14 * o.c1 * frac_pow_sign(e1, 0.75) + o.zeta[1],
          -L12 * o.c2 * frac_pow_sign(e1, 0.5) + o.zeta[2],
          -L34 * o.c3 * frac_pow_sign(e1, 0.25) + o.zeta[3] + o.a4 * u,
          -o.L * o.c4 * relay(e1) - o.a5 * u};
}

void observer_step(HOSMObsState& o, double x1, double u, double h) {
  std::array<double, 4> x = o.zeta;
  auto f = [&](double, const std::array<double, 4>& s, std::array<double, 4>& dx) {
    HOSMObsState tmp = o;
    tmp.zeta = s;
    dx = hosm_derivative(tmp, x1, u);
  };
  std::array<double, 4> k1{}, k2{}, k3{}, k4{}, t{};
  const std::array<double, 4> before = x;
  rk4_apply(f, x, 0.0, h, k1, k2, k3, k4, t);
  if (!all_finite(x)) throw IntegrationFault(0.0, {before.begin(), before.end()});
  o.zeta = x;
}

}  // namespace obslab
