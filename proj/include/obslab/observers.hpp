#pragma once

#include <array>

#include "obslab/mat2.hpp"
#include "obslab/plants.hpp"

namespace obslab {

// ---------------------------------------------------------------------------
// Adaptive velocity observer with proportional-integral internal state and
// smooth adaptation laws (ln cosh correction terms). Measures x1 only; the
// gravity term is cancelled using the known plant constants.
// ---------------------------------------------------------------------------
struct IIPendObsState {
  // gains
  double k1 = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  // integrator states
  double x2I = 0.0;
  double theta1I = 0.0;
  double theta2I = 0.0;
  // test switch: zero the adaptation laws and pin theta_hat at the internal
  // states (lets contraction claims be checked in isolation)
  bool freeze_adaptation = false;

  void validate() const;
  bool operator==(const IIPendObsState&) const = default;
};

struct IIPendOutput {
  double x2hat;
  double theta1hat;
  double theta2hat;
};

IIPendOutput ii_pend_output(const IIPendObsState& o, double x1, const PendulumParams& p);

/// d/dt of (x2I, theta1I, theta2I) with x1, u held.
std::array<double, 3> ii_pend_derivative(const IIPendObsState& o, double x1, double u,
                                         const PendulumParams& p);

// ---------------------------------------------------------------------------
// Super-twisting style adaptive observer: sqrt-relay output injection plus a
// least-squares parameter estimator with covariance Gamma.
// ---------------------------------------------------------------------------
struct SMObsState {
  // gains and prior
  double alpha1 = 10.0;
  double alpha2 = 100.0;
  std::array<double, 2> theta_bar{0.0, 0.0};  // a-priori parameter estimate
  // states
  double x1hat = 0.0;
  double x2hat = 0.0;
  std::array<double, 2> delta_theta{0.0, 0.0};
  Mat2 Gamma = Mat2::identity();
  bool freeze_adaptation = false;

  void validate() const;
  bool operator==(const SMObsState&) const = default;
  /// theta_hat = J (delta_theta + theta_bar)
  std::array<double, 2> theta_hat(const PendulumParams& p) const;
};

/// phi = -(x2hat, tanh(vartheta x2hat))
std::array<double, 2> sm_regressor(double x2hat, double vartheta);

/// d/dt of (x1hat, x2hat, delta1, delta2, Gamma row-major) with x1, u held.
std::array<double, 8> sm_derivative(const SMObsState& o, double x1, double u,
                                    const PendulumParams& p);

// ---------------------------------------------------------------------------
// Hydro variant of the adaptive observer; the pressure estimate is realized
// as an extra integrator state.
// ---------------------------------------------------------------------------
struct IIHydroObsState {
  double k1 = 0.005;
  double x2I = 0.0;
  double theta1I = 0.0;
  double theta2I = 0.0;
  double x3hat = 0.0;
  bool freeze_adaptation = false;

  void validate() const;
  bool operator==(const IIHydroObsState&) const = default;
};

struct IIHydroOutput {
  double x2hat;
  double x3hat;
  double theta1hat;
  double theta2hat;
};

IIHydroOutput ii_hydro_output(const IIHydroObsState& o, double x1, const HydroParams& p);

/// d/dt of (x2I, theta1I, theta2I, x3hat) with x1, u held.
std::array<double, 4> ii_hydro_derivative(const IIHydroObsState& o, double x1, double u,
                                          const HydroParams& p);

// ---------------------------------------------------------------------------
// Fifth-generation sliding-mode observer: nested fractional powers of the
// output error. zeta2 estimates velocity, zeta3 acceleration.
// ---------------------------------------------------------------------------
struct HOSMObsState {
  double L = 650.0;
  double c1 = 3.0;
  double c2 = 4.16;
  double c3 = 3.06;
  double c4 = 1.1e-4;
  double a4 = 1.0;  // input coupling constants from the system model
  double a5 = 1.0;
  std::array<double, 4> zeta{0.0, 0.0, 0.0, 0.0};

  void validate() const;
  bool operator==(const HOSMObsState&) const = default;
};

/// d/dt of zeta with x1, u held.
std::array<double, 4> hosm_derivative(const HOSMObsState& o, double x1, double u);

// ---------------------------------------------------------------------------
// Shared stepping: one RK4 update of the observer's internal states with the
// measurement and input zero-order-held over the step. Throws
// IntegrationFault on a non-finite update.
// ---------------------------------------------------------------------------
void observer_step(IIPendObsState& o, double x1, double u, const PendulumParams& p, double h);
void observer_step(SMObsState& o, double x1, double u, const PendulumParams& p, double h);
void observer_step(IIHydroObsState& o, double x1, double u, const HydroParams& p, double h);
void observer_step(HOSMObsState& o, double x1, double u, double h);

}  // namespace obslab
