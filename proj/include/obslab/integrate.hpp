#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "obslab/trace.hpp"

namespace obslab {

/// Thrown when a trajectory leaves the finite floats; carries the time of the
/// first offending step and the last finite state.
class IntegrationFault : public std::runtime_error {
 public:
  IntegrationFault(double time, std::vector<double> last_state)
      : std::runtime_error("integration fault: non-finite state at t=" + std::to_string(time)),
        time(time),
        last_state(std::move(last_state)) {}

  double time;
  std::vector<double> last_state;
};

/// Derivative map: f(t, x, dxdt sized like x).
using DerivFn =
    std::function<void(double t, std::span<const double> x, std::span<double> dxdt)>;

/// One classical RK4 update of x in place. Vec needs operator[] and size();
/// scratch vectors must match x in size. This single body is the integrator
/// every module steps with, so plant, observers and tests share the exact
/// arithmetic.
template <class Vec, class F>
void rk4_apply(F&& f, Vec& x, double t, double h, Vec& k1, Vec& k2, Vec& k3, Vec& k4,
               Vec& tmp) {
  const std::size_t n = x.size();
  f(t, x, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  f(t + 0.5 * h, tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  f(t + 0.5 * h, tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  f(t + h, tmp, k4);
  for (std::size_t i = 0; i < n; ++i)
    x[i] += (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
}

template <class Vec>
bool all_finite(const Vec& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i])) return false;
  return true;
}

/// Single RK4 step; throws IntegrationFault if the update is non-finite.
std::vector<double> rk4_step(const DerivFn& f, std::span<const double> x, double t, double h);

/// Fixed-step RK4 over [t0, t_end], recording every record_every steps
/// (sample 0 included). A final partial step lands exactly on t_end and its
/// state is always recorded. Channels: "t" then the state names
/// (defaults x0, x1, ...).
Trace integrate(const DerivFn& f, std::span<const double> x0, double t0, double t_end,
                double h, int record_every = 1,
                std::span<const std::string> state_names = {});

}  // namespace obslab
