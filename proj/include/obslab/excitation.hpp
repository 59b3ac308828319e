#pragma once

#include <string>
#include <vector>

#include "obslab/mat2.hpp"
#include "obslab/trace.hpp"

namespace obslab {

/// Execution policy for the data-parallel kernels. Parallel and serial paths
/// run the same blocked arithmetic in the same order, so results are bitwise
/// identical; serial is kept as the reference the tests compare against.
enum class Exec { serial, parallel };

/// Per-sample regressor (x2hat, tanh(vartheta x2hat)) from a velocity-estimate
/// channel. Sign convention is positive; any windowed Gram is invariant under
/// a global sign flip. Channels: "t", "phi1", "phi2".
Trace phi_signal(const Trace& trace, const std::string& x2hat_channel, double vartheta);

/// Trapezoidal approximation of the windowed Gram integral
/// int_{t0}^{t0+T} phi(s) phi(s)^T ds over the samples inside [t0, t0+T]
/// (window endpoints snapped to the sample grid). Throws std::out_of_range
/// when the window is not inside the trace.
Mat2 gram_window(const Trace& phi, double t0, double T, Exec exec = Exec::serial);

struct ExcitationWindow {
  double t_start;     // t_k
  double duration;    // T_k
  double lambda_min;  // min eigenvalue of the windowed Gram
};

/// Finite-horizon excitation diagnostic. The interval condition itself is an
/// infinite-horizon statement; the report states per-window levels and an
/// explicitly on-horizon verdict against a configured floor.
struct ExcitationReport {
  std::vector<ExcitationWindow> windows;
  Mat2 average_gram;             // (1/t) int_0^t phi phi^T at the final time
  double average_gram_min_eig = 0.0;
  double lambda_floor = 0.0;
  bool excited = false;          // all lambda_min > lambda_floor

  std::string verdict() const { return excited ? "excited" : "not-excited-on-horizon"; }
};

/// Non-overlapping windows [t_k, t_k + window] with t_{k+1} = t_k + stride,
/// stride >= window. Window evaluation is the parallel kernel; windows are
/// independent so the result does not depend on the thread count.
ExcitationReport interval_excitation(const Trace& phi, double window, double stride,
                                     double lambda_floor = 1e-6,
                                     Exec exec = Exec::parallel);

}  // namespace obslab
