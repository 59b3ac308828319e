#pragma once

#include <cmath>

namespace obslab {

/// Relay nonlinearity: sign(x) with relay(0) = 0.
inline double relay(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

/// |x|^p * sign(x) for p > 0; continuous at 0, odd.
inline double frac_pow_sign(double x, double p) {
  if (x == 0.0) return 0.0;
  return std::pow(std::fabs(x), p) * relay(x);
}

/// ln(cosh(z)) without overflowing cosh for large |z|:
/// ln cosh z = |z| - ln 2 + ln(1 + e^(-2|z|)).
inline double log_cosh(double z) {
  const double a = std::fabs(z);
  return a - M_LN2 + std::log1p(std::exp(-2.0 * a));
}

}  // namespace obslab
