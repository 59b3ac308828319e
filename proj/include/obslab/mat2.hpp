#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace obslab {

/// Dense 2x2 matrix, value type. Heavy machinery is pointless at this size;
/// the closed forms below are what the diagnostics assert against.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 scaled_identity(double s) { return {s, 0.0, 0.0, s}; }

  /// v * v^T
  static Mat2 outer(const std::array<double, 2>& v) {
    return {v[0] * v[0], v[0] * v[1], v[1] * v[0], v[1] * v[1]};
  }

  Mat2 operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Mat2& operator+=(const Mat2& o) {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
  }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }

  std::array<double, 2> operator*(const std::array<double, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }

  bool operator==(const Mat2&) const = default;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }

  Mat2 inverse() const {
    const double d = det();
    if (d == 0.0) throw std::domain_error("Mat2::inverse: singular matrix");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  double frobenius() const {
    return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
  }

  /// Eigenvalues of the symmetric part, ascending. Callers pass matrices that
  /// are symmetric up to roundoff (Gram integrals, Gamma).
  std::array<double, 2> sym_eigenvalues() const {
    const double s = 0.5 * (a12 + a21);
    const double mean = 0.5 * (a11 + a22);
    const double r = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + s * s);
    return {mean - r, mean + r};
  }

  double min_eigenvalue() const { return sym_eigenvalues()[0]; }

  /// max |a_ij - a_ji| relative to the Frobenius norm (0 for exact symmetry).
  double asymmetry() const {
    const double f = frobenius();
    if (f == 0.0) return 0.0;
    return std::fabs(a12 - a21) / f;
  }
};

}  // namespace obslab
