#include "obslab/noise.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace obslab {

std::vector<double> gaussian_noise(const NoiseSpec& spec, std::size_t n) {
  if (spec.kind != NoiseKind::gaussian)
    throw std::invalid_argument("gaussian_noise: spec.kind must be gaussian");
  if (spec.variance < 0.0)
    throw std::invalid_argument("gaussian_noise: variance must be >= 0");

  std::vector<double> out(n, 0.0);
  if (spec.variance == 0.0 || n == 0) return out;

  const double sigma = std::sqrt(spec.variance);
  std::mt19937_64 rng(spec.seed);
  // One variate per uniform pair; mt19937_64 and this transform are fully
  // specified, unlike std::normal_distribution.
  constexpr double kTwoPi = 2.0 * M_PI;
  const double inv = 1.0 / (static_cast<double>(std::mt19937_64::max()) + 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double u1 = (static_cast<double>(rng()) + 0.5) * inv;  // (0,1)
    const double u2 = (static_cast<double>(rng()) + 0.5) * inv;
    out[i] = sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
  return out;
}

}  // namespace obslab
