#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace obslab {

enum class NoiseKind { none, gaussian };

/// Zero-mean noise injected into one measured channel at sample boundaries
/// (zero-order hold between samples).
struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double variance = 0.0;        // signal-units^2
  std::uint64_t seed = 0;
  std::string target = "x1";    // channel the noise corrupts

  bool operator==(const NoiseSpec&) const = default;
};

/// n i.i.d. N(0, spec.variance) samples, fully determined by spec.seed.
/// Box-Muller over mt19937_64 so the sequence is identical across platforms.
std::vector<double> gaussian_noise(const NoiseSpec& spec, std::size_t n);

}  // namespace obslab
