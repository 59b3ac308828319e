#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace obslab {

/// Uniformly sampled, named time-series channels sharing one clock.
/// By convention the first channel is the time axis "t"; producers append
/// whole rows so channel lengths stay equal.
class Trace {
 public:
  Trace(double dt, double t0, std::vector<std::string> names);

  double dt() const { return dt_; }
  double t0() const { return t0_; }

  std::size_t size() const { return data_.empty() ? 0 : data_.front().size(); }
  std::size_t channel_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool has_channel(std::string_view name) const;
  std::size_t channel_index(std::string_view name) const;  // throws if missing

  std::span<const double> channel(std::string_view name) const;
  std::span<const double> channel(std::size_t idx) const;

  void append_row(std::span<const double> row);

  /// Nominal time of sample i on the uniform grid.
  double time(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }

  /// Seed metadata for runs with stochastic inputs (0 = none).
  std::uint64_t seed = 0;

 private:
  double dt_;
  double t0_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> data_;
};

}  // namespace obslab
