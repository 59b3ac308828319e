#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obslab/excitation.hpp"
#include "obslab/trace.hpp"

namespace obslab {

/// Root-mean-square of the samplewise difference; channels must match in length.
double rmse(std::span<const double> a, std::span<const double> b);

/// Total variation of the sampled channel over [t0, t1] divided by (t1 - t0).
/// Zero for smooth slow signals, large for relay-driven chatter.
double chattering_index(const Trace& trace, const std::string& channel, double t0,
                        double t1);

struct ChannelMetrics {
  std::string channel;
  double rmse_vs_zero;      // over the full horizon
  double final_mean;        // steady-state bias over the final window
  double final_rmse;        // RMS level over the final window
  double chattering;        // chattering index over the final window
};

struct MetricReport {
  std::vector<ChannelMetrics> channels;
  std::int64_t saturation_count = 0;
  bool diverged = false;
  double divergence_time = 0.0;  // meaningful only when diverged
  double final_window_start = 0.0;
  std::optional<ExcitationReport> excitation;
  std::string excitation_channel;

  const ChannelMetrics& channel(const std::string& name) const;
};

/// Per-channel metrics over a trace ("t" excluded). final_window_fraction of
/// the horizon, anchored at the end, is the steady-state window. Channels are
/// independent, so the parallel path is bitwise identical to the serial one.
MetricReport compute_metrics(const Trace& trace, double final_window_fraction = 0.2,
                             Exec exec = Exec::parallel);

}  // namespace obslab
