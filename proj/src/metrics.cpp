#include "obslab/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace obslab {

namespace {

double mean(std::span<const double> a) {
  if (a.empty()) return 0.0;
  double s = 0.0;
  for (double v : a) s += v;
  return s / static_cast<double>(a.size());
}

double rms(std::span<const double> a) {
  if (a.empty()) return 0.0;
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s / static_cast<double>(a.size()));
}

double total_variation(std::span<const double> a) {
  double tv = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) tv += std::fabs(a[i] - a[i - 1]);
  return tv;
}

std::pair<std::size_t, std::size_t> window_indices(const Trace& trace, double t0, double t1) {
  if (!(t1 > t0)) throw std::out_of_range("metrics: window end must exceed start");
  const auto i0 = std::llround((t0 - trace.t0()) / trace.dt());
  const auto i1 = std::llround((t1 - trace.t0()) / trace.dt());
  const auto n = static_cast<std::int64_t>(trace.size());
  if (i0 < 0 || i1 >= n || i0 >= i1)
    throw std::out_of_range("metrics: window [" + std::to_string(t0) + ", " +
                            std::to_string(t1) + "] not inside trace");
  return {static_cast<std::size_t>(i0), static_cast<std::size_t>(i1)};
}

ChannelMetrics metrics_for(const Trace& trace, std::size_t idx, std::size_t w0,
                           std::size_t w1) {
  const auto data = trace.channel(idx);
  const auto window = data.subspan(w0, w1 - w0 + 1);
  ChannelMetrics m;
  m.channel = trace.names()[idx];
  m.rmse_vs_zero = rms(data);
  m.final_mean = mean(window);
  m.final_rmse = rms(window);
  const double span = trace.time(w1) - trace.time(w0);
  m.chattering = span > 0.0 ? total_variation(window) / span : 0.0;
  return m;
}

}  // namespace

double rmse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("rmse: channel lengths differ (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(a.size()));
}

double chattering_index(const Trace& trace, const std::string& channel, double t0,
                        double t1) {
  const auto [i0, i1] = window_indices(trace, t0, t1);
  const auto data = trace.channel(channel);
  const auto window = data.subspan(i0, i1 - i0 + 1);
  return total_variation(window) / (trace.time(i1) - trace.time(i0));
}

const ChannelMetrics& MetricReport::channel(const std::string& name) const {
  for (const auto& c : channels)
    if (c.channel == name) return c;
  throw std::out_of_range("MetricReport: no metrics for channel '" + name + "'");
}

MetricReport compute_metrics(const Trace& trace, double final_window_fraction, Exec exec) {
  if (trace.size() < 2) throw std::out_of_range("compute_metrics: trace too short");
  if (!(final_window_fraction > 0.0 && final_window_fraction <= 1.0))
    throw std::invalid_argument("compute_metrics: final_window_fraction in (0, 1]");

  const std::size_t n = trace.size();
  auto w0 = static_cast<std::size_t>(
      std::llround(static_cast<double>(n - 1) * (1.0 - final_window_fraction)));
  if (w0 >= n - 1) w0 = n - 2;
  const std::size_t w1 = n - 1;

  MetricReport report;
  report.final_window_start = trace.time(w0);

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < trace.channel_count(); ++i)
    if (trace.names()[i] != "t") idx.push_back(i);
  report.channels.resize(idx.size());

  const auto count = static_cast<std::int64_t>(idx.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      report.channels[k] = metrics_for(trace, idx[k], w0, w1);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      report.channels[k] = metrics_for(trace, idx[k], w0, w1);
    }
  }
  return report;
}

}  // namespace obslab
