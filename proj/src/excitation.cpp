#include "obslab/excitation.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "obslab/signum.hpp"

namespace obslab {

namespace {

// segments per accumulation block; fixed so the summation order (and thus the
// bit pattern) never depends on thread count
constexpr std::int64_t kBlock = 4096;

std::int64_t snap_index(const Trace& phi, double t) {
  return std::llround((t - phi.t0()) / phi.dt());
}

// trapezoid over segments [i, i+1) for i in [first, last)
Mat2 partial_gram(std::span<const double> p1, std::span<const double> p2, double dt,
                  std::int64_t first, std::int64_t last) {
  Mat2 acc;
  for (std::int64_t i = first; i < last; ++i) {
    const auto a = static_cast<std::size_t>(i);
    const double m11 = 0.5 * (p1[a] * p1[a] + p1[a + 1] * p1[a + 1]);
    const double m12 = 0.5 * (p1[a] * p2[a] + p1[a + 1] * p2[a + 1]);
    const double m22 = 0.5 * (p2[a] * p2[a] + p2[a + 1] * p2[a + 1]);
    acc += Mat2{m11, m12, m12, m22} * dt;
  }
  return acc;
}

Mat2 gram_segments(const Trace& phi, std::int64_t i0, std::int64_t i1, Exec exec) {
  const auto p1 = phi.channel("phi1");
  const auto p2 = phi.channel("phi2");
  const double dt = phi.dt();
  const std::int64_t n_blocks = (i1 - i0 + kBlock - 1) / kBlock;

  std::vector<Mat2> partials(static_cast<std::size_t>(n_blocks));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < n_blocks; ++b) {
      const std::int64_t first = i0 + b * kBlock;
      const std::int64_t last = std::min(first + kBlock, i1);
      partials[static_cast<std::size_t>(b)] = partial_gram(p1, p2, dt, first, last);
    }
  } else {
    for (std::int64_t b = 0; b < n_blocks; ++b) {
      const std::int64_t first = i0 + b * kBlock;
      const std::int64_t last = std::min(first + kBlock, i1);
      partials[static_cast<std::size_t>(b)] = partial_gram(p1, p2, dt, first, last);
    }
  }

  Mat2 total;
  for (const Mat2& m : partials) total += m;
  return total;
}

}  // namespace

Trace phi_signal(const Trace& trace, const std::string& x2hat_channel, double vartheta) {
  if (!trace.has_channel(x2hat_channel))
    throw std::out_of_range("phi_signal: trace has no channel named '" + x2hat_channel +
                            "'");
  const auto x2hat = trace.channel(x2hat_channel);

  Trace phi(trace.dt(), trace.t0(), {"t", "phi1", "phi2"});
  for (std::size_t i = 0; i < x2hat.size(); ++i) {
    const double v = x2hat[i];
    const double row[3] = {trace.time(i), v, std::tanh(vartheta * v)};
    phi.append_row(row);
  }
  return phi;
}

Mat2 gram_window(const Trace& phi, double t0, double T, Exec exec) {
  if (!(T > 0.0)) throw std::invalid_argument("gram_window: T must be > 0");
  const std::int64_t i0 = snap_index(phi, t0);
  const std::int64_t i1 = snap_index(phi, t0 + T);
  const auto n = static_cast<std::int64_t>(phi.size());
  if (i0 < 0 || i1 >= n || i0 >= i1)
    throw std::out_of_range("gram_window: window [" + std::to_string(t0) + ", " +
                            std::to_string(t0 + T) + "] not inside trace");
  return gram_segments(phi, i0, i1, exec);
}

ExcitationReport interval_excitation(const Trace& phi, double window, double stride,
                                     double lambda_floor, Exec exec) {
  if (!(window > 0.0) || !(stride > 0.0))
    throw std::invalid_argument("interval_excitation: window and stride must be > 0");
  if (stride < window)
    throw std::invalid_argument(
        "interval_excitation: stride must be >= window (non-overlapping windows)");
  if (phi.size() < 2) throw std::out_of_range("interval_excitation: trace too short");

  const double horizon = phi.time(phi.size() - 1) - phi.t0();
  if (window > horizon + 1e-12)
    throw std::out_of_range("interval_excitation: trace shorter than one window");

  std::vector<double> starts;
  for (double tk = phi.t0(); tk + window <= phi.t0() + horizon + 1e-9 * horizon;
       tk += stride)
    starts.push_back(tk);

  ExcitationReport report;
  report.lambda_floor = lambda_floor;
  report.windows.resize(starts.size());

  const auto n_windows = static_cast<std::int64_t>(starts.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n_windows; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const Mat2 g = gram_window(phi, starts[idx], window, Exec::serial);
      report.windows[idx] = {starts[idx], window, g.min_eigenvalue()};
    }
  } else {
    for (std::int64_t k = 0; k < n_windows; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const Mat2 g = gram_window(phi, starts[idx], window, Exec::serial);
      report.windows[idx] = {starts[idx], window, g.min_eigenvalue()};
    }
  }

  report.excited = !report.windows.empty();
  for (const auto& w : report.windows)
    if (!(w.lambda_min > lambda_floor)) report.excited = false;

  const Mat2 full = gram_segments(phi, 0, static_cast<std::int64_t>(phi.size()) - 1, exec);
  report.average_gram = full * (1.0 / horizon);
  report.average_gram_min_eig = report.average_gram.min_eigenvalue();
  return report;
}

}  // namespace obslab
