// Timing comparison of the serial reference kernels against the OpenMP ones
// on a long synthetic trace. The parallel paths must also be bitwise equal to
// the serial ones; this checks that too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "obslab/excitation.hpp"
#include "obslab/metrics.hpp"

using namespace obslab;

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

Trace synthetic_trace(std::size_t n_samples, std::size_t n_channels, double dt) {
  std::vector<std::string> names{"t"};
  for (std::size_t c = 0; c < n_channels; ++c) names.push_back("ch" + std::to_string(c));
  Trace trace(dt, 0.0, names);
  std::vector<double> row(names.size());
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = static_cast<double>(i) * dt;
    row[0] = t;
    for (std::size_t c = 0; c < n_channels; ++c)
      row[c + 1] = std::sin((1.0 + 0.3 * static_cast<double>(c)) * t) +
                   0.05 * std::sin(900.0 * t);
    trace.append_row(row);
  }
  return trace;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 2'000'000;

#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled (serial build)\n");
#endif
  std::printf("synthetic trace: %zu samples\n\n", n);

  const double dt = 1e-4;
  const Trace trace = synthetic_trace(n, 8, dt);
  const Trace phi = phi_signal(trace, "ch0", 50.0);
  const double horizon = phi.time(phi.size() - 1);
  const double window = horizon / 64.0;

  ExcitationReport serial_report, parallel_report;
  const double t_exc_serial = time_best_of(3, [&] {
    serial_report = interval_excitation(phi, window, window, 1e-6, Exec::serial);
  });
  const double t_exc_parallel = time_best_of(3, [&] {
    parallel_report = interval_excitation(phi, window, window, 1e-6, Exec::parallel);
  });

  bool identical = serial_report.windows.size() == parallel_report.windows.size() &&
                   serial_report.average_gram == parallel_report.average_gram;
  for (std::size_t i = 0; identical && i < serial_report.windows.size(); ++i)
    identical = serial_report.windows[i].lambda_min == parallel_report.windows[i].lambda_min;

  std::printf("interval_excitation (%zu windows)\n", serial_report.windows.size());
  std::printf("  serial   %.4f s\n", t_exc_serial);
  std::printf("  parallel %.4f s  (speedup %.2fx, results %s)\n\n", t_exc_parallel,
              t_exc_serial / t_exc_parallel, identical ? "bitwise equal" : "MISMATCH");

  MetricReport m_serial, m_parallel;
  const double t_met_serial =
      time_best_of(3, [&] { m_serial = compute_metrics(trace, 0.2, Exec::serial); });
  const double t_met_parallel =
      time_best_of(3, [&] { m_parallel = compute_metrics(trace, 0.2, Exec::parallel); });

  bool m_identical = m_serial.channels.size() == m_parallel.channels.size();
  for (std::size_t i = 0; m_identical && i < m_serial.channels.size(); ++i) {
    const auto& a = m_serial.channels[i];
    const auto& b = m_parallel.channels[i];
    m_identical = a.rmse_vs_zero == b.rmse_vs_zero && a.final_mean == b.final_mean &&
                  a.final_rmse == b.final_rmse && a.chattering == b.chattering;
  }

  std::printf("compute_metrics (%zu channels)\n", m_serial.channels.size());
  std::printf("  serial   %.4f s\n", t_met_serial);
  std::printf("  parallel %.4f s  (speedup %.2fx, results %s)\n", t_met_parallel,
              t_met_serial / t_met_parallel, m_identical ? "bitwise equal" : "MISMATCH");

  return identical && m_identical ? 0 : 1;
}
