#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "obslab/metrics.hpp"

using namespace obslab;

namespace {

Trace one_channel(double dt, const std::vector<double>& samples, const char* name = "y") {
  Trace tr(dt, 0.0, {"t", name});
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double row[2] = {static_cast<double>(i) * dt, samples[i]};
    tr.append_row(row);
  }
  return tr;
}

}  // namespace

TEST_CASE("rmse basics") {
  const std::vector<double> a{1.0, 2.0, 3.0}, b{1.0, 2.0, 3.0};
  CHECK(rmse(a, b) == 0.0);

  const std::vector<double> c{1.5, 2.5, 3.5};
  CHECK(rmse(a, c) == doctest::Approx(0.5).epsilon(1e-12));  // constant offset

  const std::vector<double> wrong{1.0};
  CHECK_THROWS_AS(rmse(a, wrong), std::invalid_argument);
}

TEST_CASE("rmse of a sine against zero is amplitude over sqrt(2)") {
  const double A = 2.0;
  std::vector<double> s, z;
  const double dt = 1e-3;
  const std::size_t n = 20000;  // 20 s ~ many whole periods of sin(2 pi t)
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(A * std::sin(2.0 * M_PI * static_cast<double>(i) * dt));
    z.push_back(0.0);
  }
  CHECK(rmse(s, z) == doctest::Approx(A / std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("chattering index: constant, ramp, square wave") {
  {
    const Trace tr = one_channel(0.01, std::vector<double>(501, 3.0));
    CHECK(chattering_index(tr, "y", 0.0, 5.0) == 0.0);
  }
  {
    std::vector<double> ramp;
    for (int i = 0; i <= 500; ++i) ramp.push_back(-2.5 * 0.01 * i);
    const Trace tr = one_channel(0.01, ramp);
    CHECK(chattering_index(tr, "y", 0.0, 5.0) == doctest::Approx(2.5).epsilon(1e-12));
  }
  {
    // amplitude A square wave of period P: TV is 4A per period
    const double A = 1.5, P = 0.5, dt = 1e-3;
    std::vector<double> sq;
    for (int i = 0; i <= 4000; ++i) {
      const double t = i * dt;
      sq.push_back(std::fmod(t, P) < P / 2.0 ? A : -A);
    }
    const Trace tr = one_channel(dt, sq);
    CHECK(chattering_index(tr, "y", 0.0, 4.0) == doctest::Approx(4.0 * A / P).epsilon(0.01));
  }
  {
    const Trace tr = one_channel(0.01, std::vector<double>(11, 0.0));
    CHECK_THROWS_AS(chattering_index(tr, "y", 0.0, 5.0), std::out_of_range);
  }
}

TEST_CASE("compute_metrics final window and channel table") {
  // 0..1 ramp then flat at 1: final 20% window is entirely flat
  std::vector<double> v;
  for (int i = 0; i <= 1000; ++i) v.push_back(std::min(1.0, i / 500.0));
  const Trace tr = one_channel(0.01, v);
  const MetricReport rep = compute_metrics(tr, 0.2);
  const ChannelMetrics& m = rep.channel("y");
  CHECK(m.final_mean == doctest::Approx(1.0));
  CHECK(m.final_rmse == doctest::Approx(1.0));
  CHECK(m.chattering == doctest::Approx(0.0));
  CHECK(rep.final_window_start == doctest::Approx(8.0));
  CHECK_THROWS_AS(rep.channel("zzz"), std::out_of_range);
}

TEST_CASE("parallel metrics equal the serial reference bitwise") {
  Trace tr(1e-3, 0.0, {"t", "a", "b", "c"});
  for (int i = 0; i <= 50000; ++i) {
    const double t = i * 1e-3;
    const double row[4] = {t, std::sin(3.1 * t), std::cos(0.7 * t) + 0.01 * std::sin(500.0 * t),
                           std::exp(-0.1 * t)};
    tr.append_row(row);
  }
  const MetricReport s = compute_metrics(tr, 0.2, Exec::serial);
  const MetricReport p = compute_metrics(tr, 0.2, Exec::parallel);
  REQUIRE(s.channels.size() == p.channels.size());
  for (std::size_t i = 0; i < s.channels.size(); ++i) {
    CHECK(s.channels[i].channel == p.channels[i].channel);
    CHECK(s.channels[i].rmse_vs_zero == p.channels[i].rmse_vs_zero);
    CHECK(s.channels[i].final_mean == p.channels[i].final_mean);
    CHECK(s.channels[i].final_rmse == p.channels[i].final_rmse);
    CHECK(s.channels[i].chattering == p.channels[i].chattering);
  }
}
