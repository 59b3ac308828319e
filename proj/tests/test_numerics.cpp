#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "obslab/integrate.hpp"
#include "obslab/noise.hpp"
#include "obslab/signum.hpp"
#include "obslab/trace.hpp"

using namespace obslab;

namespace {

const DerivFn decay = [](double, std::span<const double> x, std::span<double> dx) {
  dx[0] = -x[0];
};

}  // namespace

TEST_CASE("rk4_step matches the classical update on x' = -x") {
  const auto out = rk4_step(decay, std::vector{1.0}, 0.0, 0.1);
  // hand-evaluated stages: k = (-1, -0.95, -0.9525, -0.90475)
  CHECK(out[0] == doctest::Approx(0.90483750).epsilon(1e-12));
  CHECK(std::fabs(out[0] - std::exp(-0.1)) < 1e-7);
}

TEST_CASE("rk4_step trivia: zero field and constant slope") {
  const DerivFn zero = [](double, std::span<const double>, std::span<double> dx) {
    dx[0] = 0.0;
  };
  CHECK(rk4_step(zero, std::vector{3.25}, 0.0, 0.5)[0] == 3.25);

  const DerivFn one = [](double, std::span<const double>, std::span<double> dx) {
    dx[0] = 1.0;
  };
  CHECK(rk4_step(one, std::vector{0.0}, 0.0, 0.5)[0] == 0.5);  // exact for low-degree polynomials
}

TEST_CASE("integrate hits the closed form and lands exactly on t_end") {
  const Trace tr = integrate(decay, std::vector{1.0}, 0.0, 1.0, 0.001, 10);
  const auto x = tr.channel("x0");
  const auto t = tr.channel("t");
  CHECK(t.back() == 1.0);
  CHECK(std::fabs(x.back() - std::exp(-1.0)) < 1e-9);
  CHECK(tr.dt() == doctest::Approx(0.01));
}

TEST_CASE("integrate with t_end == t0 returns the single initial sample") {
  const Trace tr = integrate(decay, std::vector{0.7}, 2.0, 2.0, 0.1);
  CHECK(tr.size() == 1);
  CHECK(tr.channel("x0")[0] == 0.7);
}

TEST_CASE("integrate records a final partial step at t_end") {
  const Trace tr = integrate(decay, std::vector{1.0}, 0.0, 0.25, 0.1);
  CHECK(tr.channel("t").back() == 0.25);
  CHECK(std::fabs(tr.channel("x0").back() - std::exp(-0.25)) < 1e-6);
}

TEST_CASE("order-4 convergence: halving the step shrinks the error 12x-20x") {
  auto final_error = [&](double h) {
    const Trace tr = integrate(decay, std::vector{1.0}, 0.0, 1.0, h,
                               static_cast<int>(std::llround(1.0 / h)));
    return std::fabs(tr.channel("x0").back() - std::exp(-1.0));
  };
  const double ratio = final_error(0.01) / final_error(0.005);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("non-finite trajectories raise a fault carrying the first bad time") {
  // x' = x^2 from x=1 blows up at t=1
  const DerivFn blowup = [](double, std::span<const double> x, std::span<double> dx) {
    dx[0] = x[0] * x[0];
  };
  try {
    integrate(blowup, std::vector{1.0}, 0.0, 2.0, 0.01);
    FAIL("expected IntegrationFault");
  } catch (const IntegrationFault& f) {
    CHECK(f.time > 0.9);
    CHECK(f.time < 1.1);
    CHECK(f.last_state.size() == 1);
    CHECK(std::isfinite(f.last_state[0]));
  }
}

TEST_CASE("integrate is deterministic") {
  const Trace a = integrate(decay, std::vector{1.0}, 0.0, 0.5, 0.001);
  const Trace b = integrate(decay, std::vector{1.0}, 0.0, 0.5, 0.001);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.channel("x0")[i] == b.channel("x0")[i]);
}

TEST_CASE("relay sign convention") {
  CHECK(relay(-3.0) == -1.0);
  CHECK(relay(0.0) == 0.0);
  CHECK(relay(7.2) == 1.0);
}

TEST_CASE("frac_pow_sign values and oddness") {
  CHECK(frac_pow_sign(0.04, 0.5) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(frac_pow_sign(0.0, 0.75) == 0.0);
  CHECK(frac_pow_sign(-16.0, 0.75) == doctest::Approx(-8.0).epsilon(1e-12));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-50.0, 50.0), ps(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = xs(rng), p = ps(rng);
    CHECK(frac_pow_sign(-x, p) == -frac_pow_sign(x, p));
  }
}

TEST_CASE("log_cosh stays finite where cosh overflows") {
  CHECK(log_cosh(0.0) == doctest::Approx(0.0));
  CHECK(log_cosh(1.0) == doctest::Approx(std::log(std::cosh(1.0))).epsilon(1e-12));
  // vartheta = 500 regime: cosh(5000) overflows, ln cosh(z) ~ |z| - ln 2
  CHECK(std::isfinite(log_cosh(5000.0)));
  CHECK(log_cosh(5000.0) == doctest::Approx(5000.0 - M_LN2));
  CHECK(log_cosh(-5000.0) == log_cosh(5000.0));
}

TEST_CASE("gaussian_noise: determinism, moments, zero variance") {
  NoiseSpec spec{NoiseKind::gaussian, 1e-4, 42, "x1"};
  const auto a = gaussian_noise(spec, 100000);
  const auto b = gaussian_noise(spec, 100000);
  CHECK(a == b);

  double mean = 0.0;
  for (double v : a) mean += v;
  mean /= static_cast<double>(a.size());
  double var = 0.0;
  for (double v : a) var += (v - mean) * (v - mean);
  var /= static_cast<double>(a.size() - 1);
  const double sd = std::sqrt(var);
  CHECK(std::fabs(sd - 0.01) < 0.05 * 0.01);
  CHECK(std::fabs(mean) < 5e-4);

  spec.variance = 0.0;
  for (double v : gaussian_noise(spec, 100)) CHECK(v == 0.0);

  spec.kind = NoiseKind::none;
  CHECK_THROWS_AS(gaussian_noise(spec, 10), std::invalid_argument);
}

TEST_CASE("trace invariants: dt, unique names, equal lengths") {
  CHECK_THROWS_AS(Trace(0.0, 0.0, {"t"}), std::invalid_argument);
  CHECK_THROWS_AS(Trace(1.0, 0.0, {"a", "a"}), std::invalid_argument);

  Trace tr(0.5, 1.0, {"t", "x"});
  const double row[2] = {1.0, 2.0};
  tr.append_row(row);
  CHECK(tr.size() == 1);
  const double bad[1] = {0.0};
  CHECK_THROWS_AS(tr.append_row(bad), std::invalid_argument);
  CHECK(tr.time(3) == doctest::Approx(2.5));
  CHECK_THROWS_AS(tr.channel("missing"), std::out_of_range);
}
