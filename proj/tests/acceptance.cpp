// Acceptance suite: every release criterion as one pass/fail line, with the
// measured quantity printed next to its pinned threshold. Run with no
// arguments for the whole suite, or with a criterion number (1-9) for one.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "obslab/csv_io.hpp"
#include "obslab/integrate.hpp"
#include "obslab/simulate.hpp"

using namespace obslab;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what) {
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  if (!pass) ++g_failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. closed_loop_poles(1600, 1100) = (-1.45, -1098.54) to two decimals
void criterion_1() {
  const auto poles = closed_loop_poles({1600.0, 1100.0});
  const double slow = poles[1].real();
  const double fast = poles[0].real();
  const bool pass = poles[0].imag() == 0.0 && poles[1].imag() == 0.0 &&
                    std::fabs(slow - (-1.45)) <= 0.01 &&
                    std::fabs(fast - (-1098.54)) <= 0.01;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "pole reproduction: got (%.4f, %.2f), expected (-1.45, -1098.54) +- 0.01",
                slow, fast);
  report(1, pass, buf);
}

// 2. published HOSM gain set (c4 = 1.1) must set the divergence flag within
//    10 s; the retuned c4 = 1.1e-4 must stay bounded
void criterion_2() {
  const RunResult high = run_scenario(preset_scenario("hydro_published_gains"));
  const RunResult low = run_scenario(preset_scenario("hydro_tuned"));
  const bool pass = high.report.diverged && !low.report.diverged;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "hydro divergence pair: c4=1.1 diverged=%d (want 1), c4=1.1e-4 diverged=%d "
                "(want 0)",
                high.report.diverged ? 1 : 0, low.report.diverged ? 1 : 0);
  report(2, pass, buf);
  if (!high.report.diverged) {
    std::printf("      note: at step 1e-4 the c4=1.1 observer is finite-time stable and "
                "stays in sliding;\n"
                "      the blow-up reproduces only when the +-715 relay is under-resolved "
                "(e.g. --step 1e-2\n"
                "      reaches non-finite state at t=0.21 s). See the run logs and "
                "bench notes.\n");
  }
}

// 3. with measurement noise the HOSM velocity-error channel chatters >= 10x
//    the adaptive observer's; without noise the adaptive observer's final
//    window RMSE is below 1e-2
void criterion_3() {
  const RunResult noisy = run_scenario(preset_scenario("hydro_noise"));
  const RunResult clean = run_scenario(preset_scenario("hydro_tuned"));
  const double hosm = noisy.report.channel("hosm_zeta2err").chattering;
  const double ii = noisy.report.channel("ii_x2err").chattering;
  const double ratio = hosm / ii;
  const double rmse = clean.report.channel("ii_x2err").final_rmse;
  const bool pass = ratio >= 10.0 && rmse < 1e-2;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "noise comparison: chattering ratio %.2f (need >= 10), clean x2 error RMSE "
                "%.3g (need < 1e-2)",
                ratio, rmse);
  report(3, pass, buf);
}

// 4. frozen-adaptation contraction bound, every sample, three initial errors
void criterion_4() {
  const PendulumParams p = pendulum_preset("nominal");
  const double k1 = 1.0;
  const double rate = (p.theta1 + k1) / p.J;
  bool pass = true;
  double worst_margin = 1e300;
  for (double err0 : {-1.0, 0.5, 2.0}) {
    IIPendObsState obs;
    obs.k1 = k1;
    obs.freeze_adaptation = true;
    obs.theta1I = p.theta1;
    obs.theta2I = p.theta2;
    const DerivFn f = [&](double t, std::span<const double> x, std::span<double> dx) {
      const double u = 25.0 * std::sin(5.0 * t);
      const auto dp = pendulum_dynamics({x[0], x[1]}, u, p);
      IIPendObsState o = obs;
      o.x2I = x[2];
      dx[0] = dp[0];
      dx[1] = dp[1];
      dx[2] = ii_pend_derivative(o, x[0], u, p)[0];
    };
    const Trace tr = integrate(f, std::vector{0.0, 0.0, err0}, 0.0, 2.5, 1e-4, 1);
    const auto t = tr.channel("t"), x1 = tr.channel("x0"), x2 = tr.channel("x1"),
               x2I = tr.channel("x2");
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const double err = std::fabs(x2I[i] + (k1 / p.J) * x1[i] - x2[i]);
      const double bound = std::fabs(err0) * std::exp(-rate * t[i]) * 1.05 + 1e-6;
      worst_margin = std::min(worst_margin, bound - err);
      if (err > bound) pass = false;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "frozen-adaptation contraction at rate %.3f 1/s: worst bound margin %.3g "
                "(need >= 0)",
                rate, worst_margin);
  report(4, pass, buf);
}

// 5. least-squares identity: Gamma^-1(T) - Gamma^-1(0) = int phi phi^T, and
//    Gamma eigenvalues non-increasing at every recorded sample
void criterion_5() {
  const ScenarioConfig cfg = preset_scenario("openloop_sine");
  const RunResult r = run_scenario(cfg);
  const Trace& tr = r.trace;

  auto gamma_at = [&](std::size_t i) {
    return Mat2{tr.channel("sm_gamma11")[i], tr.channel("sm_gamma12")[i],
                tr.channel("sm_gamma12")[i], tr.channel("sm_gamma22")[i]};
  };
  const std::size_t last = tr.size() - 1;
  const Mat2 ginv0 = gamma_at(0).inverse();
  const Mat2 ginvT = gamma_at(last).inverse();

  const Trace phi = phi_signal(tr, "sm_x2hat", cfg.pendulum().vartheta);
  const Mat2 gram = gram_window(phi, 0.0, tr.time(last));
  const double residual = (ginvT - ginv0 - gram).frobenius();
  const double tol = 1e-4 * ginvT.frobenius();

  bool monotone = true;
  auto prev = gamma_at(0).sym_eigenvalues();
  for (std::size_t i = 1; i <= last; ++i) {
    const auto eig = gamma_at(i).sym_eigenvalues();
    if (eig[0] > prev[0] + 1e-8 || eig[1] > prev[1] + 1e-8) monotone = false;
    prev = eig;
  }

  const bool pass = residual <= tol && monotone;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "covariance identity: |Ginv(T)-Ginv(0)-Gram| = %.3g (tol %.3g), eigenvalues "
                "non-increasing: %s",
                residual, tol, monotone ? "yes" : "NO");
  report(5, pass, buf);
}

// 6. RK4 order on the driven pendulum: halving the step shrinks the
//    final-state error by a factor in [12, 20]. The tanh(50 x2) friction has
//    large high derivatives, so the asymptotic regime starts near h ~ 1e-3.
void criterion_6() {
  const PendulumParams p = pendulum_preset("nominal");
  const DerivFn f = [&](double t, std::span<const double> x, std::span<double> dx) {
    const auto d = pendulum_dynamics({x[0], x[1]}, 25.0 * std::sin(5.0 * t), p);
    dx[0] = d[0];
    dx[1] = d[1];
  };
  auto final_state = [&](double h) {
    const Trace tr = integrate(f, std::vector{0.0, 0.0}, 0.0, 2.0, h,
                               static_cast<int>(std::llround(2.0 / h)));
    return std::array<double, 2>{tr.channel("x0").back(), tr.channel("x1").back()};
  };
  const auto ref = final_state(1e-5);
  auto err = [&](double h) {
    const auto s = final_state(h);
    return std::hypot(s[0] - ref[0], s[1] - ref[1]);
  };
  const double ratio = err(1.25e-3) / err(6.25e-4);
  const bool pass = ratio >= 12.0 && ratio <= 20.0;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "integrator order: error ratio %.2f (need within [12, 20])",
                ratio);
  report(6, pass, buf);
}

// 7. certainty equivalence pointwise, and the ideal closed loop holds
//    |e1| < 1e-3 rad from 3 s on
void criterion_7() {
  PendulumParams p = pendulum_preset("identified");
  p.vartheta = 330.0;
  const ControllerGains gains{1600.0, 1100.0};
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PendulumState s{d(rng), d(rng)};
    const ReferenceSample r{0.3 * d(rng), d(rng), 5.0 * d(rng)};
    const double ui = ideal_control(s, r, p, gains);
    const double ua = adaptive_control(s.x1, s.x2, p.theta1, p.theta2, r, p, gains);
    worst_rel = std::max(worst_rel, std::fabs(ua - ui) / std::max(1.0, std::fabs(ui)));
  }

  ScenarioConfig cfg;
  cfg.name = "ideal_tracking";
  cfg.plant_kind = PlantKind::pendulum;
  PendulumParams pp = pendulum_preset("nominal");
  pp.vartheta = 50.0;
  cfg.plant = pp;
  cfg.mode = Mode::closed_loop;
  ControllerConfig ctl;
  ctl.law = ControlLaw::ideal;
  ctl.gains = {100.0, 20.0};
  ctl.reference = ReferenceKind::t2;
  ctl.saturation = {true, 200.0};
  cfg.controller = ctl;
  IIPendObsState o;
  o.k1 = 1.0;
  cfg.observers.push_back({ObserverKind::ii_pendulum, "ii", o});
  cfg.integrator = {1e-4, 1e-3, 4.0};

  const RunResult r = run_scenario(cfg);
  const auto t = r.trace.channel("t"), e1 = r.trace.channel("e1");
  double worst_e1 = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= 3.0) worst_e1 = std::max(worst_e1, std::fabs(e1[i]));

  const bool pass = worst_rel <= 1e-12 && worst_e1 < 1e-3;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "certainty equivalence: worst relative gap %.2g (tol 1e-12); ideal tracking "
                "|e1| after 3 s: %.3g (need < 1e-3)",
                worst_rel, worst_e1);
  report(7, pass, buf);
}

// 8. excitation diagnostics on synthetic regressors
void criterion_8() {
  Trace constant(1e-2, 0.0, {"t", "x2hat"});
  for (int i = 0; i <= 1000; ++i) {
    const double row[2] = {i * 1e-2, 1.5};
    constant.append_row(row);
  }
  const ExcitationReport flat =
      interval_excitation(phi_signal(constant, "x2hat", 50.0), 2.0, 2.0, 1e-6);
  bool flat_ok = !flat.excited;
  double flat_worst = 0.0;
  for (const auto& w : flat.windows) flat_worst = std::max(flat_worst, std::fabs(w.lambda_min));
  flat_ok = flat_ok && flat_worst <= 1e-9;

  Trace sine(1e-3, 0.0, {"t", "x2hat"});
  for (int i = 0; i <= 40000; ++i) {
    const double t = i * 1e-3;
    const double row[2] = {t, std::sin(t)};
    sine.append_row(row);
  }
  const Trace phi = phi_signal(sine, "x2hat", 50.0);
  const ExcitationReport rich = interval_excitation(phi, 2.0 * M_PI, 2.0 * M_PI, 1e-6);
  bool rich_ok = rich.excited && !rich.windows.empty();
  double rich_min = 1e300;
  for (const auto& w : rich.windows) rich_min = std::min(rich_min, w.lambda_min);
  rich_ok = rich_ok && rich_min > 0.0;

  Trace flipped(phi.dt(), phi.t0(), {"t", "phi1", "phi2"});
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double row[3] = {phi.channel("t")[i], -phi.channel("phi1")[i],
                           -phi.channel("phi2")[i]};
    flipped.append_row(row);
  }
  const ExcitationReport mirrored =
      interval_excitation(flipped, 2.0 * M_PI, 2.0 * M_PI, 1e-6);
  double flip_gap = 0.0;
  for (std::size_t i = 0; i < rich.windows.size(); ++i)
    flip_gap = std::max(flip_gap, std::fabs(rich.windows[i].lambda_min -
                                            mirrored.windows[i].lambda_min) /
                                      std::max(1.0, rich.windows[i].lambda_min));

  const bool pass = flat_ok && rich_ok && flip_gap <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "excitation: constant-phi worst |lambda| %.2g + not-excited, sine min lambda "
                "%.3g > 0, sign-flip gap %.2g",
                flat_worst, rich_min, flip_gap);
  report(8, pass, buf);
}

// 9. byte-identical outputs for repeated preset runs
void criterion_9() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"openloop_sine", "hydro_noise"}) {
    const ScenarioConfig cfg = preset_scenario(name);
    const RunResult a = run_scenario(cfg);
    const RunResult b = run_scenario(cfg);
    const std::string d1 = std::string("/tmp/obslab_acc9_") + name + "_a";
    const std::string d2 = std::string("/tmp/obslab_acc9_") + name + "_b";
    write_outputs(a.trace, a.report, cfg, d1);
    write_outputs(b.trace, b.report, cfg, d2);
    const bool same = slurp(d1 + "/trace.csv") == slurp(d2 + "/trace.csv") &&
                      slurp(d1 + "/metrics.csv") == slurp(d2 + "/metrics.csv");
    if (!same) pass = false;
    detail += std::string(name) + (same ? " identical; " : " MISMATCH; ");
    std::filesystem::remove_all(d1);
    std::filesystem::remove_all(d2);
  }
  report(9, pass, "determinism: " + detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9};

  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
    criteria[static_cast<std::size_t>(id - 1)]();
  } else {
    for (const auto& c : criteria) c();
    std::printf("%d of %zu criteria failed\n", g_failures, criteria.size());
  }
  return g_failures == 0 ? 0 : 1;
}
