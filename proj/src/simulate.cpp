#include "obslab/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "obslab/integrate.hpp"
#include "obslab/signum.hpp"

namespace obslab {

namespace {

struct ObserverRuntime {
  std::string name;
  ObserverKind kind;
  ObserverInit state;
};

void append_observer_names(const ObserverRuntime& o, std::vector<std::string>& names) {
  const std::string& n = o.name;
  switch (o.kind) {
    case ObserverKind::ii_pendulum:
      for (const char* s : {"x2hat", "theta1hat", "theta2hat", "x2err", "theta1err",
                            "theta2err", "x2I", "theta1I", "theta2I"})
        names.push_back(n + "_" + s);
      break;
    case ObserverKind::sm_pendulum:
      for (const char* s : {"x1hat", "x2hat", "theta1hat", "theta2hat", "x1err", "x2err",
                            "theta1err", "theta2err", "delta1", "delta2", "gamma11",
                            "gamma12", "gamma22"})
        names.push_back(n + "_" + s);
      break;
    case ObserverKind::ii_hydro:
      for (const char* s : {"x2hat", "x3hat", "theta1hat", "theta2hat", "x2err", "x3err",
                            "theta1err", "theta2err", "x2I", "theta1I", "theta2I"})
        names.push_back(n + "_" + s);
      break;
    case ObserverKind::hosm:
      for (const char* s : {"zeta1", "zeta2", "zeta3", "zeta4", "zeta2err", "zeta3err"})
        names.push_back(n + "_" + s);
      break;
  }
}

struct Estimates {
  double x2hat = 0.0;
  double theta1hat = 0.0;
  double theta2hat = 0.0;
};

// Velocity-estimate channel feeding the excitation regressor.
std::string excitation_channel_for(const std::vector<ObserverRuntime>& observers,
                                   const std::string& name) {
  for (const auto& o : observers)
    if (o.name == name)
      return o.kind == ObserverKind::hosm ? name + "_zeta2" : name + "_x2hat";
  throw ConfigError("excitation.observer: no observer named '" + name + "'");
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  const double h = cfg.integrator.step;
  const double Ts = cfg.integrator.sample_period;
  const auto steps_per_sample = static_cast<std::size_t>(std::llround(Ts / h));
  const auto n_samples =
      static_cast<std::size_t>(std::llround(cfg.integrator.duration / Ts));

  std::vector<ObserverRuntime> observers;
  for (const auto& o : cfg.observers) observers.push_back({o.name, o.kind, o.initial});

  // channel layout
  std::vector<std::string> names{"t", "x1", "x2"};
  if (cfg.plant_kind == PlantKind::hydro) names.push_back("x3");
  names.push_back("x1meas");
  names.push_back("u");
  if (cfg.mode == Mode::closed_loop)
    for (const char* s : {"xd", "xd_dot", "e1"}) names.emplace_back(s);
  for (const auto& o : observers) append_observer_names(o, names);

  Trace trace(Ts, 0.0, names);
  trace.seed = cfg.seed;

  std::vector<double> noise;
  if (cfg.noise.kind == NoiseKind::gaussian)
    noise = gaussian_noise(cfg.noise, n_samples + 1);

  MetricReport report;

  // plant state
  PendulumState pend{cfg.plant_ic[0], cfg.plant_ic[1]};
  HydroState hyd{cfg.plant_ic[0], cfg.plant_ic[1], cfg.plant_ic[2]};

  std::vector<double> row(names.size());
  bool diverged = false;
  double divergence_time = 0.0;

  for (std::size_t k = 0; k <= n_samples; ++k) {
    const double t = static_cast<double>(k) * Ts;
    const double x1_true = cfg.plant_kind == PlantKind::pendulum ? pend.x1 : hyd.x1;
    const double x1_meas = x1_true + (noise.empty() ? 0.0 : noise[k]);

    // estimates from the designated observer, for the adaptive law
    Estimates est;
    ReferenceSample ref;
    double u = 0.0;
    if (cfg.mode == Mode::open_loop) {
      u = test_input(cfg.input, t);
    } else {
      const ControllerConfig& ctl = *cfg.controller;
      ref = reference(ctl.reference, t);
      if (ctl.law == ControlLaw::ideal) {
        u = ideal_control(pend, ref, cfg.pendulum(), ctl.gains);
      } else {
        for (const auto& o : observers) {
          if (o.name != ctl.observer) continue;
          if (o.kind == ObserverKind::ii_pendulum) {
            const auto& s = std::get<IIPendObsState>(o.state);
            const IIPendOutput out = ii_pend_output(s, x1_meas, cfg.pendulum());
            est = {out.x2hat, out.theta1hat, out.theta2hat};
          } else {
            const auto& s = std::get<SMObsState>(o.state);
            const auto th = s.theta_hat(cfg.pendulum());
            est = {s.x2hat, th[0], th[1]};
          }
        }
        u = adaptive_control(x1_meas, est.x2hat, est.theta1hat, est.theta2hat, ref,
                             cfg.pendulum(), ctl.gains);
      }
      if (ctl.saturation.enabled) {
        const double lim = ctl.saturation.limit;
        if (std::fabs(u) > lim) {
          ++report.saturation_count;
          u = std::clamp(u, -lim, lim);
        }
      }
    }

    // record the sample
    std::size_t col = 0;
    row[col++] = t;
    if (cfg.plant_kind == PlantKind::pendulum) {
      row[col++] = pend.x1;
      row[col++] = pend.x2;
    } else {
      row[col++] = hyd.x1;
      row[col++] = hyd.x2;
      row[col++] = hyd.x3;
    }
    row[col++] = x1_meas;
    row[col++] = u;
    if (cfg.mode == Mode::closed_loop) {
      row[col++] = ref.xd;
      row[col++] = ref.xd_dot;
      row[col++] = x1_true - ref.xd;
    }
    for (const auto& o : observers) {
      switch (o.kind) {
        case ObserverKind::ii_pendulum: {
          const auto& s = std::get<IIPendObsState>(o.state);
          const IIPendOutput out = ii_pend_output(s, x1_meas, cfg.pendulum());
          const PendulumParams& p = cfg.pendulum();
          row[col++] = out.x2hat;
          row[col++] = out.theta1hat;
          row[col++] = out.theta2hat;
          row[col++] = out.x2hat - pend.x2;
          row[col++] = out.theta1hat - p.theta1;
          row[col++] = out.theta2hat - p.theta2;
          row[col++] = s.x2I;
          row[col++] = s.theta1I;
          row[col++] = s.theta2I;
          break;
        }
        case ObserverKind::sm_pendulum: {
          const auto& s = std::get<SMObsState>(o.state);
          const PendulumParams& p = cfg.pendulum();
          const auto th = s.theta_hat(p);
          row[col++] = s.x1hat;
          row[col++] = s.x2hat;
          row[col++] = th[0];
          row[col++] = th[1];
          row[col++] = s.x1hat - pend.x1;
          row[col++] = s.x2hat - pend.x2;
          row[col++] = th[0] - p.theta1;
          row[col++] = th[1] - p.theta2;
          row[col++] = s.delta_theta[0];
          row[col++] = s.delta_theta[1];
          row[col++] = s.Gamma.a11;
          row[col++] = s.Gamma.a12;
          row[col++] = s.Gamma.a22;
          break;
        }
        case ObserverKind::ii_hydro: {
          const auto& s = std::get<IIHydroObsState>(o.state);
          const HydroParams& p = cfg.hydro();
          const IIHydroOutput out = ii_hydro_output(s, x1_meas, p);
          row[col++] = out.x2hat;
          row[col++] = out.x3hat;
          row[col++] = out.theta1hat;
          row[col++] = out.theta2hat;
          row[col++] = out.x2hat - hyd.x2;
          row[col++] = out.x3hat - hyd.x3;
          row[col++] = out.theta1hat - p.theta1;
          row[col++] = out.theta2hat - p.theta2;
          row[col++] = s.x2I;
          row[col++] = s.theta1I;
          row[col++] = s.theta2I;
          break;
        }
        case ObserverKind::hosm: {
          const auto& s = std::get<HOSMObsState>(o.state);
          const auto dx = hydro_dynamics(hyd, u, cfg.hydro());
          row[col++] = s.zeta[0];
          row[col++] = s.zeta[1];
          row[col++] = s.zeta[2];
          row[col++] = s.zeta[3];
          row[col++] = s.zeta[1] - hyd.x2;
          row[col++] = s.zeta[2] - dx[1];  // acceleration error
          break;
        }
      }
    }
    trace.append_row(row);

    if (k == n_samples) break;

    // advance plant and observers to the next sample under held (x1_meas, u)
    try {
      for (std::size_t i = 0; i < steps_per_sample; ++i) {
        const double ti = t + static_cast<double>(i) * h;
        if (cfg.plant_kind == PlantKind::pendulum) {
          std::array<double, 2> x{pend.x1, pend.x2};
          auto f = [&](double, const std::array<double, 2>& s, std::array<double, 2>& dx) {
            dx = pendulum_dynamics({s[0], s[1]}, u, cfg.pendulum());
          };
          std::array<double, 2> k1{}, k2{}, k3{}, k4{}, tmp{};
          rk4_apply(f, x, ti, h, k1, k2, k3, k4, tmp);
          if (!all_finite(x)) throw IntegrationFault(ti, {pend.x1, pend.x2});
          pend = {x[0], x[1]};
        } else {
          std::array<double, 3> x{hyd.x1, hyd.x2, hyd.x3};
          auto f = [&](double, const std::array<double, 3>& s, std::array<double, 3>& dx) {
            dx = hydro_dynamics({s[0], s[1], s[2]}, u, cfg.hydro());
          };
          std::array<double, 3> k1{}, k2{}, k3{}, k4{}, tmp{};
          rk4_apply(f, x, ti, h, k1, k2, k3, k4, tmp);
          if (!all_finite(x)) throw IntegrationFault(ti, {hyd.x1, hyd.x2, hyd.x3});
          hyd = {x[0], x[1], x[2]};
        }
        for (auto& o : observers) {
          try {
            switch (o.kind) {
              case ObserverKind::ii_pendulum:
                observer_step(std::get<IIPendObsState>(o.state), x1_meas, u, cfg.pendulum(), h);
                break;
              case ObserverKind::sm_pendulum:
                observer_step(std::get<SMObsState>(o.state), x1_meas, u, cfg.pendulum(), h);
                break;
              case ObserverKind::ii_hydro:
                observer_step(std::get<IIHydroObsState>(o.state), x1_meas, u, cfg.hydro(), h);
                break;
              case ObserverKind::hosm:
                observer_step(std::get<HOSMObsState>(o.state), x1_meas, u, h);
                break;
            }
          } catch (const IntegrationFault&) {
            throw IntegrationFault(ti, {});  // stamp with the run clock
          }
        }
      }
    } catch (const IntegrationFault& fault) {
      diverged = true;
      divergence_time = fault.time;
      break;
    }
  }

  report.diverged = diverged;
  report.divergence_time = divergence_time;

  if (trace.size() >= 2) {
    MetricReport computed = compute_metrics(trace);
    computed.saturation_count = report.saturation_count;
    computed.diverged = report.diverged;
    computed.divergence_time = report.divergence_time;
    report = std::move(computed);
  }

  if (cfg.excitation && !diverged) {
    const std::string channel = excitation_channel_for(observers, cfg.excitation->observer);
    const double vartheta = cfg.plant_kind == PlantKind::pendulum
                                ? cfg.pendulum().vartheta
                                : cfg.hydro().vartheta;
    const Trace phi = phi_signal(trace, channel, vartheta);
    report.excitation = interval_excitation(phi, cfg.excitation->window,
                                            cfg.excitation->stride,
                                            cfg.excitation->lambda_floor);
    report.excitation_channel = channel;
  }

  return {std::move(trace), std::move(report)};
}

}  // namespace obslab
