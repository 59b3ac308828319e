#include "obslab/integrate.hpp"

#include <algorithm>

namespace obslab {

namespace {

struct Scratch {
  explicit Scratch(std::size_t n) : k1(n), k2(n), k3(n), k4(n), tmp(n), before(n) {}
  std::vector<double> k1, k2, k3, k4, tmp, before;
};

void step_checked(const DerivFn& f, std::vector<double>& x, double t, double h, Scratch& s) {
  s.before = x;
  auto fn = [&f](double tt, const std::vector<double>& xx, std::vector<double>& dx) {
    f(tt, xx, dx);
  };
  rk4_apply(fn, x, t, h, s.k1, s.k2, s.k3, s.k4, s.tmp);
  if (!all_finite(x)) throw IntegrationFault(t, s.before);
}

}  // namespace

std::vector<double> rk4_step(const DerivFn& f, std::span<const double> x, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_step: h must be > 0");
  std::vector<double> out(x.begin(), x.end());
  Scratch s(out.size());
  step_checked(f, out, t, h, s);
  return out;
}

Trace integrate(const DerivFn& f, std::span<const double> x0, double t0, double t_end,
                double h, int record_every, std::span<const std::string> state_names) {
  if (!(h > 0.0)) throw std::invalid_argument("integrate: h must be > 0");
  if (!(t_end >= t0)) throw std::invalid_argument("integrate: t_end must be >= t0");
  if (record_every < 1) throw std::invalid_argument("integrate: record_every must be >= 1");
  if (!state_names.empty() && state_names.size() != x0.size())
    throw std::invalid_argument("integrate: state_names size mismatch");

  std::vector<std::string> names{"t"};
  for (std::size_t i = 0; i < x0.size(); ++i)
    names.push_back(state_names.empty() ? "x" + std::to_string(i)
                                        : state_names[i]);

  Trace trace(h * record_every, t0, names);

  std::vector<double> x(x0.begin(), x0.end());
  Scratch s(x.size());
  std::vector<double> row(x.size() + 1);

  auto record = [&](double t) {
    row[0] = t;
    std::copy(x.begin(), x.end(), row.begin() + 1);
    trace.append_row(row);
  };

  record(t0);
  if (t_end == t0) return trace;

  const double span = t_end - t0;
  auto n_full = static_cast<std::size_t>(std::floor(span / h + 1e-9));
  double remainder = span - static_cast<double>(n_full) * h;
  if (remainder < 1e-12 * std::max(1.0, std::fabs(t_end))) remainder = 0.0;

  bool final_recorded = false;
  for (std::size_t k = 0; k < n_full; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    step_checked(f, x, t, h, s);
    final_recorded = false;
    if ((k + 1) % static_cast<std::size_t>(record_every) == 0) {
      record(t0 + static_cast<double>(k + 1) * h);
      final_recorded = true;
    }
  }
  if (remainder > 0.0) {
    step_checked(f, x, t0 + static_cast<double>(n_full) * h, remainder, s);
    final_recorded = false;
  }
  if (!final_recorded) record(t_end);
  return trace;
}

}  // namespace obslab
