#pragma once

#include "obslab/metrics.hpp"
#include "obslab/scenario.hpp"
#include "obslab/trace.hpp"

namespace obslab {

struct RunResult {
  Trace trace;
  MetricReport report;
};

/// Simulate plant and observers (plus the controller in closed loop) on a
/// shared clock. Measurements and controls are sampled every sample_period
/// and zero-order-held; plant and observers advance between samples with RK4
/// substeps of size step. Noise is injected into the x1 measurement at sample
/// boundaries. Divergence is not a crash: the result carries the partial
/// trace plus a flagged report. Deterministic for identical configs.
RunResult run_scenario(const ScenarioConfig& cfg);

}  // namespace obslab
