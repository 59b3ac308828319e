#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obslab/metrics.hpp"
#include "obslab/scenario.hpp"
#include "obslab/trace.hpp"

namespace obslab {

/// Write trace.csv, metrics.csv and manifest.json into dir. trace.csv: header
/// row of channel names, time column first, every value printed with 9
/// significant digits; byte-identical across repeated runs of the same
/// config. An empty channel selection writes the time column only.
void write_outputs(const Trace& trace, const MetricReport& report,
                   const ScenarioConfig& cfg, const std::string& dir);

/// Recompute-metrics entry point: trace.csv back into a Trace (dt inferred
/// from the time column, which must be uniform).
Trace read_trace_csv(const std::string& path);

void write_trace_csv(const Trace& trace, const std::string& path,
                     const std::optional<std::vector<std::string>>& selection =
                         std::nullopt);
void write_metrics_csv(const MetricReport& report, const std::string& path);

}  // namespace obslab
