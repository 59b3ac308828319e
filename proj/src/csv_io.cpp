#include "obslab/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "obslab/version.hpp"

namespace obslab {

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

[[noreturn]] void io_fail(const std::string& path, const std::string& why) {
  throw std::runtime_error("i/o error on '" + path + "': " + why);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail(path, "cannot open for writing");
  return out;
}

// std::stod rejects subnormals (ERANGE), which legitimately occur in decaying
// channels; strtod keeps them.
double parse_field(const std::string& field, const std::string& path, std::size_t line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || static_cast<std::size_t>(end - begin) != field.size())
    io_fail(path, "unparseable number '" + field + "' at line " + std::to_string(line));
  return v;
}

}  // namespace

void write_trace_csv(const Trace& trace, const std::string& path,
                     const std::optional<std::vector<std::string>>& selection) {
  // time first, then either everything or the requested channels in trace order
  std::vector<std::size_t> cols;
  cols.push_back(trace.channel_index("t"));
  for (std::size_t i = 0; i < trace.channel_count(); ++i) {
    const std::string& name = trace.names()[i];
    if (name == "t") continue;
    if (!selection ||
        std::find(selection->begin(), selection->end(), name) != selection->end())
      cols.push_back(i);
  }

  std::ofstream out = open_out(path);
  for (std::size_t c = 0; c < cols.size(); ++c)
    out << (c ? "," : "") << trace.names()[cols[c]];
  out << "\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      out << (c ? "," : "") << fmt9(trace.channel(cols[c])[i]);
    out << "\n";
  }
  if (!out) io_fail(path, "write failed");
}

void write_metrics_csv(const MetricReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "metric,channel,value\n";
  for (const auto& c : report.channels) {
    out << "rmse_vs_zero," << c.channel << "," << fmt9(c.rmse_vs_zero) << "\n";
    out << "final_window_mean," << c.channel << "," << fmt9(c.final_mean) << "\n";
    out << "final_window_rmse," << c.channel << "," << fmt9(c.final_rmse) << "\n";
    out << "chattering_index," << c.channel << "," << fmt9(c.chattering) << "\n";
  }
  out << "final_window_start,," << fmt9(report.final_window_start) << "\n";
  out << "saturation_count,," << report.saturation_count << "\n";
  out << "diverged,," << (report.diverged ? 1 : 0) << "\n";
  if (report.diverged) out << "divergence_time,," << fmt9(report.divergence_time) << "\n";
  if (report.excitation) {
    const ExcitationReport& e = *report.excitation;
    for (const auto& w : e.windows)
      out << "excitation_lambda," << report.excitation_channel << "@t=" << fmt9(w.t_start)
          << "," << fmt9(w.lambda_min) << "\n";
    out << "excitation_avg_gram_min_eig," << report.excitation_channel << ","
        << fmt9(e.average_gram_min_eig) << "\n";
    out << "excitation_lambda_floor," << report.excitation_channel << ","
        << fmt9(e.lambda_floor) << "\n";
    out << "excitation_verdict," << report.excitation_channel << "," << e.verdict()
        << "\n";
  }
  if (!out) io_fail(path, "write failed");
}

void write_outputs(const Trace& trace, const MetricReport& report,
                   const ScenarioConfig& cfg, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) io_fail(dir, ec.message());

  write_trace_csv(trace, dir + "/trace.csv", cfg.channels);
  write_metrics_csv(report, dir + "/metrics.csv");

  nlohmann::json manifest;
  manifest["tool"] = "obslab";
  manifest["version"] = kVersion;
  manifest["config"] = nlohmann::json::parse(serialize_scenario(cfg));
  std::ofstream out = open_out(dir + "/manifest.json");
  out << manifest.dump(2) << "\n";
  if (!out) io_fail(dir + "/manifest.json", "write failed");
}

Trace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail(path, "cannot open for reading");

  std::string line;
  if (!std::getline(in, line)) io_fail(path, "empty file");
  std::vector<std::string> names;
  {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) names.push_back(field);
  }
  if (names.empty() || names.front() != "t")
    io_fail(path, "first column must be the time channel 't'");

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
      row.push_back(parse_field(field, path, rows.size() + 2));
    if (row.size() != names.size())
      io_fail(path, "row " + std::to_string(rows.size() + 2) + " has " +
                        std::to_string(row.size()) + " fields, expected " +
                        std::to_string(names.size()));
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) io_fail(path, "need at least two samples");

  const double t0 = rows[0][0];
  const double dt = rows[1][0] - t0;
  if (!(dt > 0.0)) io_fail(path, "time column must be strictly increasing");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double expected = t0 + static_cast<double>(i) * dt;
    if (std::fabs(rows[i][0] - expected) > 1e-6 * std::max(1.0, std::fabs(expected)))
      io_fail(path, "time column is not uniformly sampled at row " + std::to_string(i + 2));
  }

  Trace trace(dt, t0, names);
  for (const auto& row : rows) trace.append_row(row);
  return trace;
}

}  // namespace obslab
