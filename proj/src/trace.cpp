#include "obslab/trace.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace obslab {

Trace::Trace(double dt, double t0, std::vector<std::string> names)
    : dt_(dt), t0_(t0), names_(std::move(names)) {
  if (!(dt_ > 0.0)) throw std::invalid_argument("Trace: dt must be > 0");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("Trace: empty channel name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("Trace: duplicate channel name '" + n + "'");
  }
  data_.resize(names_.size());
}

bool Trace::has_channel(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Trace::channel_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::out_of_range("Trace: no channel named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::span<const double> Trace::channel(std::string_view name) const {
  return channel(channel_index(name));
}

std::span<const double> Trace::channel(std::size_t idx) const {
  if (idx >= data_.size()) throw std::out_of_range("Trace: channel index out of range");
  return data_[idx];
}

void Trace::append_row(std::span<const double> row) {
  if (row.size() != names_.size())
    throw std::invalid_argument("Trace: row width does not match channel count");
  for (std::size_t i = 0; i < row.size(); ++i) data_[i].push_back(row[i]);
}

}  // namespace obslab
