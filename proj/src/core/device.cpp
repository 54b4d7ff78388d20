// Copyright 2026 The Magion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magion/core/device.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

Circuit::Circuit(std::string id, std::vector<GridCell> cells, std::vector<DotProfile> profiles,
                 std::vector<GatingEvent> history)
    : id_(std::move(id)), history_(std::move(history)) {
  if (cells.size() != profiles.size()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("circuit {}: {} cells but {} profiles", id_, cells.size(), profiles.size()));
  }
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  cells_.reserve(cells.size());
  profiles_.reserve(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& cell = cells[order[i]];
    if (!cells_.empty() && cells_.back() == cell) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("circuit {}: duplicate cell ({}, {})", id_, cell.row, cell.col));
    }
    cells_.push_back(cell);
    const auto& p = profiles[order[i]];
    profiles_.emplace_back(static_cast<int>(i + 1), p.p_sd(), p.p_dir_rcw());
  }
}

Circuit Circuit::from_library(const DeviceLibrary& library, int columns, GridCell origin) {
  if (columns < 1) throw Error(ErrorCode::InvalidArgument, "layout needs at least one column");
  std::vector<GridCell> cells;
  cells.reserve(library.size());
  for (std::size_t i = 0; i < library.size(); ++i) {
    const int idx = static_cast<int>(i);
    cells.push_back({origin.row + idx / columns, origin.col + idx % columns});
  }
  std::vector<GatingEvent> history;
  if (library.gating.voltage < 0.0 && library.gating.duration_min > 0.0) {
    history.push_back(library.gating);
  }
  return Circuit(library.circuit_id, std::move(cells), library.profiles, std::move(history));
}

bool Circuit::active() const noexcept {
  return std::any_of(history_.begin(), history_.end(), [](const GatingEvent& e) {
    return e.voltage < 0.0 && e.duration_min > 0.0;
  });
}

Circuit Circuit::gated(const GatingEvent& event, const std::vector<double>* p_sd) const {
  Circuit out = *this;
  out.history_.push_back(event);
  if (p_sd != nullptr) {
    if (p_sd->size() != profiles_.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("circuit {}: {} calibrated values for {} dots", id_, p_sd->size(),
                              profiles_.size()));
    }
    for (std::size_t i = 0; i < profiles_.size(); ++i) {
      out.profiles_[i] = profiles_[i].with_p_sd((*p_sd)[i]);
    }
  }
  return out;
}

Device::Device(std::string id, std::vector<Circuit> circuits)
    : id_(std::move(id)), circuits_(std::move(circuits)) {
  std::set<std::string> ids;
  std::set<GridCell> cells;
  for (const auto& c : circuits_) {
    if (!ids.insert(c.id()).second) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("duplicate circuit id '{}'", c.id()));
    }
    for (const auto& cell : c.cells()) {
      if (!cells.insert(cell).second) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("cell ({}, {}) belongs to more than one circuit", cell.row, cell.col));
      }
    }
  }
}

const Circuit* Device::find(std::string_view circuit_id) const noexcept {
  auto it = std::find_if(circuits_.begin(), circuits_.end(),
                         [&](const Circuit& c) { return c.id() == circuit_id; });
  return it == circuits_.end() ? nullptr : &*it;
}

const Circuit& Device::circuit(std::string_view circuit_id) const {
  const Circuit* c = find(circuit_id);
  if (c == nullptr) {
    throw Error(ErrorCode::UnknownCircuit,
                fmt::format("device '{}' has no circuit '{}'", id_, circuit_id));
  }
  return *c;
}

std::size_t Device::dot_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : circuits_) n += c.size();
  return n;
}

std::size_t Device::active_dot_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : circuits_) {
    if (c.active()) n += c.size();
  }
  return n;
}

Device Device::with_circuit(Circuit replacement) const {
  std::vector<Circuit> circuits = circuits_;
  auto it = std::find_if(circuits.begin(), circuits.end(),
                         [&](const Circuit& c) { return c.id() == replacement.id(); });
  if (it == circuits.end()) {
    throw Error(ErrorCode::UnknownCircuit,
                fmt::format("device '{}' has no circuit '{}'", id_, replacement.id()));
  }
  *it = std::move(replacement);
  return Device(id_, std::move(circuits));
}

}  // namespace magion
