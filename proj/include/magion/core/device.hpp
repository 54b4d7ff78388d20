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

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magion/core/profile.hpp"

namespace magion {

struct GridCell {
  int row = 0;
  int col = 0;

  // Reading order: top to bottom, then left to right.
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// A set of dots wired to one contact pad. Dots are kept in reading order
/// and their profiles are numbered 1..N in that order, which is the index
/// challenges refer to.
class Circuit {
 public:
  /// `cells[i]` carries `profiles[i]`. Both are re-sorted into reading order
  /// and profile positions renumbered. Throws InvalidArgument on size
  /// mismatch or duplicated cells.
  Circuit(std::string id, std::vector<GridCell> cells, std::vector<DotProfile> profiles,
          std::vector<GatingEvent> history = {});

  /// Row-major layout with `columns` dots per row starting at `origin`.
  /// Active with the library's gating event when that event activates.
  static Circuit from_library(const DeviceLibrary& library, int columns = 6, GridCell origin = {});

  const std::string& id() const noexcept { return id_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<GridCell>& cells() const noexcept { return cells_; }
  const std::vector<DotProfile>& profiles() const noexcept { return profiles_; }
  const std::vector<GatingEvent>& gating_history() const noexcept { return history_; }

  /// True iff a negative-voltage event of positive duration was applied.
  bool active() const noexcept;

  /// Copy with a new event appended and (optionally) new p_sd values.
  Circuit gated(const GatingEvent& event, const std::vector<double>* p_sd = nullptr) const;

 private:
  std::string id_;
  std::vector<GridCell> cells_;
  std::vector<DotProfile> profiles_;
  std::vector<GatingEvent> history_;
};

/// Dot array with one or more independently gated circuits.
class Device {
 public:
  explicit Device(std::string id, std::vector<Circuit> circuits = {});

  const std::string& id() const noexcept { return id_; }
  const std::vector<Circuit>& circuits() const noexcept { return circuits_; }

  /// Throws UnknownCircuit.
  const Circuit& circuit(std::string_view circuit_id) const;
  const Circuit* find(std::string_view circuit_id) const noexcept;

  std::size_t dot_count() const noexcept;
  std::size_t active_dot_count() const noexcept;

  /// Copy with `replacement` substituted for the circuit of the same id.
  Device with_circuit(Circuit replacement) const;

 private:
  std::string id_;
  std::vector<Circuit> circuits_;
};

}  // namespace magion
