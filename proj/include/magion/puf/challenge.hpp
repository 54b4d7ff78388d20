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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "magion/core/profile.hpp"
#include "magion/core/state.hpp"

namespace magion {

/// Ordered selection of k distinct 1-based dot positions.
class Challenge {
 public:
  /// Throws InvalidArgument when empty, non-positive or duplicated.
  explicit Challenge(std::vector<int> positions);

  /// Comma-separated positions, e.g. "5,11,12,14,15".
  static Challenge parse(std::string_view text);

  const std::vector<int>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }

  /// Throws InvalidArgument when a position is beyond `dot_count`.
  void require_within(std::size_t dot_count) const;

  std::size_t pbit_count(const DeviceLibrary& library) const;

  std::string to_string() const;

  friend bool operator==(const Challenge&, const Challenge&) = default;

 private:
  std::vector<int> positions_;
};

/// Majority-voted SD/vortex answer, one entry per challenged position.
struct Response {
  std::vector<StateClass> states;
  int trials_used = 1;
};

/// "SD,V,V,..." form used on the command line.
std::string format_response(const Response& response);
Response parse_response(std::string_view text, int trials_used = 1);

}  // namespace magion
