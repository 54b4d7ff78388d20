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

#include "magion/core/tamper.hpp"

namespace magion {

TamperReport tamper_check(const Device& device, const std::map<std::string, bool>& expected) {
  TamperReport report;
  for (const auto& c : device.circuits()) {
    auto it = expected.find(c.id());
    const bool want = it != expected.end() && it->second;
    if (c.active() != want) report.violated_circuits.push_back(c.id());
  }
  for (const auto& [id, want] : expected) {
    if (want && device.find(id) == nullptr) report.violated_circuits.push_back(id);
  }
  return report;
}

}  // namespace magion
