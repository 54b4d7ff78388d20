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

#include "magion/inference/pfhd.hpp"

namespace magion {

double mismatch_probability(double p_v1, double p_v2) { return p_v1 + p_v2 - 2.0 * p_v1 * p_v2; }

double mismatch_probability_crossed(double p_v1, double p_v2) {
  return p_v1 * (1.0 - p_v2) + (1.0 - p_v1) * p_v2;
}

double pfhd_inter(const DeviceLibrary& lib1, const DeviceLibrary& lib2, const Challenge& challenge) {
  double sum = 0.0;
  for (int pos : challenge.positions()) {
    sum += mismatch_probability(lib1.at(pos).p_v(), lib2.at(pos).p_v());
  }
  return sum / static_cast<double>(challenge.size());
}

}  // namespace magion
