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

#include "magion/analytics/trng.hpp"

#include <cmath>

#include "magion/core/error.hpp"

namespace magion {

BitStream extract_bits(const DegaussTrace& trace, const StateMapping& mapping) {
  if (!mapping.is_binary()) {
    throw Error(ErrorCode::InvalidArgument, "bit extraction needs a binary mapping");
  }
  return mapping.apply(trace);
}

BitStream extract_stream(std::span<const DegaussTrace> traces, const StateMapping& mapping) {
  BitStream out;
  for (const auto& t : traces) {
    auto bits = extract_bits(t, mapping);
    out.insert(out.end(), bits.begin(), bits.end());
  }
  return out;
}

std::string to_bitstring(const BitStream& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

double monobit_statistic(const BitStream& bits) {
  if (bits.empty()) throw Error(ErrorCode::InsufficientData, "empty bitstream");
  long long balance = 0;
  for (auto b : bits) balance += b ? 1 : -1;
  return std::abs(static_cast<double>(balance)) / std::sqrt(static_cast<double>(bits.size()));
}

RunsResult runs_test(const BitStream& bits) {
  if (bits.size() < 2) throw Error(ErrorCode::InsufficientData, "runs test needs at least two bits");
  RunsResult r;
  r.runs = 1;
  double ones = bits[0] ? 1.0 : 0.0;
  for (std::size_t i = 1; i < bits.size(); ++i) {
    r.runs += bits[i] != bits[i - 1];
    ones += bits[i] ? 1.0 : 0.0;
  }
  const double n = static_cast<double>(bits.size());
  const double zeros = n - ones;
  if (ones == 0.0 || zeros == 0.0) {
    throw Error(ErrorCode::InsufficientData, "runs test undefined for a constant stream");
  }
  r.expected = 2.0 * ones * zeros / n + 1.0;
  const double var = 2.0 * ones * zeros * (2.0 * ones * zeros - n) / (n * n * (n - 1.0));
  r.z = (static_cast<double>(r.runs) - r.expected) / std::sqrt(var);
  return r;
}

}  // namespace magion
