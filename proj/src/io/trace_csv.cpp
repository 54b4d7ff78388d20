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

#include "magion/io/trace_csv.hpp"

#include <charconv>

#include <fmt/core.h>

#include "csv.hpp"
#include "magion/core/error.hpp"
#include "magion/io/checksum.hpp"

namespace magion {

std::string traces_to_csv(std::span<const DegaussTrace> traces) {
  const std::size_t n = traces.empty() ? 0 : traces.front().states.size();
  std::string out = "trial";
  for (std::size_t k = 1; k <= n; ++k) out += fmt::format(",dot_{}", k);
  out += '\n';
  for (const auto& t : traces) {
    if (t.states.size() != n) throw Error(ErrorCode::LengthMismatch, "traces of different lengths");
    out += std::to_string(t.trial_index);
    for (auto s : t.states) {
      out += ',';
      out += static_cast<char>('0' + static_cast<int>(s));
    }
    out += '\n';
  }
  return out;
}

std::vector<DegaussTrace> parse_traces_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Schema, "trace file has no header");
  const auto header = detail::split_csv_record(lines.front());
  if (header.empty() || header.front() != "trial") throw Error(ErrorCode::Schema, "trace header must start with 'trial'");
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k] != fmt::format("dot_{}", k)) {
      throw Error(ErrorCode::Schema, fmt::format("unexpected trace column '{}'", header[k]));
    }
  }
  std::vector<DegaussTrace> traces;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto fields = detail::split_csv_record(lines[li]);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::Schema, fmt::format("trace row {} has {} fields", li, fields.size()));
    }
    DegaussTrace t;
    auto [p, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), t.trial_index);
    if (ec != std::errc{}) throw Error(ErrorCode::Schema, fmt::format("bad trial index '{}'", fields[0]));
    for (std::size_t k = 1; k < fields.size(); ++k) {
      if (fields[k].size() != 1 || fields[k][0] < '0' || fields[k][0] > '4') {
        throw Error(ErrorCode::Schema, fmt::format("bad state code '{}' in row {}", fields[k], li));
      }
      t.states.push_back(static_cast<MagneticState>(fields[k][0] - '0'));
    }
    traces.push_back(std::move(t));
  }
  return traces;
}

void save_traces(std::span<const DegaussTrace> traces, const std::filesystem::path& path) {
  write_file(path, traces_to_csv(traces));
}

std::vector<DegaussTrace> load_traces(const std::filesystem::path& path) {
  return parse_traces_csv(read_file(path));
}

}  // namespace magion
