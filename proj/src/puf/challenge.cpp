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

#include "magion/puf/challenge.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <fmt/core.h>
#include <fmt/ranges.h>

#include "magion/core/error.hpp"

namespace magion {

namespace {

std::vector<std::string_view> split_csv(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(token);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Challenge::Challenge(std::vector<int> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) throw Error(ErrorCode::InvalidArgument, "challenge has no positions");
  std::set<int> seen;
  for (int p : positions_) {
    if (p < 1) throw Error(ErrorCode::InvalidArgument, fmt::format("challenge position {} is not 1-based", p));
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("challenge repeats position {}", p));
    }
  }
}

Challenge Challenge::parse(std::string_view text) {
  std::vector<int> positions;
  for (auto token : split_csv(text)) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("bad challenge position '{}'", token));
    }
    positions.push_back(value);
  }
  return Challenge(std::move(positions));
}

void Challenge::require_within(std::size_t dot_count) const {
  for (int p : positions_) {
    if (static_cast<std::size_t>(p) > dot_count) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("challenge position {} exceeds the {} available dots", p, dot_count));
    }
  }
}

std::size_t Challenge::pbit_count(const DeviceLibrary& library) const {
  return static_cast<std::size_t>(std::count_if(positions_.begin(), positions_.end(),
                                                [&](int p) { return library.at(p).is_pbit(); }));
}

std::string Challenge::to_string() const { return fmt::format("{}", fmt::join(positions_, ",")); }

std::string format_response(const Response& response) {
  std::vector<std::string_view> parts;
  for (auto s : response.states) parts.push_back(magion::to_string(s));
  return fmt::format("{}", fmt::join(parts, ","));
}

Response parse_response(std::string_view text, int trials_used) {
  Response r;
  r.trials_used = trials_used;
  for (auto token : split_csv(text)) r.states.push_back(parse_state_class(token));
  return r;
}

}  // namespace magion
