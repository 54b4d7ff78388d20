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

#include "magion/analytics/entropy.hpp"

#include <cmath>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

double shannon_entropy_bit(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("probability {} outside [0,1]", p));
  }
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

EntropyReport total_entropy(std::span<const double> probabilities) {
  if (probabilities.empty()) throw Error(ErrorCode::InsufficientData, "entropy of an empty bit set");
  EntropyReport r;
  r.per_bit.reserve(probabilities.size());
  for (double p : probabilities) {
    r.per_bit.push_back(shannon_entropy_bit(p));
    r.total += r.per_bit.back();
  }
  r.mean = r.total / static_cast<double>(probabilities.size());
  return r;
}

EntropyReport total_entropy(const DeviceLibrary& library, const StateMapping& mapping) {
  if (!mapping.is_binary()) {
    throw Error(ErrorCode::InvalidArgument, "entropy is defined over the binary direction subclass only");
  }
  std::vector<double> p;
  p.reserve(library.size());
  for (const auto& profile : library.profiles) p.push_back(mapping.symbol_distribution(profile)[1]);
  return total_entropy(p);
}

long double sequence_count(double h_total) {
  if (h_total < 0.0) throw Error(ErrorCode::InvalidArgument, "negative entropy");
  return std::exp2l(static_cast<long double>(h_total));
}

LockStrength lock_strength(double h_total, std::size_t dots, double guesses_per_second) {
  if (!(guesses_per_second > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "guess rate must be positive");
  }
  LockStrength s;
  s.total_entropy = h_total;
  s.dots = dots;
  s.sequences = sequence_count(h_total);
  s.seconds = s.sequences / static_cast<long double>(guesses_per_second);
  s.years = s.seconds / static_cast<long double>(kSecondsPerYear);
  return s;
}

LockStrength lock_strength(std::span<const DeviceLibrary> libraries, double guesses_per_second) {
  if (libraries.empty()) throw Error(ErrorCode::InsufficientData, "no active circuits");
  double h = 0.0;
  std::size_t dots = 0;
  for (const auto& lib : libraries) {
    h += total_entropy(lib).total;
    dots += lib.size();
  }
  return lock_strength(h, dots, guesses_per_second);
}

}  // namespace magion
