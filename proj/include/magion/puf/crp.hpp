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

#include <boost/multiprecision/cpp_int.hpp>

namespace magion {

using BigCount = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k > n.
BigCount binomial(unsigned n, unsigned k);

/// Number of challenge-response pairs for k-dot challenges over P
/// probabilistic and D deterministic dots: every challenge with m p-bits
/// admits 2^m responses,
///
///   sum_{m=0}^{min(P,k)} C(P,m) C(D,k-m) 2^m.
///
/// Throws InvalidArgument when k > P + D.
BigCount crp_count(unsigned p_bits, unsigned d_bits, unsigned k);

}  // namespace magion
