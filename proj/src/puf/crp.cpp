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

#include "magion/puf/crp.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigCount crp_count(unsigned p_bits, unsigned d_bits, unsigned k) {
  if (k > p_bits + d_bits) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("challenge size {} exceeds the {} available dots", k, p_bits + d_bits));
  }
  BigCount total = 0;
  for (unsigned m = 0; m <= std::min(p_bits, k); ++m) {
    total += binomial(p_bits, m) * binomial(d_bits, k - m) * (BigCount(1) << m);
  }
  return total;
}

}  // namespace magion
