// Copyright 2026 The qextrap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <stdexcept>

#include "qextrap/errors.hpp"

namespace qextrap {

/// Signed integer r minimizing |1/r - s| with sign(r) = sign(s); ties go to
/// the smaller |r|. Requires 0 < |s| <= 1/2 so that |r| >= 2 exists.
inline long long nearest_inverse_integer(double s, long long cap = 10'000'000) {
  if (s == 0.0 || std::abs(s) > 0.5) {
    throw std::invalid_argument("snapping requires 0 < |s| <= 1/2");
  }
  const double magnitude = std::abs(s);
  const auto lower = static_cast<long long>(std::floor(1.0 / magnitude));
  long long best = lower;
  if (std::abs(1.0 / static_cast<double>(lower + 1) - magnitude) <
      std::abs(1.0 / static_cast<double>(lower) - magnitude)) {
    best = lower + 1;
  }
  if (best > cap) {
    throw ResourceLimitError("snapped inverse integer exceeds the configured cap");
  }
  return s > 0 ? best : -best;
}

}  // namespace qextrap
