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

#include <cstdint>
#include <string>
#include <vector>

namespace qextrap {

struct Verdict {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260809;  // master seed for every seeded fixture
};

inline constexpr int kAcceptanceCriteria = 11;

/// Runs one acceptance criterion (1-based id).
Verdict run_acceptance_criterion(int id, const AcceptanceOptions& options = {});

/// Runs all criteria in order.
std::vector<Verdict> run_acceptance_suite(const AcceptanceOptions& options = {});

}  // namespace qextrap
