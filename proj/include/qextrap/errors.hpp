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

#include <stdexcept>
#include <string>

namespace qextrap {

/// A computation exceeded a configured resource cap (e.g. tuple counts in
/// exact commutator sums, or integer node magnitudes while snapping).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix-logarithm eigenphase landed too close to the +-pi branch cut.
class BranchCutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A least-squares fit was too ill-conditioned to trust.
class FitFailureError : public std::runtime_error {
 public:
  FitFailureError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Two distinct ideal nodes mapped onto the same integer.
class NodeCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed plan failed its internal verification residual.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-difference stencil nodes collided after integer snapping.
class StencilDegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qextrap
