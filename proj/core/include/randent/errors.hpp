// Copyright 2026 The randent authors.
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

namespace randent {

/// Certified-tail summation hit the degree cap before the tail bound closed.
class TruncationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Circle quadrature exhausted its refinement depth. Usually means a zero of
/// the integrand sits numerically on the circle; callers jitter the radius.
class QuadratureDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Newton polish could not reach the residual target for some root.
class RootFindingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero of p - a sits too close to the integration circle for phase
/// tracking to be trustworthy. Callers jitter the radius and retry.
class CircleRootProximity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or precondition violation (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randent
