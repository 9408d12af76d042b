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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "randent/coefficients.hpp"
#include "randent/rng.hpp"

namespace randent {

/// The three coefficient laws. All satisfy E(chi) = 0 and E(|chi|^2) = 1.
enum class RandomModel { kGaussian, kRademacher, kSteinhaus };

std::string to_string(RandomModel model);
RandomModel model_from_string(const std::string& name);

/// One draw of chi:
///   Gaussian    standard complex Gaussian, density e^{-|z|^2}/pi
///               (Re and Im independent N(0, 1/2), so E|chi|^2 = 1)
///   Rademacher  +-1 equiprobable, imaginary part 0
///   Steinhaus   e^{2 pi i theta}, theta uniform on [0, 1)
std::complex<double> sample_chi(RandomModel model, TrialStream& stream);

/// One realization f_omega truncated to the given degree.
struct TruncatedSample {
  std::vector<std::complex<double>> coefficients;  // chi_j * a_j, j = 0..degree
  int degree = 0;
  RandomModel model = RandomModel::kGaussian;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  std::string base_id;
};

/// Draws chi_0..chi_N from the per-trial substream of (seed, trial_index)
/// and returns the perturbed truncation. Bit-identical for identical inputs.
TruncatedSample sample_function(const CoefficientSequence& seq, RandomModel model, int degree,
                                std::uint64_t seed, std::uint64_t trial_index);

/// Deterministic polynomial wrapped as a sample (chi = 1); used to feed raw
/// polynomials and deterministic truncations through the functionals.
TruncatedSample make_polynomial_sample(std::vector<std::complex<double>> coefficients);

struct EmpiricalMoments {
  std::complex<double> mean;
  double second_absolute;  // sample mean of |chi|^2
};

EmpiricalMoments empirical_moments(RandomModel model, int n, std::uint64_t seed);

}  // namespace randent
