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

#include "randent/random_models.hpp"

#include <cmath>
#include <numbers>

#include "randent/errors.hpp"

namespace randent {

std::string to_string(RandomModel model) {
  switch (model) {
    case RandomModel::kGaussian:
      return "gaussian";
    case RandomModel::kRademacher:
      return "rademacher";
    case RandomModel::kSteinhaus:
      return "steinhaus";
  }
  return "?";
}

RandomModel model_from_string(const std::string& name) {
  if (name == "gaussian") return RandomModel::kGaussian;
  if (name == "rademacher") return RandomModel::kRademacher;
  if (name == "steinhaus") return RandomModel::kSteinhaus;
  throw ConfigError("unknown model '" + name + "' (gaussian|rademacher|steinhaus)");
}

std::complex<double> sample_chi(RandomModel model, TrialStream& stream) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (model) {
    case RandomModel::kGaussian: {
      // |chi|^2 ~ Exp(1), phase uniform: the polar form of the density
      // e^{-|z|^2}/pi. Uses the (0,1] uniform so the log is finite.
      const double u = stream.next_unit_open();
      const double v = stream.next_unit();
      return std::polar(std::sqrt(-std::log(u)), two_pi * v);
    }
    case RandomModel::kRademacher:
      return {(stream.next_u64() >> 63) ? 1.0 : -1.0, 0.0};
    case RandomModel::kSteinhaus:
      return std::polar(1.0, two_pi * stream.next_unit());
  }
  return {0.0, 0.0};
}

TruncatedSample sample_function(const CoefficientSequence& seq, RandomModel model, int degree,
                                std::uint64_t seed, std::uint64_t trial_index) {
  if (degree < 0) throw ConfigError("sample degree must be nonnegative");
  TruncatedSample sample;
  sample.coefficients.resize(static_cast<size_t>(degree) + 1);
  sample.degree = degree;
  sample.model = model;
  sample.seed = seed;
  sample.trial_index = trial_index;
  sample.base_id = seq.id();
  TrialStream stream(seed, trial_index);
  for (int j = 0; j <= degree; ++j) {
    sample.coefficients[static_cast<size_t>(j)] = sample_chi(model, stream) * seq.coefficient(j);
  }
  return sample;
}

TruncatedSample make_polynomial_sample(std::vector<std::complex<double>> coefficients) {
  if (coefficients.empty()) throw ConfigError("polynomial sample needs coefficients");
  TruncatedSample sample;
  sample.degree = static_cast<int>(coefficients.size()) - 1;
  sample.coefficients = std::move(coefficients);
  sample.model = RandomModel::kGaussian;
  sample.base_id = "explicit";
  return sample;
}

EmpiricalMoments empirical_moments(RandomModel model, int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("moment estimation needs n >= 1");
  TrialStream stream(seed, 0);
  std::complex<double> sum{0.0, 0.0};
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> chi = sample_chi(model, stream);
    sum += chi;
    sum_sq += std::norm(chi);
  }
  return {sum / static_cast<double>(n), sum_sq / static_cast<double>(n)};
}

}  // namespace randent
