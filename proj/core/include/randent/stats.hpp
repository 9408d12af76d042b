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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace randent {

/// One-sample Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)|.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Acceptance threshold at alpha = 0.01: 1.63 / sqrt(n).
double ks_threshold_alpha01(int n);

/// CDF of |log|Z|| for Z standard complex Gaussian:
/// F(x) = e^{-e^{-2x}} - e^{-e^{2x}} for x > 0, else 0.
double gaussian_abs_log_cdf(double x);

/// Linear-interpolation quantile of an unsorted sample (q in [0, 1]).
double quantile(std::vector<double> values, double q);

/// sqrt(p(1-p)/n), the binomial standard error of an empirical fraction.
double binomial_stderr(double p_hat, int n);

struct BootstrapEstimate {
  double mean = 0.0;
  double ci_low = 0.0;    // 2.5% percentile of resampled means
  double ci_high = 0.0;   // 97.5%
  double top1_fraction = 0.0;  // share of the sum carried by the top 1% of samples
  bool heavy_tail = false;     // top1_fraction > 0.5
};

/// Percentile-bootstrap CI for the mean. Deterministic given the seed.
BootstrapEstimate bootstrap_mean(std::span<const double> values, int resamples,
                                 std::uint64_t seed);

}  // namespace randent
