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

#include "randent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "randent/errors.hpp"
#include "randent/rng.hpp"

namespace randent {

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ConfigError("KS statistic needs samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    worst = std::max(worst, std::max(f - static_cast<double>(i) / n,
                                     static_cast<double>(i + 1) / n - f));
  }
  return worst;
}

double ks_threshold_alpha01(int n) {
  if (n < 1) throw ConfigError("KS threshold needs n >= 1");
  return 1.63 / std::sqrt(static_cast<double>(n));
}

double gaussian_abs_log_cdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(-std::exp(-2.0 * x)) - std::exp(-std::exp(2.0 * x));
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw ConfigError("quantile of empty sample");
  if (q < 0.0 || q > 1.0) throw ConfigError("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * (static_cast<double>(values.size()) - 1.0);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - w) + values[hi] * w;
}

double binomial_stderr(double p_hat, int n) {
  if (n < 1) throw ConfigError("binomial stderr needs n >= 1");
  return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / n);
}

BootstrapEstimate bootstrap_mean(std::span<const double> values, int resamples,
                                 std::uint64_t seed) {
  if (values.empty()) throw ConfigError("bootstrap needs samples");
  if (resamples < 1) throw ConfigError("bootstrap needs resamples >= 1");
  const size_t n = values.size();

  BootstrapEstimate out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const size_t top = std::max<size_t>(1, n / 100);
  double top_sum = 0.0, total = 0.0;
  for (size_t i = 0; i < n; ++i) total += sorted[i];
  for (size_t i = n - top; i < n; ++i) top_sum += sorted[i];
  out.top1_fraction = total > 0.0 ? top_sum / total : 0.0;
  out.heavy_tail = out.top1_fraction > 0.5;

  std::vector<double> means(static_cast<size_t>(resamples));
  TrialStream stream(seed, 0xb0075742u);
  for (int b = 0; b < resamples; ++b) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const size_t idx = static_cast<size_t>(stream.next_unit() * static_cast<double>(n));
      acc += values[std::min(idx, n - 1)];
    }
    means[static_cast<size_t>(b)] = acc / static_cast<double>(n);
  }
  out.ci_low = quantile(means, 0.025);
  out.ci_high = quantile(means, 0.975);
  return out;
}

}  // namespace randent
