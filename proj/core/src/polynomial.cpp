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

#include "randent/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "randent/errors.hpp"

namespace randent {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::complex<double> horner(std::span<const std::complex<double>> coeffs,
                            std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
  return acc;
}

std::vector<std::complex<double>> derivative(std::span<const std::complex<double>> coeffs) {
  std::vector<std::complex<double>> out;
  if (coeffs.size() <= 1) return out;
  out.resize(coeffs.size() - 1);
  for (size_t j = 1; j < coeffs.size(); ++j) out[j - 1] = static_cast<double>(j) * coeffs[j];
  return out;
}

CirclePolynomial::CirclePolynomial(std::span<const std::complex<double>> coeffs, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("circle radius must be positive");
  if (coeffs.empty()) throw ConfigError("empty coefficient vector");
  const double log_r = std::log(r);
  // First pass: peak magnitude of |c_j| r^j in log space.
  double peak = -kInf;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const double m = std::abs(coeffs[j]);
    if (m == 0.0) continue;
    peak = std::max(peak, std::log(m) + static_cast<double>(j) * log_r);
  }
  if (peak == -kInf) throw ConfigError("polynomial is identically zero");
  log_scale_ = peak;
  scaled_.resize(coeffs.size());
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const double m = std::abs(coeffs[j]);
    if (m == 0.0) {
      scaled_[j] = {0.0, 0.0};
    } else {
      const double mag = std::exp(std::log(m) + static_cast<double>(j) * log_r - peak);
      scaled_[j] = std::polar(mag, std::arg(coeffs[j]));
    }
  }
}

std::complex<double> CirclePolynomial::value(double theta) const {
  return horner(scaled_, std::polar(1.0, theta));
}

double CirclePolynomial::log_abs(double theta) const {
  const double m = std::abs(value(theta));
  if (m == 0.0) return -kInf;
  return log_scale_ + std::log(m);
}

double log_max_modulus(std::span<const std::complex<double>> coeffs, double r) {
  const CirclePolynomial p(coeffs, r);
  const int n = std::max(8 * p.degree() + 64, 64);
  const double h = kTwoPi / n;

  double best = -kInf;
  int best_k = 0;
  for (int k = 0; k < n; ++k) {
    const double m = std::abs(p.value(k * h));
    if (m > best) {
      best = m;
      best_k = k;
    }
  }

  // Golden-section refinement on the bracket around the best node.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = (best_k - 1) * h;
  double b = (best_k + 1) * h;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = std::abs(p.value(x1));
  double f2 = std::abs(p.value(x2));
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(p.value(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(p.value(x1));
    }
  }
  best = std::max({best, f1, f2});
  return p.log_scale() + std::log(best);
}

double max_modulus(std::span<const std::complex<double>> coeffs, double r) {
  return std::exp(log_max_modulus(coeffs, r));
}

}  // namespace randent
