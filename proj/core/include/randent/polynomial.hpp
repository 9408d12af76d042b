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
#include <span>
#include <vector>

namespace randent {

/// Horner evaluation of sum c_j z^j.
std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> z);

/// Coefficients of the derivative polynomial.
std::vector<std::complex<double>> derivative(std::span<const std::complex<double>> coeffs);

/// A polynomial restricted to the circle |z| = r, stored with coefficients
/// b_j = c_j r^j / s where s = max_j |c_j| r^j, so evaluation happens on the
/// unit circle with coefficients of unit peak magnitude. This keeps the
/// dynamic range tame for any radius; the true values are s * value(theta).
///
/// log|p(r e^{i theta})| = log_scale() + log|value(theta)|.
class CirclePolynomial {
 public:
  CirclePolynomial(std::span<const std::complex<double>> coeffs, double r);

  std::complex<double> value(double theta) const;
  double log_abs(double theta) const;  // -inf if the value is exactly 0
  double log_scale() const { return log_scale_; }
  int degree() const { return static_cast<int>(scaled_.size()) - 1; }
  const std::vector<std::complex<double>>& scaled_coefficients() const { return scaled_; }

 private:
  std::vector<std::complex<double>> scaled_;
  double log_scale_;
};

/// log max_{|z|=r} |p(z)|, by dense theta-grid scan (at least 8*degree + 64
/// nodes) plus golden-section refinement around the best node.
double log_max_modulus(std::span<const std::complex<double>> coeffs, double r);

/// max_{|z|=r} |p(z)|; overflows to +inf where the maximum exceeds double
/// range (use log_max_modulus there).
double max_modulus(std::span<const std::complex<double>> coeffs, double r);

}  // namespace randent
