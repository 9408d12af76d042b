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

#include "randent/quadrature.hpp"
#include "randent/random_models.hpp"
#include "randent/roots.hpp"

namespace randent {

/// (1/2pi) integral of log|p(r e^{i theta}) - a| d theta.
double circle_log_integral(std::span<const std::complex<double>> coeffs, double r,
                           std::complex<double> a, const QuadratureSpec& spec = {});

/// m(r, p) = (1/2pi) integral of log^+ |p(r e^{i theta})| d theta.
double proximity_m(std::span<const std::complex<double>> coeffs, double r,
                   const QuadratureSpec& spec = {});

/// T(r, p) = m(r, p) for entire samples (N(r, infinity) = 0).
double characteristic_T(std::span<const std::complex<double>> coeffs, double r,
                        const QuadratureSpec& spec = {});

/// X_r = (1/2pi) integral of |log(|p(r e^{i theta})| / sigma_f)| d theta.
double x_r_functional(std::span<const std::complex<double>> coeffs, double sigma_f, double r,
                      const QuadratureSpec& spec = {});

/// As above with log sigma_f supplied directly (safe at huge radii).
double x_r_functional_log(std::span<const std::complex<double>> coeffs, double log_sigma_f,
                          double r, const QuadratureSpec& spec = {});

/// N(r, a) from a precomputed zero set: sum of log(r/|rho_k|) over
/// 0 < |rho_k| <= r plus origin_multiplicity * log r. Requires r <= cap.
double counting_N(const ZeroSet& zeros, double r);

/// Number of zeros in the closed disk |z| <= r (the unintegrated n(r)).
int counting_n(const ZeroSet& zeros, double r);

/// Winding number of theta -> p(r e^{i theta}) - a around 0, by summing
/// principal-branch phase increments over an adaptively bisected partition
/// where every increment stays below pi/2. Integer-exact; throws
/// CircleRootProximity when a zero sits numerically on the circle.
int count_zeros_argument(std::span<const std::complex<double>> coeffs, double r,
                         std::complex<double> a, const QuadratureSpec& spec = {});

/// sigma(r, p) by the coefficient-side Parseval sum (the returned value).
double sigma_omega_parseval(std::span<const std::complex<double>> coeffs, double r);

/// Integral-side cross-check: (1/2pi) integral |p|^2 via the 2N+1-node
/// trapezoid rule, exact for trigonometric polynomials of degree <= N.
double sigma_omega_integral(std::span<const std::complex<double>> coeffs, double r);

/// log of the first nonzero coefficient's magnitude (log|c(0)|).
double log_abs_first_nonzero(std::span<const std::complex<double>> coeffs);

/// |log|c(0)| + N(r, 0, p) - circle_log_integral(p, r, 0)|: the numeric
/// defect in the Jensen-Poisson identity. Should be <= ~1e-7 for
/// well-conditioned samples; this is the module's self-test.
double jensen_residual(std::span<const std::complex<double>> coeffs, double r,
                       const QuadratureSpec& spec = {});

// TruncatedSample-facing wrappers.
inline double circle_log_integral(const TruncatedSample& s, double r, std::complex<double> a,
                                  const QuadratureSpec& spec = {}) {
  return circle_log_integral(s.coefficients, r, a, spec);
}
inline double proximity_m(const TruncatedSample& s, double r, const QuadratureSpec& spec = {}) {
  return proximity_m(s.coefficients, r, spec);
}
inline double characteristic_T(const TruncatedSample& s, double r,
                               const QuadratureSpec& spec = {}) {
  return characteristic_T(s.coefficients, r, spec);
}
inline double x_r_functional(const TruncatedSample& s, double sigma_f, double r,
                             const QuadratureSpec& spec = {}) {
  return x_r_functional(s.coefficients, sigma_f, r, spec);
}
inline ZeroSet find_zeros(const TruncatedSample& s, std::complex<double> a, double radius_cap) {
  return find_zeros(std::span<const std::complex<double>>(s.coefficients), a, radius_cap);
}
inline int count_zeros_argument(const TruncatedSample& s, double r, std::complex<double> a,
                                const QuadratureSpec& spec = {}) {
  return count_zeros_argument(s.coefficients, r, a, spec);
}
inline double sigma_omega_parseval(const TruncatedSample& s, double r) {
  return sigma_omega_parseval(s.coefficients, r);
}
inline double sigma_omega_integral(const TruncatedSample& s, double r) {
  return sigma_omega_integral(s.coefficients, r);
}
inline double jensen_residual(const TruncatedSample& s, double r,
                              const QuadratureSpec& spec = {}) {
  return jensen_residual(s.coefficients, r, spec);
}

}  // namespace randent
