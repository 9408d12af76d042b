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
#include <string>
#include <vector>

namespace randent {

enum class SeqKind { kExponential, kGeometricFactorial, kExplicitList, kMittagLeffler };

/// Taylor coefficients a_j of the base entire function f(z) = sum a_j z^j.
///
/// Generator kinds are transcendental entire by construction
/// (|a_j|^{1/j} -> 0 analytically, never checked numerically):
///   exponential           a_j = 1/j!                       (order 1)
///   geometric-factorial   a_j = c^j / (j!)^s,  c, s > 0    (order 1/s)
///   mittag-leffler        a_j = 1/Gamma(1 + j/rho), rho > 0 (order rho)
/// Explicit lists are finite polynomials (trailing zeros stripped).
///
/// Every kind carries a complex prefactor `scale` multiplying all a_j, and a
/// nonnegative `star_order` k so that the stored coefficients are j^k a_j
/// (the star transform f -> z f' applied k times).
class CoefficientSequence {
 public:
  static CoefficientSequence exponential(std::complex<double> scale = 1.0);
  static CoefficientSequence geometric_factorial(double c, double s,
                                                 std::complex<double> scale = 1.0);
  static CoefficientSequence mittag_leffler(double rho, std::complex<double> scale = 1.0);
  static CoefficientSequence explicit_list(std::vector<std::complex<double>> coeffs,
                                           std::complex<double> scale = 1.0);

  /// Parses ids of the form produced by id(): "exponential",
  /// "geomfact(c=1,s=2)", "mittag(rho=2)", "explicit(1,0,-1)", optionally
  /// wrapped as "star(...)" or with "*<scale>" suffix. Throws ConfigError.
  static CoefficientSequence parse(const std::string& id);

  std::complex<double> coefficient(int j) const;
  /// log |a_j| (with scale and star factors); -inf when a_j == 0.
  double log_abs_coefficient(int j) const;

  /// Ratio t_{j+1}/t_j of the sigma-series terms t_j = |a_j|^2 r^{2j}.
  /// Defined for generator kinds at j >= 1; nonincreasing in j for every
  /// shipped family, which is what certifies the truncation tail bounds.
  double term_ratio(int j, double r) const;

  bool is_finite() const { return kind_ == SeqKind::kExplicitList; }
  /// Degree of the stripped explicit list; -1 for generator kinds.
  int list_degree() const;
  bool has_two_nonzero_terms() const;

  SeqKind kind() const { return kind_; }
  std::complex<double> scale() const { return scale_; }
  int star_order() const { return star_order_; }
  double param_c() const { return c_; }
  double param_s() const { return s_; }
  double param_rho() const { return rho_; }
  const std::vector<std::complex<double>>& list() const { return list_; }

  std::string id() const;
  bool operator==(const CoefficientSequence&) const = default;

 private:
  CoefficientSequence() = default;
  SeqKind kind_ = SeqKind::kExponential;
  double c_ = 1.0, s_ = 1.0, rho_ = 1.0;
  std::complex<double> scale_{1.0, 0.0};
  int star_order_ = 0;
  std::vector<std::complex<double>> list_;

  friend CoefficientSequence star_transform(const CoefficientSequence&);
};

struct TruncationPolicy {
  double tail_tolerance = 1e-12;
  int max_degree = 4096;
  void validate() const;  // throws ConfigError
  bool operator==(const TruncationPolicy&) const = default;
};

/// sigma(r, f) = (sum |a_j|^2 r^{2j})^{1/2}, summed with Neumaier
/// compensation up to a degree where the remaining tail is certified (by the
/// per-family term-ratio bound) to be below tail_tolerance^2 times the
/// partial sum. Throws TruncationFailure if max_degree is hit first.
double sigma(const CoefficientSequence& seq, double r, const TruncationPolicy& policy = {});

/// log sigma(r, f), computed in scaled space; safe where sigma overflows.
double log_sigma(const CoefficientSequence& seq, double r, const TruncationPolicy& policy = {});

/// Minimal degree N whose certified tail passes the policy's bound.
/// Monotone nondecreasing in r.
int truncation_degree(const CoefficientSequence& seq, double r,
                      const TruncationPolicy& policy = {});

/// r d/dr log sigma(r, f) = (sum j t_j) / (sum t_j), both sums under the
/// same certified-tail policy.
double log_sigma_derivative(const CoefficientSequence& seq, double r,
                            const TruncationPolicy& policy = {});

/// f -> f* with f*(z) = z f'(z), i.e. coefficients j * a_j. Explicit lists
/// map termwise; generator kinds bump the star order of the wrapper.
CoefficientSequence star_transform(const CoefficientSequence& seq);

/// Coefficients a_0..a_n as a dense vector (the truncated base polynomial).
std::vector<std::complex<double>> truncate_base(const CoefficientSequence& seq, int degree_n);

}  // namespace randent
