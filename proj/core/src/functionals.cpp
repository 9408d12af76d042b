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

#include "randent/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "randent/errors.hpp"
#include "randent/polynomial.hpp"

namespace randent {

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularWindow = 1e-6;  // |p - a| < 1e-6 (1 + |a|) marks a node hot

// g(theta) = log|p(r e^{i theta}) - a| built on the unit-circle-scaled
// representation, plus the g-value below which a node counts as nearly
// singular.
struct LogIntegrand {
  CirclePolynomial poly;
  Complex a_scaled;
  double offset;  // add to log of the scaled value to recover log|p - a|

  LogIntegrand(std::span<const Complex> coeffs, double r, Complex a)
      : poly(coeffs, r),
        a_scaled(a == Complex{0.0, 0.0} ? Complex{0.0, 0.0}
                                        : a * std::exp(-poly.log_scale())),
        offset(poly.log_scale()) {}

  double operator()(double theta) const {
    const double m = std::abs(poly.value(theta) - a_scaled);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return offset + std::log(m);
  }

  double singular_threshold(Complex a) const {
    return std::log(kSingularWindow * (1.0 + std::abs(a)));
  }
};

}  // namespace

double circle_log_integral(std::span<const Complex> coeffs, double r, Complex a,
                           const QuadratureSpec& spec) {
  LogIntegrand g(coeffs, r, a);
  const int deg = g.poly.degree();
  return circle_mean([&](double t) { return g(t); }, CircleMeanMode::kPlain, spec, deg,
                     g.singular_threshold(a));
}

double proximity_m(std::span<const Complex> coeffs, double r, const QuadratureSpec& spec) {
  LogIntegrand g(coeffs, r, {0.0, 0.0});
  const int deg = g.poly.degree();
  return circle_mean([&](double t) { return g(t); }, CircleMeanMode::kPositivePart, spec, deg,
                     g.singular_threshold({0.0, 0.0}));
}

double characteristic_T(std::span<const Complex> coeffs, double r, const QuadratureSpec& spec) {
  return proximity_m(coeffs, r, spec);
}

double x_r_functional_log(std::span<const Complex> coeffs, double log_sigma_f, double r,
                          const QuadratureSpec& spec) {
  if (!std::isfinite(log_sigma_f)) throw ConfigError("x_r: log sigma_f must be finite");
  LogIntegrand g(coeffs, r, {0.0, 0.0});
  const int deg = g.poly.degree();
  const double threshold = g.singular_threshold({0.0, 0.0});
  return circle_mean([&](double t) { return g(t) - log_sigma_f; }, CircleMeanMode::kAbsolute,
                     spec, deg, threshold - log_sigma_f);
}

double x_r_functional(std::span<const Complex> coeffs, double sigma_f, double r,
                      const QuadratureSpec& spec) {
  if (!(sigma_f > 0.0)) throw ConfigError("x_r: sigma_f must be positive");
  return x_r_functional_log(coeffs, std::log(sigma_f), r, spec);
}

double counting_N(const ZeroSet& zeros, double r) {
  if (!(r > 0.0)) throw ConfigError("counting_N: r must be positive");
  if (r > zeros.radius_cap * (1.0 + 1e-12)) {
    throw ConfigError("counting_N: r exceeds the zero set's radius cap");
  }
  const double log_r = std::log(r);
  double sum = zeros.origin_multiplicity * log_r;
  for (double m : zeros.moduli) {
    if (m <= r) sum += log_r - std::log(m);
  }
  return sum;
}

int counting_n(const ZeroSet& zeros, double r) {
  if (!(r > 0.0)) throw ConfigError("counting_n: r must be positive");
  if (r > zeros.radius_cap * (1.0 + 1e-12)) {
    throw ConfigError("counting_n: r exceeds the zero set's radius cap");
  }
  int count = zeros.origin_multiplicity;
  for (double m : zeros.moduli) {
    if (m <= r) ++count;
  }
  return count;
}

namespace {

struct PhaseTracker {
  const CirclePolynomial& poly;
  Complex a_scaled;
  double tiny;  // |value| below this means a zero numerically on the circle

  Complex value(double theta) const { return poly.value(theta) - a_scaled; }

  // Sum of principal-branch increments over [t0, t1], bisecting until each
  // increment is below pi/2.
  double increments(double t0, double t1, Complex v0, Complex v1, int depth) const {
    if (std::abs(v0) < tiny || std::abs(v1) < tiny) {
      throw CircleRootProximity("zero of p - a numerically on the circle");
    }
    const double d = std::arg(v1 / v0);
    if (std::abs(d) < 0.5 * std::numbers::pi) return d;
    if (depth >= 48 || (t1 - t0) < 1e-9) {
      throw CircleRootProximity("phase step cannot be resolved below pi/2");
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex vm = value(tm);
    return increments(t0, tm, v0, vm, depth + 1) + increments(tm, t1, vm, v1, depth + 1);
  }
};

}  // namespace

int count_zeros_argument(std::span<const Complex> coeffs, double r, Complex a,
                         const QuadratureSpec& spec) {
  spec.validate();
  const CirclePolynomial poly(coeffs, r);
  const Complex a_scaled =
      (a == Complex{0.0, 0.0}) ? Complex{0.0, 0.0} : a * std::exp(-poly.log_scale());
  // Scaled values are O(1); treat anything this small as "on the circle".
  const double tiny = 1e-13 * (1.0 + std::abs(a_scaled));
  PhaseTracker tracker{poly, a_scaled, tiny};

  const int segments = std::max(64, 8 * poly.degree());
  std::vector<Complex> vals(static_cast<size_t>(segments) + 1);
  for (int k = 0; k <= segments; ++k) {
    vals[static_cast<size_t>(k)] = tracker.value(kTwoPi * k / segments);
  }

  double total = 0.0;
  for (int k = 0; k < segments; ++k) {
    total += tracker.increments(kTwoPi * k / segments, kTwoPi * (k + 1) / segments,
                                vals[static_cast<size_t>(k)], vals[static_cast<size_t>(k) + 1], 0);
  }
  const double winding = total / kTwoPi;
  const double rounded = std::round(winding);
  if (std::abs(winding - rounded) > 1e-6 || rounded < 0.0) {
    throw CircleRootProximity("winding number did not settle to a nonnegative integer");
  }
  return static_cast<int>(rounded);
}

double sigma_omega_parseval(std::span<const Complex> coeffs, double r) {
  if (!(r > 0.0)) throw ConfigError("sigma: r must be positive");
  // Neumaier-compensated coefficient-side sum of |c_j|^2 r^{2j}.
  double sum = 0.0, comp = 0.0;
  double r2j = 1.0;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const double x = std::norm(coeffs[j]) * r2j;
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
    r2j *= r * r;
  }
  return std::sqrt(sum + comp);
}

double sigma_omega_integral(std::span<const Complex> coeffs, double r) {
  const CirclePolynomial poly(coeffs, r);
  const int nodes = 2 * poly.degree() + 1;
  double sum = 0.0, comp = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double x = std::norm(poly.value(kTwoPi * k / nodes));
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return std::exp(poly.log_scale()) * std::sqrt((sum + comp) / nodes);
}

double log_abs_first_nonzero(std::span<const Complex> coeffs) {
  for (const Complex& c : coeffs) {
    if (c != Complex{0.0, 0.0}) return std::log(std::abs(c));
  }
  throw ConfigError("polynomial is identically zero");
}

double jensen_residual(std::span<const Complex> coeffs, double r, const QuadratureSpec& spec) {
  const double log_c0 = log_abs_first_nonzero(coeffs);
  const ZeroSet zeros = find_zeros(coeffs, {0.0, 0.0}, r);
  const double n_term = counting_N(zeros, r);
  const double integral = circle_log_integral(coeffs, r, {0.0, 0.0}, spec);
  return std::abs(log_c0 + n_term - integral);
}

}  // namespace randent
