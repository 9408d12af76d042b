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

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "randent/errors.hpp"

namespace randent {

struct QuadratureSpec {
  int base_nodes = 0;  // 0 = auto (2*degree + 64)
  int max_refinement_depth = 12;
  double abs_tolerance = 1e-9;

  void validate() const {
    if (base_nodes != 0 && base_nodes < 16) throw ConfigError("base_nodes must be >= 16");
    if (max_refinement_depth < 1 || max_refinement_depth > 24) {
      throw ConfigError("max_refinement_depth out of range");
    }
    if (!(abs_tolerance > 0.0)) throw ConfigError("abs_tolerance must be positive");
  }
  bool operator==(const QuadratureSpec&) const = default;
};

/// What to average over the circle, given g(theta) = log|...|:
///   kPlain        mean of g            (Jensen-type integrals)
///   kPositivePart mean of max(g, 0)    (proximity function m)
///   kAbsolute     mean of |g|          (the X_r functional)
enum class CircleMeanMode { kPlain, kPositivePart, kAbsolute };

namespace quad_detail {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double apply_mode(double v, CircleMeanMode mode) {
  switch (mode) {
    case CircleMeanMode::kPlain:
      return v;
    case CircleMeanMode::kPositivePart:
      return v > 0.0 ? v : 0.0;
    case CircleMeanMode::kAbsolute:
      return std::abs(v);
  }
  return v;
}

struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Root of g on [a, b] with g(a), g(b) of opposite sign; secant step with
// bisection fallback. Returns the crossing angle.
template <class G>
double locate_crossing(G& g, double a, double b, double fa, double fb) {
  for (int it = 0; it < 64 && (b - a) > 1e-13; ++it) {
    double m = (fb != fa) ? (a * fb - b * fa) / (fb - fa) : 0.5 * (a + b);
    if (!(m > a) || !(m < b)) m = 0.5 * (a + b);
    const double fm = g(m);
    if (!std::isfinite(fm)) throw QuadratureDivergence("integrand singular near a sign crossing");
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace quad_detail

/// Mean over [0, 2pi) of F(g(theta)) with F chosen by `mode`, by the
/// periodic trapezoid rule with successive dyadic doubling of the node set.
///
/// The plain rule is spectrally accurate for integrands analytic near the
/// circle. For the kinked modes (|g| and g^+ are only C^0 where g crosses 0)
/// each level locates the crossings, measures the slope jump, and removes
/// the resulting Euler-Maclaurin h^2 defect, restoring fast convergence.
/// Convergence requires successive corrected estimates to agree within
/// abs_tolerance/2 (twice in a row for the kinked modes or when a node saw
/// |integrand| near a zero). Throws QuadratureDivergence when the depth cap
/// is exhausted or a node value is non-finite, which signals a zero of the
/// integrand sitting numerically on the circle; callers jitter the radius.
///
/// `singular_threshold`: g values below it mark a node as sitting next to a
/// zero (the caller translates its |p - a| < 1e-6 (1 + |a|) rule into
/// g-units); pass -inf to disable.
template <class G>
double circle_mean(G&& g, CircleMeanMode mode, const QuadratureSpec& spec, int degree_hint,
                   double singular_threshold = -std::numeric_limits<double>::infinity()) {
  using namespace quad_detail;
  spec.validate();
  int n = spec.base_nodes > 0 ? spec.base_nodes : 2 * std::max(degree_hint, 0) + 64;
  n = std::max(n, 16);

  std::vector<double> vals(static_cast<size_t>(n));
  bool saw_singular = false;
  auto eval = [&](double theta) {
    const double v = g(theta);
    if (!std::isfinite(v)) {
      throw QuadratureDivergence("integrand value not finite on the circle");
    }
    if (v < singular_threshold) saw_singular = true;
    return v;
  };
  for (int k = 0; k < n; ++k) vals[static_cast<size_t>(k)] = eval(kTwoPi * k / n);

  auto estimate = [&](int nodes) -> double {
    const double h = kTwoPi / nodes;
    KahanSum sum;
    for (int k = 0; k < nodes; ++k) sum.add(apply_mode(vals[static_cast<size_t>(k)], mode));
    double mean = sum.value() / nodes;
    if (mode == CircleMeanMode::kPlain) return mean;

    // Kink correction: T - I = (h^2/2pi) * sum_m ds_m * (eta(1-eta)/2 - 1/12)
    // per crossing, ds = jump of F' there (2|g'| for |g|, |g'| for g^+).
    KahanSum corr;
    for (int k = 0; k < nodes; ++k) {
      const double va = vals[static_cast<size_t>(k)];
      const double vb = vals[static_cast<size_t>((k + 1) % nodes)];
      double theta_star;
      const double ta = h * k;
      if (va == 0.0) {
        theta_star = ta;
      } else if (va * vb < 0.0) {
        theta_star = locate_crossing(g, ta, ta + h, va, vb);
      } else {
        continue;
      }
      const double dh = 1e-7;
      const double slope = (g(theta_star + dh) - g(theta_star - dh)) / (2.0 * dh);
      const double ds =
          (mode == CircleMeanMode::kAbsolute) ? 2.0 * std::abs(slope) : std::abs(slope);
      const double eta = (theta_star - ta) / h;
      corr.add(ds * (0.5 * eta * (1.0 - eta) - 1.0 / 12.0));
    }
    return mean - h * h * corr.value() / kTwoPi;
  };

  double prev = estimate(n);
  int consecutive = 0;
  for (int depth = 1; depth <= spec.max_refinement_depth; ++depth) {
    // Interleave midpoints: node k of the doubled grid is old node k/2 for
    // even k and a fresh midpoint for odd k.
    std::vector<double> next(static_cast<size_t>(2 * n));
    const double h2 = kTwoPi / (2 * n);
    for (int k = 0; k < n; ++k) {
      next[static_cast<size_t>(2 * k)] = vals[static_cast<size_t>(k)];
      next[static_cast<size_t>(2 * k + 1)] = eval(h2 * (2 * k + 1));
    }
    vals = std::move(next);
    n *= 2;
    const double cur = estimate(n);
    const int required = (mode == CircleMeanMode::kPlain && !saw_singular) ? 1 : 2;
    if (std::abs(cur - prev) < 0.5 * spec.abs_tolerance) {
      if (++consecutive >= required) return cur;
    } else {
      consecutive = 0;
    }
    prev = cur;
  }
  throw QuadratureDivergence("refinement depth exhausted (zero numerically on the circle?)");
}

}  // namespace randent
