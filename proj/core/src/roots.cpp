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

#include "randent/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "randent/errors.hpp"
#include "randent/polynomial.hpp"

namespace randent {

namespace {

using Complex = std::complex<double>;

constexpr int kCompanionDegreeLimit = 512;
constexpr double kResidualTarget = 1e-10;
constexpr double kClusterRelDistance = 1e-8;

// |p(z)| relative to its evaluation scale sum |c_j| |z|^j: the backward-error
// style residual that stays meaningful when the raw values are astronomical.
double relative_residual(std::span<const Complex> coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  double scale = 0.0;
  const double az = std::abs(z);
  double pow_az = 1.0;
  Complex pow_z{1.0, 0.0};
  for (size_t j = 0; j < coeffs.size(); ++j) {
    acc += coeffs[j] * pow_z;
    scale += std::abs(coeffs[j]) * pow_az;
    pow_z *= z;
    pow_az *= az;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(acc) / scale;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& monic) {
  const int deg = static_cast<int>(monic.size());  // monic holds c_0..c_{deg-1}
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -monic[static_cast<size_t>(i)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw RootFindingFailure("companion eigenvalue iteration did not converge");
  }
  std::vector<Complex> roots(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

std::vector<Complex> roots_sorted(std::vector<Complex> z) {
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

// Aberth-Ehrlich simultaneous refinement for large degrees. monic holds
// c_0..c_{deg-1} of a monic polynomial.
std::vector<Complex> aberth_roots(const std::vector<Complex>& monic) {
  const int deg = static_cast<int>(monic.size());
  double cauchy = 0.0;
  for (const Complex& c : monic) cauchy = std::max(cauchy, std::abs(c));
  const double radius = 1.0 + cauchy;

  std::vector<Complex> z(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    // Spread over two interleaved circles; the angular offset breaks the
    // symmetry stalls of conjugate-symmetric inputs.
    const double angle = 2.0 * std::numbers::pi * (i + 0.5) / deg + 0.4;
    const double rr = radius * (i % 2 == 0 ? 0.5 : 0.9);
    z[static_cast<size_t>(i)] = std::polar(rr, angle);
  }

  auto eval_p_dp = [&](Complex x, Complex& p, Complex& dp) {
    p = {1.0, 0.0};  // leading coefficient
    dp = {0.0, 0.0};
    for (int j = deg - 1; j >= 0; --j) {
      dp = dp * x + p;
      p = p * x + monic[static_cast<size_t>(j)];
    }
  };

  const int max_sweeps = 200;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_step = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex p, dp;
      eval_p_dp(z[static_cast<size_t>(i)], p, dp);
      if (p == Complex{0.0, 0.0}) continue;
      if (dp == Complex{0.0, 0.0}) {
        z[static_cast<size_t>(i)] += Complex{1e-8, 1e-8};
        max_step = 1.0;
        continue;
      }
      const Complex newton = p / dp;
      Complex repulsion{0.0, 0.0};
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        const Complex d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (d == Complex{0.0, 0.0}) continue;
        repulsion += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = (denom == Complex{0.0, 0.0}) ? newton : newton / denom;
      z[static_cast<size_t>(i)] -= step;
      max_step = std::max(max_step,
                          std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
    }
    if (max_step < 1e-14) break;
  }
  return roots_sorted(z);
}

void newton_polish(std::span<const Complex> coeffs, std::span<const Complex> dcoeffs,
                   Complex& z) {
  for (int it = 0; it < 12; ++it) {
    const Complex p = horner(coeffs, z);
    if (p == Complex{0.0, 0.0}) return;
    const Complex dp = horner(dcoeffs, z);
    if (dp == Complex{0.0, 0.0}) return;  // multiple root; cluster merge handles it
    const Complex step = p / dp;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) return;
  }
}

}  // namespace

std::vector<Complex> all_roots(std::span<const Complex> coeffs) {
  // Strip trailing zeros (degree) -- leading zeros are the caller's business.
  size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex{0.0, 0.0}) --n;
  if (n == 0) throw ConfigError("all_roots: polynomial is identically zero");
  const int deg = static_cast<int>(n) - 1;
  if (deg == 0) return {};

  // Normalize to unit peak magnitude (scale-invariant roots), then monic.
  std::vector<Complex> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
  double peak = 0.0;
  for (const Complex& v : c) peak = std::max(peak, std::abs(v));
  for (Complex& v : c) v /= peak;

  std::vector<Complex> monic(static_cast<size_t>(deg));
  for (int j = 0; j < deg; ++j) monic[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] / c[n - 1];

  std::vector<Complex> roots =
      deg <= kCompanionDegreeLimit ? companion_roots(monic) : aberth_roots(monic);

  const std::vector<Complex> dc = derivative(c);
  for (Complex& z : roots) newton_polish(c, dc, z);

  for (const Complex& z : roots) {
    double res = relative_residual(c, z);
    if (res > kResidualTarget) {
      // One more polish round before giving up.
      Complex zz = z;
      newton_polish(c, dc, zz);
      res = relative_residual(c, zz);
      if (res > kResidualTarget) {
        throw RootFindingFailure("root residual " + std::to_string(res) + " above target near (" +
                                 std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")");
      }
    }
  }
  return roots;
}

ZeroSet find_zeros(std::span<const Complex> coeffs, Complex a, double radius_cap) {
  if (!(radius_cap > 0.0)) throw ConfigError("find_zeros: radius cap must be positive");
  std::vector<Complex> q(coeffs.begin(), coeffs.end());
  if (q.empty()) throw ConfigError("find_zeros: empty polynomial");
  q[0] -= a;

  ZeroSet out;
  out.target = a;
  out.radius_cap = radius_cap;

  size_t n = q.size();
  while (n > 0 && q[n - 1] == Complex{0.0, 0.0}) --n;
  if (n == 0) throw ConfigError("find_zeros: p - a is identically zero");
  q.resize(n);

  size_t lead = 0;
  while (lead < q.size() && q[lead] == Complex{0.0, 0.0}) ++lead;
  out.origin_multiplicity = static_cast<int>(lead);
  std::vector<Complex> reduced(q.begin() + static_cast<std::ptrdiff_t>(lead), q.end());
  if (reduced.size() <= 1) return out;  // constant after stripping: no nonzero roots

  std::vector<Complex> roots = all_roots(reduced);

  // Merge clusters within 1e-8 relative distance; report the centroid with
  // the cluster size as multiplicity.
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::vector<char> used(roots.size(), 0);
  std::vector<std::pair<Complex, int>> clusters;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = 1;
    const double tol = kClusterRelDistance * std::max(1.0, std::abs(roots[i]));
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (roots[j].real() - roots[i].real() > tol) break;  // sorted by real part
      if (std::abs(roots[j] - roots[i]) <= tol) {
        sum += roots[j];
        ++count;
        used[j] = 1;
      }
    }
    clusters.emplace_back(sum / static_cast<double>(count), count);
  }

  double worst = 0.0;
  for (const auto& [center, count] : clusters) {
    const double m = std::abs(center);
    if (m > 0.0 && m <= radius_cap) {
      for (int k = 0; k < count; ++k) out.moduli.push_back(m);
      worst = std::max(worst, relative_residual(reduced, center));
    }
  }
  std::sort(out.moduli.begin(), out.moduli.end());
  out.max_relative_residual = worst;
  return out;
}

}  // namespace randent
