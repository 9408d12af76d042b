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

/// Zeros of p - a inside a disk, as needed by the counting functions.
struct ZeroSet {
  std::complex<double> target{0.0, 0.0};
  double radius_cap = 0.0;
  /// |rho_k| for roots with 0 < |rho_k| <= radius_cap, sorted nondecreasing,
  /// repeated per multiplicity (clusters within 1e-8 relative distance merge).
  std::vector<double> moduli;
  /// Multiplicity of the root at the origin (exact, from leading zero
  /// coefficients of p - a).
  int origin_multiplicity = 0;
  /// Largest Newton residual |p(rho_k) - a| over reported roots, relative to
  /// the evaluation scale sum_j |c_j| |rho_k|^j.
  double max_relative_residual = 0.0;
};

/// All roots of the polynomial (companion-matrix eigenvalues up to degree
/// 512, Aberth-Ehrlich simultaneous iteration beyond), polished by Newton.
/// Throws RootFindingFailure if some root cannot reach the residual target.
std::vector<std::complex<double>> all_roots(std::span<const std::complex<double>> coeffs);

/// Roots of p - a with modulus in (0, radius_cap], plus the origin
/// multiplicity. Throws ConfigError when p - a is identically zero.
ZeroSet find_zeros(std::span<const std::complex<double>> coeffs, std::complex<double> a,
                   double radius_cap);

}  // namespace randent
