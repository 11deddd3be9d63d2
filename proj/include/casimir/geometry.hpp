/*
 * Copyright 2026 The casimir-lifshitz Developers
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace casimir::geometry {

/// Sphere-above-plate configuration mapped onto plate-plate results by the
/// proximity force approximation, with the first-order correction
/// coefficient beta and stochastic roughness dispersions delta1, delta2.
struct SpherePlate {
  double radius_m = 0.0;
  double separation_m = 0.0;
  double beta = 0.0;
  double delta1_m = 0.0;
  double delta2_m = 0.0;

  /// Regime warnings (PFA validity, perturbative roughness); empty when
  /// the configuration is comfortably inside the approximations.
  std::vector<std::string> regime_warnings() const;
};

struct GeometryResult {
  double value = 0.0;
  std::vector<std::string> warnings;
};

/// Sphere-plate force from the plate free energy per area: 2 pi R F(a,T).
GeometryResult pfa_force(const SpherePlate& sp, double free_energy_J_per_m2);

/// Sphere-plate force gradient from the plate pressure: -2 pi R P(a,T);
/// positive for an attractive (negative) pressure.
GeometryResult pfa_gradient(const SpherePlate& sp, double pressure_N_per_m2);

/// First-order PFA correction: gradient * (1 + beta a / R).
double beta_corrected_gradient(const SpherePlate& sp, double gradient_N_per_m);

/// Perturbative stochastic-roughness correction:
/// gradient * [1 + 10 (d1^2+d2^2)/a^2 + 105 (d1^2+d2^2)^2/a^4].
GeometryResult roughness_corrected_gradient(const SpherePlate& sp,
                                            double gradient_N_per_m);

}  // namespace casimir::geometry
