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

#include "casimir/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::geometry {

namespace con = casimir::constants;

std::vector<std::string> SpherePlate::regime_warnings() const {
  std::vector<std::string> w;
  if (!(radius_m > 0.0) || !(separation_m > 0.0))
    throw std::invalid_argument("sphere-plate needs positive radius and separation");
  if (separation_m / radius_m >= 0.1)
    w.push_back("a/R >= 0.1: outside the PFA regime");
  if (delta1_m < 0.0 || delta2_m < 0.0)
    throw std::invalid_argument("roughness dispersions must be >= 0");
  if (delta1_m >= separation_m / 5.0 || delta2_m >= separation_m / 5.0)
    w.push_back("roughness is not small against the separation");
  return w;
}

GeometryResult pfa_force(const SpherePlate& sp, double free_energy_J_per_m2) {
  GeometryResult r;
  r.warnings = sp.regime_warnings();
  r.value = 2.0 * con::pi * sp.radius_m * free_energy_J_per_m2;
  return r;
}

GeometryResult pfa_gradient(const SpherePlate& sp, double pressure_N_per_m2) {
  GeometryResult r;
  r.warnings = sp.regime_warnings();
  r.value = -2.0 * con::pi * sp.radius_m * pressure_N_per_m2;
  return r;
}

double beta_corrected_gradient(const SpherePlate& sp, double gradient_N_per_m) {
  return gradient_N_per_m * (1.0 + sp.beta * sp.separation_m / sp.radius_m);
}

GeometryResult roughness_corrected_gradient(const SpherePlate& sp,
                                            double gradient_N_per_m) {
  GeometryResult r;
  r.warnings = sp.regime_warnings();
  const double d2 = (sp.delta1_m * sp.delta1_m + sp.delta2_m * sp.delta2_m) /
                    (sp.separation_m * sp.separation_m);
  r.value = gradient_N_per_m * (1.0 + 10.0 * d2 + 105.0 * d2 * d2);
  return r;
}

}  // namespace casimir::geometry
