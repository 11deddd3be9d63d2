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

#include "casimir/materials.hpp"

namespace casimir::lifshitz {

/// Numerical controls of the Matsubara evaluation.
struct MatsubaraConfig {
  double temperature_k = 300.0;  ///< default temperature carried by workflows
  double rel_tol = 1e-9;         ///< truncation/quadrature target
  double y_max_offset = 50.0;    ///< dimensionless cutoff of the y integrals
  long l_max_cap = 1000000;      ///< hard cap on the Matsubara index
  bool force_exact_sum = false;  ///< disable the log-sampled term interpolation

  void validate() const;
};

enum class Quantity { FreeEnergy, Pressure, EnergyZeroT, ForceZeroT };

/// Value plus accounting of one Casimir evaluation. Attractive
/// configurations give negative free energy and pressure.
struct CasimirResult {
  double value = 0.0;             ///< J/m^2 (energies) or N/m^2 (pressures)
  Quantity kind = Quantity::FreeEnergy;
  double truncation_error = 0.0;  ///< same units as value
  long terms_used = 0;            ///< Matsubara terms, or outer nodes at T = 0
  bool converged = true;
};

/// xi_l = 2 pi k_B T l / hbar, in eV.
double matsubara_frequency(long l, double temperature_k);

/// Separation above which the l = 0 term dominates: hbar c / (4 pi k_B T), m.
double regime_threshold(double temperature_k);

/// Casimir free energy per unit area (J/m^2) of two half-spaces at
/// separation a and temperature T, from the Matsubara sum with the l = 0
/// term halved. Dissimilar plates enter through the product of their
/// reflection coefficients per polarization.
CasimirResult free_energy(double a_m, double temperature_k,
                          const materials::MaterialModel& plate1,
                          const materials::MaterialModel& plate2,
                          const MatsubaraConfig& cfg);

/// Casimir pressure (N/m^2, negative = attraction), same structure.
CasimirResult pressure(double a_m, double temperature_k,
                       const materials::MaterialModel& plate1,
                       const materials::MaterialModel& plate2,
                       const MatsubaraConfig& cfg);

/// Zero-temperature energy per unit area: the Matsubara sum replaced by the
/// continuous imaginary-frequency integral. Temperature-dependent material
/// parameters (gamma(T), sigma0(T)) are evaluated at `param_temperature_k`,
/// which defaults to the physical T = 0 limit.
CasimirResult energy_zero_t(double a_m, const materials::MaterialModel& plate1,
                            const materials::MaterialModel& plate2,
                            const MatsubaraConfig& cfg,
                            double param_temperature_k = 0.0);

/// Zero-temperature force per unit area (N/m^2).
CasimirResult force_zero_t(double a_m, const materials::MaterialModel& plate1,
                           const materials::MaterialModel& plate2,
                           const MatsubaraConfig& cfg,
                           double param_temperature_k = 0.0);

}  // namespace casimir::lifshitz
