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

namespace casimir::constants {

// 2019 SI exact values.
inline constexpr double k_boltzmann_J_per_K = 1.380649e-23;
inline constexpr double electron_volt_J = 1.602176634e-19;
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double c_m_per_s = 2.99792458e8;

inline constexpr double k_boltzmann_eV_per_K =
    k_boltzmann_J_per_K / electron_volt_J;  // 8.617333262e-5

// hbar*c, the conversion between wavenumbers and energies.
inline constexpr double hbarc_J_m = hbar_J_s * c_m_per_s;
inline constexpr double hbarc_eV_m = hbarc_J_m / electron_volt_J;  // 1.9733e-7
inline constexpr double hbarc_eV_nm = hbarc_eV_m * 1e9;            // 197.327

// Angular frequency carried by 1 eV (omega = E/hbar).
inline constexpr double radps_per_eV = electron_volt_J / hbar_J_s;  // 1.5193e15

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Fixed zeta values used by the closed-form asymptotics.
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;

inline constexpr double ev_from_radps(double omega_radps) {
  return omega_radps / radps_per_eV;
}

inline constexpr double radps_from_ev(double energy_ev) {
  return energy_ev * radps_per_eV;
}

}  // namespace casimir::constants
