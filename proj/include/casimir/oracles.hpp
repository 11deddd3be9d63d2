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

#include "casimir/materials.hpp"

namespace casimir::oracles {

/// Li_3(x) on [0, 1] to better than 1e-12 absolute.
double polylog3(double x);

/// Low-temperature / limiting expansion of a Casimir entropy,
/// S(T) ~ leading + next evaluated at the requested temperature.
/// For expansion kinds whose coefficients have no closed form the
/// structural fields (leading_power, leading_sign) are still filled and the
/// values are NaN.
struct EntropyExpansion {
  double leading_value = 0.0;  ///< leading term at T (J/(m^2 K))
  double leading_power = 0.0;  ///< exponent of T of the leading term
  double next_term = 0.0;      ///< next correction at T (J/(m^2 K))
  double total = 0.0;          ///< full expansion value at T
  int leading_sign = 0;        ///< -1/0/+1 when only the shape is known
  std::string warning;         ///< set when outside the expansion's regime
};

enum class ClassicalKind {
  IdealMetal,
  Drude,
  Plasma,
  IdealDielectric,
  RealDielectric,
};

/// Auxiliary inputs of the closed-form limits: omega_p for the plasma
/// model, the static permittivity for the ideal dielectric.
struct ClassicalAux {
  double omega_p_ev = 0.0;
  double eps0 = 0.0;
};

struct ClassicalLimit {
  double free_energy_J_per_m2 = 0.0;
  double pressure_N_per_m2 = 0.0;
};

/// Large-separation (single zero-frequency term) Casimir free energy and
/// pressure. The ideal-metal and Drude/real-dielectric values are fully
/// closed forms; the plasma kind keeps its TE correction as a numerical
/// integral; the ideal dielectric goes through Li_3.
ClassicalLimit classical_limit(ClassicalKind kind, double a_m,
                               double temperature_k,
                               const ClassicalAux& aux = {});

enum class MetalEntropyKind {
  PlasmaLowT,       // perturbation expansion in delta0/a, leading T^2
  DrudeT0Integral,  // the T -> 0 limit as a quadrature
  DrudeT0Series,    // the same limit as a three-term series in delta0/a
  DrudeImpurity,    // shape only: S ~ -D1 T + D2 T^(3/2)
  NonlocalPerfect,  // shape only: S ~ C1 sqrt(T)
  NonlocalImpurity, // shape only: S ~ C2 T
};

struct MetalEntropyParams {
  double omega_p_ev = 0.0;
};

EntropyExpansion metal_entropy_asymptotics(MetalEntropyKind kind, double a_m,
                                           double temperature_k,
                                           const MetalEntropyParams& params);

enum class DielectricEntropyKind {
  IdealLowT,  // linear-in-T law with the oscillator-relaxation coefficient
  RealT0,     // positive T -> 0 constant of a conducting dielectric
};

EntropyExpansion dielectric_entropy_asymptotics(
    DielectricEntropyKind kind, double a_m, double temperature_k,
    const materials::OscillatorSet& osc);

/// Zero-temperature Casimir-Polder entropy of an atom of static
/// polarizability alpha0 (m^3) above a dielectric half-space (J/K).
double casimir_polder_entropy_t0(double a_m, double alpha0_m3, double eps0);

}  // namespace casimir::oracles
