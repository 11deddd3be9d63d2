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

namespace casimir::reflection {

/// TM/TE reflection amplitudes at an imaginary frequency; both are real
/// and bounded by 1 in magnitude for physical inputs.
struct ReflectionPair {
  double r_tm = 0.0;
  double r_te = 0.0;
};

/// Decay constants entering the Fresnel coefficients, all carried as
/// hbar*c*k in eV: q in vacuum, k in the medium, k_t the transverse
/// constant of the nonlocal case.
struct WaveVectors {
  double q = 0.0;
  double k = 0.0;
  double k_t = 0.0;
};

/// q = sqrt(kperp^2 + xi^2), k = sqrt(kperp^2 + eps mu xi^2),
/// k_t = sqrt(kperp^2 + eps_t xi^2) at imaginary frequency.
WaveVectors wave_vectors(double eps, double mu, double eps_t, double xi_ev,
                         double k_perp_ev);

/// Fresnel coefficients at imaginary frequency xi > 0 (eV):
///   r_tm = (eps q - k) / (eps q + k),  r_te = (mu q - k) / (mu q + k),
/// with q = sqrt(kperp^2 + xi^2) and k = sqrt(kperp^2 + eps mu xi^2).
ReflectionPair fresnel(double eps, double mu, double xi_ev, double k_perp_ev);

/// Exact zero-frequency (l = 0) coefficients per model variant. These limit
/// forms are dispatched symbolically, never approximated by a small xi:
/// the model dependence of this single term carries the whole thermal
/// anomaly. The temperature fixes gamma(T) for the nonlocal variant.
ReflectionPair zero_freq_coeffs(const materials::MaterialModel& model,
                                double k_perp_ev, double temperature_k);

/// Impedance-form coefficients for permittivities depending on (xi, kperp)
/// only, with k_t = sqrt(kperp^2 + eps_t xi^2):
///   r_tm = [eps_t q - k_t - kperp (eps_t - eps_l)/eps_l] / [ ... + ... ],
///   r_te = (q - k_t) / (q + k_t).
/// Reduces exactly to fresnel(eps, 1, ...) when eps_t = eps_l.
ReflectionPair impedance_reflection(double eps_t, double eps_l, double xi_ev,
                                    double k_perp_ev);

/// Zero-frequency TM coefficient with Debye-Hückel screening,
/// [eps0 sqrt(kappa^2 + kperp^2) - kperp] / [eps0 sqrt(...) + kperp].
double screened_rtm0(double eps0, double kappa_ev, double k_perp_ev);

}  // namespace casimir::reflection
