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

#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace casimir::thermo {

/// One entropy evaluation S(a, T) = -dF/dT by Richardson-extrapolated
/// central differences. Temperature enters the free energy four ways
/// (prefactor, Matsubara spacing, gamma(T), sigma0(T)); all four vary
/// inside the difference.
struct EntropySample {
  double temperature_k = 0.0;
  double entropy_J_per_m2K = 0.0;
  double fd_step_k = 0.0;
  double fd_error_estimate = 0.0;
  bool reliable = true;
};

EntropySample entropy(double a_m, double temperature_k,
                      const materials::MaterialModel& plate1,
                      const materials::MaterialModel& plate2,
                      const lifshitz::MatsubaraConfig& cfg);

/// Denominator convention of the relative thermal correction.
enum class CorrectionConvention {
  AtT,     // [F(a,T) - F(a,0)] / F(a,T)
  AtZero,  // [F(a,T) - F(a,0)] / F(a,0)
};

/// Relative thermal correction to the Casimir pressure (dimensionless).
/// The zero-temperature reference keeps the material parameters frozen at
/// the working temperature, so the correction isolates the thermal part of
/// the fluctuation spectrum rather than the parameter drift.
double thermal_correction(double a_m, double temperature_k,
                          const materials::MaterialModel& plate1,
                          const materials::MaterialModel& plate2,
                          const lifshitz::MatsubaraConfig& cfg,
                          CorrectionConvention convention);

enum class NernstVerdict { Satisfied, Violated, Inconclusive };

/// Outcome of a low-temperature entropy scan: the T -> 0 limit estimate,
/// the fitted power of the approach to it, and the per-point samples.
struct NernstReport {
  double limit_estimate = 0.0;   // J/(m^2 K)
  double fitted_exponent = 0.0;
  NernstVerdict verdict = NernstVerdict::Inconclusive;
  std::vector<EntropySample> samples;
  double threshold = 0.0;        // |limit| below this counts as zero
};

/// Scans the entropy over a strictly descending temperature grid (>= 6
/// points spanning >= 2 decades), estimates the T -> 0 limit from the
/// lowest samples and fits log|S - limit| against log T for the exponent.
NernstReport nernst_scan(double a_m, const materials::MaterialModel& plate1,
                         const materials::MaterialModel& plate2,
                         const std::vector<double>& t_grid_descending_k,
                         const lifshitz::MatsubaraConfig& cfg);

/// Log-spaced descending grid helper for nernst_scan.
std::vector<double> log_grid_descending(double t_max_k, double t_min_k,
                                        int points);

}  // namespace casimir::thermo
