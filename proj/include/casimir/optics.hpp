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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::optics {

/// Tabulated Im eps(omega) samples on a strictly increasing frequency grid.
/// Ingestion demands at least 20 rows spanning two decades.
struct OpticalDataTable {
  std::vector<double> omega_ev;
  std::vector<double> im_eps;

  double omega_min() const { return omega_ev.front(); }
  double omega_max() const { return omega_ev.back(); }
  /// Throws std::invalid_argument naming the defect when the table is unfit.
  void validate() const;
};

/// Low-frequency completion of the data below omega_min: either the Drude
/// form of Im eps, or the plasma free-electron term added analytically with
/// the table treated as the core-electron contribution.
struct ExtrapolationSpec {
  enum class Mode { Drude, Plasma };
  Mode mode = Mode::Drude;
  double omega_p_ev = 0.0;
  double gamma_ev = 0.0;  // Drude mode only

  void validate() const;
};

/// Kramers-Kronig transform to the imaginary axis,
///   eps(i xi) = 1 + (2/pi) Int_0^inf omega Im eps(omega)/(omega^2+xi^2) domega,
/// with the tabulated range integrated by the trapezoid rule on log omega,
/// the sub-omega_min range by the analytic Drude tail (Drude mode), and a
/// 1/omega^3 power-law tail above omega_max. Plasma mode adds omega_p^2/xi^2
/// analytically and integrates the table from omega_min only.
double kk_to_imag_axis(const OpticalDataTable& table,
                       const ExtrapolationSpec& ext, double xi_ev);

/// Evaluates eps(i xi_l) for l = 1..l_max at temperature T and wraps the
/// result as a Tabulated material whose zero-frequency limits follow the
/// extrapolation mode.
materials::MaterialModel build_material(const OpticalDataTable& table,
                                        const ExtrapolationSpec& ext,
                                        double temperature_k, long l_max);

/// Parses whitespace-separated numeric text with '#' comments. Two columns
/// are (omega_eV, Im eps); three columns are (omega_eV, n, k) from which
/// Im eps = 2 n k. Errors carry the offending line number.
OpticalDataTable load_table(std::istream& in);
OpticalDataTable load_table_file(const std::string& path);

/// FNV-1a digest of the ingestion inputs; identical inputs give an
/// identical cache byte-for-byte.
std::uint64_t ingestion_digest(const OpticalDataTable& table,
                               const ExtrapolationSpec& ext,
                               double temperature_k, long l_max);

/// Cache file: '#'-prefixed metadata then one "l xi_eV eps" row per index.
/// Writing replaces the target atomically (write-temp + rename).
void write_cache(const std::string& path, const OpticalDataTable& table,
                 const ExtrapolationSpec& ext, double temperature_k,
                 long l_max);
materials::MaterialModel material_from_cache(const std::string& path);

}  // namespace casimir::optics
