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

#include <optional>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/thermo.hpp"

namespace casimir::sweep {

enum class SweepVariable { Separation, Temperature };
enum class SweepQuantity {
  FreeEnergy,
  Pressure,
  Gradient,
  Entropy,
  ThermalCorrection,
};
enum class Spacing { Linear, Log };

/// One-variable sweep: the grid, the fixed parameters, and the quantity.
struct SweepSpec {
  SweepVariable variable = SweepVariable::Separation;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  Spacing spacing = Spacing::Linear;
  SweepQuantity quantity = SweepQuantity::Pressure;

  double fixed_separation_m = 1e-6;
  double fixed_temperature_k = 300.0;
  materials::MaterialModel plate1;
  materials::MaterialModel plate2;
  lifshitz::MatsubaraConfig cfg;
  thermo::CorrectionConvention convention = thermo::CorrectionConvention::AtT;
  std::optional<geometry::SpherePlate> sphere;  // gradient quantity only

  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double abscissa = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
  long terms_used = 0;
  std::string error;  // engine failure for this row, empty when fine
};

/// Evaluates the quantity at one abscissa (throws on engine errors).
SweepRow evaluate_point(const SweepSpec& spec, double abscissa);

/// Full sweep; per-row failures are captured in SweepRow::error instead of
/// aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Pointwise min/max of the quantity over a swept material parameter.
struct BandRow {
  double abscissa = 0.0;
  double low = 0.0;
  double high = 0.0;
  std::string error;
};

enum class BandParameter { OmegaP, Gamma };

/// For each grid abscissa, sweeps `parameter` of both plate materials over
/// [param_min, param_max] (param_count values) and records the envelope.
std::vector<BandRow> run_band(const SweepSpec& spec, BandParameter parameter,
                              double param_min, double param_max,
                              int param_count);

const char* quantity_column(SweepQuantity q);  // column name with units
const char* abscissa_column(SweepVariable v);

}  // namespace casimir::sweep
