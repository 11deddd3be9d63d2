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

#include "casimir/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace casimir::sweep {

using materials::MaterialModel;

void SweepSpec::validate() const {
  if (!(min < max)) throw std::invalid_argument("sweep: min must be < max");
  if (count < 2) throw std::invalid_argument("sweep: count must be >= 2");
  if (spacing == Spacing::Log && !(min > 0.0))
    throw std::invalid_argument("sweep: log spacing needs min > 0");
  if (quantity == SweepQuantity::Gradient && !sphere)
    throw std::invalid_argument("sweep: gradient needs sphere parameters");
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(count);
  if (spacing == Spacing::Linear) {
    const double step = (max - min) / (count - 1);
    for (int i = 0; i < count; ++i) g[i] = min + step * i;
  } else {
    const double step = std::log(max / min) / (count - 1);
    for (int i = 0; i < count; ++i) g[i] = min * std::exp(step * i);
  }
  g.back() = max;
  return g;
}

SweepRow evaluate_point(const SweepSpec& spec, double abscissa) {
  const double a = spec.variable == SweepVariable::Separation
                       ? abscissa
                       : spec.fixed_separation_m;
  const double T = spec.variable == SweepVariable::Temperature
                       ? abscissa
                       : spec.fixed_temperature_k;
  SweepRow row;
  row.abscissa = abscissa;
  switch (spec.quantity) {
    case SweepQuantity::FreeEnergy: {
      auto r = lifshitz::free_energy(a, T, spec.plate1, spec.plate2, spec.cfg);
      row.value = r.value;
      row.error_estimate = r.truncation_error;
      row.terms_used = r.terms_used;
      if (!r.converged) row.error = "not converged within l_max_cap";
      break;
    }
    case SweepQuantity::Pressure: {
      auto r = lifshitz::pressure(a, T, spec.plate1, spec.plate2, spec.cfg);
      row.value = r.value;
      row.error_estimate = r.truncation_error;
      row.terms_used = r.terms_used;
      if (!r.converged) row.error = "not converged within l_max_cap";
      break;
    }
    case SweepQuantity::Gradient: {
      auto r = lifshitz::pressure(a, T, spec.plate1, spec.plate2, spec.cfg);
      geometry::SpherePlate sp = *spec.sphere;
      sp.separation_m = a;
      auto g = geometry::pfa_gradient(sp, r.value);
      double v = geometry::beta_corrected_gradient(sp, g.value);
      v = geometry::roughness_corrected_gradient(sp, v).value;
      row.value = v;
      row.error_estimate =
          std::abs(v) * (r.value != 0.0 ? r.truncation_error / std::abs(r.value)
                                        : 0.0);
      row.terms_used = r.terms_used;
      if (!r.converged) row.error = "not converged within l_max_cap";
      break;
    }
    case SweepQuantity::Entropy: {
      auto s = thermo::entropy(a, T, spec.plate1, spec.plate2, spec.cfg);
      row.value = s.entropy_J_per_m2K;
      row.error_estimate = s.fd_error_estimate;
      if (!s.reliable) row.error = "finite-difference noise dominates";
      break;
    }
    case SweepQuantity::ThermalCorrection: {
      row.value = thermo::thermal_correction(a, T, spec.plate1, spec.plate2,
                                             spec.cfg, spec.convention);
      break;
    }
  }
  return row;
}

namespace {

void mark_failed(SweepRow& row) { row.value = std::nan(""); }
void mark_failed(BandRow& row) { row.low = row.high = std::nan(""); }

// Rows are independent; evaluate them on a small worker pool and keep the
// output in grid order so results stay identical across thread counts.
template <typename Row, typename Eval>
std::vector<Row> map_rows(const std::vector<double>& grid, const Eval& eval) {
  std::vector<Row> rows(grid.size());
  const unsigned workers = std::max(
      1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                             static_cast<unsigned>(grid.size())));
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        rows[i] = eval(grid[i]);
      } catch (const std::exception& e) {
        rows[i] = Row{};
        rows[i].abscissa = grid[i];
        rows[i].error = e.what();
        mark_failed(rows[i]);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  return map_rows<SweepRow>(spec.grid(), [&](double x) {
    return evaluate_point(spec, x);
  });
}

namespace {

void set_parameter(MaterialModel& m, BandParameter p, double value) {
  auto bad = []() {
    return std::invalid_argument("band: material has no such parameter");
  };
  switch (p) {
    case BandParameter::OmegaP:
      if (auto* d = std::get_if<materials::DrudeParams>(&m.response))
        d->omega_p_ev = value;
      else if (auto* pl = std::get_if<materials::PlasmaModel>(&m.response))
        pl->omega_p_ev = value;
      else if (auto* gp = std::get_if<materials::GeneralizedPlasma>(&m.response))
        gp->omega_p_ev = value;
      else if (auto* nl = std::get_if<materials::NonlocalDrudeParams>(&m.response))
        nl->drude.omega_p_ev = value;
      else
        throw bad();
      break;
    case BandParameter::Gamma:
      if (auto* d = std::get_if<materials::DrudeParams>(&m.response))
        d->gamma_room_ev = value;
      else if (auto* nl = std::get_if<materials::NonlocalDrudeParams>(&m.response))
        nl->drude.gamma_room_ev = value;
      else
        throw bad();
      break;
  }
  m.validate();
}

}  // namespace

std::vector<BandRow> run_band(const SweepSpec& spec, BandParameter parameter,
                              double param_min, double param_max,
                              int param_count) {
  spec.validate();
  if (!(param_min <= param_max) || param_count < 1)
    throw std::invalid_argument("band: bad parameter interval");
  return map_rows<BandRow>(spec.grid(), [&](double x) {
    BandRow band;
    band.abscissa = x;
    bool first = true;
    for (int i = 0; i < param_count; ++i) {
      const double p =
          param_count == 1
              ? param_min
              : param_min + (param_max - param_min) * i / (param_count - 1);
      SweepSpec varied = spec;
      set_parameter(varied.plate1, parameter, p);
      set_parameter(varied.plate2, parameter, p);
      const double v = evaluate_point(varied, x).value;
      if (first || v < band.low) band.low = v;
      if (first || v > band.high) band.high = v;
      first = false;
    }
    return band;
  });
}

const char* quantity_column(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::FreeEnergy: return "free_energy_J_per_m2";
    case SweepQuantity::Pressure: return "pressure_N_per_m2";
    case SweepQuantity::Gradient: return "force_gradient_N_per_m";
    case SweepQuantity::Entropy: return "entropy_J_per_m2K";
    case SweepQuantity::ThermalCorrection: return "thermal_correction";
  }
  return "value";
}

const char* abscissa_column(SweepVariable v) {
  return v == SweepVariable::Separation ? "separation_m" : "temperature_K";
}

}  // namespace casimir::sweep
