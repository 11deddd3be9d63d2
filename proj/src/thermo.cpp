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

#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::thermo {

namespace con = casimir::constants;
using lifshitz::CasimirResult;
using lifshitz::MatsubaraConfig;
using materials::MaterialModel;

namespace {

// Natural magnitude of the classical Drude entropy deficit; used as the
// absolute scale for "zero" decisions and noise floors.
double entropy_scale(double a_m) {
  return con::k_boltzmann_J_per_K * con::zeta3 / (16.0 * con::pi * a_m * a_m);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

EntropySample entropy(double a_m, double temperature_k,
                      const MaterialModel& plate1, const MaterialModel& plate2,
                      const MatsubaraConfig& cfg) {
  if (!(a_m > 0.0) || !(temperature_k > 0.0))
    throw std::domain_error("entropy requires a > 0, T > 0");
  MatsubaraConfig tight = cfg;
  tight.rel_tol = std::min(cfg.rel_tol, 1e-11);

  // Step: 1e-3 T with a 1 mK floor, capped so T - h stays positive.
  const double h =
      std::min(std::max(1e-3 * temperature_k, 1e-3), 0.5 * temperature_k);

  auto F = [&](double T) {
    return lifshitz::free_energy(a_m, T, plate1, plate2, tight);
  };
  const CasimirResult fp = F(temperature_k + h);
  const CasimirResult fm = F(temperature_k - h);
  const CasimirResult fp2 = F(temperature_k + 0.5 * h);
  const CasimirResult fm2 = F(temperature_k - 0.5 * h);

  const double s_h = (fm.value - fp.value) / (2.0 * h);
  const double s_h2 = (fm2.value - fp2.value) / h;
  const double s = (4.0 * s_h2 - s_h) / 3.0;

  // Richardson defect plus the engine's own truncation noise through the
  // difference quotient.
  const double noise =
      (fp.truncation_error + fm.truncation_error + fp2.truncation_error +
       fm2.truncation_error) /
      (2.0 * h);
  EntropySample out;
  out.temperature_k = temperature_k;
  out.entropy_J_per_m2K = s;
  out.fd_step_k = h;
  out.fd_error_estimate = std::abs(s_h2 - s_h) / 3.0 + noise;
  const double floor = 1e-3 * entropy_scale(a_m);
  out.reliable =
      out.fd_error_estimate < 0.01 * std::max(std::abs(s), floor) &&
      fp.converged && fm.converged && fp2.converged && fm2.converged;
  return out;
}

double thermal_correction(double a_m, double temperature_k,
                          const MaterialModel& plate1,
                          const MaterialModel& plate2,
                          const MatsubaraConfig& cfg,
                          CorrectionConvention convention) {
  if (!(a_m > 0.0) || !(temperature_k > 0.0))
    throw std::domain_error("thermal_correction requires a > 0, T > 0");
  const CasimirResult ft =
      lifshitz::pressure(a_m, temperature_k, plate1, plate2, cfg);
  const CasimirResult f0 =
      lifshitz::force_zero_t(a_m, plate1, plate2, cfg, temperature_k);
  const double denom =
      convention == CorrectionConvention::AtT ? ft.value : f0.value;
  if (std::abs(denom) < 1e-300)
    throw std::domain_error("thermal_correction: degenerate denominator");
  return (ft.value - f0.value) / denom;
}

std::vector<double> log_grid_descending(double t_max_k, double t_min_k,
                                        int points) {
  if (!(t_max_k > t_min_k) || !(t_min_k > 0.0) || points < 2)
    throw std::invalid_argument("bad grid parameters");
  std::vector<double> grid(points);
  const double step = std::log(t_max_k / t_min_k) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = t_max_k * std::exp(-step * i);
  grid.back() = t_min_k;
  return grid;
}

NernstReport nernst_scan(double a_m, const MaterialModel& plate1,
                         const MaterialModel& plate2,
                         const std::vector<double>& t_grid_descending_k,
                         const MatsubaraConfig& cfg) {
  if (t_grid_descending_k.size() < 6)
    throw std::invalid_argument("nernst_scan needs >= 6 grid points");
  for (std::size_t i = 0; i + 1 < t_grid_descending_k.size(); ++i)
    if (!(t_grid_descending_k[i] > t_grid_descending_k[i + 1]))
      throw std::invalid_argument("grid must be strictly descending");
  if (!(t_grid_descending_k.back() > 0.0))
    throw std::invalid_argument("grid temperatures must be positive");
  if (t_grid_descending_k.front() / t_grid_descending_k.back() <
      100.0 * (1.0 - 1e-12))
    throw std::invalid_argument("grid must span at least two decades");

  NernstReport rep;
  rep.threshold = 1e-3 * entropy_scale(a_m);
  for (double T : t_grid_descending_k)
    rep.samples.push_back(entropy(a_m, T, plate1, plate2, cfg));

  const auto& s = rep.samples;
  const std::size_t n = s.size();

  // Limit estimate from the lowest-temperature reliable samples: a plateau
  // (mutually consistent values above threshold) is taken at face value,
  // anything decaying is extrapolated to zero.
  std::vector<const EntropySample*> low;
  for (std::size_t i = n; i-- > 0 && low.size() < 3;) {
    if (s[i].reliable) low.push_back(&s[i]);
  }
  if (low.size() < 3) {
    rep.verdict = NernstVerdict::Inconclusive;
    return rep;
  }
  const double s0 = low[0]->entropy_J_per_m2K;
  const double s1 = low[1]->entropy_J_per_m2K;
  const double s2 = low[2]->entropy_J_per_m2K;
  const double spread = std::max({std::abs(s0 - s1), std::abs(s0 - s2)});
  const bool plateau =
      std::abs(s0) > rep.threshold && spread < 0.05 * std::abs(s0);
  rep.limit_estimate = plateau ? (s0 + s1) / 2.0 : 0.0;

  // Exponent fit on log|S - limit| vs log T over the usable low-T samples.
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = s[i].entropy_J_per_m2K - rep.limit_estimate;
    if (!s[i].reliable) continue;
    if (std::abs(dev) < 5.0 * s[i].fd_error_estimate) continue;
    lx.push_back(std::log(s[i].temperature_k));
    ly.push_back(std::log(std::abs(dev)));
  }
  if (lx.size() >= 3) {
    // keep only the lowest usable decade and a half for the asymptotic fit
    const double t_hi = std::exp(lx.back()) * std::pow(10.0, 1.5);
    std::vector<double> fx, fy;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      if (std::exp(lx[i]) <= t_hi) {
        fx.push_back(lx[i]);
        fy.push_back(ly[i]);
      }
    }
    rep.fitted_exponent = fit_slope(fx.size() >= 3 ? fx : lx,
                                    fx.size() >= 3 ? fy : ly);
  } else {
    rep.verdict = plateau ? NernstVerdict::Violated : NernstVerdict::Inconclusive;
    return rep;
  }

  if (plateau)
    rep.verdict = NernstVerdict::Violated;
  else if (rep.fitted_exponent > 0.0)
    rep.verdict = NernstVerdict::Satisfied;
  else
    rep.verdict = NernstVerdict::Inconclusive;
  return rep;
}

}  // namespace casimir::thermo
