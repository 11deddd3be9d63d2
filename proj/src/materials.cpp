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

#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::materials {

namespace con = casimir::constants;

double OscillatorSet::eps_static() const {
  double s = 0.0;
  for (const auto& o : oscillators) s += o.g_ev2 / (o.omega_ev * o.omega_ev);
  return 1.0 + s;
}

double OscillatorSet::susceptibility(double xi_ev) const {
  double s = 0.0;
  for (const auto& o : oscillators)
    s += o.g_ev2 / (o.omega_ev * o.omega_ev + xi_ev * xi_ev + o.gamma_ev * xi_ev);
  return s;
}

double ConductivityLaw::sigma0_inv_s(double temperature_k) const {
  if (mode == Mode::Constant) return sigma_ref_inv_s;
  if (temperature_k <= 0.0) return 0.0;
  const double half_gap_K = delta_gap_ev / (2.0 * con::k_boltzmann_eV_per_K);
  return sigma_ref_inv_s *
         std::exp(-half_gap_K * (1.0 / temperature_k - 1.0 / t_ref_k));
}

double ConductivityLaw::sigma0_ev(double temperature_k) const {
  return con::ev_from_radps(sigma0_inv_s(temperature_k));
}

namespace {

void validate_oscillators(const OscillatorSet& osc) {
  for (const auto& o : osc.oscillators) {
    if (!(o.omega_ev > 0.0))
      throw std::invalid_argument("oscillator frequency must be positive");
    if (o.g_ev2 < 0.0)
      throw std::invalid_argument("oscillator strength must be >= 0");
    if (o.gamma_ev < 0.0)
      throw std::invalid_argument("oscillator relaxation must be >= 0");
  }
}

void validate_drude(const DrudeParams& p) {
  if (!(p.omega_p_ev > 0.0))
    throw std::invalid_argument("plasma frequency must be positive");
  if (p.gamma_room_ev < 0.0 || p.gamma_residual_ev < 0.0)
    throw std::invalid_argument("relaxation parameters must be >= 0");
  if (!(p.t_room_k > 0.0))
    throw std::invalid_argument("reference temperature must be positive");
  if (gamma_at_temperature(p, p.t_room_k) >= p.omega_p_ev / 10.0)
    throw std::invalid_argument("relaxation is not small against omega_p");
}

struct Validator {
  double mu0;
  void operator()(const IdealMetal&) const {}
  void operator()(const DrudeParams& p) const { validate_drude(p); }
  void operator()(const PlasmaModel& p) const {
    if (!(p.omega_p_ev > 0.0))
      throw std::invalid_argument("plasma frequency must be positive");
  }
  void operator()(const GeneralizedPlasma& p) const {
    if (!(p.omega_p_ev > 0.0))
      throw std::invalid_argument("plasma frequency must be positive");
    validate_oscillators(p.core);
  }
  void operator()(const IdealDielectric& p) const { validate_oscillators(p.osc); }
  void operator()(const RealDielectric& p) const {
    validate_oscillators(p.osc);
    if (p.conductivity.sigma_ref_inv_s < 0.0)
      throw std::invalid_argument("dc conductivity must be >= 0");
    if (p.conductivity.mode == ConductivityLaw::Mode::Activated &&
        p.conductivity.delta_gap_ev < 0.0)
      throw std::invalid_argument("band gap must be >= 0");
  }
  void operator()(const NonlocalDrudeParams& p) const {
    validate_drude(p.drude);
    const double cap = con::c_m_per_s / 50.0;
    if (!(p.v_t_m_per_s >= 0.0 && p.v_t_m_per_s < cap) ||
        !(p.v_l_m_per_s >= 0.0 && p.v_l_m_per_s < cap))
      throw std::invalid_argument("nonlocality velocities must satisfy 0 <= v << c");
  }
  void operator()(const TabulatedEps& t) const {
    if (t.xi_ev.size() < 2 || t.xi_ev.size() != t.eps.size())
      throw std::invalid_argument("tabulated permittivity needs >= 2 samples");
    if (!std::is_sorted(t.xi_ev.begin(), t.xi_ev.end()))
      throw std::invalid_argument("tabulated frequencies must be ascending");
    if (t.xi_ev.front() <= 0.0)
      throw std::invalid_argument("tabulated frequencies must be positive");
    for (double e : t.eps)
      if (e < 1.0) throw std::invalid_argument("tabulated eps must be >= 1");
    if (!(t.omega_p_ev > 0.0))
      throw std::invalid_argument("extrapolation needs omega_p > 0");
    if (t.extrapolation == TabulatedEps::Extrapolation::Drude && !(t.gamma_ev > 0.0))
      throw std::invalid_argument("Drude extrapolation needs gamma > 0");
  }
};

double drude_eps(const DrudeParams& p, double xi_ev, double temperature_k) {
  const double g = gamma_at_temperature(p, temperature_k);
  if (g >= p.omega_p_ev / 10.0)
    throw std::domain_error("gamma(T) is not small against omega_p");
  return 1.0 + p.omega_p_ev * p.omega_p_ev / (xi_ev * (xi_ev + g));
}

}  // namespace

void MaterialModel::validate() const {
  if (!(mu0 >= 1.0))
    throw std::invalid_argument("static permeability mu0 must be >= 1");
  std::visit(Validator{mu0}, response);
}

MaterialModel MaterialModel::ideal_metal(double mu0) {
  MaterialModel m{IdealMetal{}, mu0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::drude(DrudeParams p, double mu0) {
  MaterialModel m{p, mu0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::plasma(double omega_p_ev, double mu0) {
  MaterialModel m{PlasmaModel{omega_p_ev}, mu0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::generalized_plasma(double omega_p_ev,
                                                OscillatorSet core, double mu0) {
  MaterialModel m{GeneralizedPlasma{omega_p_ev, std::move(core)}, mu0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::ideal_dielectric(OscillatorSet osc) {
  MaterialModel m{IdealDielectric{std::move(osc)}, 1.0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::real_dielectric(OscillatorSet osc,
                                             ConductivityLaw law) {
  MaterialModel m{RealDielectric{std::move(osc), law}, 1.0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::nonlocal_drude(NonlocalDrudeParams p) {
  MaterialModel m{p, 1.0};
  m.validate();
  return m;
}
MaterialModel MaterialModel::tabulated(TabulatedEps t) {
  t.finalize();
  MaterialModel m{std::move(t), 1.0};
  m.validate();
  return m;
}

double gamma_at_temperature(const DrudeParams& params, double temperature_k) {
  if (temperature_k < 0.0)
    throw std::domain_error("temperature must be >= 0");
  const double r = temperature_k / params.t_room_k;
  return params.gamma_residual_ev + params.gamma_room_ev * r * r;
}

double eps_imag_freq(const MaterialModel& model, double xi_ev,
                     double temperature_k) {
  if (!(xi_ev > 0.0))
    throw std::domain_error("eps_imag_freq requires xi > 0; the l = 0 term is "
                            "handled by the zero-frequency reflection limits");
  struct Eval {
    double xi, T;
    double operator()(const IdealMetal&) const {
      throw std::invalid_argument("ideal metal has no finite permittivity");
    }
    double operator()(const DrudeParams& p) const { return drude_eps(p, xi, T); }
    double operator()(const PlasmaModel& p) const {
      return 1.0 + p.omega_p_ev * p.omega_p_ev / (xi * xi);
    }
    double operator()(const GeneralizedPlasma& p) const {
      return 1.0 + p.omega_p_ev * p.omega_p_ev / (xi * xi) +
             p.core.susceptibility(xi);
    }
    double operator()(const IdealDielectric& p) const {
      return 1.0 + p.osc.susceptibility(xi);
    }
    double operator()(const RealDielectric& p) const {
      return 1.0 + p.osc.susceptibility(xi) +
             4.0 * con::pi * p.conductivity.sigma0_ev(T) / xi;
    }
    double operator()(const NonlocalDrudeParams&) const {
      throw std::invalid_argument(
          "nonlocal response depends on k_perp; use eps_nonlocal_imag_freq");
    }
    double operator()(const TabulatedEps& t) const { return t.eval(xi); }
  };
  return std::visit(Eval{xi_ev, temperature_k}, model.response);
}

std::pair<double, double> eps_nonlocal_imag_freq(
    const NonlocalDrudeParams& params, double xi_ev, double k_perp_ev,
    double temperature_k) {
  if (!(xi_ev > 0.0)) throw std::domain_error("xi must be positive");
  if (k_perp_ev < 0.0) throw std::domain_error("k_perp must be >= 0");
  const double chi = drude_eps(params.drude, xi_ev, temperature_k) - 1.0;
  // v k_perp / xi with k_perp carried as hbar c k: (v/c)(k_perp/xi).
  const double ratio = k_perp_ev / xi_ev / con::c_m_per_s;
  const double eps_t = 1.0 + chi * (1.0 + params.v_t_m_per_s * ratio);
  const double eps_l = 1.0 + chi / (1.0 + params.v_l_m_per_s * ratio);
  return {eps_t, eps_l};
}

double mu_at_matsubara(const MaterialModel& model, long l) {
  if (l < 0) throw std::domain_error("Matsubara index must be >= 0");
  return l == 0 ? model.mu0 : 1.0;
}

// --- TabulatedEps -----------------------------------------------------------

void TabulatedEps::finalize() {
  const std::size_t n = xi_ev.size();
  if (n < 2) return;
  log_xi_.resize(n);
  log_chi_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_xi_[i] = std::log(xi_ev[i]);
    log_chi_[i] = std::log(std::max(eps[i] - 1.0, 1e-300));
  }
  // Fritsch-Carlson monotone cubic slopes.
  slope_.assign(n, 0.0);
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    d[i] = (log_chi_[i + 1] - log_chi_[i]) / (log_xi_[i + 1] - log_xi_[i]);
  slope_[0] = d[0];
  slope_[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      const double w1 = 2.0 * (log_xi_[i + 1] - log_xi_[i]) +
                        (log_xi_[i] - log_xi_[i - 1]);
      const double w2 = (log_xi_[i + 1] - log_xi_[i]) +
                        2.0 * (log_xi_[i] - log_xi_[i - 1]);
      slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
}

double TabulatedEps::eval(double xi) const {
  if (!(xi > 0.0)) throw std::domain_error("xi must be positive");
  if (xi < xi_ev.front()) {
    // Below the sampled range the stored extrapolation model takes over.
    if (extrapolation == Extrapolation::Drude)
      return 1.0 + omega_p_ev * omega_p_ev / (xi * (xi + gamma_ev));
    return 1.0 + omega_p_ev * omega_p_ev / (xi * xi);
  }
  if (xi > xi_ev.back()) {
    const double chi_end = eps.back() - 1.0;
    const double r = xi_ev.back() / xi;
    return 1.0 + chi_end * r * r;
  }
  const double t = std::log(xi);
  auto it = std::upper_bound(log_xi_.begin(), log_xi_.end(), t);
  std::size_t i = (it == log_xi_.begin()) ? 0 : (it - log_xi_.begin() - 1);
  if (i + 1 >= log_xi_.size()) i = log_xi_.size() - 2;
  const double h = log_xi_[i + 1] - log_xi_[i];
  const double s = (t - log_xi_[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  const double v = h00 * log_chi_[i] + h10 * h * slope_[i] +
                   h01 * log_chi_[i + 1] + h11 * h * slope_[i + 1];
  return 1.0 + std::exp(v);
}

}  // namespace casimir::materials
