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

#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::reflection {

namespace con = casimir::constants;
using namespace casimir::materials;

WaveVectors wave_vectors(double eps, double mu, double eps_t, double xi_ev,
                         double k_perp_ev) {
  const double kp2 = k_perp_ev * k_perp_ev;
  const double xi2 = xi_ev * xi_ev;
  return {std::sqrt(kp2 + xi2), std::sqrt(kp2 + eps * mu * xi2),
          std::sqrt(kp2 + eps_t * xi2)};
}

ReflectionPair fresnel(double eps, double mu, double xi_ev, double k_perp_ev) {
  if (!(xi_ev > 0.0))
    throw std::domain_error("fresnel requires xi > 0; use zero_freq_coeffs");
  if (k_perp_ev < 0.0) throw std::domain_error("k_perp must be >= 0");
  if (eps < 1.0 || mu < 1.0)
    throw std::domain_error("imaginary-axis response requires eps, mu >= 1");
  const WaveVectors w = wave_vectors(eps, mu, 1.0, xi_ev, k_perp_ev);
  return {(eps * w.q - w.k) / (eps * w.q + w.k),
          (mu * w.q - w.k) / (mu * w.q + w.k)};
}

namespace {

// Static Fresnel TE limit when eps xi^2 -> 0 (Drude metals, dielectrics):
// the medium constant collapses to kperp and only mu survives.
double rte0_static(double mu0) { return (mu0 - 1.0) / (mu0 + 1.0); }

// Plasma-like TE limit, eps xi^2 -> omega_p^2: k(0) = sqrt(kperp^2 + mu wp^2).
double rte0_plasma(double omega_p_ev, double mu0, double k_perp_ev) {
  const double k0 =
      std::sqrt(k_perp_ev * k_perp_ev + mu0 * omega_p_ev * omega_p_ev);
  return (mu0 * k_perp_ev - k0) / (mu0 * k_perp_ev + k0);
}

}  // namespace

ReflectionPair zero_freq_coeffs(const MaterialModel& model, double k_perp_ev,
                                double temperature_k) {
  if (!(k_perp_ev > 0.0)) throw std::domain_error("k_perp must be positive");
  struct Visit {
    double kp, T, mu0;
    ReflectionPair operator()(const IdealMetal&) const { return {1.0, -1.0}; }
    ReflectionPair operator()(const DrudeParams&) const {
      return {1.0, rte0_static(mu0)};
    }
    ReflectionPair operator()(const PlasmaModel& p) const {
      return {1.0, rte0_plasma(p.omega_p_ev, mu0, kp)};
    }
    ReflectionPair operator()(const GeneralizedPlasma& p) const {
      return {1.0, rte0_plasma(p.omega_p_ev, mu0, kp)};
    }
    ReflectionPair operator()(const IdealDielectric& p) const {
      const double e0 = p.osc.eps_static();
      return {(e0 - 1.0) / (e0 + 1.0), rte0_static(mu0)};
    }
    ReflectionPair operator()(const RealDielectric&) const {
      // Any nonzero dc conductivity drives eps(i xi) -> infinity as xi -> 0.
      return {1.0, rte0_static(mu0)};
    }
    ReflectionPair operator()(const NonlocalDrudeParams& p) const {
      const double g = gamma_at_temperature(p.drude, T);
      const double extra = p.drude.omega_p_ev * p.drude.omega_p_ev *
                           (p.v_t_m_per_s / con::c_m_per_s) * kp / g;
      const double kt0 = std::sqrt(kp * kp + extra);
      return {1.0, (kp - kt0) / (kp + kt0)};
    }
    ReflectionPair operator()(const TabulatedEps& t) const {
      if (t.extrapolation == TabulatedEps::Extrapolation::Drude)
        return {1.0, rte0_static(mu0)};
      return {1.0, rte0_plasma(t.omega_p_ev, mu0, kp)};
    }
  };
  return std::visit(Visit{k_perp_ev, temperature_k, model.mu0}, model.response);
}

ReflectionPair impedance_reflection(double eps_t, double eps_l, double xi_ev,
                                    double k_perp_ev) {
  if (!(xi_ev > 0.0)) throw std::domain_error("xi must be positive");
  if (k_perp_ev < 0.0) throw std::domain_error("k_perp must be >= 0");
  if (eps_t < 1.0 || eps_l < 1.0)
    throw std::domain_error("imaginary-axis response requires eps >= 1");
  const WaveVectors w = wave_vectors(1.0, 1.0, eps_t, xi_ev, k_perp_ev);
  const double mix = k_perp_ev * (eps_t - eps_l) / eps_l;
  return {(eps_t * w.q - w.k_t - mix) / (eps_t * w.q + w.k_t + mix),
          (w.q - w.k_t) / (w.q + w.k_t)};
}

double screened_rtm0(double eps0, double kappa_ev, double k_perp_ev) {
  if (eps0 < 1.0) throw std::domain_error("eps0 must be >= 1");
  if (kappa_ev < 0.0) throw std::domain_error("kappa must be >= 0");
  if (!(k_perp_ev > 0.0)) throw std::domain_error("k_perp must be positive");
  const double s = eps0 * std::sqrt(kappa_ev * kappa_ev + k_perp_ev * k_perp_ev);
  return (s - k_perp_ev) / (s + k_perp_ev);
}

}  // namespace casimir::reflection
