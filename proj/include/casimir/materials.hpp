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
#include <utility>
#include <variant>
#include <vector>

namespace casimir::materials {

/// Free-electron response with dissipation,
/// eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma(T))).
/// The relaxation parameter follows gamma(T) = gamma_residual +
/// gamma_room (T / t_room)^2, the electron-electron scattering law of a
/// crystal lattice with an optional impurity floor.
struct DrudeParams {
  double omega_p_ev = 0.0;        ///< plasma frequency (eV)
  double gamma_room_ev = 0.0;     ///< relaxation at t_room (eV)
  double gamma_residual_ev = 0.0; ///< impurity residual relaxation (eV)
  double t_room_k = 300.0;        ///< reference temperature (K)
};

/// One oscillator of an insulator response: g in eV^2, omega and gamma in eV.
struct Oscillator {
  double g_ev2 = 0.0;
  double omega_ev = 0.0;
  double gamma_ev = 0.0;
};

/// Oscillator decomposition of a dielectric,
/// eps(i xi) = 1 + sum_j g_j / (omega_j^2 + xi^2 + gamma_j xi).
struct OscillatorSet {
  std::vector<Oscillator> oscillators;

  /// Static permittivity eps(0) = 1 + sum_j g_j / omega_j^2.
  double eps_static() const;
  /// Oscillator sum evaluated at imaginary frequency xi (eV), without the 1.
  double susceptibility(double xi_ev) const;
};

/// Temperature law of the dc conductivity of a dielectric. In `activated`
/// mode sigma0(T) = sigma_ref exp[-(delta/2 k_B)(1/T - 1/t_ref)], which
/// vanishes exponentially as T -> 0; `constant` mode keeps sigma_ref at all
/// temperatures (a hypothetical material used in thermodynamic checks).
struct ConductivityLaw {
  enum class Mode { Activated, Constant };
  double sigma_ref_inv_s = 0.0; ///< dc conductivity at t_ref (1/s, Gaussian)
  double delta_gap_ev = 0.0;    ///< band gap (eV), activated mode
  double t_ref_k = 300.0;
  Mode mode = Mode::Activated;

  /// sigma0(T) in 1/s.
  double sigma0_inv_s(double temperature_k) const;
  /// sigma0(T) expressed as an energy via hbar (eV).
  double sigma0_ev(double temperature_k) const;
};

/// Spatially dispersive Drude-like response: the Drude form times
/// (1 + v k_perp / xi) factors for the transverse/longitudinal channels.
/// The velocities are of the order of the Fermi velocity.
struct NonlocalDrudeParams {
  DrudeParams drude;
  double v_t_m_per_s = 0.0;
  double v_l_m_per_s = 0.0;
};

/// Permittivity sampled on the imaginary axis (typically built from
/// tabulated optical data through the Kramers-Kronig transform), carrying
/// the low-frequency extrapolation that fixes its zero-frequency behavior.
struct TabulatedEps {
  enum class Extrapolation { Drude, Plasma };
  std::vector<double> xi_ev;   ///< ascending sample frequencies
  std::vector<double> eps;     ///< eps(i xi) at the samples, all >= 1
  Extrapolation extrapolation = Extrapolation::Drude;
  double omega_p_ev = 0.0;     ///< extrapolation plasma frequency
  double gamma_ev = 0.0;       ///< extrapolation relaxation (Drude mode)

  double eval(double xi) const;
  /// Precomputes the monotone interpolant; called by builders/loaders.
  void finalize();

 private:
  std::vector<double> log_xi_, log_chi_, slope_;  // pchip data on log axes
};

struct IdealMetal {};

struct PlasmaModel {
  double omega_p_ev = 0.0;
};

struct GeneralizedPlasma {
  double omega_p_ev = 0.0;
  OscillatorSet core;
};

struct IdealDielectric {
  OscillatorSet osc;
};

struct RealDielectric {
  OscillatorSet osc;
  ConductivityLaw conductivity;
};

using ResponseVariant =
    std::variant<IdealMetal, DrudeParams, PlasmaModel, GeneralizedPlasma,
                 IdealDielectric, RealDielectric, NonlocalDrudeParams,
                 TabulatedEps>;

/// A plate material: one dielectric response variant plus the static
/// magnetic permeability mu(0) entering only the zeroth Matsubara term.
struct MaterialModel {
  ResponseVariant response;
  double mu0 = 1.0;

  /// Throws std::invalid_argument when a parameter invariant is violated.
  void validate() const;

  bool is_nonlocal() const {
    return std::holds_alternative<NonlocalDrudeParams>(response);
  }

  // Convenience factories; all run validate().
  static MaterialModel ideal_metal(double mu0 = 1.0);
  static MaterialModel drude(DrudeParams p, double mu0 = 1.0);
  static MaterialModel plasma(double omega_p_ev, double mu0 = 1.0);
  static MaterialModel generalized_plasma(double omega_p_ev, OscillatorSet core,
                                          double mu0 = 1.0);
  static MaterialModel ideal_dielectric(OscillatorSet osc);
  static MaterialModel real_dielectric(OscillatorSet osc, ConductivityLaw law);
  static MaterialModel nonlocal_drude(NonlocalDrudeParams p);
  static MaterialModel tabulated(TabulatedEps t);
};

/// gamma(T) = gamma_residual + gamma_room (T / t_room)^2.
double gamma_at_temperature(const DrudeParams& params, double temperature_k);

/// Dielectric permittivity at imaginary frequency xi > 0 (eV) for every
/// local variant. NonlocalDrude models must go through
/// eps_nonlocal_imag_freq; passing one here throws.
double eps_imag_freq(const MaterialModel& model, double xi_ev,
                     double temperature_k);

/// Transverse and longitudinal permittivities of the nonlocal Drude-like
/// response continued to imaginary frequency:
///   eps_T = 1 + wp^2/(xi(xi+gamma)) (1 + v_T kperp/xi),
///   eps_L = 1 + wp^2/(xi(xi+gamma)) / (1 + v_L kperp/xi),
/// with kperp carried as hbar*c*k in eV.
std::pair<double, double> eps_nonlocal_imag_freq(
    const NonlocalDrudeParams& params, double xi_ev, double k_perp_ev,
    double temperature_k);

/// mu(i xi_l): the static value mu0 at l = 0, unity at every l >= 1.
double mu_at_matsubara(const MaterialModel& model, long l);

}  // namespace casimir::materials
