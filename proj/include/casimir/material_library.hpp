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

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::material_library {

/// Built-in plate materials addressable by name:
///   ideal-metal
///   drude:au, drude:au-perfect, drude:au-impure
///   plasma:au
///   nonlocal:au, nonlocal:au-impure
///   drude:ni, plasma:ni            (mu(0) = 110)
///   ideal-dielectric:silica, real-dielectric:silica
/// Gold parameters are omega_p = 9.0 eV, gamma = 0.035 eV at 300 K; the
/// impure variants add the residual relaxation 5.32e10 rad/s. The silica
/// entries are a two-oscillator surrogate constrained to eps(0) = 3.81
/// (one infrared and one ultraviolet oscillator), not a fit to real silica
/// optical data; the real variant adds sigma0 = 29.7 1/s at 300 K.
materials::MaterialModel builtin(const std::string& name);

std::vector<std::string> builtin_names();

/// Resolves a CLI material reference: a builtin name, `file:PATH#SECTION`
/// for the key-value material file format, or `cache:PATH` for an ingested
/// eps(i xi_l) cache.
materials::MaterialModel resolve(const std::string& spec);

/// Key-value material file: one `[name]` section per material, `key = value`
/// lines, `#` comments. Keys carry units as suffixes:
///   variant = ideal-metal | drude | plasma | generalized-plasma |
///             ideal-dielectric | real-dielectric | nonlocal-drude
///   omega_p_ev, gamma_ev, gamma_residual_ev, t_room_k, mu0,
///   v_t_m_per_s, v_l_m_per_s,
///   osc<N>_g_ev2, osc<N>_omega_ev, osc<N>_gamma_ev  (N = 1, 2, ...),
///   sigma0_invs, delta_gap_ev, t_ref_k, conductivity_mode = activated|constant
materials::MaterialModel load_material_file(const std::string& path,
                                            const std::string& section);
materials::MaterialModel load_material(std::istream& in,
                                       const std::string& section);

}  // namespace casimir::material_library
