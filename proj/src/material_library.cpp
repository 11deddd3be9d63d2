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

#include "casimir/material_library.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/optics.hpp"

namespace casimir::material_library {

using namespace casimir::materials;
namespace con = casimir::constants;

namespace {

constexpr double kGoldOmegaP = 9.0;      // eV
constexpr double kGoldGamma = 0.035;     // eV at 300 K
constexpr double kGamma0RadPs = 5.32e10; // residual relaxation, rad/s
constexpr double kFermiVelocity = 1.40e6;  // m/s
constexpr double kNickelOmegaP = 4.89;   // eV
constexpr double kNickelGamma = 0.0436;  // eV at 300 K
constexpr double kNickelMu0 = 110.0;

DrudeParams gold_drude(double gamma_residual_ev) {
  return {kGoldOmegaP, kGoldGamma, gamma_residual_ev, 300.0};
}

// Two-oscillator silica surrogate: an infrared and an ultraviolet
// oscillator whose strengths are constrained to eps(0) = 3.81 with an
// optical-range permittivity of 2.10.
OscillatorSet silica_surrogate() {
  OscillatorSet osc;
  osc.oscillators.push_back({1.71 * 0.13 * 0.13, 0.13, 0.01});
  osc.oscillators.push_back({1.10 * 13.0 * 13.0, 13.0, 0.5});
  return osc;
}

ConductivityLaw silica_conductivity() {
  ConductivityLaw law;
  law.sigma_ref_inv_s = 29.7;
  law.delta_gap_ev = 9.0;
  law.t_ref_k = 300.0;
  law.mode = ConductivityLaw::Mode::Activated;
  return law;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

MaterialModel builtin(const std::string& name) {
  const double gamma0_ev = con::ev_from_radps(kGamma0RadPs);
  if (name == "ideal-metal") return MaterialModel::ideal_metal();
  if (name == "drude:au" || name == "drude:au-perfect")
    return MaterialModel::drude(gold_drude(0.0));
  if (name == "drude:au-impure")
    return MaterialModel::drude(gold_drude(gamma0_ev));
  if (name == "plasma:au") return MaterialModel::plasma(kGoldOmegaP);
  if (name == "nonlocal:au")
    return MaterialModel::nonlocal_drude(
        {gold_drude(0.0), kFermiVelocity, kFermiVelocity});
  if (name == "nonlocal:au-impure")
    return MaterialModel::nonlocal_drude(
        {gold_drude(gamma0_ev), kFermiVelocity, kFermiVelocity});
  if (name == "drude:ni")
    return MaterialModel::drude({kNickelOmegaP, kNickelGamma, 0.0, 300.0},
                                kNickelMu0);
  if (name == "plasma:ni")
    return MaterialModel::plasma(kNickelOmegaP, kNickelMu0);
  if (name == "ideal-dielectric:silica")
    return MaterialModel::ideal_dielectric(silica_surrogate());
  if (name == "real-dielectric:silica")
    return MaterialModel::real_dielectric(silica_surrogate(),
                                          silica_conductivity());
  throw std::invalid_argument("unknown material: " + name);
}

std::vector<std::string> builtin_names() {
  return {"ideal-metal",        "drude:au",
          "drude:au-perfect",   "drude:au-impure",
          "plasma:au",          "nonlocal:au",
          "nonlocal:au-impure", "drude:ni",
          "plasma:ni",          "ideal-dielectric:silica",
          "real-dielectric:silica"};
}

MaterialModel resolve(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    const auto rest = spec.substr(5);
    const auto hash = rest.find('#');
    if (hash == std::string::npos)
      throw std::invalid_argument("material file reference needs file:PATH#SECTION");
    return load_material_file(rest.substr(0, hash), rest.substr(hash + 1));
  }
  if (spec.rfind("cache:", 0) == 0)
    return optics::material_from_cache(spec.substr(6));
  return builtin(spec);
}

MaterialModel load_material(std::istream& in, const std::string& section) {
  std::map<std::string, std::string> kv;
  std::string line, current;
  bool found = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      current = trim(line.substr(1, line.size() - 2));
      if (current == section) found = true;
      continue;
    }
    if (current != section) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("material file: expected key = value: " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  if (!found)
    throw std::invalid_argument("material file: no section [" + section + "]");

  auto get = [&](const std::string& key, double dflt,
                 bool required = false) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (required)
        throw std::invalid_argument("material file: missing key " + key);
      return dflt;
    }
    std::istringstream ss(it->second);
    double v;
    if (!(ss >> v))
      throw std::invalid_argument("material file: bad number for " + key);
    return v;
  };
  auto get_str = [&](const std::string& key, const std::string& dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
  };

  const std::string variant = get_str("variant", "");
  const double mu0 = get("mu0", 1.0);

  auto oscillators = [&]() {
    OscillatorSet osc;
    for (int n = 1;; ++n) {
      const std::string p = "osc" + std::to_string(n) + "_";
      if (kv.find(p + "g_ev2") == kv.end()) break;
      osc.oscillators.push_back({get(p + "g_ev2", 0.0, true),
                                 get(p + "omega_ev", 0.0, true),
                                 get(p + "gamma_ev", 0.0)});
    }
    return osc;
  };
  auto drude_params = [&]() {
    return DrudeParams{get("omega_p_ev", 0.0, true), get("gamma_ev", 0.0, true),
                       get("gamma_residual_ev", 0.0), get("t_room_k", 300.0)};
  };

  if (variant == "ideal-metal") return MaterialModel::ideal_metal(mu0);
  if (variant == "drude") return MaterialModel::drude(drude_params(), mu0);
  if (variant == "plasma")
    return MaterialModel::plasma(get("omega_p_ev", 0.0, true), mu0);
  if (variant == "generalized-plasma")
    return MaterialModel::generalized_plasma(get("omega_p_ev", 0.0, true),
                                             oscillators(), mu0);
  if (variant == "ideal-dielectric")
    return MaterialModel::ideal_dielectric(oscillators());
  if (variant == "real-dielectric") {
    ConductivityLaw law;
    law.sigma_ref_inv_s = get("sigma0_invs", 0.0, true);
    law.delta_gap_ev = get("delta_gap_ev", 0.0);
    law.t_ref_k = get("t_ref_k", 300.0);
    const std::string mode = get_str("conductivity_mode", "activated");
    if (mode == "activated")
      law.mode = ConductivityLaw::Mode::Activated;
    else if (mode == "constant")
      law.mode = ConductivityLaw::Mode::Constant;
    else
      throw std::invalid_argument("material file: bad conductivity_mode");
    return MaterialModel::real_dielectric(oscillators(), law);
  }
  if (variant == "nonlocal-drude")
    return MaterialModel::nonlocal_drude({drude_params(),
                                          get("v_t_m_per_s", 0.0, true),
                                          get("v_l_m_per_s", 0.0, true)});
  throw std::invalid_argument("material file: unknown variant '" + variant + "'");
}

MaterialModel load_material_file(const std::string& path,
                                 const std::string& section) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open material file: " + path);
  return load_material(in, section);
}

}  // namespace casimir::material_library
