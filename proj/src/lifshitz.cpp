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

#include "casimir/lifshitz.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"

namespace casimir::lifshitz {

namespace con = casimir::constants;
namespace quad = casimir::quadrature;
using materials::MaterialModel;
using reflection::ReflectionPair;

void MatsubaraConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw std::invalid_argument("rel_tol must lie in (0, 1e-3]");
  if (!(y_max_offset >= 30.0))
    throw std::invalid_argument("y_max_offset must be >= 30");
  if (l_max_cap < 1) throw std::invalid_argument("l_max_cap must be >= 1");
}

double matsubara_frequency(long l, double temperature_k) {
  if (l < 0) throw std::domain_error("Matsubara index must be >= 0");
  if (!(temperature_k > 0.0)) throw std::domain_error("temperature must be > 0");
  return 2.0 * con::pi * con::k_boltzmann_eV_per_K * temperature_k *
         static_cast<double>(l);
}

double regime_threshold(double temperature_k) {
  if (!(temperature_k > 0.0)) throw std::domain_error("temperature must be > 0");
  return con::hbarc_J_m / (4.0 * con::pi * con::k_boltzmann_J_per_K * temperature_k);
}

namespace {

enum class Mode { FreeEnergy, Pressure };

// Per-plate reflection context for one frequency. Local responses cache the
// permittivity once per frequency; only the nonlocal variant needs a fresh
// evaluation at every transverse wavenumber.
struct PlateCtx {
  enum Kind { Mirror, Local, Nonlocal } kind = Mirror;
  double eps = 1.0;
  const materials::NonlocalDrudeParams* nl = nullptr;

  static PlateCtx at_frequency(const MaterialModel& m, double xi_ev, double T) {
    PlateCtx c;
    if (std::holds_alternative<materials::IdealMetal>(m.response)) {
      c.kind = Mirror;
    } else if (const auto* p =
                   std::get_if<materials::NonlocalDrudeParams>(&m.response)) {
      c.kind = Nonlocal;
      c.nl = p;
    } else {
      c.kind = Local;
      c.eps = materials::eps_imag_freq(m, xi_ev, T);
    }
    return c;
  }

  ReflectionPair reflect(double xi_ev, double k_perp_ev, double T) const {
    switch (kind) {
      case Mirror:
        return {1.0, -1.0};
      case Local:
        return reflection::fresnel(eps, 1.0, xi_ev, k_perp_ev);
      case Nonlocal: {
        auto [et, el] =
            materials::eps_nonlocal_imag_freq(*nl, xi_ev, k_perp_ev, T);
        return reflection::impedance_reflection(et, el, xi_ev, k_perp_ev);
      }
    }
    return {};
  }
};

double pair_integrand(Mode mode, const ReflectionPair& r1,
                      const ReflectionPair& r2, double y) {
  const double e = std::exp(-y);
  const double x_tm = r1.r_tm * r2.r_tm * e;
  const double x_te = r1.r_te * r2.r_te * e;
  if (mode == Mode::FreeEnergy)
    return y * (std::log1p(-x_tm) + std::log1p(-x_te));
  return y * y * (x_tm / (1.0 - x_tm) + x_te / (1.0 - x_te));
}

struct Engine {
  double a_m;
  double T_k;
  const MaterialModel* m1;
  const MaterialModel* m2;
  bool same_plates;
  MatsubaraConfig cfg;
  Mode mode;
  double k_scale;  // hbar c / (2a) in eV: k_perp = k_scale sqrt(y^2 - zeta^2)

  // Integral over y on [zeta, zeta + offset] at fixed imaginary frequency.
  double term_at_frequency(double xi_ev, double zeta, double mat_T,
                           double abs_floor) const {
    const PlateCtx c1 = PlateCtx::at_frequency(*m1, xi_ev, mat_T);
    const PlateCtx c2 =
        same_plates ? c1 : PlateCtx::at_frequency(*m2, xi_ev, mat_T);
    auto f = [&](double y) {
      const double dy2 = std::max(y * y - zeta * zeta, 0.0);
      const double kp = k_scale * std::sqrt(dy2);
      const ReflectionPair r1 = c1.reflect(xi_ev, kp, mat_T);
      const ReflectionPair r2 = same_plates ? r1 : c2.reflect(xi_ev, kp, mat_T);
      return pair_integrand(mode, r1, r2, y);
    };
    auto edges = quad::exp_decay_edges(zeta, cfg.y_max_offset);
    auto res = quad::integrate_panels(f, edges, cfg.rel_tol / 10.0, abs_floor);
    return res.value;
  }

  // The l = 0 term, built from the exact zero-frequency limit coefficients.
  double term_zero(double mat_T, double abs_floor) const {
    auto f = [&](double y) {
      const double kp = k_scale * y;
      const ReflectionPair r1 = reflection::zero_freq_coeffs(*m1, kp, mat_T);
      const ReflectionPair r2 =
          same_plates ? r1 : reflection::zero_freq_coeffs(*m2, kp, mat_T);
      return pair_integrand(mode, r1, r2, y);
    };
    auto edges = quad::geometric_edges(1e-6, cfg.y_max_offset);
    auto res = quad::integrate_panels(f, edges, cfg.rel_tol / 10.0, abs_floor);
    return res.value;
  }
};

struct SumOutcome {
  double sum = 0.0;        // includes the halved l = 0 term
  long terms = 0;
  double tail_bound = 0.0;
  bool converged = true;
};

// Matsubara summation. Terms up to l = 64 are evaluated exactly; beyond
// that they are sampled on a geometric index grid and the gaps filled by
// cubic interpolation of log|term| against log l, which is accurate to
// well below rel_tol for these smooth exponentially decaying term
// sequences and keeps low-temperature sums (millions of terms) tractable.
SumOutcome matsubara_sum(const Engine& eng) {
  const MatsubaraConfig& cfg = eng.cfg;
  const double xi1 = matsubara_frequency(1, eng.T_k);
  const double zeta1 = 2.0 * eng.a_m * xi1 / con::hbarc_eV_m;
  const double q = zeta1 < 700.0 ? std::exp(-zeta1) : 0.0;
  const double tail_factor = q < 1.0 ? q / (1.0 - q) : 0.0;

  SumOutcome out;
  quad::KahanSum sum;
  const double I0 = eng.term_zero(eng.T_k, 0.0);
  sum.add(0.5 * I0);
  out.terms = 1;

  auto abs_floor = [&]() {
    return 0.1 * cfg.rel_tol * std::abs(sum.value());
  };
  auto small_enough = [&](double term) {
    return std::abs(term) <= 0.1 * cfg.rel_tol * std::abs(sum.value());
  };

  const long exact_upto = 64;
  int consec_small = 0;
  double last_abs = 0.0;
  std::vector<std::pair<long, double>> recent;  // exact anchors for the stencil

  long l = 1;
  for (; l <= exact_upto && l <= cfg.l_max_cap; ++l) {
    const double xi = matsubara_frequency(l, eng.T_k);
    const double I = eng.term_at_frequency(xi, zeta1 * l, eng.T_k, abs_floor());
    sum.add(I);
    ++out.terms;
    last_abs = std::abs(I);
    consec_small = small_enough(I) ? consec_small + 1 : 0;
    recent.emplace_back(l, I);
    if (recent.size() > 3) recent.erase(recent.begin());
    if (consec_small >= 3 &&
        last_abs * tail_factor <= 0.5 * cfg.rel_tol * std::abs(sum.value())) {
      out.sum = sum.value();
      out.tail_bound = last_abs * tail_factor;
      return out;
    }
  }
  if (l > cfg.l_max_cap) {
    out.sum = sum.value();
    out.tail_bound = last_abs * tail_factor;
    out.converged = false;
    return out;
  }

  // Sampling phase on a geometric index grid.
  const double ratio = std::pow(2.0, 1.0 / 96.0);
  std::vector<std::pair<long, double>> samples = recent;
  const double sign = samples.back().second < 0.0 ? -1.0 : 1.0;
  bool sign_ok = true;
  for (const auto& s : samples) sign_ok = sign_ok && (s.second * sign > 0.0);

  long prev = exact_upto;
  consec_small = 0;
  bool hit_cap = false;
  while (true) {
    long next = std::max(prev + 1, std::lround(prev * ratio));
    if (next > cfg.l_max_cap) {
      hit_cap = true;
      break;
    }
    const double xi = matsubara_frequency(next, eng.T_k);
    const double I = eng.term_at_frequency(xi, zeta1 * next, eng.T_k, abs_floor());
    samples.emplace_back(next, I);
    sign_ok = sign_ok && (I * sign > 0.0);
    prev = next;
    last_abs = std::abs(I);
    consec_small = small_enough(I) ? consec_small + 1 : 0;
    if (consec_small >= 3 &&
        last_abs * tail_factor <= 0.25 * cfg.rel_tol * std::abs(sum.value()))
      break;
  }

  if (!sign_ok || eng.cfg.force_exact_sum) {
    // Interpolation in log-magnitude needs a fixed sign; fall back to the
    // straight term-by-term sum.
    consec_small = 0;
    for (l = exact_upto + 1; l <= cfg.l_max_cap; ++l) {
      const double xi = matsubara_frequency(l, eng.T_k);
      const double I = eng.term_at_frequency(xi, zeta1 * l, eng.T_k, abs_floor());
      sum.add(I);
      ++out.terms;
      last_abs = std::abs(I);
      consec_small = small_enough(I) ? consec_small + 1 : 0;
      if (consec_small >= 3 &&
          last_abs * tail_factor <= 0.5 * cfg.rel_tol * std::abs(sum.value())) {
        out.sum = sum.value();
        out.tail_bound = last_abs * tail_factor;
        return out;
      }
    }
    out.sum = sum.value();
    out.tail_bound = last_abs * tail_factor;
    out.converged = false;
    return out;
  }

  // Fill: exact samples are added as-is, gaps by cubic interpolation of
  // w = log|I| against t = log l on the 4-point stencil around each gap.
  // Wide gaps are summed by Euler-Maclaurin over the interpolant instead of
  // term by term; the correction terms scale like (zeta_1)^2 per gap and
  // the validation test pins the whole fill against exact summation.
  std::vector<double> ts(samples.size()), ws(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ts[i] = std::log(static_cast<double>(samples[i].first));
    ws[i] = std::log(std::abs(samples[i].second));
  }
  const std::size_t nsamp = samples.size();
  auto stencil_base = [&](std::size_t seg) {
    std::size_t i0 = seg == 0 ? 0 : seg - 1;
    if (i0 + 3 >= nsamp) i0 = nsamp - 4;
    return i0;
  };
  auto w_at = [&](std::size_t i0, double t) {
    double acc = 0.0;
    for (std::size_t j = i0; j < i0 + 4; ++j) {
      double lj = 1.0;
      for (std::size_t k = i0; k < i0 + 4; ++k) {
        if (k == j) continue;
        lj *= (t - ts[k]) / (ts[j] - ts[k]);
      }
      acc += lj * ws[j];
    }
    return acc;
  };
  auto dw_at = [&](std::size_t i0, double t) {
    double acc = 0.0;
    for (std::size_t j = i0; j < i0 + 4; ++j) {
      for (std::size_t m = i0; m < i0 + 4; ++m) {
        if (m == j) continue;
        double prod = 1.0;
        for (std::size_t k = i0; k < i0 + 4; ++k) {
          if (k == j || k == m) continue;
          prod *= (t - ts[k]) / (ts[j] - ts[k]);
        }
        acc += ws[j] * prod / (ts[j] - ts[m]);
      }
    }
    return acc;
  };

  const quad::GaussRule& gl12 = quad::gauss_legendre(12);
  long added = 0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (samples[i].first > exact_upto) {
      sum.add(samples[i].second);
      ++added;
    }
    const long A = samples[i].first, B = samples[i + 1].first;
    const long gap = B - A - 1;
    if (gap <= 0) continue;
    const std::size_t i0 = stencil_base(i);
    if (gap <= 16) {
      for (long m = A + 1; m < B; ++m) {
        sum.add(sign * std::exp(w_at(i0, std::log(static_cast<double>(m)))));
      }
    } else {
      // sum_{m=A+1}^{B-1} g(m) = int_A^B g dx - (g_A + g_B)/2
      //                          + (g'_B - g'_A)/12 + O(g''')
      // with g(x) = sign exp(w(ln x)), g'(x) = g(x) w'(ln x)/x.
      const double tA = ts[i], tB = ts[i + 1];
      const double half = 0.5 * (tB - tA), mid = 0.5 * (tB + tA);
      double integral = 0.0;
      for (int k = 0; k < 12; ++k) {
        const double t = mid + half * gl12.nodes[k];
        integral += half * gl12.weights[k] * std::exp(w_at(i0, t) + t);
      }
      const double gA = std::exp(ws[i]), gB = std::exp(ws[i + 1]);
      const double dA = gA * dw_at(i0, tA) / static_cast<double>(A);
      const double dB = gB * dw_at(i0, tB) / static_cast<double>(B);
      sum.add(sign * (integral - 0.5 * (gA + gB) + (dB - dA) / 12.0));
    }
    added += gap;
  }
  if (samples.back().first > exact_upto) {
    sum.add(samples.back().second);
    ++added;
  }
  out.terms += added;
  out.sum = sum.value();
  out.tail_bound = last_abs * tail_factor;
  out.converged = !hit_cap;
  return out;
}

CasimirResult finite_t(double a_m, double T_k, const MaterialModel& p1,
                       const MaterialModel& p2, const MatsubaraConfig& cfg,
                       Mode mode) {
  if (!(a_m > 0.0)) throw std::domain_error("separation must be positive");
  if (!(T_k > 0.0)) throw std::domain_error("temperature must be positive");
  cfg.validate();
  p1.validate();
  p2.validate();
  Engine eng{a_m, T_k, &p1, &p2, &p1 == &p2, cfg, mode,
             con::hbarc_eV_m / (2.0 * a_m)};
  SumOutcome s = matsubara_sum(eng);
  const double kT = con::k_boltzmann_J_per_K * T_k;
  CasimirResult res;
  res.terms_used = s.terms;
  res.converged = s.converged;
  if (mode == Mode::FreeEnergy) {
    const double pref = kT / (8.0 * con::pi * a_m * a_m);
    res.kind = Quantity::FreeEnergy;
    res.value = pref * s.sum;
    res.truncation_error = pref * s.tail_bound;
  } else {
    const double pref = kT / (8.0 * con::pi * a_m * a_m * a_m);
    res.kind = Quantity::Pressure;
    res.value = -pref * s.sum;
    res.truncation_error = pref * s.tail_bound;
  }
  return res;
}

CasimirResult zero_t(double a_m, const MaterialModel& p1,
                     const MaterialModel& p2, const MatsubaraConfig& cfg,
                     Mode mode, double param_T) {
  if (!(a_m > 0.0)) throw std::domain_error("separation must be positive");
  if (param_T < 0.0) throw std::domain_error("temperature must be >= 0");
  cfg.validate();
  p1.validate();
  p2.validate();
  Engine eng{a_m,  param_T, &p1, &p2, &p1 == &p2, cfg, mode,
             con::hbarc_eV_m / (2.0 * a_m)};
  long outer_evals = 0;
  auto outer = [&](double zeta) {
    ++outer_evals;
    const double xi = zeta * eng.k_scale;
    return eng.term_at_frequency(xi, zeta, param_T, 0.0);
  };
  auto edges = quad::geometric_edges(1e-7, cfg.y_max_offset);
  auto res = quad::integrate_panels(outer, edges, cfg.rel_tol, 0.0);

  const double hc = con::hbarc_J_m;
  const double a3 = a_m * a_m * a_m;
  CasimirResult out;
  out.terms_used = outer_evals;
  out.converged = res.converged;
  if (mode == Mode::FreeEnergy) {
    const double pref = hc / (32.0 * con::pi * con::pi * a3);
    out.kind = Quantity::EnergyZeroT;
    out.value = pref * res.value;
    out.truncation_error = pref * res.error_estimate;
  } else {
    const double pref = hc / (32.0 * con::pi * con::pi * a3 * a_m);
    out.kind = Quantity::ForceZeroT;
    out.value = -pref * res.value;
    out.truncation_error = pref * res.error_estimate;
  }
  return out;
}

}  // namespace

CasimirResult free_energy(double a_m, double temperature_k,
                          const MaterialModel& plate1,
                          const MaterialModel& plate2,
                          const MatsubaraConfig& cfg) {
  return finite_t(a_m, temperature_k, plate1, plate2, cfg, Mode::FreeEnergy);
}

CasimirResult pressure(double a_m, double temperature_k,
                       const MaterialModel& plate1, const MaterialModel& plate2,
                       const MatsubaraConfig& cfg) {
  return finite_t(a_m, temperature_k, plate1, plate2, cfg, Mode::Pressure);
}

CasimirResult energy_zero_t(double a_m, const MaterialModel& plate1,
                            const MaterialModel& plate2,
                            const MatsubaraConfig& cfg,
                            double param_temperature_k) {
  return zero_t(a_m, plate1, plate2, cfg, Mode::FreeEnergy, param_temperature_k);
}

CasimirResult force_zero_t(double a_m, const MaterialModel& plate1,
                           const MaterialModel& plate2,
                           const MatsubaraConfig& cfg,
                           double param_temperature_k) {
  return zero_t(a_m, plate1, plate2, cfg, Mode::Pressure, param_temperature_k);
}

}  // namespace casimir::lifshitz
