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

#include "casimir/oracles.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::oracles {

namespace con = casimir::constants;

namespace {

// The oracles deliberately carry their own integrator (adaptive Simpson)
// so that they stay an independent route from the Gauss-Legendre engine
// they are used to cross-check.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h = b - a;
  const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

// Semi-infinite integral of an exponentially decaying integrand: a fixed
// far cutoff plus adaptive Simpson on log-progressive segments.
double integrate_decay(const std::function<double(double)>& f, double tol) {
  double total = 0.0;
  double lo = 0.0;
  for (double hi : {1.0, 3.0, 8.0, 20.0, 45.0, 90.0}) {
    total += simpson(f, lo, hi, tol);
    lo = hi;
  }
  return total;
}

// TE reflection coefficient of the plasma model at zero frequency in the
// dimensionless variable u = 2 a k_perp, with x = 2 a omega_p / (hbar c).
double rte0_plasma_u(double u, double x) {
  const double s = std::sqrt(u * u + x * x);
  return (u - s) / (u + s);
}

double li3_series(double x) {
  double term = x, sum = 0.0;
  for (int n = 1; n < 2000; ++n) {
    const double add = term / (static_cast<double>(n) * n * n);
    sum += add;
    term *= x;
    if (add < 1e-17 * sum) break;
  }
  return sum;
}

// Li3(e^z) for small |z| via the zeta-series expansion around z = 0,
// valid for |z| < 2 pi. Used on [0.5, 1] where the power series is slow.
double li3_log_branch(double x) {
  const double z = std::log(x);
  const double zeta2 = con::pi * con::pi / 6.0;
  // zeta(3 - k) for k = 3, 4, ...: zeta(0), zeta(-1), zeta(-2), ...
  static constexpr double zeta_neg[] = {
      -0.5,          // zeta(0)
      -1.0 / 12.0,   // zeta(-1)
      0.0,           // zeta(-2)
      1.0 / 120.0,   // zeta(-3)
      0.0,
      -1.0 / 252.0,  // zeta(-5)
      0.0,
      1.0 / 240.0,   // zeta(-7)
      0.0,
      -1.0 / 132.0,  // zeta(-9)
      0.0,
      691.0 / 32760.0,  // zeta(-11)
      0.0,
      -1.0 / 12.0,      // zeta(-13)
  };
  double sum = con::zeta3 + zeta2 * z;
  if (z != 0.0) sum += 0.5 * z * z * (1.5 - std::log(-z));
  double zk = z * z * z;  // z^3
  double kfact = 6.0;     // 3!
  for (std::size_t i = 0; i < sizeof(zeta_neg) / sizeof(zeta_neg[0]); ++i) {
    sum += zeta_neg[i] * zk / kfact;
    zk *= z;
    kfact *= static_cast<double>(i + 4);
  }
  return sum;
}

}  // namespace

double polylog3(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("polylog3 is defined here on [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return con::zeta3;
  return x < 0.5 ? li3_series(x) : li3_log_branch(x);
}

ClassicalLimit classical_limit(ClassicalKind kind, double a_m,
                               double temperature_k, const ClassicalAux& aux) {
  if (!(a_m > 0.0) || !(temperature_k > 0.0))
    throw std::domain_error("classical_limit requires a > 0, T > 0");
  const double kT = con::k_boltzmann_J_per_K * temperature_k;
  const double f_im = -kT * con::zeta3 / (8.0 * con::pi * a_m * a_m);
  const double p_im = -kT * con::zeta3 / (4.0 * con::pi * a_m * a_m * a_m);
  switch (kind) {
    case ClassicalKind::IdealMetal:
      return {f_im, p_im};
    case ClassicalKind::Drude:
    case ClassicalKind::RealDielectric:
      return {0.5 * f_im, 0.5 * p_im};
    case ClassicalKind::Plasma: {
      if (!(aux.omega_p_ev > 0.0))
        throw std::invalid_argument("plasma limit needs aux.omega_p_ev");
      const double x = 2.0 * a_m * aux.omega_p_ev / con::hbarc_eV_m;
      auto fi = [&](double u) {
        if (u <= 0.0) return 0.0;  // u ln u -> 0 endpoint
        const double r = rte0_plasma_u(u, x);
        return u * std::log1p(-r * r * std::exp(-u));
      };
      auto pi_ = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double w = rte0_plasma_u(u, x);
        const double xx = w * w * std::exp(-u);
        return u * u * xx / (1.0 - xx);
      };
      const double If = integrate_decay(fi, 1e-14);
      const double Ip = integrate_decay(pi_, 1e-14);
      return {0.5 * f_im + kT / (16.0 * con::pi * a_m * a_m) * If,
              0.5 * p_im - kT / (16.0 * con::pi * a_m * a_m * a_m) * Ip};
    }
    case ClassicalKind::IdealDielectric: {
      if (!(aux.eps0 >= 1.0))
        throw std::invalid_argument("ideal-dielectric limit needs aux.eps0");
      const double r0 = (aux.eps0 - 1.0) / (aux.eps0 + 1.0);
      const double li = polylog3(r0 * r0);
      return {0.5 * f_im * li / con::zeta3, 0.5 * p_im * li / con::zeta3};
    }
  }
  throw std::logic_error("unreachable");
}

EntropyExpansion metal_entropy_asymptotics(MetalEntropyKind kind, double a_m,
                                           double temperature_k,
                                           const MetalEntropyParams& params) {
  if (!(a_m > 0.0)) throw std::domain_error("separation must be positive");
  EntropyExpansion out;
  const double kB = con::k_boltzmann_J_per_K;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double d0_over_a =
      params.omega_p_ev > 0.0 ? con::hbarc_eV_m / (params.omega_p_ev * a_m) : 0.0;

  switch (kind) {
    case MetalEntropyKind::PlasmaLowT: {
      if (temperature_k < 0.0) throw std::domain_error("T must be >= 0");
      const double T = temperature_k;
      const double akT = a_m * kB * T / con::hbarc_J_m;
      // kB^3 T^2 / (pi hbar^2 c^2); hbar^2 c^2 = (hbar c)^2
      const double pref =
          kB * kB * kB * T * T / (con::pi * con::hbarc_J_m * con::hbarc_J_m);
      const double pi3 = con::pi * con::pi * con::pi;
      const double lead = pref * 1.5 * con::zeta3 * (1.0 + 2.0 * d0_over_a);
      const double next =
          -pref * (4.0 * pi3 * akT / 45.0) * (1.0 + 4.0 * d0_over_a);
      const double quart = -pref * d0_over_a * d0_over_a * 20.0 * con::zeta5 *
                           akT * akT;
      out.leading_value = lead;
      out.leading_power = 2.0;
      out.next_term = next;
      out.total = lead + next + quart;
      out.leading_sign = +1;
      if (d0_over_a >= 0.2) out.warning = "delta0/a >= 0.2: expansion degraded";
      return out;
    }
    case MetalEntropyKind::DrudeT0Integral: {
      if (!(params.omega_p_ev > 0.0))
        throw std::invalid_argument("needs omega_p");
      const double x = 2.0 * a_m * params.omega_p_ev / con::hbarc_eV_m;
      auto f = [&](double u) {
        if (u <= 0.0) return 0.0;  // u ln u -> 0 endpoint
        const double r = rte0_plasma_u(u, x);
        return u * std::log1p(-r * r * std::exp(-u));
      };
      const double I = integrate_decay(f, 1e-14);
      out.leading_value = kB / (16.0 * con::pi * a_m * a_m) * I;
      out.leading_power = 0.0;
      out.next_term = 0.0;
      out.total = out.leading_value;
      out.leading_sign = -1;
      return out;
    }
    case MetalEntropyKind::DrudeT0Series: {
      if (!(params.omega_p_ev > 0.0))
        throw std::invalid_argument("needs omega_p");
      const double base = -kB * con::zeta3 / (16.0 * con::pi * a_m * a_m);
      out.leading_value = base;
      out.leading_power = 0.0;
      out.next_term = base * (-4.0 * d0_over_a + 12.0 * d0_over_a * d0_over_a);
      out.total = out.leading_value + out.next_term;
      out.leading_sign = -1;
      if (d0_over_a >= 0.2) out.warning = "delta0/a >= 0.2: expansion degraded";
      return out;
    }
    case MetalEntropyKind::DrudeImpurity:
      out.leading_value = nan;
      out.next_term = nan;
      out.total = nan;
      out.leading_power = 1.0;
      out.leading_sign = -1;
      return out;
    case MetalEntropyKind::NonlocalPerfect:
      out.leading_value = nan;
      out.next_term = nan;
      out.total = nan;
      out.leading_power = 0.5;
      out.leading_sign = 0;
      return out;
    case MetalEntropyKind::NonlocalImpurity:
      out.leading_value = nan;
      out.next_term = nan;
      out.total = nan;
      out.leading_power = 1.0;
      out.leading_sign = 0;
      return out;
  }
  throw std::logic_error("unreachable");
}

EntropyExpansion dielectric_entropy_asymptotics(
    DielectricEntropyKind kind, double a_m, double temperature_k,
    const materials::OscillatorSet& osc) {
  if (!(a_m > 0.0)) throw std::domain_error("separation must be positive");
  const double kB = con::k_boltzmann_J_per_K;
  const double eps0 = osc.eps_static();
  const double r0 = (eps0 - 1.0) / (eps0 + 1.0);
  const double li = polylog3(r0 * r0);
  EntropyExpansion out;
  switch (kind) {
    case DielectricEntropyKind::IdealLowT: {
      if (temperature_k < 0.0) throw std::domain_error("T must be >= 0");
      // G = c sum_j g_j gamma_j / omega_j^4, a length.
      double s = 0.0;
      for (const auto& o : osc.oscillators) {
        const double w2 = o.omega_ev * o.omega_ev;
        s += o.g_ev2 * o.gamma_ev / (w2 * w2);
      }
      const double G = con::c_m_per_s * s / con::radps_per_eV;
      const double pref =
          kB * kB * temperature_k / (2.0 * con::hbarc_J_m * a_m * a_m);
      const double lead = pref * G * li / (3.0 * (eps0 * eps0 - 1.0));
      const double next = pref * 3.0 * con::zeta3 * r0 * r0 *
                          (eps0 * eps0 + 1.0) / (2.0 * con::pi) *
                          (a_m * a_m * kB * temperature_k / con::hbarc_J_m);
      out.leading_value = lead;
      out.leading_power = G > 0.0 ? 1.0 : 2.0;
      out.next_term = next;
      out.total = lead + next;
      out.leading_sign = +1;
      return out;
    }
    case DielectricEntropyKind::RealT0: {
      out.leading_value =
          kB / (16.0 * con::pi * a_m * a_m) * (con::zeta3 - li);
      out.leading_power = 0.0;
      out.next_term = 0.0;
      out.total = out.leading_value;
      out.leading_sign = +1;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

double casimir_polder_entropy_t0(double a_m, double alpha0_m3, double eps0) {
  if (!(a_m > 0.0) || !(alpha0_m3 > 0.0) || !(eps0 >= 1.0))
    throw std::domain_error("casimir_polder_entropy_t0: bad arguments");
  const double r0 = (eps0 - 1.0) / (eps0 + 1.0);
  return con::k_boltzmann_J_per_K * alpha0_m3 / (4.0 * a_m * a_m * a_m) *
         (1.0 - r0);
}

}  // namespace casimir::oracles
