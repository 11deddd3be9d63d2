#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

using namespace casimir::reflection;
using namespace casimir::materials;

TEST_CASE("fresnel coefficients at imaginary frequency") {
  // eps = 4, mu = 1, k_perp = 0: q = xi, k = 2 xi
  auto r = fresnel(4.0, 1.0, 1.0, 0.0);
  CHECK(r.r_tm == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.r_te == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  // metallic limit
  auto m = fresnel(1e12, 1.0, 1.0, 1.0);
  CHECK(m.r_tm == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(m.r_te == doctest::Approx(-1.0).epsilon(1e-5));

  // vacuum: no interface
  auto v = fresnel(1.0, 1.0, 0.7, 1.3);
  CHECK(v.r_tm == 0.0);
  CHECK(v.r_te == 0.0);

  CHECK_THROWS_AS(fresnel(4.0, 1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("zero-frequency coefficients per variant") {
  const double T = 300.0;

  auto im = zero_freq_coeffs(MaterialModel::ideal_metal(), 0.5, T);
  CHECK(im.r_tm == 1.0);
  CHECK(im.r_te == -1.0);

  auto d = zero_freq_coeffs(MaterialModel::drude({9.0, 0.035, 0.0, 300.0}), 0.5, T);
  CHECK(d.r_tm == 1.0);
  CHECK(d.r_te == 0.0);

  // plasma at c k_perp = omega_p: r_te = (1 - sqrt(2)) / (1 + sqrt(2))
  auto p = zero_freq_coeffs(MaterialModel::plasma(9.0), 9.0, T);
  CHECK(p.r_tm == 1.0);
  CHECK(p.r_te == doctest::Approx(-0.171572875253810).epsilon(1e-12));

  // ideal-metal limit of the plasma model
  auto pim = zero_freq_coeffs(MaterialModel::plasma(9.0), 9e-7, T);
  CHECK(pim.r_te < -0.9999);

  OscillatorSet osc;
  osc.oscillators.push_back({1.71 * 0.13 * 0.13, 0.13, 0.01});
  osc.oscillators.push_back({1.10 * 13.0 * 13.0, 13.0, 0.5});
  auto id = zero_freq_coeffs(MaterialModel::ideal_dielectric(osc), 0.5, T);
  CHECK(id.r_tm == doctest::Approx((3.81 - 1.0) / (3.81 + 1.0)).epsilon(1e-12));
  CHECK(id.r_te == 0.0);

  auto rd = zero_freq_coeffs(
      MaterialModel::real_dielectric(
          osc, {29.7, 9.0, 300.0, ConductivityLaw::Mode::Activated}),
      0.5, T);
  CHECK(rd.r_tm == 1.0);
  CHECK(rd.r_te == 0.0);

  CHECK_THROWS_AS(zero_freq_coeffs(MaterialModel::ideal_metal(), 0.0, T),
                  std::domain_error);
}

TEST_CASE("nonlocal zero-frequency TE coefficient") {
  NonlocalDrudeParams p{{9.0, 0.035, 0.0, 300.0}, 1.40e6, 1.40e6};
  auto m = MaterialModel::nonlocal_drude(p);

  // k^T_0 = sqrt(kp^2 + wp^2 (v/c) kp / gamma) at hbar c k = 0.19733 eV
  auto r = zero_freq_coeffs(m, 0.19733, 300.0);
  CHECK(r.r_tm == 1.0);
  CHECK(r.r_te == doctest::Approx(-0.763812).epsilon(1e-5));

  // strictly negative for every k_perp > 0, unlike the local Drude model
  auto drude = MaterialModel::drude({9.0, 0.035, 0.0, 300.0});
  for (double kp = 1e-4; kp < 1e2; kp *= 3.0) {
    CHECK(zero_freq_coeffs(m, kp, 300.0).r_te < 0.0);
    CHECK(zero_freq_coeffs(drude, kp, 300.0).r_te == 0.0);
  }
}

TEST_CASE("magnetic zero-frequency limits") {
  auto ni_drude = MaterialModel::drude({4.89, 0.0436, 0.0, 300.0}, 110.0);
  auto r = zero_freq_coeffs(ni_drude, 0.5, 300.0);
  CHECK(r.r_tm == 1.0);
  CHECK(r.r_te == doctest::Approx(109.0 / 111.0).epsilon(1e-12));

  // for the plasma model mu(0) weakens the TE reflection at moderate k_perp
  auto ni_plasma = MaterialModel::plasma(4.89, 110.0);
  auto plain = MaterialModel::plasma(4.89, 1.0);
  const double kp = 0.489;
  CHECK(std::abs(zero_freq_coeffs(ni_plasma, kp, 300.0).r_te) <
        std::abs(zero_freq_coeffs(plain, kp, 300.0).r_te));
}

TEST_CASE("impedance reflection and its local reduction") {
  auto r = impedance_reflection(4.0, 2.0, 1.0, 0.0);
  CHECK(r.r_tm == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.r_te == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  auto v = impedance_reflection(1.0, 1.0, 0.9, 1.1);
  CHECK(v.r_tm == 0.0);
  CHECK(v.r_te == 0.0);

  for (double eps : {1.5, 4.0, 100.0, 2526.76}) {
    for (double xi : {0.05, 0.16243, 2.0}) {
      for (double kp : {0.0, 0.1, 1.0, 10.0}) {
        auto a = impedance_reflection(eps, eps, xi, kp);
        auto b = fresnel(eps, 1.0, xi, kp);
        CHECK(a.r_tm == doctest::Approx(b.r_tm).epsilon(1e-12));
        CHECK(a.r_te == doctest::Approx(b.r_te).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("wave vectors keep their ordering") {
  for (double eps : {1.0, 4.0, 2500.0}) {
    for (double mu : {1.0, 110.0}) {
      for (double xi : {1e-3, 0.16, 3.0}) {
        for (double kp : {0.0, 0.2, 5.0}) {
          auto w = wave_vectors(eps, mu, eps, xi, kp);
          CHECK(w.q >= kp);
          CHECK(w.k >= w.q);    // eps mu >= 1 on the imaginary axis
          CHECK(w.k_t >= kp);
        }
      }
    }
  }
}

TEST_CASE("reflection magnitudes stay bounded by one") {
  NonlocalDrudeParams nl{{9.0, 0.035, 0.0, 300.0}, 1.40e6, 1.40e6};
  for (double xi : {1e-3, 0.16243, 5.0}) {
    for (double kp : {1e-4, 0.1, 1.0, 30.0}) {
      auto f = fresnel(2526.76, 1.0, xi, kp);
      CHECK(std::abs(f.r_tm) <= 1.0);
      CHECK(std::abs(f.r_te) <= 1.0);
      auto [et, el] = eps_nonlocal_imag_freq(nl, xi, kp, 300.0);
      auto i = impedance_reflection(et, el, xi, kp);
      CHECK(std::abs(i.r_tm) <= 1.0);
      CHECK(std::abs(i.r_te) <= 1.0);
    }
  }
}

TEST_CASE("screened TM coefficient") {
  // kappa = 0 reduces to the static dielectric value
  CHECK(screened_rtm0(3.81, 0.0, 0.5) ==
        doctest::Approx((3.81 - 1.0) / (3.81 + 1.0)).epsilon(1e-14));
  // metallic saturation
  CHECK(screened_rtm0(3.81, 1e12, 0.5) == doctest::Approx(1.0).epsilon(1e-10));
  // kappa = k_perp
  CHECK(screened_rtm0(3.81, 0.5, 0.5) ==
        doctest::Approx(0.686920493386784).epsilon(1e-12));

  // monotone in kappa and in eps0
  double prev = 0.0;
  for (double kappa = 0.0; kappa < 10.0; kappa += 0.5) {
    const double v = screened_rtm0(3.81, kappa, 0.5);
    CHECK(v >= prev);
    prev = v;
  }
  prev = 0.0;
  for (double eps0 = 1.0; eps0 < 100.0; eps0 *= 1.7) {
    const double v = screened_rtm0(eps0, 0.3, 0.5);
    CHECK(v >= prev);
    prev = v;
  }
}
