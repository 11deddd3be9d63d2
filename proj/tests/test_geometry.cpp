#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "casimir/geometry.hpp"

using namespace casimir::geometry;

TEST_CASE("PFA force and gradient") {
  SpherePlate sp{150e-6, 6e-6};
  auto f = pfa_force(sp, -5.503e-12);
  CHECK(f.value == doctest::Approx(-5.186455e-15).epsilon(1e-6));
  CHECK(f.warnings.empty());
  CHECK(pfa_force(sp, 0.0).value == 0.0);

  SpherePlate doubled{300e-6, 6e-6};
  CHECK(pfa_force(doubled, -5.503e-12).value ==
        doctest::Approx(2.0 * f.value).epsilon(1e-14));

  SpherePlate sp1{150e-6, 1e-6};
  auto g = pfa_gradient(sp1, -1.3001e-3);
  CHECK(g.value == doctest::Approx(1.225315e-6).epsilon(1e-5));
  CHECK(g.value > 0.0);
  CHECK(pfa_gradient(sp1, 0.0).value == 0.0);
}

TEST_CASE("beta and roughness correction factors are exact") {
  SpherePlate sp{150e-6, 0.6e-6, -0.40};
  CHECK(beta_corrected_gradient(sp, 1.0) ==
        doctest::Approx(1.0 - 0.40 * 0.6e-6 / 150e-6).epsilon(1e-15));
  sp.beta = 0.0;
  CHECK(beta_corrected_gradient(sp, 1.23) == 1.23);

  // (a/R = 0.004 cases)
  SpherePlate sp2{1e-4, 4e-7, -0.40};
  CHECK(beta_corrected_gradient(sp2, 1.0) == doctest::Approx(0.9984).epsilon(1e-12));
  sp2.beta = -0.55;
  CHECK(beta_corrected_gradient(sp2, 1.0) == doctest::Approx(0.9978).epsilon(1e-12));

  // roughness: (d1^2+d2^2)/a^2 = 0.01 and 0.001
  SpherePlate r1{150e-6, 1e-6, 0.0, 0.1e-6, 0.0};
  CHECK(roughness_corrected_gradient(r1, 1.0).value ==
        doctest::Approx(1.1105).epsilon(1e-12));
  SpherePlate r2{150e-6, 1e-6, 0.0, std::sqrt(0.001) * 1e-6, 0.0};
  CHECK(roughness_corrected_gradient(r2, 1.0).value ==
        doctest::Approx(1.010105).epsilon(1e-9));
  SpherePlate r0{150e-6, 1e-6};
  CHECK(roughness_corrected_gradient(r0, 1.0).value == 1.0);
}

TEST_CASE("corrections are multiplicative and commute") {
  SpherePlate sp{150e-6, 0.5e-6, -0.45, 4e-9, 3e-9};
  const double g = 2.5e-6;
  const double ab = roughness_corrected_gradient(sp, beta_corrected_gradient(sp, g)).value;
  const double ba = beta_corrected_gradient(sp, roughness_corrected_gradient(sp, g).value);
  CHECK(ab == doctest::Approx(ba).epsilon(1e-15));

  // roughness factor never shrinks, negative beta always shrinks
  CHECK(roughness_corrected_gradient(sp, g).value >= g);
  CHECK(beta_corrected_gradient(sp, g) < g);
}

TEST_CASE("regime warnings") {
  SpherePlate tight{10e-6, 2e-6};  // a/R = 0.2
  CHECK_FALSE(pfa_force(tight, -1.0).warnings.empty());
  SpherePlate rough{150e-6, 1e-6, 0.0, 0.5e-6, 0.0};  // delta ~ a/2
  CHECK_FALSE(roughness_corrected_gradient(rough, 1.0).warnings.empty());
  SpherePlate bad{0.0, 1e-6};
  CHECK_THROWS_AS(pfa_force(bad, -1.0), std::invalid_argument);
}
