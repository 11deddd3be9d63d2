#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/material_library.hpp"
#include "casimir/oracles.hpp"
#include "casimir/thermo.hpp"

using namespace casimir::thermo;
using namespace casimir::materials;
namespace con = casimir::constants;
namespace lib = casimir::material_library;
using casimir::lifshitz::MatsubaraConfig;

namespace {
MatsubaraConfig cfg() {
  MatsubaraConfig c;
  c.rel_tol = 1e-9;
  return c;
}
}  // namespace

TEST_CASE("classical entropy of ideal-metal and Drude plates") {
  const double a = 6e-6;
  auto im = lib::builtin("ideal-metal");
  auto s = entropy(a, 300.0, im, im, cfg());
  const double classical =
      con::k_boltzmann_J_per_K * con::zeta3 / (8.0 * con::pi * a * a);
  CHECK(s.reliable);
  CHECK(s.entropy_J_per_m2K == doctest::Approx(classical).epsilon(5e-3));

  auto au = lib::builtin("drude:au");
  auto sd = entropy(a, 300.0, au, au, cfg());
  CHECK(sd.entropy_J_per_m2K == doctest::Approx(classical / 2.0).epsilon(0.01));
}

TEST_CASE("plasma entropy matches the low-temperature expansion") {
  const double a = 1e-6;
  auto p = lib::builtin("plasma:au");
  auto s = entropy(a, 10.0, p, p, cfg());
  auto oracle = casimir::oracles::metal_entropy_asymptotics(
      casimir::oracles::MetalEntropyKind::PlasmaLowT, a, 10.0, {9.0});
  CHECK(s.reliable);
  CHECK(s.entropy_J_per_m2K == doctest::Approx(oracle.total).epsilon(0.05));
}

TEST_CASE("ideal-metal entropy decays toward zero temperature") {
  auto im = lib::builtin("ideal-metal");
  MatsubaraConfig c = cfg();
  c.l_max_cap = 10000000;
  const double s1 = entropy(1e-6, 1.0, im, im, c).entropy_J_per_m2K;
  const double s10 = entropy(1e-6, 10.0, im, im, c).entropy_J_per_m2K;
  CHECK(std::abs(s1) < 0.05 * std::abs(s10));
}

TEST_CASE("entropy error estimates behave") {
  auto im = lib::builtin("ideal-metal");
  auto s = entropy(1e-6, 300.0, im, im, cfg());
  CHECK(s.fd_step_k == doctest::Approx(0.3));
  CHECK(s.fd_error_estimate <
        0.01 * std::max(std::abs(s.entropy_J_per_m2K), 1e-300));
}

TEST_CASE("thermal corrections at the quoted anchors") {
  auto p = lib::builtin("plasma:au");
  // plasma: +0.058% at 500 nm, +0.29% at 1 um (within the anchor bands)
  const double c500 =
      thermal_correction(0.5e-6, 300.0, p, p, cfg(), CorrectionConvention::AtT);
  CHECK(c500 == doctest::Approx(0.00058).epsilon(0.35));
  CHECK(c500 > 0.0);
  const double c1000 =
      thermal_correction(1e-6, 300.0, p, p, cfg(), CorrectionConvention::AtT);
  CHECK(c1000 == doctest::Approx(0.0029).epsilon(0.2));

  auto au = lib::builtin("drude:au");
  const double d500 =
      thermal_correction(0.5e-6, 300.0, au, au, cfg(), CorrectionConvention::AtT);
  CHECK(d500 == doctest::Approx(-0.064).epsilon(0.08));
}

TEST_CASE("correction conventions agree to first order when small") {
  auto p = lib::builtin("plasma:au");
  const double at_t =
      thermal_correction(0.5e-6, 300.0, p, p, cfg(), CorrectionConvention::AtT);
  const double at_0 = thermal_correction(0.5e-6, 300.0, p, p, cfg(),
                                         CorrectionConvention::AtZero);
  CHECK(std::abs(at_t) < 0.01);
  CHECK(at_t == doctest::Approx(at_0).epsilon(0.01));
}

TEST_CASE("nernst scan: plasma satisfied, Drude and conducting dielectric violated") {
  const double a = 1e-6;
  MatsubaraConfig c = cfg();
  c.l_max_cap = 10000000;

  SUBCASE("plasma") {
    auto p = lib::builtin("plasma:au");
    auto grid = log_grid_descending(30.0, 0.3, 7);
    auto rep = nernst_scan(a, p, p, grid, c);
    CHECK(rep.verdict == NernstVerdict::Satisfied);
    CHECK(rep.fitted_exponent == doctest::Approx(2.0).epsilon(0.1));
    CHECK(std::abs(rep.limit_estimate) < rep.threshold);
  }

  SUBCASE("Drude perfect lattice") {
    auto d = lib::builtin("drude:au-perfect");
    auto grid = log_grid_descending(30.0, 0.3, 7);
    auto rep = nernst_scan(a, d, d, grid, c);
    CHECK(rep.verdict == NernstVerdict::Violated);
    auto oracle = casimir::oracles::metal_entropy_asymptotics(
        casimir::oracles::MetalEntropyKind::DrudeT0Integral, a, 0.0, {9.0});
    CHECK(rep.limit_estimate == doctest::Approx(oracle.total).epsilon(0.02));
    CHECK(rep.limit_estimate < 0.0);

    // the Drude-plasma entropy difference tends to the same constant
    auto p = lib::builtin("plasma:au");
    const double sd = entropy(a, 0.5, d, d, c).entropy_J_per_m2K;
    const double sp = entropy(a, 0.5, p, p, c).entropy_J_per_m2K;
    CHECK(sd - sp == doctest::Approx(oracle.total).epsilon(0.02));
  }

  SUBCASE("real dielectric") {
    auto rd = lib::builtin("real-dielectric:silica");
    auto grid = log_grid_descending(30.0, 0.3, 7);
    auto rep = nernst_scan(a, rd, rd, grid, c);
    CHECK(rep.verdict == NernstVerdict::Violated);
    auto osc = std::get<RealDielectric>(rd.response).osc;
    auto oracle = casimir::oracles::dielectric_entropy_asymptotics(
        casimir::oracles::DielectricEntropyKind::RealT0, a, 0.0, osc);
    CHECK(rep.limit_estimate == doctest::Approx(oracle.total).epsilon(0.02));
    CHECK(rep.limit_estimate > 0.0);
  }
}

TEST_CASE("scan input validation") {
  auto p = lib::builtin("plasma:au");
  CHECK_THROWS_AS(nernst_scan(1e-6, p, p, {3, 2, 1}, cfg()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      nernst_scan(1e-6, p, p, {32, 16, 8, 4, 2, 1}, cfg()),  // < 2 decades
      std::invalid_argument);
  CHECK_THROWS_AS(log_grid_descending(1.0, 2.0, 8), std::invalid_argument);
}
