#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/material_library.hpp"
#include "casimir/optics.hpp"
#include "casimir/reflection.hpp"

using namespace casimir::optics;
using namespace casimir::materials;
namespace con = casimir::constants;

namespace {

// Synthetic table of the exact Drude loss function Im eps = wp^2 g / (w (w^2+g^2)).
OpticalDataTable drude_table(double wp, double g, double lo = 1e-3,
                             double hi = 1e3, int per_decade = 60) {
  OpticalDataTable t;
  const int n = static_cast<int>(per_decade * std::log10(hi / lo)) + 1;
  for (int i = 0; i < n; ++i) {
    const double w = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    t.omega_ev.push_back(w);
    t.im_eps.push_back(wp * wp * g / (w * (w * w + g * g)));
  }
  return t;
}

OpticalDataTable zero_table() {
  OpticalDataTable t;
  for (int i = 0; i < 30; ++i) {
    t.omega_ev.push_back(0.1 * std::pow(10.0, i / 9.0));
    t.im_eps.push_back(0.0);
  }
  return t;
}

}  // namespace

TEST_CASE("Drude-mode transform reproduces the analytic permittivity") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  for (double xi = 0.1; xi <= 10.0; xi *= 1.5) {
    const double exact = 1.0 + 81.0 / (xi * (xi + 0.035));
    CHECK(kk_to_imag_axis(table, ext, xi) ==
          doctest::Approx(exact).epsilon(5e-3));
  }
}

TEST_CASE("plasma mode with an empty core is the free-electron term") {
  auto table = zero_table();
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Plasma, 9.0, 0.0};
  const double xi1 = casimir::lifshitz::matsubara_frequency(1, 300.0);
  CHECK(kk_to_imag_axis(table, ext, xi1) ==
        doctest::Approx(1.0 + 81.0 / (xi1 * xi1)).epsilon(1e-12));
  // transform kernel dies off at high frequency
  CHECK(kk_to_imag_axis(table, ext, 1e4) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("transform output is >= 1 and decreasing in xi") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  double prev = 1e300;
  for (double xi = 1e-3; xi < 1e3; xi *= 1.9) {
    const double e = kk_to_imag_axis(table, ext, xi);
    CHECK(e >= 1.0);
    CHECK(e <= prev);
    prev = e;
  }
}

TEST_CASE("transform is linear in the table") {
  auto a = drude_table(9.0, 0.035);
  auto b = a;
  for (auto& v : b.im_eps) v *= 0.37;
  auto sum = a;
  for (std::size_t i = 0; i < sum.im_eps.size(); ++i)
    sum.im_eps[i] = a.im_eps[i] + b.im_eps[i];
  // use plasma mode so no analytic low tail enters the comparison
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Plasma, 9.0, 0.0};
  const double xi = 0.3;
  const double chi_a = kk_to_imag_axis(a, ext, xi) - (1.0 + 81.0 / (xi * xi));
  const double chi_b = kk_to_imag_axis(b, ext, xi) - (1.0 + 81.0 / (xi * xi));
  const double chi_s = kk_to_imag_axis(sum, ext, xi) - (1.0 + 81.0 / (xi * xi));
  CHECK(chi_s == doctest::Approx(chi_a + chi_b).epsilon(1e-12));
}

TEST_CASE("doubling the sampling density moves the result by < 0.1%") {
  auto coarse = drude_table(9.0, 0.035, 1e-3, 1e3, 40);
  auto fine = drude_table(9.0, 0.035, 1e-3, 1e3, 80);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  for (double xi : {0.1, 1.0, 5.0}) {
    CHECK(kk_to_imag_axis(coarse, ext, xi) ==
          doctest::Approx(kk_to_imag_axis(fine, ext, xi)).epsilon(1e-3));
  }
}

TEST_CASE("build_material carries the right zero-frequency limits") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec drude{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  auto m = build_material(table, drude, 300.0, 60);
  auto r = casimir::reflection::zero_freq_coeffs(m, 0.5, 300.0);
  CHECK(r.r_tm == 1.0);
  CHECK(r.r_te == 0.0);

  ExtrapolationSpec plasma{ExtrapolationSpec::Mode::Plasma, 9.0, 0.0};
  auto mp = build_material(zero_table(), plasma, 300.0, 60);
  auto rp = casimir::reflection::zero_freq_coeffs(mp, 9.0, 300.0);
  CHECK(rp.r_te == doctest::Approx(-0.171572875253810).epsilon(1e-12));

  // interpolant between and beyond the cached Matsubara nodes
  const double xi1 = casimir::lifshitz::matsubara_frequency(1, 300.0);
  CHECK(eps_imag_freq(m, 1.37 * xi1, 300.0) ==
        doctest::Approx(1.0 + 81.0 / (1.37 * xi1 * (1.37 * xi1 + 0.035)))
            .epsilon(5e-3));
  CHECK(eps_imag_freq(m, 0.1 * xi1, 300.0) ==
        doctest::Approx(1.0 + 81.0 / (0.1 * xi1 * (0.1 * xi1 + 0.035)))
            .epsilon(5e-3));
}

TEST_CASE("cache files round-trip and are byte-stable") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  const std::string path = "test_eps.cache";
  write_cache(path, table, ext, 300.0, 40);
  auto m = material_from_cache(path);
  auto direct = build_material(table, ext, 300.0, 40);
  for (double xi : {0.2, 0.5, 2.0}) {
    CHECK(eps_imag_freq(m, xi, 300.0) ==
          doctest::Approx(eps_imag_freq(direct, xi, 300.0)).epsilon(1e-12));
  }

  std::ifstream f1(path);
  std::stringstream s1;
  s1 << f1.rdbuf();
  write_cache(path, table, ext, 300.0, 40);
  std::ifstream f2(path);
  std::stringstream s2;
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().find("# digest") != std::string::npos);
  std::remove(path.c_str());

  CHECK(ingestion_digest(table, ext, 300.0, 40) !=
        ingestion_digest(table, ext, 301.0, 40));
}

TEST_CASE("table parsing accepts both conventions and names bad lines") {
  std::istringstream two(R"(# omega  im_eps
0.10 1.0
0.15 0.9
0.22 0.8
0.33 0.7
0.47 0.6
0.68 0.5
1.00 0.45
1.50 0.40
2.20 0.35
3.30 0.30
4.70 0.26
6.80 0.22
10.0 0.20
15.0 0.17
22.0 0.15
33.0 0.12
47.0 0.10
68.0 0.08
100.0 0.06
150.0 0.04
)");
  auto t = load_table(two);
  CHECK(t.omega_ev.size() == 20);
  CHECK(t.im_eps[0] == 1.0);

  std::istringstream triple("1.0 1.5 0.2\n");
  CHECK_THROWS_WITH_AS(load_table(triple), doctest::Contains("20 rows"),
                       std::invalid_argument);

  // (omega, n, k) triples: Im eps = 2 n k
  std::ostringstream nk_text;
  for (int i = 0; i < 24; ++i)
    nk_text << 0.1 * std::pow(10.0, i / 9.0) << " 1.5 0.25\n";
  std::istringstream nk(nk_text.str());
  auto tnk = load_table(nk);
  CHECK(tnk.im_eps[0] == doctest::Approx(2.0 * 1.5 * 0.25).epsilon(1e-15));

  std::istringstream neg("0.5 -1.0\n");
  CHECK_THROWS_WITH_AS(load_table(neg), doctest::Contains("line 1"),
                       std::invalid_argument);
  std::istringstream unsorted("0.5 1.0\n0.4 1.0\n");
  CHECK_THROWS_WITH_AS(load_table(unsorted), doctest::Contains("line 2"),
                       std::invalid_argument);
  std::istringstream junk("0.5 abc\n");
  CHECK_THROWS_WITH_AS(load_table(junk), doctest::Contains("line 1"),
                       std::invalid_argument);
}

TEST_CASE("transform guards") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  CHECK_THROWS_AS(kk_to_imag_axis(table, ext, 1e-7), std::domain_error);
  ExtrapolationSpec bad{ExtrapolationSpec::Mode::Drude, 9.0, 0.0};
  CHECK_THROWS_AS(kk_to_imag_axis(table, bad, 0.5), std::invalid_argument);
  OpticalDataTable narrow;
  for (int i = 0; i < 25; ++i) {
    narrow.omega_ev.push_back(1.0 + 0.1 * i);
    narrow.im_eps.push_back(1.0);
  }
  CHECK_THROWS_AS(kk_to_imag_axis(narrow, ext, 0.5), std::invalid_argument);
}

TEST_CASE("engine round trip: tabulated Drude matches the analytic model") {
  auto table = drude_table(9.0, 0.035);
  ExtrapolationSpec ext{ExtrapolationSpec::Mode::Drude, 9.0, 0.035};
  auto tab = build_material(table, ext, 300.0, 80);
  auto analytic = casimir::material_library::builtin("drude:au");
  casimir::lifshitz::MatsubaraConfig cfg;
  auto pt = casimir::lifshitz::pressure(0.5e-6, 300.0, tab, tab, cfg);
  auto pa = casimir::lifshitz::pressure(0.5e-6, 300.0, analytic, analytic, cfg);
  CHECK(pt.value == doctest::Approx(pa.value).epsilon(5e-3));
}
