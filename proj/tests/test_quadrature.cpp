#include <doctest.h>

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace quad = casimir::quadrature;
namespace con = casimir::constants;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  const auto& rule = quad::gauss_legendre(12);
  double sum_w = 0.0, x2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum_w += rule.weights[i];
    x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("exponential-decay panels reach the requested tolerance") {
  // int_0^inf y e^{-y} dy = 1, truncated at 50 (tail ~ 1e-20)
  auto f = [](double y) { return y * std::exp(-y); };
  auto edges = quad::exp_decay_edges(0.0, 50.0);
  auto res = quad::integrate_panels(f, edges, 1e-12);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mirror-plate integrals reproduce zeta(3) forms") {
  // int_0^inf y ln(1 - e^{-y}) dy = -zeta(3)
  auto f = [](double y) { return y * std::log1p(-std::exp(-y)); };
  auto edges = quad::geometric_edges(1e-6, 60.0);
  auto res = quad::integrate_panels(f, edges, 1e-12);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(-con::zeta3).epsilon(1e-11));

  // int_0^inf y^2 e^{-y}/(1-e^{-y}) dy = 2 zeta(3)
  auto g = [](double y) {
    const double x = std::exp(-y);
    return y * y * x / (1.0 - x);
  };
  auto res2 = quad::integrate_panels(g, edges, 1e-12);
  CHECK(res2.value == doctest::Approx(2.0 * con::zeta3).epsilon(1e-11));
}

TEST_CASE("refinement changes stay below the requested tolerance") {
  auto f = [](double y) { return std::exp(-y) / (1.0 + y * y); };
  auto edges = quad::exp_decay_edges(0.0, 50.0);
  auto loose = quad::integrate_panels(f, edges, 1e-6);
  auto tight = quad::integrate_panels(f, edges, 1e-13);
  CHECK(std::abs(loose.value - tight.value) <=
        1e-6 * std::abs(tight.value));
}
