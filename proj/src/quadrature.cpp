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

#include "casimir/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::quadrature {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double composite(const std::function<double(double)>& f,
                 std::span<const double> edges, int per_panel,
                 int splits_per_panel, long* evals) {
  const GaussRule& rule = gauss_legendre(per_panel);
  KahanSum acc;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double width = (edges[p + 1] - edges[p]) / splits_per_panel;
    const double half = 0.5 * width;
    for (int s = 0; s < splits_per_panel; ++s) {
      const double mid = edges[p] + s * width + half;
      for (int i = 0; i < per_panel; ++i) {
        acc.add(half * rule.weights[i] * f(mid + half * rule.nodes[i]));
      }
      *evals += per_panel;
    }
  }
  return acc.value();
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 512) throw std::invalid_argument("gauss_legendre: bad order");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

IntegralResult integrate_panels(const std::function<double(double)>& f,
                                std::span<const double> edges, double rel_tol,
                                double abs_floor, int points_per_panel,
                                int max_refinements) {
  if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 edges");
  IntegralResult res;
  double prev = composite(f, edges, points_per_panel, 1, &res.evaluations);
  int splits = 2;
  for (int level = 0; level < max_refinements; ++level, splits *= 2) {
    double cur = composite(f, edges, points_per_panel, splits, &res.evaluations);
    double err = std::abs(cur - prev);
    res.value = cur;
    res.error_estimate = err;
    if (err <= rel_tol * std::abs(cur) || err <= abs_floor) return res;
    prev = cur;
  }
  res.converged = false;
  return res;
}

std::vector<double> exp_decay_edges(double y0, double span) {
  static constexpr double offsets[] = {0.0, 0.5, 1.5, 3.0, 6.0, 10.0,
                                       16.0, 24.0, 34.0, 46.0};
  std::vector<double> edges;
  for (double off : offsets) {
    if (off >= span) break;
    edges.push_back(y0 + off);
  }
  edges.push_back(y0 + span);
  return edges;
}

std::vector<double> geometric_edges(double first_edge, double span) {
  std::vector<double> edges{0.0};
  for (double e = first_edge; e < 1.0 && e < span; e *= 10.0) edges.push_back(e);
  for (double off : {1.0, 2.0, 4.0, 7.0, 11.0, 16.0, 24.0, 34.0, 46.0}) {
    if (off >= span) break;
    if (off > edges.back()) edges.push_back(off);
  }
  edges.push_back(span);
  return edges;
}

}  // namespace casimir::quadrature
