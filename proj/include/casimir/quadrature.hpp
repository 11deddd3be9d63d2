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

#include <functional>
#include <span>
#include <vector>

namespace casimir::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point Gauss-Legendre rule (cached, computed by Newton
/// iteration on the Legendre recurrence).
const GaussRule& gauss_legendre(int n);

/// Result of an adaptive integration.
struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// Integrates f over the fixed panel decomposition given by `edges`,
/// doubling the number of panels until two successive composite
/// Gauss-Legendre estimates agree to rel_tol (or abs_floor for results
/// near zero). Panels are bisected uniformly at each refinement level.
IntegralResult integrate_panels(const std::function<double(double)>& f,
                                std::span<const double> edges, double rel_tol,
                                double abs_floor = 0.0, int points_per_panel = 12,
                                int max_refinements = 8);

/// Convenience: panel edges suited to an integrand that decays like
/// exp(-y) on [y0, y0 + span]. Panel widths grow with distance from y0.
std::vector<double> exp_decay_edges(double y0, double span);

/// Edges for [0, span] with geometric refinement toward 0 down to
/// `first_edge`, for integrands with structure concentrated near the origin.
std::vector<double> geometric_edges(double first_edge, double span);

/// Kahan compensated accumulator for long sums.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace casimir::quadrature
