// Copyright 2026 The Geosect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quadrature.hpp"

#include <cmath>

#include "errors.hpp"

namespace geosect {

GaussRule gauss_legendre(int m) {
  GaussRule rule;
  rule.x.resize(m);
  rule.w.resize(m);
  // Nodes come in +/- pairs; solve for the nonnegative half.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < m; ++j) {
        double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[m - 1 - i] = x;
    rule.x[i] = -x;
    rule.w[m - 1 - i] = w;
    rule.w[i] = w;
  }
  if (m % 2 == 1) rule.x[m / 2] = 0.0;
  return rule;
}

namespace {

const GaussRule& rule24() {
  static const GaussRule rule = gauss_legendre(24);
  return rule;
}

double apply_rule(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& r = rule24();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(mid + half * r.x[i]);
  return acc * half;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = apply_rule(f, a, mid);
  const double right = apply_rule(f, mid, b);
  if (std::fabs(left + right - whole) <= tol) return left + right;
  if (depth >= 60) throw numeric_error("integrate: interval subdivision did not converge");
  return integrate_rec(f, a, mid, left, 0.5 * tol, depth + 1) +
         integrate_rec(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(abs_tol > 0)) throw config_error("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  return integrate_rec(f, a, b, apply_rule(f, a, b), abs_tol, 0);
}

}  // namespace geosect
