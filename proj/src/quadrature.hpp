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

#ifndef GEOSECT_QUADRATURE_HPP_
#define GEOSECT_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace geosect {

// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Computes the rule by Newton iteration on the Legendre polynomial.
GaussRule gauss_legendre(int m);

// Adaptive Gauss-Legendre integration of f over [a, b] to an absolute
// tolerance.  Bisects intervals whose two-level estimates disagree; throws
// numeric_error if the recursion depth limit is hit before convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace geosect

#endif  // GEOSECT_QUADRATURE_HPP_
