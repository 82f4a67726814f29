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

#ifndef GEOSECT_SPECFUN_HPP_
#define GEOSECT_SPECFUN_HPP_

namespace geosect {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Value stored as sign (-1, 0, +1) and log of the absolute value.
struct SignedLog {
  double log_abs;
  int sign;
};

// Rising factorial (a)_m = a (a+1) ... (a+m-1); m = 0 gives 1.  A zero
// factor is reported as sign 0.
SignedLog log_pochhammer(double a, long m);

// Zonal polynomial P_ell on S^{n-1}: the ultraspherical polynomial with
// parameter alpha = (n-2)/2, normalized so that P_ell(1) = binom(ell+n-3, ell).
// Evaluated by the three-term recurrence, which lands on this normalization
// directly.
double gegenbauer_eval(int n, int ell, double t);

// tau_k = Gamma(k/2) / (sqrt(pi) Gamma((k-1)/2)), the normalizing constant of
// the weight (1-t^2)^{(k-3)/2} on [-1, 1].
double tau(int k);

// Normalized surface measure of the band {x in S^{n-1} : |x_1| >= threshold}.
double band_measure(int n, double threshold);

// Inverse of band_measure in the threshold: returns T with
// band_measure(n, T) = target.
double band_threshold(int n, double target);

}  // namespace geosect

#endif  // GEOSECT_SPECFUN_HPP_
