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

#include "specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "quadrature.hpp"

namespace geosect {

double log_gamma(double x) {
  if (!(x > 0.0)) throw config_error("log_gamma: requires x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

SignedLog log_pochhammer(double a, long m) {
  if (m < 0) throw config_error("log_pochhammer: m must be nonnegative");
  if (m == 0) return {0.0, 1};
  if (a > 0.0) return {log_gamma(a + m) - log_gamma(a), 1};
  // A factor a + j hits zero exactly when a is a nonpositive integer within
  // reach of the product.
  if (a == std::floor(a) && a + (m - 1) >= 0.0)
    return {-std::numeric_limits<double>::infinity(), 0};
  if (a + (m - 1) < 0.0) {
    // All m factors negative: |(a)_m| = (-a-m+1)(-a-m+2)...(-a).
    SignedLog flipped = log_pochhammer(-a - (m - 1), m);
    return {flipped.log_abs, (m % 2 == 0) ? 1 : -1};
  }
  // Product straddles zero: split off the negative factors.
  long j0 = static_cast<long>(std::ceil(-a));
  SignedLog head = log_pochhammer(a, j0);
  SignedLog tail = log_pochhammer(a + j0, m - j0);
  return {head.log_abs + tail.log_abs, head.sign * tail.sign};
}

double gegenbauer_eval(int n, int ell, double t) {
  if (n < 3) throw config_error("gegenbauer_eval: requires n >= 3");
  if (ell < 0 || ell > 100000) throw config_error("gegenbauer_eval: degree out of range");
  if (std::fabs(t) > 1.0 + 1e-12) throw config_error("gegenbauer_eval: requires |t| <= 1");
  t = std::fmin(1.0, std::fmax(-1.0, t));
  const double alpha = 0.5 * (n - 2);
  if (ell == 0) return 1.0;
  double pm1 = 1.0;
  double p = 2.0 * alpha * t;
  for (int j = 2; j <= ell; ++j) {
    double next = (2.0 * t * (j + alpha - 1.0) * p - (j + 2.0 * alpha - 2.0) * pm1) / j;
    pm1 = p;
    p = next;
  }
  return p;
}

double tau(int k) {
  if (k < 2) throw config_error("tau: requires k >= 2");
  return std::exp(log_gamma(0.5 * k) - log_gamma(0.5 * (k - 1)) - 0.5 * std::log(M_PI));
}

double band_measure(int n, double threshold) {
  if (n < 2) throw config_error("band_measure: requires n >= 2");
  if (threshold < 0.0 || threshold > 1.0)
    throw config_error("band_measure: threshold must lie in [0, 1]");
  if (threshold == 0.0) return 1.0;
  if (threshold >= 1.0) return 0.0;
  if (n == 2) return (2.0 / M_PI) * std::acos(threshold);  // weight is singular
  const double expo = 0.5 * (n - 3);
  double integral;
  if (n < 5) {
    // Substitute t = 1 - u^2 so the endpoint derivative stays bounded:
    // (1-t^2)^{expo} dt = (u^2 (2-u^2))^{expo} 2u du.
    integral = integrate(
        [expo](double u) {
          return 2.0 * u * std::pow(u * u * (2.0 - u * u), expo);
        },
        0.0, std::sqrt(1.0 - threshold), 1e-14);
  } else {
    integral = integrate(
        [expo](double t) { return std::pow(1.0 - t * t, expo); }, threshold,
        1.0, 1e-14);
  }
  double value = 2.0 * tau(n) * integral;
  return std::fmin(1.0, std::fmax(0.0, value));
}

double band_threshold(int n, double target) {
  if (!(target > 0.0 && target < 1.0))
    throw config_error("band_threshold: target must lie strictly between 0 and 1");
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (band_measure(n, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  if (std::fabs(band_measure(n, t) - target) > 1e-9)
    throw numeric_error("band_threshold: bisection failed to converge");
  return t;
}

}  // namespace geosect
