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
//
// Test-side oracles, implemented independently of the library under test:
// Stirling log-gamma instead of lgamma_r, the explicit Gegenbauer sum instead
// of the three-term recurrence, incomplete-beta band measures instead of the
// library quadrature, and brute-force draw enumeration for the ball-drawing
// identity.

#ifndef GEOSECT_TESTS_SUPPORT_ORACLES_HPP_
#define GEOSECT_TESTS_SUPPORT_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

namespace testsupport {

// ln Gamma(x) for x > 0 by the Stirling series after shifting x above 32.
inline long double stirling_log_gamma(long double x) {
  long double shift = 0.0L;
  while (x < 32.0L) {
    shift -= std::log(x);
    x += 1.0L;
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  // B_{2j} / (2j (2j-1)) for j = 1..7.
  long double series = 1.0L / 156.0L;
  series = series * inv2 - 691.0L / 360360.0L;
  series = series * inv2 + 1.0L / 1188.0L;
  series = series * inv2 - 1.0L / 1680.0L;
  series = series * inv2 + 1.0L / 1260.0L;
  series = series * inv2 - 1.0L / 360.0L;
  series = series * inv2 + 1.0L / 12.0L;
  const long double half_log_two_pi = 0.91893853320467274178L;
  return (x - 0.5L) * std::log(x) - x + half_log_two_pi + series * inv +
         shift;
}

// Composite Simpson rule with `intervals` subintervals (rounded up to even).
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

// tau_k as a normalizing constant: 1 / integral_{-pi/2}^{pi/2} cos^{k-2}.
// The substitution t = sin(theta) makes the k = 2 endpoint singularity
// disappear, so plain Simpson converges.
inline double tau_quadrature(int k) {
  const double pi = std::acos(-1.0);
  const auto f = [&](double theta) {
    return std::pow(std::cos(theta), k - 2);
  };
  return 1.0 / simpson(f, -pi / 2, pi / 2, 20000);
}

// Zonal polynomial on S^{n-1} by the explicit alternating sum
//   P_ell(t) = sum_m (-1)^m Gamma(a+ell-m) / (Gamma(a) m! (ell-2m)!)
//              * (2t)^{ell-2m},   a = (n-2)/2,
// which already carries the P_ell(1) = binom(ell+n-3, ell) normalization.
// Terms are built in signed-log long double form and summed relative to the
// largest one.
inline double gegenbauer_series(int n, int ell, double t) {
  const long double alpha = (n - 2) / 2.0L;
  const long double log_gamma_alpha = stirling_log_gamma(alpha);
  std::vector<long double> logs;
  std::vector<int> signs;
  long double log_max = -1e30L;
  for (int m = 0; 2 * m <= ell; ++m) {
    const int power = ell - 2 * m;
    if (t == 0.0 && power > 0) continue;
    long double lg = stirling_log_gamma(alpha + ell - m) - log_gamma_alpha -
                     stirling_log_gamma(m + 1.0L) -
                     stirling_log_gamma(power + 1.0L);
    if (power > 0) lg += power * std::log(std::fabs(2.0L * t));
    int sign = m % 2 == 0 ? 1 : -1;
    if (t < 0.0 && power % 2 != 0) sign = -sign;
    logs.push_back(lg);
    signs.push_back(sign);
    if (lg > log_max) log_max = lg;
  }
  if (logs.empty()) return 0.0;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < logs.size(); ++i)
    sum += signs[i] * std::exp(logs[i] - log_max);
  return static_cast<double>(sum * std::exp(log_max));
}

// Regularized incomplete beta I_x(a, b).
inline double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

// P(|x_1| >= T) on S^{n-1}: x_1^2 is Beta(1/2, (n-1)/2).
inline double band_measure_beta(int n, double threshold) {
  return 1.0 - beta_cdf(0.5, (n - 1) / 2.0, threshold * threshold);
}

// CDF of Beta(1, n), the first marginal of the uniform simplex.
inline double beta1n_cdf(double x, int n) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 1.0 - std::pow(1.0 - x, n);
}

// Brute force over an urn with b red and b+c green balls: draw a+b without
// replacement and count draws that avoid every red ball.  Returned as
// (favourable, total) subset counts.
inline std::pair<std::uint64_t, std::uint64_t> no_red_draws(int a, int b,
                                                            int c) {
  const int balls = 2 * b + c;
  const int draw = a + b;
  const std::uint32_t red_mask = (1u << b) - 1u;
  std::uint64_t favourable = 0, total = 0;
  for (std::uint32_t mask = 0; mask < (1u << balls); ++mask) {
    if (__builtin_popcount(mask) != draw) continue;
    ++total;
    if ((mask & red_mask) == 0) ++favourable;
  }
  return {favourable, total};
}

}  // namespace testsupport

#endif  // GEOSECT_TESTS_SUPPORT_ORACLES_HPP_
