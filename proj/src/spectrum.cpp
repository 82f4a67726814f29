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

#include "spectrum.hpp"

#include <quadmath.h>

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace geosect {

namespace {

using boost::multiprecision::cpp_int;

void check_query(int n, int k, int ell) {
  if (n < 3) throw config_error("spectrum: requires n >= 3");
  if (k < 2 || k > n - 1) throw config_error("spectrum: requires 2 <= k <= n-1");
  if (ell < 0 || ell > 10000) throw config_error("spectrum: degree index out of range");
}

// ---------------------------------------------------------------------------
// Quadrature route, in quadruple precision.  With the substitution t = sin(th)
// the integral becomes int P_deg(sin th) cos^{k-2}(th) dth over [-pi/2, pi/2],
// which is smooth for every k >= 2.  The integrand cancels to a tiny fraction
// of its magnitude for large degrees (the result can be ~1e18 times smaller
// than the summands), which is what pushes the arithmetic to __float128.
// ---------------------------------------------------------------------------

const __float128 kPiQ = 2 * asinq(__float128(1));

struct QRule {
  std::vector<__float128> x, w;
};

QRule make_rule_q(int m) {
  QRule r;
  r.x.resize(m);
  r.w.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    __float128 x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    __float128 dp = 0;
    for (int iter = 0; iter < 8; ++iter) {
      __float128 p0 = 1, p1 = x;
      for (int j = 1; j < m; ++j) {
        __float128 p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      x -= p1 / dp;
    }
    __float128 w = 2 / ((1 - x * x) * dp * dp);
    r.x[m - 1 - i] = x;
    r.x[i] = -x;
    r.w[m - 1 - i] = w;
    r.w[i] = w;
  }
  if (m % 2 == 1) r.x[m / 2] = 0;
  return r;
}

const QRule& rule64_q() {
  static const QRule r = make_rule_q(64);
  return r;
}

__float128 ipow_q(__float128 base, int e) {
  __float128 acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

__float128 gegenbauer_q(int n, int ell, __float128 t) {
  const __float128 alpha = __float128(n - 2) / 2;
  if (ell == 0) return 1;
  __float128 pm1 = 1;
  __float128 p = 2 * alpha * t;
  for (int j = 2; j <= ell; ++j) {
    __float128 next = (2 * t * (j + alpha - 1) * p - (j + 2 * alpha - 2) * pm1) / j;
    pm1 = p;
    p = next;
  }
  return p;
}

__float128 weighted_integral_q(int n, int k, int degree, int panels) {
  const QRule& r = rule64_q();
  const __float128 lo = -kPiQ / 2;
  const __float128 width = kPiQ / panels;
  __float128 total = 0;
  for (int pidx = 0; pidx < panels; ++pidx) {
    const __float128 mid = lo + width * pidx + width / 2;
    const __float128 half = width / 2;
    __float128 acc = 0;
    for (size_t i = 0; i < r.x.size(); ++i) {
      const __float128 th = mid + half * r.x[i];
      const __float128 g = gegenbauer_q(n, degree, sinq(th));
      acc += r.w[i] * g * ipow_q(cosq(th), k - 2);
    }
    total += acc * half;
  }
  return total;
}

double finish_quadrature(int n, int k, int degree, __float128 integral) {
  const __float128 tau_q =
      expq(lgammaq(__float128(k) / 2) - lgammaq(__float128(k - 1) / 2)) / sqrtq(kPiQ);
  const __float128 norm =
      expq(lgammaq(__float128(degree + n - 2)) - lgammaq(__float128(degree + 1)) -
           lgammaq(__float128(n - 2)));
  const double value = static_cast<double>(tau_q * integral / norm);
  if (!std::isfinite(value)) throw numeric_error("eigenvalue_quadrature: overflow");
  return value;
}

// ---------------------------------------------------------------------------
// Closed forms, in long-double log space.
// ---------------------------------------------------------------------------

long double lgamma_ld(long double x) { return lgammal(x); }

long double lbinom_ld(long double x, long double m) {
  return lgamma_ld(x + 1) - lgamma_ld(m + 1) - lgamma_ld(x - m + 1);
}

cpp_int factorial(int m) {
  cpp_int acc = 1;
  for (int i = 2; i <= m; ++i) acc *= i;
  return acc;
}

cpp_int falling(int x, int m) {
  cpp_int acc = 1;
  for (int i = 0; i < m; ++i) acc *= (x - i);
  return acc;
}

}  // namespace

double eigenvalue_quadrature(int n, int k, int degree) {
  check_query(n, k, degree);
  if (degree > 1000)
    throw config_error("eigenvalue_quadrature: degree too large for the quadrature route");
  if (degree % 2 == 1) return 0.0;
  const int base = 4 + degree / 8;
  __float128 coarse = weighted_integral_q(n, k, degree, base);
  __float128 fine = weighted_integral_q(n, k, degree, 2 * base);
  if (fabsq(fine - coarse) > 1e-9 * fabsq(fine)) {
    coarse = fine;
    fine = weighted_integral_q(n, k, degree, 4 * base);
    if (fabsq(fine - coarse) > 1e-9 * fabsq(fine))
      throw numeric_error("eigenvalue_quadrature: panel refinement did not converge");
  }
  return finish_quadrature(n, k, degree, fine);
}

double eigenvalue_k2(int n, int ell) {
  if (n < 4) throw config_error("eigenvalue_k2: requires n >= 4");
  if (ell < 0 || ell > 10000) throw config_error("eigenvalue_k2: degree index out of range");
  const long double nh = 0.5L * n;
  const long double lv = ell;
  return static_cast<double>(
      expl(2 * lbinom_ld(lv + nh - 2, lv) - lbinom_ld(2 * lv + n - 3, 2 * lv)));
}

double eigenvalue_general(int n, int k, int ell) {
  check_query(n, k, ell);
  const long double nh = 0.5L * n;
  const long double kh = 0.5L * k;
  const long double lv = ell;
  const long double log_pi = logl(M_PIl);
  const long double log_tau = lgamma_ld(kh) - lgamma_ld(kh - 0.5L) - 0.5L * log_pi;
  const long double log_value =
      log_tau - lbinom_ld(2 * lv + n - 3, 2 * lv) + 0.5L * log_pi +
      lgamma_ld(2 * lv + nh - 1) + lgamma_ld(kh - 0.5L) - lgamma_ld(lv + 1) -
      lgamma_ld(kh + lv) - lgamma_ld(nh - 1) + lgamma_ld(nh + lv - 1) +
      lgamma_ld(nh + lv - kh) - lgamma_ld(nh - kh) - lgamma_ld(nh + 2 * lv - 1);
  return static_cast<double>(expl(log_value));
}

double eigenvalue_ratio(int n, int k, int ell) {
  check_query(n, k, ell);
  const double d = 2.0 * ell;
  return ((d + 1) * (d + n - k)) / ((d + k) * (d + n - 1));
}

double correlation_eigenvalue(int n, int ell) {
  if (n < 4) throw config_error("correlation_eigenvalue: requires n >= 4");
  if (ell < 0 || ell > 10000)
    throw config_error("correlation_eigenvalue: degree index out of range");
  const long double nh = 0.5L * n;
  const long double lv = ell;
  const double magnitude = static_cast<double>(
      expl(lbinom_ld(lv + nh - 2, lv) - lbinom_ld(2 * lv + n - 3, 2 * lv)));
  return (ell % 2 == 0) ? magnitude : -magnitude;
}

double variance_bound(int n, int k, double sigma_a) {
  if (n < 3) throw config_error("variance_bound: requires n >= 3");
  if (k < 2 || k > n - 1) throw config_error("variance_bound: requires 2 <= k <= n-1");
  if (!(sigma_a > 0.0 && sigma_a < 1.0))
    throw config_error("variance_bound: set measure must lie strictly between 0 and 1");
  return static_cast<double>(n - k) / (static_cast<double>(k) * (n - 1)) *
         (1.0 / sigma_a - 1.0);
}

VandermondeCheck vandermonde_check(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw config_error("vandermonde_check: a, b, c must be positive");
  if (c < a) throw config_error("vandermonde_check: requires c >= a");
  VandermondeCheck out;
  out.den = factorial(2 * b + c);
  out.lhs_num = 0;
  cpp_int binom = 1;  // binom(b, j), updated incrementally
  for (int j = 0; j <= b; ++j) {
    cpp_int term = binom * falling(a + b, j) * factorial(2 * b + c - j);
    if (j % 2 == 0)
      out.lhs_num += term;
    else
      out.lhs_num -= term;
    binom = binom * (b - j) / (j + 1);
  }
  out.rhs_num = factorial(b + c) * falling(c - a + b, b);
  out.equal = (out.lhs_num == out.rhs_num);
  return out;
}

std::vector<SpectrumRow> spectrum_table(int n, int k, int lmax) {
  if (lmax < 0) throw config_error("spectrum_table: lmax must be nonnegative");
  check_query(n, k, lmax);
  std::vector<SpectrumRow> rows;
  rows.reserve(lmax + 1);
  for (int ell = 0; ell <= lmax; ++ell)
    rows.push_back({n, k, ell, eigenvalue_general(n, k, ell)});
  return rows;
}

Report spectrum_report(int n, int k, int lmax) {
  const std::vector<SpectrumRow> rows = spectrum_table(n, k, lmax);
  Report rep;
  rep.json["experiment"] = "spectrum";
  ordered_json config;
  config["n"] = n;
  config["k"] = k;
  config["lmax"] = lmax;
  rep.json["config"] = config;
  ordered_json table = ordered_json::array();
  rep.csv = "n,k,ell,lambda_sq\n";
  for (const SpectrumRow& r : rows) {
    ordered_json row;
    row["ell"] = r.ell;
    row["lambda_sq"] = r.lambda_sq;
    table.push_back(row);
    rep.csv += std::to_string(r.n) + "," + std::to_string(r.k) + "," +
               std::to_string(r.ell) + "," + format_double(r.lambda_sq) + "\n";
  }
  rep.json["rows"] = table;
  return rep;
}

}  // namespace geosect
