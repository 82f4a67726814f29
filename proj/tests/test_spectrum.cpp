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

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "specfun.hpp"
#include "support/oracles.hpp"

using geosect::correlation_eigenvalue;
using geosect::eigenvalue_general;
using geosect::eigenvalue_k2;
using geosect::eigenvalue_quadrature;
using geosect::eigenvalue_ratio;
using geosect::gegenbauer_eval;
using geosect::spectrum_table;
using geosect::vandermonde_check;
using geosect::variance_bound;

namespace {

double binomial(int top, int bottom) {
  double v = 1.0;
  for (int i = 1; i <= bottom; ++i)
    v *= static_cast<double>(top - bottom + i) / i;
  return v;
}

}  // namespace

TEST_CASE("eigenvalue_quadrature basic values") {
  CHECK(eigenvalue_quadrature(10, 2, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigenvalue_quadrature(50, 7, 0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int degree : {1, 3, 7, 15}) {
    CHECK(eigenvalue_quadrature(10, 2, degree) == 0.0);
    CHECK(eigenvalue_quadrature(9, 4, degree) == 0.0);
  }
  CHECK(eigenvalue_quadrature(10, 2, 2) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-10));
  CHECK_THROWS_AS(eigenvalue_quadrature(10, 1, 2), geosect::config_error);
  CHECK_THROWS_AS(eigenvalue_quadrature(10, 10, 2), geosect::config_error);
  CHECK_THROWS_AS(eigenvalue_quadrature(2, 2, 2), geosect::config_error);
}

TEST_CASE("eigenvalue_k2 closed form") {
  CHECK(eigenvalue_k2(10, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eigenvalue_k2(10, 1) == doctest::Approx(4.0 / 9.0).epsilon(1e-13));
  CHECK(eigenvalue_k2(10, 2) / eigenvalue_k2(10, 1) ==
        doctest::Approx(15.0 / 22.0).epsilon(1e-12));
  // lambda_{2,2}^2 = (n-2)/(2(n-1)), even and odd n.
  for (int n : {4, 5, 7, 10, 101, 1000}) {
    CHECK(eigenvalue_k2(n, 1) ==
          doctest::Approx((n - 2.0) / (2.0 * (n - 1.0))).epsilon(1e-12));
  }
  // Direct binomial form for even n: C(ell+n/2-2, ell)^2 / C(2ell+n-3, 2ell).
  for (int ell : {1, 2, 3, 5, 8}) {
    const double want = binomial(ell + 3, ell) * binomial(ell + 3, ell) /
                        binomial(2 * ell + 7, 2 * ell);
    CHECK(eigenvalue_k2(10, ell) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eigenvalue_k2(3, 1), geosect::config_error);
}

TEST_CASE("eigenvalue_general closed forms and consistency") {
  // lambda_{k,2}^2 = (n-k)/(k(n-1)).
  for (int n : {5, 6, 10, 50, 101}) {
    for (int k : {2, 3, 4, n - 1}) {
      if (k < 2 || k > n - 1) continue;
      CHECK(eigenvalue_general(n, k, 1) ==
            doctest::Approx((n - k) / (k * (n - 1.0))).epsilon(1e-12));
    }
  }
  // k = 2 route agrees with eigenvalue_k2.
  for (int n : {4, 7, 10, 101}) {
    for (int ell = 0; ell <= 20; ++ell) {
      CHECK(eigenvalue_general(n, 2, ell) ==
            doctest::Approx(eigenvalue_k2(n, ell)).epsilon(1e-12));
    }
  }
  // S_4 at n = 10: second eigenvalue via the ratio from the first.
  CHECK(eigenvalue_general(10, 4, 1) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(eigenvalue_general(10, 4, 2) ==
        doctest::Approx(2.0 / 33.0).epsilon(1e-12));
  // Ratio step ell = 2 -> 3: (2l+1)(2l+n-k) / ((2l+k)(2l+n-1)) at 2l = 4.
  CHECK(eigenvalue_general(10, 4, 3) ==
        doctest::Approx((2.0 / 33.0) * (5.0 * 10.0) / (8.0 * 13.0))
            .epsilon(1e-12));
  // Spot check against the quadrature oracle (full grid runs in acceptance).
  for (int ell : {1, 2, 5, 9}) {
    CHECK(eigenvalue_general(10, 3, ell) ==
          doctest::Approx(eigenvalue_quadrature(10, 3, 2 * ell))
              .epsilon(1e-8));
  }
  CHECK(eigenvalue_general(6, 5, 4) ==
        doctest::Approx(eigenvalue_quadrature(6, 5, 8)).epsilon(1e-8));
  CHECK_THROWS_AS(eigenvalue_general(10, 10, 1), geosect::config_error);
}

TEST_CASE("eigenvalue_ratio recursion") {
  CHECK(eigenvalue_ratio(10, 2, 0) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  for (int n : {6, 10, 50}) {
    for (int k : {2, 3, 4, n - 1}) {
      for (int ell = 0; ell <= 12; ++ell) {
        const double r = eigenvalue_ratio(n, k, ell);
        CHECK(r < 1.0);
        CHECK(r > 0.0);
        const double want = (2.0 * ell + 1.0) * (2.0 * ell + n - k) /
                            ((2.0 * ell + k) * (2.0 * ell + n - 1.0));
        CHECK(r == doctest::Approx(want).epsilon(1e-14));
        if (ell >= 1) {
          CHECK(eigenvalue_general(n, k, ell + 1) /
                    eigenvalue_general(n, k, ell) ==
                doctest::Approx(eigenvalue_ratio(n, k, ell)).epsilon(1e-12));
        }
      }
    }
  }
  // k = n-1 collapses to a perfect square.
  for (int ell : {0, 1, 5, 40}) {
    const double base = (2.0 * ell + 1.0) / (2.0 * ell + 9.0);
    CHECK(eigenvalue_ratio(10, 9, ell) ==
          doctest::Approx(base * base).epsilon(1e-14));
  }
}

TEST_CASE("correlation_eigenvalue signs and identities") {
  for (int n : {4, 6, 10, 50}) {
    CHECK(correlation_eigenvalue(n, 0) == doctest::Approx(1.0));
    CHECK(correlation_eigenvalue(n, 1) ==
          doctest::Approx(-1.0 / (n - 1.0)).epsilon(1e-13));
    for (int ell = 0; ell <= 8; ++ell) {
      const double eta = correlation_eigenvalue(n, ell);
      CHECK((ell % 2 == 0 ? eta > 0.0 : eta < 0.0));
      // lambda_{2,2ell}^2 = eta^2 * C(2ell+n-3, 2ell).
      CHECK(eta * eta * binomial(2 * ell + n - 3, 2 * ell) ==
            doctest::Approx(eigenvalue_k2(n, ell)).epsilon(1e-10));
    }
  }
  // eta_{2ell} = P_{2ell}(0) / P_{2ell}(1), odd dimensions included.
  for (int n : {5, 7, 10, 23}) {
    for (int ell = 1; ell <= 6; ++ell) {
      const double want = gegenbauer_eval(n, 2 * ell, 0.0) /
                          gegenbauer_eval(n, 2 * ell, 1.0);
      CHECK(correlation_eigenvalue(n, ell) ==
            doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("variance_bound") {
  for (int n : {4, 10, 100}) {
    CHECK(variance_bound(n, 2, 0.5) ==
          doctest::Approx((n - 2.0) / (2.0 * (n - 1.0))).epsilon(1e-14));
    CHECK(variance_bound(n, 2, 0.5) <= 0.5);
    CHECK(variance_bound(n, n - 1, 0.5) ==
          doctest::Approx(1.0 / ((n - 1.0) * (n - 1.0))).epsilon(1e-14));
  }
  CHECK(variance_bound(10, 3, 0.25) ==
        doctest::Approx((7.0 / 27.0) * 3.0).epsilon(1e-14));
  CHECK(variance_bound(10, 3, 1.0 - 1e-12) < 1e-11);
  CHECK_THROWS_AS(variance_bound(10, 2, 0.0), geosect::config_error);
  CHECK_THROWS_AS(variance_bound(10, 2, 1.0), geosect::config_error);
}

TEST_CASE("vandermonde_check against draw enumeration") {
  const auto simple = vandermonde_check(1, 1, 1);
  CHECK(simple.equal);
  CHECK(simple.lhs_num * 3 == simple.den);
  CHECK(simple.rhs_num == simple.lhs_num);

  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = a; c <= 4; ++c) {
        const auto check = vandermonde_check(a, b, c);
        CHECK(check.equal);
        const auto draws = testsupport::no_red_draws(a, b, c);
        // rhs/den must equal favourable/total exactly.
        CHECK(check.rhs_num * draws.second == check.den * draws.first);
      }
    }
  }
  // A quick diagonal slice of the larger sweep (acceptance runs it in full).
  for (int a = 1; a <= 8; ++a)
    CHECK(vandermonde_check(a, 9 - a, a + 2).equal);
  CHECK_THROWS_AS(vandermonde_check(3, 1, 2), geosect::config_error);
  CHECK_THROWS_AS(vandermonde_check(0, 1, 1), geosect::config_error);
}

TEST_CASE("spectrum_table rows") {
  const auto rows = spectrum_table(10, 2, 5);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].ell == 0);
  CHECK(rows[0].lambda_sq == doctest::Approx(1.0));
  CHECK(rows[1].lambda_sq == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == 10);
    CHECK(rows[i].k == 2);
    CHECK(rows[i].ell == static_cast<int>(i));
    if (i > 0) CHECK(rows[i].lambda_sq < rows[i - 1].lambda_sq);
    CHECK(rows[i].lambda_sq ==
          doctest::Approx(eigenvalue_general(10, 2, static_cast<int>(i)))
              .epsilon(1e-14));
  }

  const auto rep = geosect::spectrum_report(10, 2, 5);
  CHECK(rep.csv.substr(0, rep.csv.find('\n')) == "n,k,ell,lambda_sq");
  int lines = 0;
  for (char ch : rep.csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 7);  // header + 6 rows
  CHECK(rep.json["experiment"] == "spectrum");
  CHECK(rep.json["rows"].size() == 6);
}
