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

#ifndef GEOSECT_SPECTRUM_HPP_
#define GEOSECT_SPECTRUM_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "report.hpp"

namespace geosect {

// Eigenvalue lambda_{k,ell}^2 of S_k = R_k* R_k on harmonics of degree `degree`,
// computed as tau_k * int_{-1}^{1} P_degree(t) (1-t^2)^{(k-3)/2} dt / P_degree(1)
// by quadrature in quadruple precision.  Exact 0 for odd degrees.  This is the
// reference route: it never touches the closed forms below.
double eigenvalue_quadrature(int n, int k, int degree);

// Closed form for k = 2: lambda_{2,2ell}^2 = binom(ell+n/2-2, ell)^2 /
// binom(2ell+n-3, 2ell), evaluated in log space (real-argument binomials for
// odd n).
double eigenvalue_k2(int n, int ell);

// Closed form for general 2 <= k <= n-1 on harmonics of degree 2*ell, as a
// product of Gamma factors evaluated in log space.
double eigenvalue_general(int n, int k, int ell);

// Ratio lambda_{k,2ell+2}^2 / lambda_{k,2ell}^2 =
// (2ell+1)(2ell+n-k) / ((2ell+k)(2ell+n-1)).
double eigenvalue_ratio(int n, int k, int ell);

// eta_{2ell} = P_{2ell}(0) / P_{2ell}(1) = (-1)^ell binom(ell+n/2-2, ell) /
// binom(2ell+n-3, 2ell): the eigenvalue governing the correlation between a
// subspace and its orthocomplement.
double correlation_eigenvalue(int n, int ell);

// Upper bound (n-k)/(k(n-1)) * (1/sigma_a - 1) on the variance of the
// normalized section measure of a set of measure sigma_a.
double variance_bound(int n, int k, double sigma_a);

// Both sides of the drawing identity
//   sum_j (-1)^j binom(b,j) (a+b)! (2b+c-j)! / ((a+b-j)! (2b+c)!)
//     = (b+c)! (c-a+b)! / ((c-a)! (2b+c)!)
// as exact integers over the common denominator (2b+c)!.
struct VandermondeCheck {
  boost::multiprecision::cpp_int lhs_num;
  boost::multiprecision::cpp_int rhs_num;
  boost::multiprecision::cpp_int den;
  bool equal;
};
VandermondeCheck vandermonde_check(int a, int b, int c);

struct SpectrumRow {
  int n, k, ell;  // ell indexes the even harmonic degree 2*ell
  double lambda_sq;
};
std::vector<SpectrumRow> spectrum_table(int n, int k, int lmax);

// spectrum_table packaged for serialization; CSV columns n,k,ell,lambda_sq.
Report spectrum_report(int n, int k, int lmax);

}  // namespace geosect

#endif  // GEOSECT_SPECTRUM_HPP_
