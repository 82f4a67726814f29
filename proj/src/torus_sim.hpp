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

#ifndef GEOSECT_TORUS_SIM_HPP_
#define GEOSECT_TORUS_SIM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "report.hpp"

namespace geosect {

// (Z/pZ)^n with points indexed lexicographically by base-p digits.
struct Torus {
  long long p = 0;
  int n = 0;
  long long size = 0;  // p^n
};

// Validates that p is an odd prime and p^n fits the table budget.
Torus make_torus(long long p, int n);

std::vector<long long> torus_digits(const Torus& t, long long index);
long long torus_index(const Torus& t, const std::vector<long long>& digits);

// Average of f over the progression {a + j b : j = 0..p-1}; b must be
// nonzero.
double radon_ap(const Torus& t, const std::vector<double>& f, long long a,
                long long b);

// S = R* R by the literal triple sum
//   (Sf)(a) = (1/(p (p^n - 1))) sum_{b != 0} sum_j f(a + j b),
// no rearrangement: this is the reference operator the spectra are checked
// against.  Rejects configurations whose p p^n (p^n - 1) work is impractical.
std::vector<double> apply_S(const Torus& t, const std::vector<double>& f);

struct EigenCheck {
  bool exact = false;     // integer-counting mode
  bool verified = false;  // the asserted spectrum held
  long long lambda_num = 0;  // p^{n-1} - 1
  long long lambda_den = 0;  // p^n - 1
  double max_ratio_error = 0.0;
  double max_residual = 0.0;
  std::vector<std::pair<long long, double>> table;  // (y index, Rayleigh ratio)
};

// Spectrum of S.  Float mode applies S to the real and imaginary parts of
// every character f_y and tabulates Rayleigh ratios plus residuals.  Exact
// mode instead enumerates cnt[d] = #{(b != 0, j) : j b = d} with integer
// counters and checks cnt = (p^n - 1) at d = 0 and p - 1 elsewhere, which
// forces S f = lambda^2 f on mean-zero f with lambda^2 = (p^{n-1}-1)/(p^n-1)
// as an exact rational.
EigenCheck eigen_check(const Torus& t, bool exact_mode);

Report eigen_report(const Torus& t, bool exact_mode);

struct TorusRunConfig {
  long long p = 3;
  int n = 1;
  bool exhaustive = true;
  std::size_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;
  int workers = 0;
};

// Intersection counts N = #(A ∩ L) of a random half-density set A with
// arithmetic progressions L, exhaustively over all (a, b != 0) or by
// sampling: reports P(|N - p/2| >= sqrt(p/2)) (evaluated in integers as
// (2N - p)^2 >= 2p) against the literal 1/2 bound and the Chebyshev bound
// from the computed second moment.
Report run_torus_experiment(const TorusRunConfig& cfg);

}  // namespace geosect

#endif  // GEOSECT_TORUS_SIM_HPP_
