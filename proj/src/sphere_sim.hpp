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

#ifndef GEOSECT_SPHERE_SIM_HPP_
#define GEOSECT_SPHERE_SIM_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "report.hpp"

namespace geosect {

enum class SetKind { band, central_band, hemisphere };

SetKind set_kind_from_name(const std::string& name);
std::string set_kind_name(SetKind kind);

// A rotationally symmetric subset of S^{n-1}, described by its first
// coordinate: band is {|x_1| >= T}, central_band is {|x_1| <= T}, hemisphere
// is {x_1 >= 0}.  `measure` caches the exact normalized surface measure.
struct SphereSet {
  SetKind kind = SetKind::band;
  int n = 0;
  double threshold = 0.0;
  double measure = 0.0;
};

SphereSet make_sphere_set(SetKind kind, int n, double threshold);
// Solves for the threshold that gives the requested measure (hemisphere only
// accepts 1/2).
SphereSet make_sphere_set_by_measure(SetKind kind, int n, double measure);

// Uniform point on S^{n-1} via normalized Gaussians.
std::vector<double> sample_unit_vector(std::mt19937_64& rng, int n);

// Orthonormal k-frame spanning a linear subspace of R^n, rows of `basis`.
struct Frame {
  int n = 0;
  int k = 0;
  std::vector<double> basis;  // row-major, k x n
  double coord(int i, int j) const { return basis[static_cast<std::size_t>(i) * n + j]; }
};

// Haar-distributed frame: Gaussian block + modified Gram-Schmidt with one
// re-orthogonalization pass when needed.
Frame sample_frame(std::mt19937_64& rng, int n, int k);

// The point-plus-tangent construction of a random great circle: X uniform on
// the sphere, Y unit tangent at X.  Same law as sample_frame(n, 2).
Frame sample_tangent_frame(std::mt19937_64& rng, int n);

// Exact normalized length of the intersection of the great circle spanned by
// a 2-frame with the set: x_1 along the circle is r cos(theta - phi) with
// r^2 = u_1^2 + v_1^2, so a band cuts arcs of total fraction (2/pi) acos(T/r).
double geodesic_band_fraction(const SphereSet& set, const Frame& frame);

// Exact sigma_H(set ∩ H) for the symmetric sets: the section is a unit
// (k-1)-sphere on which x_1 = rho * (first coordinate), rho = |P_H e_1|, so
// the answer is the S^{k-1} band measure at threshold T/rho (0 when
// rho <= T).  Accepts any 2 <= k <= n, including hand-built debug frames.
double subspace_section_estimate(const SphereSet& set, const Frame& frame);

// Monte Carlo fallback for arbitrary predicate sets: m uniform points on
// S^{n-1} ∩ H.
double subspace_section_estimate(
    const std::function<bool(const std::vector<double>&)>& inside,
    const Frame& frame, std::size_t m, std::mt19937_64& rng);

struct SphereConfig {
  int n = 0;
  int k = 2;
  SetKind set = SetKind::band;
  bool by_measure = true;  // interpret `measure`, otherwise `threshold`
  double measure = 0.5;
  double threshold = 0.0;
  bool tangent_model = false;  // k = 2 only
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int bins = 60;
  int workers = 0;  // execution detail; never echoed into reports
};

// Distribution of X = sigma_H(A ∩ H) / sigma(A) over random k-subspaces.
Report run_sphere_experiment(const SphereConfig& cfg);

struct SharpnessConfig {
  std::vector<int> dims;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 0;
};

// P(X = 0) for the half-measure band across dimensions, against the analytic
// value P(r <= T) = 1 - (1 - T^2)^{(n-2)/2}.
Report run_sharpness_check(const SharpnessConfig& cfg);

struct CorrelationConfig {
  int n = 0;
  int k = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int bins = 60;
  int workers = 0;
};

// E[R_k f(H) R_{n-k} f(H_perp)] for f(x) = x_1^2 - 1/n, using per-frame
// closed forms: R_k f(H) = rho^2/k - 1/n and R_{n-k} f(H_perp) =
// (1 - rho^2)/(n-k) - 1/n.
Report run_correlation_experiment(const CorrelationConfig& cfg);

}  // namespace geosect

#endif  // GEOSECT_SPHERE_SIM_HPP_
