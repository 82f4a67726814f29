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

#ifndef GEOSECT_CONVEX_SIM_HPP_
#define GEOSECT_CONVEX_SIM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "report.hpp"

namespace geosect {

enum class BodyKind { ball, cube, simplex };

BodyKind body_kind_from_name(const std::string& name);
std::string body_kind_name(BodyKind kind);

// A convex body in isotropic position (zero barycenter, identity covariance).
// The simplex is the Archimedes simplex {x >= 0, sum x <= 1} pushed through
// the affine map y = W (x - c); both W and its inverse have the rank-one
// structure scale * (I + coef * J) with J the all-ones matrix, so they are
// applied in O(n).
struct Body {
  BodyKind kind = BodyKind::ball;
  int n = 0;
  double radius = 0.0;  // ball: sqrt(n+2)
  double side = 0.0;    // cube: sqrt(12)
  double w_scale = 0.0, w_coef = 0.0;        // W = w_scale (I + w_coef J)
  double winv_scale = 0.0, winv_coef = 0.0;  // W^-1
};

Body make_isotropic_body(BodyKind kind, int n);

bool body_contains(const Body& body, const std::vector<double>& x);

// Uniform point in the body.
std::vector<double> sample_point(const Body& body, std::mt19937_64& rng);

// A hit-and-run line: uniform interior point plus independent uniform
// direction.
struct Line {
  std::vector<double> point;
  std::vector<double> direction;
};

Line sample_line(const Body& body, std::mt19937_64& rng);

struct Chord {
  double t_minus = 0.0;
  double t_plus = 0.0;
  double length() const { return t_plus - t_minus; }
};

// Exact parameter interval {t : point + t direction in body}; the point must
// be strictly inside.
Chord chord(const Body& body, const Line& line);

// Half-volume slab A = {x in body : |<x, xi>| >= t}.
struct SlabSet {
  std::vector<double> xi;
  double t = 0.0;
};

// Solves vol(A)/vol(body) = 1/2 for t.  Ball and axis-aligned cube use exact
// one-dimensional marginals; everything else bisects the empirical volume of
// a fixed seeded sample, with `tolerance` on the achieved fraction.
SlabSet slab_threshold(const Body& body, const std::vector<double>& xi,
                       double tolerance, std::uint64_t seed, int workers = 0);

struct SlabRatio {
  double ratio = 0.0;
  bool zero_one = false;   // ratio is exactly 0 or 1, decided by comparisons
  bool degenerate = false; // zero-length chord
};

// length(L ∩ A) / length(L ∩ K).  <point + t dir, xi> is affine in t, so the
// excluded middle band is one interval and the classification into exact
// {0, 1} needs no epsilon.
SlabRatio slab_chord_ratio(const SlabSet& slab, const Line& line,
                           const Chord& c);

struct ZeroOneConfig {
  BodyKind body = BodyKind::ball;
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int bins = 60;
  int workers = 0;
  int axis = 0;  // xi = e_axis
  double slab_tolerance = 5e-3;
};

// Distribution of the chord ratio and the fraction of lines whose ratio is
// exactly 0 or 1.
Report run_zero_one_experiment(const ZeroOneConfig& cfg);

struct TailConfig {
  BodyKind body = BodyKind::ball;
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  int axis = 0;
  double slab_tolerance = 5e-3;
};

// Chord-length survival vs a fitted 2 e^{-ct} envelope, direction-marginal
// tail vs 2 e^{-n t^2 / 2}, and the slab marginal density bound e sqrt(2).
Report run_tail_checks(const TailConfig& cfg);

// pi_n: S^{2n+1} -> simplex, coordinates x_j^2 + x_{n+1+j}^2 for j = 0..n-1
// (0-based; the leftover pair (x_n, x_{2n+1}) is the implicit last simplex
// coordinate).
std::vector<double> simplex_pushforward(const std::vector<double>& x, int n);

struct EllipseConfig {
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int bins = 60;
  int grid = 512;  // curve-parameter points per ellipse
  int workers = 0;
};

// Random ellipses: images of uniform great circles of S^{2n+1} under pi_n.
// A is the half-measure set {first simplex coordinate >= 1 - 2^{-1/n}};
// reports X = 2 mu(A ∩ L) / mu(L) with mu the pushforward of arc length,
// evaluated on an equispaced parameter grid with random phase.
Report run_ellipse_experiment(const EllipseConfig& cfg);

}  // namespace geosect

#endif  // GEOSECT_CONVEX_SIM_HPP_
