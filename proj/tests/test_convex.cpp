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

#include "convex_sim.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "specfun.hpp"
#include "sphere_sim.hpp"
#include "support/ks.hpp"
#include "support/oracles.hpp"

using geosect::Body;
using geosect::body_contains;
using geosect::BodyKind;
using geosect::Chord;
using geosect::chord;
using geosect::Line;
using geosect::make_isotropic_body;
using geosect::sample_line;
using geosect::sample_point;
using geosect::slab_chord_ratio;
using geosect::SlabSet;
using geosect::slab_threshold;

namespace {

std::vector<double> unit_axis(int n, int axis) {
  std::vector<double> e(n, 0.0);
  e[axis] = 1.0;
  return e;
}

// Empirical covariance sanity for an isotropic body.
void check_isotropy(BodyKind kind, int n, std::uint64_t seed) {
  const Body b = make_isotropic_body(kind, n);
  auto rng = geosect::stream_engine(seed, 0);
  const int m = 40000;
  std::vector<double> mean(n, 0.0);
  std::vector<double> cov(static_cast<std::size_t>(n) * n, 0.0);
  for (int s = 0; s < m; ++s) {
    const auto x = sample_point(b, rng);
    REQUIRE(body_contains(b, x));
    for (int i = 0; i < n; ++i) {
      mean[i] += x[i];
      for (int j = 0; j < n; ++j)
        cov[static_cast<std::size_t>(i) * n + j] += x[i] * x[j];
    }
  }
  for (int i = 0; i < n; ++i) {
    CHECK(std::fabs(mean[i] / m) < 0.05);
    for (int j = 0; j < n; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      CHECK(std::fabs(cov[static_cast<std::size_t>(i) * n + j] / m - want) <
            0.06);
    }
  }
}

}  // namespace

TEST_CASE("isotropic bodies have unit covariance") {
  check_isotropy(BodyKind::ball, 4, 21);
  check_isotropy(BodyKind::cube, 4, 22);
  check_isotropy(BodyKind::simplex, 4, 23);

  CHECK(make_isotropic_body(BodyKind::ball, 10).radius ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  CHECK(make_isotropic_body(BodyKind::cube, 10).side ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  CHECK(geosect::body_kind_from_name("simplex") == BodyKind::simplex);
  CHECK_THROWS_AS(geosect::body_kind_from_name("cone"), geosect::config_error);
  CHECK_THROWS_AS(make_isotropic_body(BodyKind::ball, 1),
                  geosect::config_error);
}

TEST_CASE("body_contains membership") {
  const Body ball = make_isotropic_body(BodyKind::ball, 3);
  CHECK(body_contains(ball, {0.0, 0.0, 0.0}));
  CHECK(body_contains(ball, {ball.radius, 0.0, 0.0}));
  CHECK_FALSE(body_contains(ball, {ball.radius + 1e-9, 0.0, 0.0}));

  const Body cube = make_isotropic_body(BodyKind::cube, 2);
  const double half = 0.5 * cube.side;
  CHECK(body_contains(cube, {half, -half}));
  CHECK_FALSE(body_contains(cube, {half + 1e-12, 0.0}));

  const Body simplex = make_isotropic_body(BodyKind::simplex, 3);
  CHECK(body_contains(simplex, {0.0, 0.0, 0.0}));  // centroid maps to origin
  CHECK_FALSE(body_contains(simplex, {100.0, 0.0, 0.0}));
  CHECK_THROWS_AS(body_contains(ball, {0.0, 0.0}), geosect::config_error);
}

TEST_CASE("chord endpoints lie on the boundary") {
  auto rng = geosect::stream_engine(31, 0);
  for (BodyKind kind : {BodyKind::ball, BodyKind::cube, BodyKind::simplex}) {
    const Body b = make_isotropic_body(kind, 6);
    for (int rep = 0; rep < 200; ++rep) {
      const Line l = sample_line(b, rng);
      const Chord c = chord(b, l);
      CHECK(c.t_minus < 0.0);
      CHECK(c.t_plus > 0.0);
      std::vector<double> in(6), out(6);
      for (double sgn : {-1.0, 1.0}) {
        const double t = sgn < 0 ? c.t_minus : c.t_plus;
        const double eps = 1e-7 * (1.0 + std::fabs(t));
        for (int i = 0; i < 6; ++i) {
          in[i] = l.point[i] + (t - sgn * eps) * l.direction[i];
          out[i] = l.point[i] + (t + sgn * eps) * l.direction[i];
        }
        CHECK(body_contains(b, in));
        CHECK_FALSE(body_contains(b, out));
      }
    }
  }
}

TEST_CASE("chord closed forms on axis lines") {
  const Body ball = make_isotropic_body(BodyKind::ball, 5);
  Line l;
  l.point = std::vector<double>(5, 0.0);
  l.direction = unit_axis(5, 0);
  const Chord c = chord(ball, l);
  CHECK(c.t_minus == doctest::Approx(-ball.radius).epsilon(1e-14));
  CHECK(c.t_plus == doctest::Approx(ball.radius).epsilon(1e-14));

  const Body cube = make_isotropic_body(BodyKind::cube, 5);
  const Chord cc = chord(cube, l);
  CHECK(cc.t_minus == doctest::Approx(-0.5 * cube.side).epsilon(1e-14));
  CHECK(cc.t_plus == doctest::Approx(0.5 * cube.side).epsilon(1e-14));

  Line outside;
  outside.point = std::vector<double>(5, 10.0);
  outside.direction = unit_axis(5, 0);
  CHECK_THROWS_AS(chord(cube, outside), geosect::config_error);
}

TEST_CASE("slab_threshold exact routes") {
  const Body ball = make_isotropic_body(BodyKind::ball, 100);
  const auto slab = slab_threshold(ball, unit_axis(100, 0), 5e-3, 7);
  CHECK(slab.t == doctest::Approx(ball.radius *
                                  geosect::band_threshold(102, 0.5))
                      .epsilon(1e-12));
  // Any direction gives the same threshold for the ball.
  std::vector<double> diag(100, 0.1);
  const auto slab2 = slab_threshold(ball, diag, 5e-3, 7);
  CHECK(slab2.t == doctest::Approx(slab.t).epsilon(1e-14));

  const Body cube = make_isotropic_body(BodyKind::cube, 17);
  CHECK(slab_threshold(cube, unit_axis(17, 4), 5e-3, 7).t ==
        doctest::Approx(0.25 * cube.side).epsilon(1e-15));

  CHECK_THROWS_AS(slab_threshold(ball, std::vector<double>(100, 1.0), 5e-3, 7),
                  geosect::config_error);
  CHECK_THROWS_AS(slab_threshold(ball, unit_axis(100, 0), 0.6, 7),
                  geosect::config_error);
}

TEST_CASE("slab_threshold sampled route halves the volume") {
  // Non-axis cube direction and the simplex both go through the sampler.
  const int n = 3;
  const Body cube = make_isotropic_body(BodyKind::cube, n);
  std::vector<double> xi(n, 1.0 / std::sqrt(3.0));
  const auto slab = slab_threshold(cube, xi, 0.01, 17);
  CHECK(slab.t > 0.0);

  const Body simplex = make_isotropic_body(BodyKind::simplex, n);
  const auto sslab = slab_threshold(simplex, unit_axis(n, 0), 0.01, 17);
  CHECK(sslab.t > 0.0);

  // Fresh sample at a different seed: the slab should still cut ~half.
  const auto check_half = [n](const Body& body, const SlabSet& s) {
    auto rng = geosect::stream_engine(99, 0);
    int hits = 0;
    const int m = 40000;
    for (int i = 0; i < m; ++i) {
      double proj = 0.0;
      const auto x = sample_point(body, rng);
      for (int j = 0; j < n; ++j) proj += x[j] * s.xi[j];
      hits += std::fabs(proj) >= s.t;
    }
    CHECK(std::fabs(hits / static_cast<double>(m) - 0.5) < 0.025);
  };
  check_half(cube, slab);
  check_half(simplex, sslab);
}

TEST_CASE("slab_chord_ratio handles the exact cases") {
  const Body ball = make_isotropic_body(BodyKind::ball, 4);
  SlabSet slab;
  slab.xi = unit_axis(4, 0);
  slab.t = 1.0;

  // Line orthogonal to xi inside the middle band: exactly zero.
  Line flat;
  flat.point = {0.0, 0.5, 0.0, 0.0};
  flat.direction = unit_axis(4, 1);
  const auto zero = slab_chord_ratio(slab, flat, chord(ball, flat));
  CHECK(zero.zero_one);
  CHECK(zero.ratio == 0.0);

  // Same line shifted into the slab: exactly one.
  flat.point[0] = 1.5;
  const auto one = slab_chord_ratio(slab, flat, chord(ball, flat));
  CHECK(one.zero_one);
  CHECK(one.ratio == 1.0);

  // Line along xi through the center: 1 - t/R without any sampling error.
  Line axial;
  axial.point = std::vector<double>(4, 0.0);
  axial.direction = unit_axis(4, 0);
  const auto mid = slab_chord_ratio(slab, axial, chord(ball, axial));
  CHECK_FALSE(mid.zero_one);
  CHECK(mid.ratio ==
        doctest::Approx(1.0 - slab.t / ball.radius).epsilon(1e-13));

  Chord point_chord{0.25, 0.25};
  const auto degen = slab_chord_ratio(slab, axial, point_chord);
  CHECK(degen.degenerate);
}

TEST_CASE("slab_chord_ratio agrees with dense chord sampling") {
  auto rng = geosect::stream_engine(37, 0);
  const int n = 8;
  for (BodyKind kind : {BodyKind::ball, BodyKind::cube, BodyKind::simplex}) {
    const Body b = make_isotropic_body(kind, n);
    const auto slab = slab_threshold(b, unit_axis(n, 0), 5e-3, 7);
    for (int rep = 0; rep < 40; ++rep) {
      const Line l = sample_line(b, rng);
      const Chord c = chord(b, l);
      const auto r = slab_chord_ratio(slab, l, c);
      const int m = 20001;
      int hits = 0;
      for (int i = 0; i < m; ++i) {
        const double t = c.t_minus + (i + 0.5) * c.length() / m;
        double proj = 0.0;
        for (int j = 0; j < n; ++j)
          proj += (l.point[j] + t * l.direction[j]) * slab.xi[j];
        hits += std::fabs(proj) >= slab.t;
      }
      CHECK(std::fabs(r.ratio - hits / static_cast<double>(m)) < 6.0 / m);
    }
  }
}

TEST_CASE("run_zero_one_experiment report") {
  geosect::ZeroOneConfig cfg;
  cfg.body = BodyKind::ball;
  cfg.n = 60;
  cfg.samples = 1500;
  cfg.seed = 7;
  cfg.bins = 20;
  cfg.workers = 1;
  const auto rep = geosect::run_zero_one_experiment(cfg);
  CHECK(rep.json["experiment"] == "zero_one");
  CHECK(rep.json["config"]["body"] == "ball");
  CHECK_FALSE(rep.json["config"].contains("workers"));

  const auto cz = rep.json["count_zero"].get<long long>();
  const auto co = rep.json["count_one"].get<long long>();
  const double frac = rep.json["fraction_zero_one"].get<double>();
  CHECK(frac == doctest::Approx((cz + co) / 1500.0).epsilon(1e-12));
  // The slab is symmetric, so zero and one hits balance statistically.
  CHECK(std::abs(cz - co) < 5.0 * std::sqrt(static_cast<double>(cz + co)));
  // Uniform stationarity of hit-and-run lines: E[ratio] is the slab volume.
  CHECK(std::fabs(rep.json["mean"].get<double>() - 0.5) <
        5.0 * rep.json["se_mean"].get<double>());
  long long total = 0;
  for (const auto& c : rep.json["histogram"]["counts"])
    total += c.get<long long>();
  CHECK(total == 1500);

  cfg.workers = 3;
  const auto rep3 = geosect::run_zero_one_experiment(cfg);
  CHECK(geosect::dump_json(rep3.json) == geosect::dump_json(rep.json));

  cfg.samples = 0;
  CHECK_THROWS_AS(geosect::run_zero_one_experiment(cfg),
                  geosect::config_error);
}

TEST_CASE("zero-one fraction grows with dimension") {
  geosect::ZeroOneConfig cfg;
  cfg.body = BodyKind::cube;
  cfg.samples = 1200;
  cfg.seed = 11;
  cfg.n = 20;
  const double lo =
      geosect::run_zero_one_experiment(cfg).json["fraction_zero_one"]
          .get<double>();
  cfg.n = 200;
  const double hi =
      geosect::run_zero_one_experiment(cfg).json["fraction_zero_one"]
          .get<double>();
  CHECK(hi > lo);
  CHECK(hi > 0.7);
}

TEST_CASE("run_tail_checks stays under the envelopes") {
  for (BodyKind kind : {BodyKind::ball, BodyKind::cube, BodyKind::simplex}) {
    geosect::TailConfig cfg;
    cfg.body = kind;
    cfg.n = 30;
    cfg.samples = 4000;
    cfg.seed = 7;
    const auto rep = geosect::run_tail_checks(cfg);
    CHECK(rep.json["experiment"] == "tails");
    CHECK(rep.json["chord"]["c_hat"].get<double>() > 0.0);
    CHECK(rep.json["chord"]["max_envelope_ratio"].get<double>() <=
          1.0 + 1e-12);
    CHECK(rep.json["direction"]["max_envelope_ratio"].get<double>() <= 1.0);
    CHECK(rep.json["slab_density"]["sup_density"].get<double>() <=
          rep.json["slab_density"]["bound"].get<double>());
    CHECK(rep.json["slab_density"]["bound"].get<double>() ==
          doctest::Approx(std::exp(1.0) * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.csv.rfind("family,t,survival,envelope\n", 0) == 0);
  }
}

TEST_CASE("simplex pushforward lands in the simplex with beta marginals") {
  auto rng = geosect::stream_engine(41, 0);
  const int n = 3;
  std::vector<double> firsts(20000);
  for (auto& v : firsts) {
    const auto x = geosect::sample_unit_vector(rng, 2 * n + 2);
    const auto q = geosect::simplex_pushforward(x, n);
    REQUIRE(static_cast<int>(q.size()) == n);
    double total = 0.0;
    for (double qi : q) {
      CHECK(qi >= 0.0);
      total += qi;
    }
    CHECK(total <= 1.0 + 1e-12);
    v = q[0];
  }
  const double d = testsupport::ks_statistic(firsts, [&](double x) {
    return testsupport::beta1n_cdf(x, n);
  });
  CHECK(d < 0.015);

  CHECK_THROWS_AS(geosect::simplex_pushforward({0.1, 0.2}, 3),
                  geosect::config_error);
}

TEST_CASE("run_ellipse_experiment report") {
  geosect::EllipseConfig cfg;
  cfg.n = 5;
  cfg.samples = 2000;
  cfg.seed = 7;
  cfg.grid = 256;
  const auto rep = geosect::run_ellipse_experiment(cfg);
  CHECK(rep.json["experiment"] == "ellipse");
  CHECK(rep.json["median_threshold"].get<double>() ==
        doctest::Approx(1.0 - std::pow(2.0, -1.0 / 5.0)).epsilon(1e-14));
  CHECK(std::fabs(rep.json["mean"].get<double>() - 1.0) <
        5.0 * rep.json["se_mean"].get<double>());

  geosect::EllipseConfig alt = cfg;
  alt.workers = 4;
  const auto rep4 = geosect::run_ellipse_experiment(alt);
  CHECK(geosect::dump_json(rep4.json) == geosect::dump_json(rep.json));

  alt.n = 0;
  CHECK_THROWS_AS(geosect::run_ellipse_experiment(alt),
                  geosect::config_error);
}
