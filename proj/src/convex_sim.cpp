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

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "parallel.hpp"
#include "specfun.hpp"
#include "sphere_sim.hpp"

namespace geosect {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sum(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

// Simplex constraints of x = W^-1 y + c along a line y = p + t d, expressed
// through the coordinates q_i + t eta_i >= 0 and their sums.
struct SimplexLine {
  std::vector<double> q, eta;
  double sum_q, sum_eta;
};

SimplexLine simplex_line(const Body& b, const std::vector<double>& p,
                         const std::vector<double>& d) {
  const int n = b.n;
  const double centroid = 1.0 / (n + 1.0);
  const double sp = sum(p), sd = sum(d);
  SimplexLine sl;
  sl.q.resize(n);
  sl.eta.resize(n);
  for (int i = 0; i < n; ++i) {
    sl.q[i] = b.winv_scale * (p[i] + b.winv_coef * sp) + centroid;
    sl.eta[i] = b.winv_scale * (d[i] + b.winv_coef * sd);
  }
  // 1 + n winv_coef = 1/sqrt(n+1), computed directly to avoid cancellation.
  const double shrink = 1.0 / std::sqrt(n + 1.0);
  sl.sum_q = b.winv_scale * sp * shrink + n * centroid;
  sl.sum_eta = b.winv_scale * sd * shrink;
  return sl;
}

bool strictly_inside(const Body& b, const std::vector<double>& x) {
  switch (b.kind) {
    case BodyKind::ball:
      return dot(x, x) < b.radius * b.radius;
    case BodyKind::cube: {
      const double half = 0.5 * b.side;
      for (double v : x)
        if (!(std::abs(v) < half)) return false;
      return true;
    }
    case BodyKind::simplex: {
      const SimplexLine sl = simplex_line(b, x, x);  // eta unused
      for (double q : sl.q)
        if (!(q > 0.0)) return false;
      return sl.sum_q < 1.0;
    }
  }
  return false;
}

}  // namespace

BodyKind body_kind_from_name(const std::string& name) {
  if (name == "ball") return BodyKind::ball;
  if (name == "cube") return BodyKind::cube;
  if (name == "simplex") return BodyKind::simplex;
  throw config_error("unknown body kind: " + name);
}

std::string body_kind_name(BodyKind kind) {
  switch (kind) {
    case BodyKind::ball: return "ball";
    case BodyKind::cube: return "cube";
    case BodyKind::simplex: return "simplex";
  }
  throw config_error("unknown body kind");
}

Body make_isotropic_body(BodyKind kind, int n) {
  if (n < 2) throw config_error("body: n must be at least 2");
  Body b;
  b.kind = kind;
  b.n = n;
  switch (kind) {
    case BodyKind::ball:
      // E x_1^2 = R^2/(n+2) for the uniform ball.
      b.radius = std::sqrt(n + 2.0);
      break;
    case BodyKind::cube:
      // Var of a uniform interval of length s is s^2/12.
      b.side = std::sqrt(12.0);
      break;
    case BodyKind::simplex: {
      // Dirichlet(1,...,1) covariance a (I - J/(n+1)), a = 1/((n+1)(n+2));
      // the whitening map and its inverse share the I + coef J structure.
      const double a = 1.0 / ((n + 1.0) * (n + 2.0));
      b.w_scale = 1.0 / std::sqrt(a);
      b.w_coef = (std::sqrt(n + 1.0) - 1.0) / n;
      b.winv_scale = std::sqrt(a);
      b.winv_coef = (1.0 / std::sqrt(n + 1.0) - 1.0) / n;
      break;
    }
  }
  return b;
}

bool body_contains(const Body& body, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != body.n)
    throw config_error("body_contains: dimension mismatch");
  switch (body.kind) {
    case BodyKind::ball:
      return dot(x, x) <= body.radius * body.radius;
    case BodyKind::cube: {
      const double half = 0.5 * body.side;
      for (double v : x)
        if (std::abs(v) > half) return false;
      return true;
    }
    case BodyKind::simplex: {
      const SimplexLine sl = simplex_line(body, x, x);
      for (double q : sl.q)
        if (q < 0.0) return false;
      return sl.sum_q <= 1.0;
    }
  }
  return false;
}

std::vector<double> sample_point(const Body& body, std::mt19937_64& rng) {
  const int n = body.n;
  switch (body.kind) {
    case BodyKind::ball: {
      std::vector<double> x = sample_unit_vector(rng, n);
      std::uniform_real_distribution<double> unif;
      const double r = body.radius * std::pow(unif(rng), 1.0 / n);
      for (double& v : x) v *= r;
      return x;
    }
    case BodyKind::cube: {
      std::uniform_real_distribution<double> unif(-0.5 * body.side,
                                                  0.5 * body.side);
      std::vector<double> x(n);
      for (double& v : x) v = unif(rng);
      return x;
    }
    case BodyKind::simplex: {
      std::exponential_distribution<double> expo;
      std::vector<double> e(n + 1);
      double total = 0.0;
      do {
        total = 0.0;
        for (double& v : e) {
          v = expo(rng);
          total += v;
        }
      } while (total <= 0.0);
      const double centroid = 1.0 / (n + 1.0);
      std::vector<double> d(n);
      double sd = 0.0;
      for (int i = 0; i < n; ++i) {
        d[i] = e[i] / total - centroid;
        sd += d[i];
      }
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i)
        y[i] = body.w_scale * (d[i] + body.w_coef * sd);
      return y;
    }
  }
  throw config_error("sample_point: unknown body kind");
}

Line sample_line(const Body& body, std::mt19937_64& rng) {
  Line l;
  l.point = sample_point(body, rng);
  l.direction = sample_unit_vector(rng, body.n);
  return l;
}

namespace {

// Intersects {t : alpha + t beta >= 0} into [lo, hi].
void clip_halfline(double alpha, double beta, double& lo, double& hi) {
  if (beta > 0.0) {
    lo = std::max(lo, -alpha / beta);
  } else if (beta < 0.0) {
    hi = std::min(hi, -alpha / beta);
  }
  // beta == 0: the constraint holds along the whole line (point is inside).
}

}  // namespace

Chord chord(const Body& body, const Line& line) {
  if (static_cast<int>(line.point.size()) != body.n ||
      static_cast<int>(line.direction.size()) != body.n)
    throw config_error("chord: dimension mismatch");
  if (!strictly_inside(body, line.point))
    throw config_error("chord: line point must lie strictly inside the body");
  Chord c;
  switch (body.kind) {
    case BodyKind::ball: {
      const double pd = dot(line.point, line.direction);
      const double dd = dot(line.direction, line.direction);
      const double pp = dot(line.point, line.point);
      const double disc = pd * pd - dd * (pp - body.radius * body.radius);
      const double root = std::sqrt(disc);
      c.t_minus = (-pd - root) / dd;
      c.t_plus = (-pd + root) / dd;
      return c;
    }
    case BodyKind::cube: {
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      const double half = 0.5 * body.side;
      for (int i = 0; i < body.n; ++i) {
        // half - |p_i + t d_i| >= 0, split into two affine constraints.
        clip_halfline(half - line.point[i], -line.direction[i], lo, hi);
        clip_halfline(half + line.point[i], line.direction[i], lo, hi);
      }
      c.t_minus = lo;
      c.t_plus = hi;
      return c;
    }
    case BodyKind::simplex: {
      const SimplexLine sl = simplex_line(body, line.point, line.direction);
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      for (int i = 0; i < body.n; ++i)
        clip_halfline(sl.q[i], sl.eta[i], lo, hi);
      clip_halfline(1.0 - sl.sum_q, -sl.sum_eta, lo, hi);
      c.t_minus = lo;
      c.t_plus = hi;
      return c;
    }
  }
  throw config_error("chord: unknown body kind");
}

SlabSet slab_threshold(const Body& body, const std::vector<double>& xi,
                       double tolerance, std::uint64_t seed, int workers) {
  if (static_cast<int>(xi.size()) != body.n)
    throw config_error("slab_threshold: dimension mismatch");
  if (std::abs(std::sqrt(dot(xi, xi)) - 1.0) > 1e-9)
    throw config_error("slab_threshold: xi must be a unit vector");
  if (!(tolerance > 0.0 && tolerance < 0.5))
    throw config_error("slab_threshold: tolerance must lie in (0, 1/2)");
  SlabSet slab;
  slab.xi = xi;

  if (body.kind == BodyKind::ball) {
    // The marginal of the uniform ball along any unit direction equals the
    // first-coordinate marginal of S^{n+1}, so the exact solver applies.
    slab.t = body.radius * band_threshold(body.n + 2, 0.5);
    return slab;
  }
  if (body.kind == BodyKind::cube) {
    int nonzero = -1;
    bool axis = true;
    for (int i = 0; i < body.n; ++i) {
      if (xi[i] == 0.0) continue;
      if (nonzero >= 0 || std::abs(xi[i]) != 1.0) {
        axis = false;
        break;
      }
      nonzero = i;
    }
    if (axis && nonzero >= 0) {
      // Uniform marginal: P(|x_i| >= t) = 1 - 2t/s.
      slab.t = 0.25 * body.side;
      return slab;
    }
  }

  // Empirical route: bisect the survival fraction of a fixed seeded sample.
  const std::size_t m = std::max<std::size_t>(
      20000, static_cast<std::size_t>(std::ceil(4.0 / (tolerance * tolerance))));
  if (m > 5000000)
    throw config_error("slab_threshold: tolerance too small for the sampler");
  const std::vector<double> v = run_chunked<double>(
      seed, m, workers, [&](std::mt19937_64& rng, std::size_t) {
        return std::abs(dot(sample_point(body, rng), xi));
      });
  double hi = 0.0;
  for (double x : v) hi = std::max(hi, x);
  if (hi <= 0.0) throw numeric_error("slab_threshold: degenerate marginal");
  auto fraction_at = [&](double t) {
    std::size_t hits = 0;
    for (double x : v) hits += (x >= t);
    return static_cast<double>(hits) / static_cast<double>(m);
  };
  double lo = 0.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (fraction_at(mid) >= 0.5)
      lo = mid;
    else
      hi = mid;
  }
  slab.t = 0.5 * (lo + hi);
  if (std::abs(fraction_at(slab.t) - 0.5) > tolerance)
    throw numeric_error("slab_threshold: bisection missed the half volume");
  return slab;
}

SlabRatio slab_chord_ratio(const SlabSet& slab, const Line& line,
                           const Chord& c) {
  SlabRatio out;
  const double alpha = dot(line.point, slab.xi);
  const double beta = dot(line.direction, slab.xi);
  const double len = c.length();
  if (len <= 0.0) {
    out.degenerate = true;
    out.ratio = std::abs(alpha + beta * c.t_minus) >= slab.t ? 1.0 : 0.0;
    return out;
  }
  if (beta == 0.0) {
    out.zero_one = true;
    out.ratio = std::abs(alpha) >= slab.t ? 1.0 : 0.0;
    return out;
  }
  // Excluded middle band |alpha + t beta| < slab.t.
  double m1 = (-slab.t - alpha) / beta;
  double m2 = (slab.t - alpha) / beta;
  if (m1 > m2) std::swap(m1, m2);
  if (m2 <= c.t_minus || m1 >= c.t_plus) {
    out.zero_one = true;
    out.ratio = 1.0;
    return out;
  }
  if (m1 <= c.t_minus && m2 >= c.t_plus) {
    out.zero_one = true;
    out.ratio = 0.0;
    return out;
  }
  const double excluded = std::min(c.t_plus, m2) - std::max(c.t_minus, m1);
  out.ratio = std::clamp((len - excluded) / len, 0.0, 1.0);
  return out;
}

namespace {

struct ZeroOneSample {
  double ratio = 0.0;
  int flag = 0;
};

std::vector<double> axis_vector(int n, int axis) {
  if (axis < 0 || axis >= n)
    throw config_error("axis must lie in [0, n)");
  std::vector<double> xi(n, 0.0);
  xi[axis] = 1.0;
  return xi;
}

constexpr std::uint64_t kSlabSalt = 0x534C4142;  // slab-sampling phase

}  // namespace

Report run_zero_one_experiment(const ZeroOneConfig& cfg) {
  if (cfg.samples < 1) throw config_error("zero_one: samples must be >= 1");
  if (cfg.bins < 1) throw config_error("zero_one: bins must be >= 1");
  const Body body = make_isotropic_body(cfg.body, cfg.n);
  const std::vector<double> xi = axis_vector(cfg.n, cfg.axis);
  const SlabSet slab =
      slab_threshold(body, xi, cfg.slab_tolerance,
                     derive_seed(cfg.seed, kSlabSalt), cfg.workers);

  const std::vector<ZeroOneSample> samples = run_chunked<ZeroOneSample>(
      cfg.seed, cfg.samples, cfg.workers,
      [&](std::mt19937_64& rng, std::size_t) {
        const Line line = sample_line(body, rng);
        const SlabRatio sr = slab_chord_ratio(slab, line, chord(body, line));
        return ZeroOneSample{sr.ratio, sr.zero_one ? 1 : 0};
      });

  std::vector<double> ratios(samples.size());
  std::size_t flagged = 0, zeros = 0, ones = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ratios[i] = samples[i].ratio;
    if (samples[i].flag) {
      ++flagged;
      if (samples[i].ratio == 0.0) ++zeros;
      if (samples[i].ratio == 1.0) ++ones;
    }
  }
  const double nd = static_cast<double>(samples.size());
  const double fraction = static_cast<double>(flagged) / nd;
  const Summary s = summarize(ratios);
  const Histogram h = make_histogram(ratios, cfg.bins, 0.0, 1.0);

  Report rep;
  rep.json["experiment"] = "zero_one";
  ordered_json config;
  config["body"] = body_kind_name(cfg.body);
  config["n"] = cfg.n;
  config["samples"] = cfg.samples;
  config["bins"] = cfg.bins;
  config["axis"] = cfg.axis;
  config["slab_tolerance"] = cfg.slab_tolerance;
  rep.json["config"] = config;
  rep.json["samples"] = s.count;
  rep.json["mean"] = s.mean;
  rep.json["variance"] = s.variance;
  rep.json["se_mean"] = s.se_mean;
  rep.json["fraction_zero_one"] = fraction;
  rep.json["se_fraction"] = std::sqrt(fraction * (1.0 - fraction) / nd);
  rep.json["count_zero"] = zeros;
  rep.json["count_one"] = ones;
  rep.json["slab_threshold"] = slab.t;
  rep.json["histogram"] = histogram_json(h);
  rep.json["seed"] = cfg.seed;
  rep.csv = histogram_csv(h);
  return rep;
}

namespace {

struct TailSample {
  double len = 0.0;
  double dir = 0.0;
  double marg = 0.0;
};

}  // namespace

Report run_tail_checks(const TailConfig& cfg) {
  if (cfg.samples < 1) throw config_error("tails: samples must be >= 1");
  const Body body = make_isotropic_body(cfg.body, cfg.n);
  const std::vector<double> xi = axis_vector(cfg.n, cfg.axis);
  const SlabSet slab =
      slab_threshold(body, xi, cfg.slab_tolerance,
                     derive_seed(cfg.seed, kSlabSalt), cfg.workers);

  const std::vector<TailSample> samples = run_chunked<TailSample>(
      cfg.seed, cfg.samples, cfg.workers,
      [&](std::mt19937_64& rng, std::size_t) {
        const Line line = sample_line(body, rng);
        const Chord c = chord(body, line);
        return TailSample{c.length(), std::abs(line.direction[cfg.axis]),
                          line.point[cfg.axis]};
      });
  const double nd = static_cast<double>(samples.size());

  std::vector<double> lens(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) lens[i] = samples[i].len;
  std::sort(lens.begin(), lens.end());
  const double median = lens[lens.size() / 2];
  const double longest = lens.back();

  // Survival on [median, max]; the envelope rate is the largest c with
  // S(t) <= 2 e^{-c t} everywhere on the grid (a supporting fit, not least
  // squares: ln S is concave for the ball, so a regression line would cross).
  constexpr int kChordGrid = 40;
  std::vector<double> grid_t(kChordGrid), grid_s(kChordGrid);
  for (int j = 0; j < kChordGrid; ++j) {
    const double t =
        median + (longest - median) * j / static_cast<double>(kChordGrid - 1);
    const auto it = std::lower_bound(lens.begin(), lens.end(), t);
    grid_t[j] = t;
    grid_s[j] = static_cast<double>(lens.end() - it) / nd;
  }
  double c_hat = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kChordGrid; ++j)
    c_hat = std::min(c_hat, (std::log(2.0) - std::log(grid_s[j])) / grid_t[j]);
  double chord_ratio = 0.0;
  ordered_json chord_grid = ordered_json::array();
  std::string csv = "family,t,survival,envelope\n";
  for (int j = 0; j < kChordGrid; ++j) {
    const double env = 2.0 * std::exp(-c_hat * grid_t[j]);
    chord_ratio = std::max(chord_ratio, grid_s[j] / env);
    ordered_json row;
    row["t"] = grid_t[j];
    row["survival"] = grid_s[j];
    row["envelope"] = env;
    chord_grid.push_back(row);
    csv += "chord," + format_double(grid_t[j]) + "," +
           format_double(grid_s[j]) + "," + format_double(env) + "\n";
  }

  // Direction marginal against the subgaussian envelope 2 e^{-n t^2 / 2}.
  double dir_ratio = 0.0;
  ordered_json dir_grid = ordered_json::array();
  const double step = 0.25 / std::sqrt(static_cast<double>(cfg.n));
  for (int j = 1; j <= 16; ++j) {
    const double t = step * j;
    std::size_t hits = 0;
    for (const TailSample& s : samples) hits += (s.dir >= t);
    const double surv = static_cast<double>(hits) / nd;
    const double env = 2.0 * std::exp(-0.5 * cfg.n * t * t);
    dir_ratio = std::max(dir_ratio, surv / env);
    ordered_json row;
    row["t"] = t;
    row["survival"] = surv;
    row["envelope"] = env;
    dir_grid.push_back(row);
    csv += "direction," + format_double(t) + "," + format_double(surv) + "," +
           format_double(env) + "\n";
  }

  // Slab marginal density on fixed-width bins; log-concavity caps it at
  // e sqrt(2) for an isotropic marginal.
  const double bin_w = 0.05;
  double span = 0.0;
  for (const TailSample& s : samples) span = std::max(span, std::abs(s.marg));
  const int nbins = std::max(1, static_cast<int>(std::ceil(2.0 * span / bin_w)));
  std::vector<std::size_t> counts(nbins, 0);
  for (const TailSample& s : samples) {
    int idx = static_cast<int>((s.marg + span) / bin_w);
    idx = std::clamp(idx, 0, nbins - 1);
    ++counts[idx];
  }
  double sup_density = 0.0;
  for (std::size_t cnt : counts)
    sup_density = std::max(sup_density, static_cast<double>(cnt) / (nd * bin_w));
  const double density_bound = std::exp(1.0) * std::sqrt(2.0);

  Report rep;
  rep.json["experiment"] = "tails";
  ordered_json config;
  config["body"] = body_kind_name(cfg.body);
  config["n"] = cfg.n;
  config["samples"] = cfg.samples;
  config["axis"] = cfg.axis;
  config["slab_tolerance"] = cfg.slab_tolerance;
  rep.json["config"] = config;
  rep.json["samples"] = samples.size();
  ordered_json chord_block;
  chord_block["median"] = median;
  chord_block["max"] = longest;
  chord_block["c_hat"] = c_hat;
  chord_block["max_envelope_ratio"] = chord_ratio;
  chord_block["grid"] = chord_grid;
  rep.json["chord"] = chord_block;
  ordered_json dir_block;
  dir_block["max_envelope_ratio"] = dir_ratio;
  dir_block["grid"] = dir_grid;
  rep.json["direction"] = dir_block;
  ordered_json slab_block;
  slab_block["threshold"] = slab.t;
  slab_block["bin_width"] = bin_w;
  slab_block["sup_density"] = sup_density;
  slab_block["bound"] = density_bound;
  rep.json["slab_density"] = slab_block;
  rep.json["seed"] = cfg.seed;
  rep.csv = csv;
  return rep;
}

std::vector<double> simplex_pushforward(const std::vector<double>& x, int n) {
  if (n < 1) throw config_error("simplex_pushforward: n must be >= 1");
  if (static_cast<int>(x.size()) != 2 * n + 2)
    throw config_error("simplex_pushforward: ambient dimension must be 2n+2");
  double sq = 0.0;
  for (double v : x) sq += v * v;
  if (std::abs(std::sqrt(sq) - 1.0) > 1e-8)
    throw config_error("simplex_pushforward: input must lie on the sphere");
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) out[j] = x[j] * x[j] + x[n + 1 + j] * x[n + 1 + j];
  return out;
}

Report run_ellipse_experiment(const EllipseConfig& cfg) {
  if (cfg.n < 1) throw config_error("ellipse: n must be >= 1");
  if (cfg.samples < 1) throw config_error("ellipse: samples must be >= 1");
  if (cfg.bins < 1) throw config_error("ellipse: bins must be >= 1");
  if (cfg.grid < 2) throw config_error("ellipse: grid must be >= 2");

  // Median of the first simplex coordinate (Beta(1, n)): the half-measure
  // threshold is exact, no quadrature needed.
  const double med = 1.0 - std::exp2(-1.0 / cfg.n);
  const int ambient = 2 * cfg.n + 2;
  const int a = cfg.n + 1;  // partner index of coordinate 0
  const int grid = cfg.grid;

  const std::vector<double> values = run_chunked<double>(
      cfg.seed, cfg.samples, cfg.workers, [&](std::mt19937_64& rng, std::size_t) {
        const Frame f = sample_frame(rng, ambient, 2);
        const double u0 = f.coord(0, 0), v0 = f.coord(1, 0);
        const double ua = f.coord(0, a), va = f.coord(1, a);
        // First pushforward coordinate along the circle is a frequency-2
        // trig polynomial A + B cos 2t + C sin 2t (period pi).
        const double A = 0.5 * (u0 * u0 + v0 * v0 + ua * ua + va * va);
        const double B = 0.5 * (u0 * u0 - v0 * v0 + ua * ua - va * va);
        const double C = u0 * v0 + ua * va;
        std::uniform_real_distribution<double> unif(0.0, kPi / grid);
        const double phase = unif(rng);
        int hits = 0;
        for (int m = 0; m < grid; ++m) {
          const double t = phase + kPi * m / grid;
          hits += (A + B * std::cos(2.0 * t) + C * std::sin(2.0 * t) >= med);
        }
        return 2.0 * hits / grid;
      });

  const Summary s = summarize(values);
  const Histogram h = make_histogram(values, cfg.bins);
  const double tail_thresholds[] = {0.25, 0.5, std::pow(2.0, -1.0 / 3.0), 1.0};

  Report rep;
  rep.json["experiment"] = "ellipse";
  ordered_json config;
  config["n"] = cfg.n;
  config["samples"] = cfg.samples;
  config["bins"] = cfg.bins;
  config["grid"] = cfg.grid;
  rep.json["config"] = config;
  rep.json["samples"] = s.count;
  rep.json["mean"] = s.mean;
  rep.json["variance"] = s.variance;
  rep.json["se_mean"] = s.se_mean;
  rep.json["se_variance"] = s.se_variance;
  rep.json["median_threshold"] = med;
  ordered_json tails = ordered_json::array();
  for (double t : tail_thresholds) {
    std::size_t hits = 0;
    for (double v : values) hits += (std::abs(v - 1.0) >= t);
    ordered_json row;
    row["threshold"] = t;
    row["prob"] = static_cast<double>(hits) / static_cast<double>(s.count);
    tails.push_back(row);
  }
  rep.json["tail_probs"] = tails;
  rep.json["histogram"] = histogram_json(h);
  rep.json["seed"] = cfg.seed;
  rep.csv = histogram_csv(h);
  return rep;
}

}  // namespace geosect
