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

#include "sphere_sim.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "parallel.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"

namespace geosect {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double fraction_equal(const std::vector<double>& values, double x) {
  std::size_t hits = 0;
  for (double v : values) hits += (v == x);
  return static_cast<double>(hits) / static_cast<double>(values.size());
}

double tail_fraction(const std::vector<double>& values, double t) {
  std::size_t hits = 0;
  for (double v : values) hits += (std::abs(v - 1.0) >= t);
  return static_cast<double>(hits) / static_cast<double>(values.size());
}

}  // namespace

SetKind set_kind_from_name(const std::string& name) {
  if (name == "band") return SetKind::band;
  if (name == "central_band") return SetKind::central_band;
  if (name == "hemisphere") return SetKind::hemisphere;
  throw config_error("unknown set kind: " + name);
}

std::string set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::band: return "band";
    case SetKind::central_band: return "central_band";
    case SetKind::hemisphere: return "hemisphere";
  }
  throw config_error("unknown set kind");
}

SphereSet make_sphere_set(SetKind kind, int n, double threshold) {
  if (n < 2) throw config_error("sphere set: n must be at least 2");
  SphereSet s;
  s.kind = kind;
  s.n = n;
  s.threshold = threshold;
  switch (kind) {
    case SetKind::band:
    case SetKind::central_band:
      if (!(threshold >= 0.0 && threshold <= 1.0))
        throw config_error("sphere set: threshold must lie in [0, 1]");
      s.measure = band_measure(n, threshold);
      if (kind == SetKind::central_band) s.measure = 1.0 - s.measure;
      break;
    case SetKind::hemisphere:
      s.threshold = 0.0;
      s.measure = 0.5;
      break;
  }
  if (s.measure <= 0.0) throw config_error("sphere set has zero measure");
  return s;
}

SphereSet make_sphere_set_by_measure(SetKind kind, int n, double measure) {
  if (kind == SetKind::hemisphere) {
    if (measure != 0.5)
      throw config_error("hemisphere has measure 1/2; do not pass another");
    return make_sphere_set(kind, n, 0.0);
  }
  if (!(measure > 0.0 && measure < 1.0))
    throw config_error("sphere set: measure must lie in (0, 1)");
  const double band_target =
      kind == SetKind::band ? measure : 1.0 - measure;
  return make_sphere_set(kind, n, band_threshold(n, band_target));
}

std::vector<double> sample_unit_vector(std::mt19937_64& rng, int n) {
  if (n < 2) throw config_error("sample_unit_vector: n must be at least 2");
  std::normal_distribution<double> gauss;
  std::vector<double> x(n);
  for (;;) {
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = gauss(rng);
      sq += x[i] * x[i];
    }
    if (sq > 1e-280) {
      const double inv = 1.0 / std::sqrt(sq);
      for (int i = 0; i < n; ++i) x[i] *= inv;
      return x;
    }
  }
}

namespace {

// One modified Gram-Schmidt sweep over the rows; returns false on (near)
// rank deficiency.
bool orthonormalize(Frame& f) {
  for (int i = 0; i < f.k; ++i) {
    double* vi = &f.basis[static_cast<std::size_t>(i) * f.n];
    for (int j = 0; j < i; ++j) {
      const double* vj = &f.basis[static_cast<std::size_t>(j) * f.n];
      double dot = 0.0;
      for (int c = 0; c < f.n; ++c) dot += vi[c] * vj[c];
      for (int c = 0; c < f.n; ++c) vi[c] -= dot * vj[c];
    }
    double sq = 0.0;
    for (int c = 0; c < f.n; ++c) sq += vi[c] * vi[c];
    if (sq < 1e-24) return false;
    const double inv = 1.0 / std::sqrt(sq);
    for (int c = 0; c < f.n; ++c) vi[c] *= inv;
  }
  return true;
}

double max_offdiag(const Frame& f) {
  double worst = 0.0;
  for (int i = 0; i < f.k; ++i)
    for (int j = i + 1; j < f.k; ++j) {
      double dot = 0.0;
      for (int c = 0; c < f.n; ++c) dot += f.coord(i, c) * f.coord(j, c);
      worst = std::max(worst, std::abs(dot));
    }
  return worst;
}

}  // namespace

Frame sample_frame(std::mt19937_64& rng, int n, int k) {
  if (k < 2 || k > n - 1)
    throw config_error("sample_frame: need 2 <= k <= n-1");
  std::normal_distribution<double> gauss;
  Frame f;
  f.n = n;
  f.k = k;
  f.basis.resize(static_cast<std::size_t>(k) * n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (double& v : f.basis) v = gauss(rng);
    if (!orthonormalize(f)) continue;
    if (max_offdiag(f) > 1e-10) {
      if (!orthonormalize(f)) continue;
      if (max_offdiag(f) > 1e-10) continue;
    }
    return f;
  }
  throw numeric_error("sample_frame: orthonormalization failed");
}

Frame sample_tangent_frame(std::mt19937_64& rng, int n) {
  if (n < 3) throw config_error("sample_tangent_frame: n must be at least 3");
  std::normal_distribution<double> gauss;
  Frame f;
  f.n = n;
  f.k = 2;
  f.basis.resize(static_cast<std::size_t>(2) * n);
  std::vector<double> x = sample_unit_vector(rng, n);
  std::copy(x.begin(), x.end(), f.basis.begin());
  double* y = &f.basis[n];
  for (;;) {
    double dot = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] = gauss(rng);
      dot += y[i] * x[i];
    }
    for (int i = 0; i < n; ++i) {
      y[i] -= dot * x[i];
      sq += y[i] * y[i];
    }
    if (sq > 1e-24) {
      const double inv = 1.0 / std::sqrt(sq);
      for (int i = 0; i < n; ++i) y[i] *= inv;
      return f;
    }
  }
}

double geodesic_band_fraction(const SphereSet& set, const Frame& frame) {
  if (frame.k != 2)
    throw config_error("geodesic_band_fraction: frame must be 2-dimensional");
  if (frame.n != set.n)
    throw config_error("geodesic_band_fraction: dimension mismatch");
  const double r = std::hypot(frame.coord(0, 0), frame.coord(1, 0));
  const double T = set.threshold;
  switch (set.kind) {
    case SetKind::band:
      if (r <= T) return T == 0.0 ? 1.0 : 0.0;
      return (2.0 / kPi) * std::acos(T / r);
    case SetKind::central_band:
      if (r <= T) return 1.0;
      return 1.0 - (2.0 / kPi) * std::acos(T / r);
    case SetKind::hemisphere:
      return r > 0.0 ? 0.5 : 1.0;
  }
  throw config_error("geodesic_band_fraction: unknown set kind");
}

double subspace_section_estimate(const SphereSet& set, const Frame& frame) {
  if (frame.k < 2 || frame.k > frame.n)
    throw config_error("subspace_section_estimate: need 2 <= k <= n");
  if (frame.n != set.n)
    throw config_error("subspace_section_estimate: dimension mismatch");
  double rho_sq = 0.0;
  for (int i = 0; i < frame.k; ++i) {
    const double c = frame.coord(i, 0);
    rho_sq += c * c;
  }
  const double rho = std::sqrt(rho_sq);
  const double T = set.threshold;
  switch (set.kind) {
    case SetKind::band:
      if (rho <= T) return T == 0.0 ? 1.0 : 0.0;
      return band_measure(frame.k, std::min(1.0, T / rho));
    case SetKind::central_band:
      if (rho <= T) return 1.0;
      return 1.0 - band_measure(frame.k, std::min(1.0, T / rho));
    case SetKind::hemisphere:
      return rho > 0.0 ? 0.5 : 1.0;
  }
  throw config_error("subspace_section_estimate: unknown set kind");
}

double subspace_section_estimate(
    const std::function<bool(const std::vector<double>&)>& inside,
    const Frame& frame, std::size_t m, std::mt19937_64& rng) {
  if (m == 0)
    throw config_error("subspace_section_estimate: sample count is zero");
  if (frame.k < 2 || frame.k > frame.n)
    throw config_error("subspace_section_estimate: need 2 <= k <= n");
  std::vector<double> x(frame.n);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < m; ++s) {
    const std::vector<double> c = sample_unit_vector(rng, frame.k);
    for (int j = 0; j < frame.n; ++j) {
      double sum = 0.0;
      for (int i = 0; i < frame.k; ++i) sum += c[i] * frame.coord(i, j);
      x[j] = sum;
    }
    hits += inside(x);
  }
  return static_cast<double>(hits) / static_cast<double>(m);
}

Report run_sphere_experiment(const SphereConfig& cfg) {
  if (cfg.samples < 1) throw config_error("sphere: samples must be >= 1");
  if (cfg.bins < 1) throw config_error("sphere: bins must be >= 1");
  if (cfg.k < 2 || cfg.k > cfg.n - 1)
    throw config_error("sphere: need 2 <= k <= n-1");
  if (cfg.tangent_model && cfg.k != 2)
    throw config_error("sphere: the tangent model is a great-circle model");
  const SphereSet set =
      cfg.by_measure ? make_sphere_set_by_measure(cfg.set, cfg.n, cfg.measure)
                     : make_sphere_set(cfg.set, cfg.n, cfg.threshold);

  const std::vector<double> values = run_chunked<double>(
      cfg.seed, cfg.samples, cfg.workers, [&](std::mt19937_64& rng, std::size_t) {
        const Frame f = cfg.tangent_model ? sample_tangent_frame(rng, cfg.n)
                                          : sample_frame(rng, cfg.n, cfg.k);
        const double section = f.k == 2 ? geodesic_band_fraction(set, f)
                                        : subspace_section_estimate(set, f);
        return section / set.measure;
      });

  const Summary s = summarize(values);
  const Histogram h = make_histogram(values, cfg.bins);
  const double tail_thresholds[] = {0.25, 0.5, std::pow(2.0, -1.0 / 3.0), 1.0};

  Report rep;
  rep.json["experiment"] = "sphere";
  ordered_json config;
  config["n"] = cfg.n;
  config["k"] = cfg.k;
  config["set"] = set_kind_name(cfg.set);
  config["threshold"] = set.threshold;
  config["measure"] = set.measure;
  config["model"] = cfg.tangent_model ? "tangent" : "subspace";
  config["samples"] = cfg.samples;
  config["bins"] = cfg.bins;
  rep.json["config"] = config;
  rep.json["samples"] = s.count;
  rep.json["mean"] = s.mean;
  rep.json["variance"] = s.variance;
  rep.json["se_mean"] = s.se_mean;
  rep.json["se_variance"] = s.se_variance;
  rep.json["prob_zero"] = fraction_equal(values, 0.0);
  ordered_json tails = ordered_json::array();
  for (double t : tail_thresholds) {
    ordered_json row;
    row["threshold"] = t;
    row["prob"] = tail_fraction(values, t);
    tails.push_back(row);
  }
  rep.json["tail_probs"] = tails;
  rep.json["histogram"] = histogram_json(h);
  rep.json["seed"] = cfg.seed;
  rep.csv = histogram_csv(h);
  return rep;
}

Report run_sharpness_check(const SharpnessConfig& cfg) {
  if (cfg.dims.empty()) throw config_error("sharpness: no dimensions given");
  if (cfg.samples < 1) throw config_error("sharpness: samples must be >= 1");
  for (int n : cfg.dims)
    if (n < 4) throw config_error("sharpness: dimensions must be >= 4");

  Report rep;
  rep.json["experiment"] = "sharpness";
  ordered_json config;
  config["dims"] = cfg.dims;
  config["samples"] = cfg.samples;
  rep.json["config"] = config;
  ordered_json results = ordered_json::array();
  rep.csv = "n,prob_zero,oracle,se\n";

  for (int n : cfg.dims) {
    const SphereSet set = make_sphere_set_by_measure(SetKind::band, n, 0.5);
    const std::uint64_t sub_seed =
        derive_seed(cfg.seed, static_cast<std::uint64_t>(n));
    const std::vector<double> values = run_chunked<double>(
        sub_seed, cfg.samples, cfg.workers,
        [&](std::mt19937_64& rng, std::size_t) {
          const Frame f = sample_frame(rng, n, 2);
          return geodesic_band_fraction(set, f) / set.measure;
        });
    const double p0 = fraction_equal(values, 0.0);
    const double T = set.threshold;
    const double oracle = 1.0 - std::pow(1.0 - T * T, 0.5 * (n - 2));
    const double se =
        std::sqrt(p0 * (1.0 - p0) / static_cast<double>(cfg.samples));
    ordered_json row;
    row["n"] = n;
    row["prob_zero"] = p0;
    row["oracle"] = oracle;
    row["se"] = se;
    results.push_back(row);
    rep.csv += std::to_string(n) + "," + format_double(p0) + "," +
               format_double(oracle) + "," + format_double(se) + "\n";
  }
  rep.json["results"] = results;
  rep.json["seed"] = cfg.seed;
  return rep;
}

Report run_correlation_experiment(const CorrelationConfig& cfg) {
  if (cfg.n < 4) throw config_error("correlation: n must be >= 4");
  if (cfg.k < 2 || cfg.k > cfg.n - 2)
    throw config_error("correlation: need 2 <= k <= n-2");
  if (cfg.samples < 1) throw config_error("correlation: samples must be >= 1");
  if (cfg.bins < 1) throw config_error("correlation: bins must be >= 1");

  const int n = cfg.n;
  const int k = cfg.k;
  const std::vector<double> values = run_chunked<double>(
      cfg.seed, cfg.samples, cfg.workers, [&](std::mt19937_64& rng, std::size_t) {
        const Frame f = sample_frame(rng, n, k);
        double rho_sq = 0.0;
        for (int i = 0; i < k; ++i) {
          const double c = f.coord(i, 0);
          rho_sq += c * c;
        }
        const double rk = rho_sq / k - 1.0 / n;
        const double rnk = (1.0 - rho_sq) / (n - k) - 1.0 / n;
        return rk * rnk;
      });

  // eta_2 * ||f||^2 for f(x) = x_1^2 - 1/n.
  const double expected = correlation_eigenvalue(n, 1) * 2.0 * (n - 1.0) /
                          (static_cast<double>(n) * n * (n + 2.0));
  const Summary s = summarize(values);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const Histogram h = make_histogram(values, cfg.bins, *lo_it, *hi_it);

  Report rep;
  rep.json["experiment"] = "correlation";
  ordered_json config;
  config["n"] = n;
  config["k"] = k;
  config["samples"] = cfg.samples;
  config["bins"] = cfg.bins;
  rep.json["config"] = config;
  rep.json["samples"] = s.count;
  rep.json["mean"] = s.mean;
  rep.json["variance"] = s.variance;
  rep.json["se_mean"] = s.se_mean;
  rep.json["expected"] = expected;
  rep.json["histogram"] = histogram_json(h);
  rep.json["seed"] = cfg.seed;
  rep.csv = histogram_csv(h);
  return rep;
}

}  // namespace geosect
