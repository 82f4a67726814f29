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

// Command-line front door.  Talks to the library exclusively through the C
// API in geosect/geosect.h; all it adds is flag parsing and output routing.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geosect/geosect.h"
#include "json.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct OutputOptions {
  std::string format = "json";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", out.path,
                  "Output file (default: $GEOSECT_OUTPUT_DIR/<command>.<ext>, "
                  "else stdout)");
}

int emit_error(int code, const std::string& message) {
  const char* type = code == GS_ERR_CONFIG    ? "config"
                     : code == GS_ERR_NUMERIC ? "numeric"
                                              : "internal";
  nlohmann::ordered_json err;
  err["error"]["code"] = code;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  std::cerr << err.dump() << "\n";
  return code;
}

int emit_report(gs_report* rep, const OutputOptions& out,
                const std::string& command) {
  const std::string payload =
      out.format == "csv" ? gs_report_csv(rep) : gs_report_json(rep);
  gs_report_free(rep);

  std::string path = out.path;
  if (path.empty()) {
    if (const char* dir = std::getenv("GEOSECT_OUTPUT_DIR"))
      path = std::string(dir) + "/" + command + "." + out.format;
  }
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  f << payload;
  f.close();
  if (!f) return emit_error(GS_ERR_CONFIG, "cannot write output file: " + path);
  return 0;
}

int finish(gs_status st, gs_report* rep, const OutputOptions& out,
           const std::string& command) {
  if (st != GS_OK) return emit_error(st, gs_last_error());
  return emit_report(rep, out, command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon-transform spectra and intersection sampling experiments"};
  app.require_subcommand(1);

  // spectrum
  struct {
    int n = 0, k = 2, lmax = 0;
    OutputOptions out;
  } spec;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalue table of S_k on even harmonic degrees");
  spectrum->add_option("--n", spec.n, "Ambient dimension")->required();
  spectrum->add_option("--k", spec.k, "Subspace dimension")
      ->capture_default_str();
  spectrum->add_option("--lmax", spec.lmax, "Last half-degree index")
      ->required();
  add_output_options(spectrum, spec.out);

  // sphere
  struct {
    gs_sphere_config cfg{};
    std::string set = "band";
    double measure = 0.5, threshold = 0.0;
    bool tangent = false;
    OutputOptions out;
  } sph;
  sph.cfg.k = 2;
  sph.cfg.samples = 100000;
  sph.cfg.seed = kDefaultSeed;
  sph.cfg.bins = 60;
  sph.cfg.workers = 1;
  CLI::App* sphere = app.add_subcommand(
      "sphere", "Section measure of a symmetric set over random subspaces");
  sphere->add_option("--n", sph.cfg.n, "Ambient dimension")->required();
  sphere->add_option("--k", sph.cfg.k, "Subspace dimension")
      ->capture_default_str();
  sphere->add_option("--set", sph.set, "band | central_band | hemisphere")
      ->capture_default_str();
  CLI::Option* opt_measure = sphere->add_option(
      "--measure", sph.measure, "Target set measure (solves the threshold)");
  CLI::Option* opt_threshold =
      sphere->add_option("--threshold", sph.threshold, "Band threshold");
  opt_measure->excludes(opt_threshold);
  sphere->add_flag("--tangent", sph.tangent,
                   "Sample circles as point plus unit tangent");
  sphere->add_option("--samples", sph.cfg.samples, "Sample count")
      ->capture_default_str();
  sphere->add_option("--seed", sph.cfg.seed, "RNG seed")->capture_default_str();
  sphere->add_option("--bins", sph.cfg.bins, "Histogram bins")
      ->capture_default_str();
  sphere->add_option("--workers", sph.cfg.workers, "Worker threads")
      ->capture_default_str();
  add_output_options(sphere, sph.out);

  // sharpness
  struct {
    std::vector<int> dims{100, 1000};
    gs_sharpness_config cfg{};
    OutputOptions out;
  } sharp;
  sharp.cfg.samples = 100000;
  sharp.cfg.seed = kDefaultSeed;
  sharp.cfg.workers = 1;
  CLI::App* sharpness = app.add_subcommand(
      "sharpness", "P(X = 0) of the half-measure band across dimensions");
  sharpness->add_option("--dims", sharp.dims, "Dimensions to test")
      ->capture_default_str();
  sharpness->add_option("--samples", sharp.cfg.samples, "Samples per dimension")
      ->capture_default_str();
  sharpness->add_option("--seed", sharp.cfg.seed, "RNG seed")
      ->capture_default_str();
  sharpness->add_option("--workers", sharp.cfg.workers, "Worker threads")
      ->capture_default_str();
  add_output_options(sharpness, sharp.out);

  // correlation
  struct {
    gs_correlation_config cfg{};
    OutputOptions out;
  } corr;
  corr.cfg.k = 2;
  corr.cfg.samples = 1000000;
  corr.cfg.seed = kDefaultSeed;
  corr.cfg.bins = 60;
  corr.cfg.workers = 1;
  CLI::App* correlation = app.add_subcommand(
      "correlation", "E[R_k f(H) R_{n-k} f(H_perp)] for f = x_1^2 - 1/n");
  correlation->add_option("--n", corr.cfg.n, "Ambient dimension")->required();
  correlation->add_option("--k", corr.cfg.k, "Subspace dimension")
      ->capture_default_str();
  correlation->add_option("--samples", corr.cfg.samples, "Frame count")
      ->capture_default_str();
  correlation->add_option("--seed", corr.cfg.seed, "RNG seed")
      ->capture_default_str();
  correlation->add_option("--bins", corr.cfg.bins, "Histogram bins")
      ->capture_default_str();
  correlation->add_option("--workers", corr.cfg.workers, "Worker threads")
      ->capture_default_str();
  add_output_options(correlation, corr.out);

  // convex
  struct {
    gs_convex_config cfg{};
    std::string body = "ball";
    bool tails = false;
    OutputOptions out;
  } cvx;
  cvx.cfg.samples = 3000;
  cvx.cfg.seed = kDefaultSeed;
  cvx.cfg.bins = 60;
  cvx.cfg.workers = 1;
  cvx.cfg.axis = 0;
  cvx.cfg.slab_tolerance = 5e-3;
  CLI::App* convex = app.add_subcommand(
      "convex", "Zero-one law and tail checks for hit-and-run chords");
  convex->add_option("--body", cvx.body, "ball | cube | simplex")
      ->capture_default_str();
  convex->add_option("--n", cvx.cfg.n, "Dimension")->required();
  convex->add_option("--samples", cvx.cfg.samples, "Line count")
      ->capture_default_str();
  convex->add_option("--seed", cvx.cfg.seed, "RNG seed")->capture_default_str();
  convex->add_option("--bins", cvx.cfg.bins, "Histogram bins")
      ->capture_default_str();
  convex->add_option("--workers", cvx.cfg.workers, "Worker threads")
      ->capture_default_str();
  convex->add_option("--axis", cvx.cfg.axis, "Slab direction e_axis")
      ->capture_default_str();
  convex->add_option("--slab-tol", cvx.cfg.slab_tolerance,
                     "Tolerance on the slab volume fraction")
      ->capture_default_str();
  convex->add_flag("--tails", cvx.tails,
                   "Run the chord/direction/density tail checks instead");
  add_output_options(convex, cvx.out);

  // ellipse
  struct {
    gs_ellipse_config cfg{};
    OutputOptions out;
  } ell;
  ell.cfg.samples = 10000;
  ell.cfg.seed = kDefaultSeed;
  ell.cfg.bins = 60;
  ell.cfg.grid = 512;
  ell.cfg.workers = 1;
  CLI::App* ellipse = app.add_subcommand(
      "ellipse", "Half-measure sampling along random pushforward ellipses");
  ellipse->add_option("--n", ell.cfg.n, "Simplex dimension")->required();
  ellipse->add_option("--samples", ell.cfg.samples, "Ellipse count")
      ->capture_default_str();
  ellipse->add_option("--seed", ell.cfg.seed, "RNG seed")->capture_default_str();
  ellipse->add_option("--bins", ell.cfg.bins, "Histogram bins")
      ->capture_default_str();
  ellipse->add_option("--grid", ell.cfg.grid,
                      "Curve-parameter points per ellipse")
      ->capture_default_str();
  ellipse->add_option("--workers", ell.cfg.workers, "Worker threads")
      ->capture_default_str();
  add_output_options(ellipse, ell.out);

  // torus
  struct {
    gs_torus_config cfg{};
    std::string mode = "exhaustive";
    bool eigen = false, exact = false;
    OutputOptions out;
  } tor;
  tor.cfg.samples = 1000000;
  tor.cfg.seed = kDefaultSeed;
  tor.cfg.workers = 1;
  CLI::App* torus = app.add_subcommand(
      "torus", "Arithmetic-progression sampling on (Z/pZ)^n");
  torus->add_option("--p", tor.cfg.p, "Odd prime modulus")->required();
  torus->add_option("--n", tor.cfg.n, "Dimension")->required();
  torus->add_option("--mode", tor.mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  torus->add_option("--samples", tor.cfg.samples, "Progressions (sampled mode)")
      ->capture_default_str();
  torus->add_option("--seed", tor.cfg.seed, "RNG seed")->capture_default_str();
  torus->add_option("--workers", tor.cfg.workers, "Worker threads")
      ->capture_default_str();
  torus->add_flag("--eigen", tor.eigen, "Check the spectrum of S instead");
  torus->add_flag("--exact", tor.exact,
                  "Integer-counting mode for --eigen");
  add_output_options(torus, tor.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::ostringstream dummy;
    app.exit(e, dummy, dummy);
    return emit_error(GS_ERR_CONFIG, e.what());
  }

  gs_report* rep = nullptr;
  if (spectrum->parsed()) {
    const gs_status st = gs_spectrum_table(spec.n, spec.k, spec.lmax, &rep);
    return finish(st, rep, spec.out, "spectrum");
  }
  if (sphere->parsed()) {
    sph.cfg.set = sph.set.c_str();
    sph.cfg.by_measure = opt_threshold->count() == 0;
    sph.cfg.measure = sph.measure;
    sph.cfg.threshold = sph.threshold;
    sph.cfg.tangent_model = sph.tangent;
    const gs_status st = gs_run_sphere(&sph.cfg, &rep);
    return finish(st, rep, sph.out, "sphere");
  }
  if (sharpness->parsed()) {
    sharp.cfg.dims = sharp.dims.data();
    sharp.cfg.ndims = static_cast<int>(sharp.dims.size());
    const gs_status st = gs_run_sharpness(&sharp.cfg, &rep);
    return finish(st, rep, sharp.out, "sharpness");
  }
  if (correlation->parsed()) {
    const gs_status st = gs_run_correlation(&corr.cfg, &rep);
    return finish(st, rep, corr.out, "correlation");
  }
  if (convex->parsed()) {
    cvx.cfg.body = cvx.body.c_str();
    const gs_status st = cvx.tails ? gs_run_tails(&cvx.cfg, &rep)
                                   : gs_run_zero_one(&cvx.cfg, &rep);
    return finish(st, rep, cvx.out, "convex");
  }
  if (ellipse->parsed()) {
    const gs_status st = gs_run_ellipse(&ell.cfg, &rep);
    return finish(st, rep, ell.out, "ellipse");
  }
  if (torus->parsed()) {
    if (tor.eigen) {
      const gs_status st =
          gs_torus_eigen_check(tor.cfg.p, tor.cfg.n, tor.exact, &rep);
      return finish(st, rep, tor.out, "torus");
    }
    tor.cfg.exhaustive = tor.mode == "exhaustive";
    const gs_status st = gs_run_torus(&tor.cfg, &rep);
    return finish(st, rep, tor.out, "torus");
  }
  return emit_error(GS_ERR_CONFIG, "no subcommand given");
}
