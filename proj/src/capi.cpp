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

#include "geosect/geosect.h"

#include <string>

#include "convex_sim.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"
#include "sphere_sim.hpp"
#include "torus_sim.hpp"

struct gs_report {
  std::string json;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
gs_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GS_OK;
  } catch (const geosect::config_error& e) {
    g_last_error = e.what();
    return GS_ERR_CONFIG;
  } catch (const geosect::numeric_error& e) {
    g_last_error = e.what();
    return GS_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GS_ERR_INTERNAL;
  }
}

gs_report* package(const geosect::Report& rep) {
  return new gs_report{geosect::dump_json(rep.json), rep.csv};
}

void require(bool ok, const char* message) {
  if (!ok) throw geosect::config_error(message);
}

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

geosect::ZeroOneConfig convex_config(const gs_convex_config* cfg) {
  geosect::ZeroOneConfig c;
  c.body = geosect::body_kind_from_name(cfg->body ? cfg->body : "ball");
  c.n = cfg->n;
  c.samples = cfg->samples;
  c.seed = cfg->seed;
  c.bins = or_default(cfg->bins, 60);
  c.workers = cfg->workers;
  c.axis = cfg->axis;
  c.slab_tolerance = cfg->slab_tolerance > 0.0 ? cfg->slab_tolerance : 5e-3;
  return c;
}

}  // namespace

extern "C" {

const char* gs_last_error(void) { return g_last_error.c_str(); }

gs_status gs_eigenvalue_general(int n, int k, int ell, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::eigenvalue_general(n, k, ell);
  });
}

gs_status gs_eigenvalue_quadrature(int n, int k, int degree, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::eigenvalue_quadrature(n, k, degree);
  });
}

gs_status gs_eigenvalue_k2(int n, int ell, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::eigenvalue_k2(n, ell);
  });
}

gs_status gs_eigenvalue_ratio(int n, int k, int ell, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::eigenvalue_ratio(n, k, ell);
  });
}

gs_status gs_correlation_eigenvalue(int n, int ell, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::correlation_eigenvalue(n, ell);
  });
}

gs_status gs_variance_bound(int n, int k, double sigma_a, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::variance_bound(n, k, sigma_a);
  });
}

gs_status gs_band_measure(int n, double threshold, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::band_measure(n, threshold);
  });
}

gs_status gs_band_threshold(int n, double target, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::band_threshold(n, target);
  });
}

gs_status gs_tau(int k, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::tau(k);
  });
}

gs_status gs_gegenbauer(int n, int ell, double t, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = geosect::gegenbauer_eval(n, ell, t);
  });
}

const char* gs_report_json(const gs_report* r) {
  return r ? r->json.c_str() : "";
}

const char* gs_report_csv(const gs_report* r) {
  return r ? r->csv.c_str() : "";
}

void gs_report_free(gs_report* r) { delete r; }

gs_status gs_spectrum_table(int n, int k, int lmax, gs_report** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = package(geosect::spectrum_report(n, k, lmax));
  });
}

gs_status gs_run_sphere(const gs_sphere_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    geosect::SphereConfig c;
    c.n = cfg->n;
    c.k = cfg->k;
    c.set = geosect::set_kind_from_name(cfg->set ? cfg->set : "band");
    c.by_measure = cfg->by_measure != 0;
    c.measure = cfg->measure;
    c.threshold = cfg->threshold;
    c.tangent_model = cfg->tangent_model != 0;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.bins = or_default(cfg->bins, 60);
    c.workers = cfg->workers;
    *out = package(geosect::run_sphere_experiment(c));
  });
}

gs_status gs_run_sharpness(const gs_sharpness_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    require(cfg->dims != nullptr && cfg->ndims > 0, "no dimensions given");
    geosect::SharpnessConfig c;
    c.dims.assign(cfg->dims, cfg->dims + cfg->ndims);
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.workers = cfg->workers;
    *out = package(geosect::run_sharpness_check(c));
  });
}

gs_status gs_run_correlation(const gs_correlation_config* cfg,
                             gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    geosect::CorrelationConfig c;
    c.n = cfg->n;
    c.k = cfg->k;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.bins = or_default(cfg->bins, 60);
    c.workers = cfg->workers;
    *out = package(geosect::run_correlation_experiment(c));
  });
}

gs_status gs_run_zero_one(const gs_convex_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    *out = package(geosect::run_zero_one_experiment(convex_config(cfg)));
  });
}

gs_status gs_run_tails(const gs_convex_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    const geosect::ZeroOneConfig z = convex_config(cfg);
    geosect::TailConfig c;
    c.body = z.body;
    c.n = z.n;
    c.samples = z.samples;
    c.seed = z.seed;
    c.workers = z.workers;
    c.axis = z.axis;
    c.slab_tolerance = z.slab_tolerance;
    *out = package(geosect::run_tail_checks(c));
  });
}

gs_status gs_run_ellipse(const gs_ellipse_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    geosect::EllipseConfig c;
    c.n = cfg->n;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.bins = or_default(cfg->bins, 60);
    c.grid = or_default(cfg->grid, 512);
    c.workers = cfg->workers;
    *out = package(geosect::run_ellipse_experiment(c));
  });
}

gs_status gs_run_torus(const gs_torus_config* cfg, gs_report** out) {
  return wrap([&] {
    require(cfg != nullptr && out != nullptr, "null pointer");
    geosect::TorusRunConfig c;
    c.p = cfg->p;
    c.n = cfg->n;
    c.exhaustive = cfg->exhaustive != 0;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.workers = cfg->workers;
    *out = package(geosect::run_torus_experiment(c));
  });
}

gs_status gs_torus_eigen_check(int64_t p, int n, int exact, gs_report** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const geosect::Torus t = geosect::make_torus(p, n);
    *out = package(geosect::eigen_report(t, exact != 0));
  });
}

}  // extern "C"
