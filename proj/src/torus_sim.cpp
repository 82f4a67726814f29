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

#include "torus_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace geosect {

namespace {

constexpr long long kMaxSize = 100000000;     // dense table limit
constexpr long long kWorkBudget = 2000000000; // p p^n (p^n - 1) sweeps
constexpr std::uint64_t kSetSalt = 0x414E4F4E;  // set-generation phase
constexpr double kTwoPi = 6.283185307179586476925286766559005768;

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long long exhaustive_work(const Torus& t) {
  // p * size * (size - 1), saturating.
  const long long pairs = t.size > kWorkBudget / t.size ? kWorkBudget + 1
                                                        : t.size * (t.size - 1);
  return pairs > kWorkBudget / t.p ? kWorkBudget + 1 : pairs * t.p;
}

// In-place step x += b over the digit representation; returns the new index.
long long orbit_step(const Torus& t, std::vector<long long>& x,
                     const std::vector<long long>& b,
                     const std::vector<long long>& pw) {
  long long idx = 0;
  for (int i = 0; i < t.n; ++i) {
    x[i] += b[i];
    if (x[i] >= t.p) x[i] -= t.p;
    idx += x[i] * pw[i];
  }
  return idx;
}

std::vector<long long> powers(const Torus& t) {
  std::vector<long long> pw(t.n);
  long long v = 1;
  for (int i = 0; i < t.n; ++i) {
    pw[i] = v;
    v *= t.p;
  }
  return pw;
}

}  // namespace

Torus make_torus(long long p, int n) {
  if (!is_odd_prime(p)) throw config_error("torus: p must be an odd prime");
  if (n < 1) throw config_error("torus: n must be >= 1");
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > kMaxSize / p)
      throw config_error("torus: p^n exceeds the table budget");
    size *= p;
  }
  return Torus{p, n, size};
}

std::vector<long long> torus_digits(const Torus& t, long long index) {
  if (index < 0 || index >= t.size)
    throw config_error("torus: index out of range");
  std::vector<long long> d(t.n);
  for (int i = 0; i < t.n; ++i) {
    d[i] = index % t.p;
    index /= t.p;
  }
  return d;
}

long long torus_index(const Torus& t, const std::vector<long long>& digits) {
  if (static_cast<int>(digits.size()) != t.n)
    throw config_error("torus: digit count mismatch");
  long long idx = 0, pw = 1;
  for (int i = 0; i < t.n; ++i) {
    if (digits[i] < 0 || digits[i] >= t.p)
      throw config_error("torus: digit out of range");
    idx += digits[i] * pw;
    pw *= t.p;
  }
  return idx;
}

double radon_ap(const Torus& t, const std::vector<double>& f, long long a,
                long long b) {
  if (static_cast<long long>(f.size()) != t.size)
    throw config_error("radon_ap: table length mismatch");
  if (a < 0 || a >= t.size) throw config_error("radon_ap: a out of range");
  if (b <= 0 || b >= t.size)
    throw config_error("radon_ap: b must be a nonzero point");
  const std::vector<long long> pw = powers(t);
  const std::vector<long long> bd = torus_digits(t, b);
  std::vector<long long> x = torus_digits(t, a);
  double sum = f[a];
  long long idx = a;
  for (long long j = 1; j < t.p; ++j) {
    idx = orbit_step(t, x, bd, pw);
    sum += f[idx];
  }
  return sum / static_cast<double>(t.p);
}

std::vector<double> apply_S(const Torus& t, const std::vector<double>& f) {
  if (static_cast<long long>(f.size()) != t.size)
    throw config_error("apply_S: table length mismatch");
  if (exhaustive_work(t) > kWorkBudget)
    throw config_error("apply_S: p p^n (p^n - 1) exceeds the work budget");
  const std::vector<long long> pw = powers(t);
  std::vector<double> out(t.size, 0.0);
  std::vector<long long> bd, x;
  for (long long b = 1; b < t.size; ++b) {
    bd = torus_digits(t, b);
    for (long long a = 0; a < t.size; ++a) {
      x = torus_digits(t, a);
      double sum = f[a];
      long long idx = a;
      for (long long j = 1; j < t.p; ++j) {
        idx = orbit_step(t, x, bd, pw);
        sum += f[idx];
      }
      out[a] += sum;
    }
  }
  const double scale = 1.0 / (static_cast<double>(t.p) *
                              static_cast<double>(t.size - 1));
  for (double& v : out) v *= scale;
  return out;
}

EigenCheck eigen_check(const Torus& t, bool exact_mode) {
  EigenCheck ec;
  ec.exact = exact_mode;
  ec.lambda_num = t.size / t.p - 1;  // p^{n-1} - 1
  ec.lambda_den = t.size - 1;
  if (exhaustive_work(t) > kWorkBudget)
    throw config_error("eigen_check: brute-force budget exceeded");

  if (exact_mode) {
    // cnt[d] = #{(b != 0, j) : j b = d}.  cnt[0] = p^n - 1 (the j = 0 terms;
    // j b != 0 when both are nonzero over a prime field) and cnt[d] = p - 1
    // otherwise (b = j^{-1} d).  If that pattern holds, the double sum in S
    // collapses and S is exactly (p^n - p)/(p (p^n - 1)) on mean-zero f,
    // which equals lambda_num/lambda_den identically.
    const std::vector<long long> pw = powers(t);
    std::vector<long long> cnt(t.size, 0);
    std::vector<long long> x(t.n, 0);
    for (long long b = 1; b < t.size; ++b) {
      const std::vector<long long> bd = torus_digits(t, b);
      std::fill(x.begin(), x.end(), 0);
      ++cnt[0];
      for (long long j = 1; j < t.p; ++j) ++cnt[orbit_step(t, x, bd, pw)];
    }
    bool ok = cnt[0] == t.size - 1;
    for (long long d = 1; d < t.size && ok; ++d) ok = cnt[d] == t.p - 1;
    ok = ok && (t.size - t.p) * ec.lambda_den ==
                   t.p * (t.size - 1) * ec.lambda_num;
    ec.verified = ok;
    return ec;
  }

  // Float mode: Rayleigh ratio and residual of S on every character
  // f_y(x) = exp(2 pi i <x, y> / p), handled as real/imaginary pairs.
  if (t.size > kWorkBudget / std::max<long long>(1, exhaustive_work(t)))
    throw config_error("eigen_check: character sweep exceeds the work budget");
  std::vector<double> cosv(t.p), sinv(t.p);
  for (long long k = 0; k < t.p; ++k) {
    cosv[k] = std::cos(kTwoPi * k / t.p);
    sinv[k] = std::sin(kTwoPi * k / t.p);
  }
  const double expected_offdiag =
      static_cast<double>(ec.lambda_num) / static_cast<double>(ec.lambda_den);
  std::vector<double> fre(t.size), fim(t.size);
  ec.verified = true;
  for (long long y = 0; y < t.size; ++y) {
    const std::vector<long long> yd = torus_digits(t, y);
    for (long long xi = 0; xi < t.size; ++xi) {
      const std::vector<long long> xd = torus_digits(t, xi);
      long long phase = 0;
      for (int i = 0; i < t.n; ++i) phase = (phase + xd[i] * yd[i]) % t.p;
      fre[xi] = cosv[phase];
      fim[xi] = sinv[phase];
    }
    const std::vector<double> sre = apply_S(t, fre);
    const std::vector<double> sim = apply_S(t, fim);
    double num = 0.0, den = 0.0;
    for (long long xi = 0; xi < t.size; ++xi) {
      num += sre[xi] * fre[xi] + sim[xi] * fim[xi];
      den += fre[xi] * fre[xi] + fim[xi] * fim[xi];
    }
    const double ratio = num / den;
    double res = 0.0;
    for (long long xi = 0; xi < t.size; ++xi) {
      res = std::max(res, std::abs(sre[xi] - ratio * fre[xi]));
      res = std::max(res, std::abs(sim[xi] - ratio * fim[xi]));
    }
    const double expected = y == 0 ? 1.0 : expected_offdiag;
    ec.max_ratio_error = std::max(ec.max_ratio_error, std::abs(ratio - expected));
    ec.max_residual = std::max(ec.max_residual, res);
    ec.table.emplace_back(y, ratio);
  }
  ec.verified = ec.max_ratio_error <= 1e-12 && ec.max_residual <= 1e-12;
  return ec;
}

Report eigen_report(const Torus& t, bool exact_mode) {
  const EigenCheck ec = eigen_check(t, exact_mode);
  Report rep;
  rep.json["experiment"] = "torus_eigen";
  rep.json["p"] = t.p;
  rep.json["n"] = t.n;
  rep.json["mode"] = ec.exact ? "exact" : "float";
  rep.json["verified"] = ec.verified;
  ordered_json lambda;
  lambda["num"] = ec.lambda_num;
  lambda["den"] = ec.lambda_den;
  lambda["value"] = static_cast<double>(ec.lambda_num) /
                    static_cast<double>(ec.lambda_den);
  rep.json["lambda_sq"] = lambda;
  rep.csv = "y,ratio\n";
  if (!ec.exact) {
    rep.json["max_ratio_error"] = ec.max_ratio_error;
    rep.json["max_residual"] = ec.max_residual;
    ordered_json table = ordered_json::array();
    for (const auto& [y, ratio] : ec.table) {
      ordered_json row;
      row["y"] = y;
      row["ratio"] = ratio;
      table.push_back(row);
      rep.csv += std::to_string(y) + "," + format_double(ratio) + "\n";
    }
    rep.json["table"] = table;
  }
  return rep;
}

namespace {

// Uniform half-density subset: mark random indices until floor(size/2) are
// set.  Membership is the only thing downstream code reads.
std::vector<bool> random_half_set(const Torus& t, std::uint64_t seed) {
  std::vector<bool> in_a(t.size, false);
  std::mt19937_64 rng = stream_engine(seed, 0);
  std::uniform_int_distribution<long long> pick(0, t.size - 1);
  long long marked = 0;
  const long long target = t.size / 2;
  while (marked < target) {
    const long long idx = pick(rng);
    if (!in_a[idx]) {
      in_a[idx] = true;
      ++marked;
    }
  }
  return in_a;
}

long long count_hits(const Torus& t, const std::vector<bool>& in_a,
                     long long a, const std::vector<long long>& bd,
                     const std::vector<long long>& pw,
                     std::vector<long long>& scratch) {
  for (int i = 0; i < t.n; ++i) {
    scratch[i] = a % t.p;
    a /= t.p;
  }
  long long idx = 0;
  for (int i = 0; i < t.n; ++i) idx += scratch[i] * pw[i];
  long long hits = in_a[idx] ? 1 : 0;
  for (long long j = 1; j < t.p; ++j)
    hits += in_a[orbit_step(t, scratch, bd, pw)] ? 1 : 0;
  return hits;
}

}  // namespace

Report run_torus_experiment(const TorusRunConfig& cfg) {
  const Torus t = make_torus(cfg.p, cfg.n);
  if (!cfg.exhaustive && cfg.samples < 1)
    throw config_error("torus: sampled mode needs samples >= 1");
  if (cfg.exhaustive && exhaustive_work(t) > kWorkBudget)
    throw config_error("torus: exhaustive sweep exceeds the work budget");

  const std::vector<bool> in_a = random_half_set(t, derive_seed(cfg.seed, kSetSalt));
  const long long set_size = t.size / 2;
  const std::vector<long long> pw = powers(t);
  const double threshold = std::sqrt(0.5 * t.p);

  // Integer event test: |N - p/2| >= sqrt(p/2)  <=>  (2N - p)^2 >= 2p.
  auto exceeds = [&](long long hits) {
    const long long d = 2 * hits - t.p;
    return d * d >= 2 * t.p;
  };

  std::vector<long long> hist(t.p + 1, 0);
  long long exceed = 0, sum_n = 0, sum_n2 = 0, total = 0;

  if (cfg.exhaustive) {
    struct Acc {
      std::vector<long long> hist;
      long long exceed = 0, sum_n = 0, sum_n2 = 0;
    };
    const long long total_b = t.size - 1;
    constexpr long long kBChunk = 64;
    const long long nchunks = (total_b + kBChunk - 1) / kBChunk;
    const int nw = std::max(1, cfg.workers);
    std::vector<Acc> accs(nw);
    std::atomic<long long> next{0};
    auto sweep = [&](Acc& acc) {
      acc.hist.assign(t.p + 1, 0);
      std::vector<long long> scratch(t.n);
      for (;;) {
        const long long c = next.fetch_add(1);
        if (c >= nchunks) return;
        const long long blo = 1 + c * kBChunk;
        const long long bhi = std::min(t.size, blo + kBChunk);
        for (long long b = blo; b < bhi; ++b) {
          const std::vector<long long> bd = torus_digits(t, b);
          for (long long a = 0; a < t.size; ++a) {
            const long long hits = count_hits(t, in_a, a, bd, pw, scratch);
            ++acc.hist[hits];
            acc.sum_n += hits;
            acc.sum_n2 += hits * hits;
            if (exceeds(hits)) ++acc.exceed;
          }
        }
      }
    };
    if (nw == 1) {
      sweep(accs[0]);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < nw; ++i) pool.emplace_back(sweep, std::ref(accs[i]));
      for (auto& th : pool) th.join();
    }
    for (const Acc& acc : accs) {
      for (long long k = 0; k <= t.p; ++k) hist[k] += acc.hist[k];
      exceed += acc.exceed;
      sum_n += acc.sum_n;
      sum_n2 += acc.sum_n2;
    }
    total = t.size * (t.size - 1);
  } else {
    const std::vector<double> values = run_chunked<double>(
        cfg.seed, cfg.samples, cfg.workers,
        [&](std::mt19937_64& rng, std::size_t) {
          std::uniform_int_distribution<long long> pick_a(0, t.size - 1);
          std::uniform_int_distribution<long long> pick_b(1, t.size - 1);
          const long long a = pick_a(rng);
          const long long b = pick_b(rng);
          std::vector<long long> scratch(t.n);
          return static_cast<double>(
              count_hits(t, in_a, a, torus_digits(t, b), pw, scratch));
        });
    for (double v : values) {
      const long long hits = std::llround(v);
      ++hist[hits];
      sum_n += hits;
      sum_n2 += hits * hits;
      if (exceeds(hits)) ++exceed;
    }
    total = static_cast<long long>(values.size());
  }

  const double totd = static_cast<double>(total);
  const double probability = static_cast<double>(exceed) / totd;
  const double mean_n = static_cast<double>(sum_n) / totd;
  const double var_n = static_cast<double>(sum_n2) / totd - mean_n * mean_n;
  const double half_p = 0.5 * t.p;
  // E[(N - p/2)^2] / (p/2), the Chebyshev companion of the literal bound.
  const double chebyshev =
      (static_cast<double>(sum_n2) - static_cast<double>(t.p) * sum_n +
       totd * half_p * half_p) /
      totd / half_p;
  const double m0 = static_cast<double>(set_size) / static_cast<double>(t.size);
  const double lambda_sq = static_cast<double>(t.size / t.p - 1) /
                           static_cast<double>(t.size - 1);
  // Exact second-moment identity: S is the scalar lambda^2 on mean-zero
  // functions, so E[(N/p - m0)^2] = lambda^2 m0 (1 - m0) in exhaustive mode.
  const double second_moment =
      (static_cast<double>(sum_n2) -
       2.0 * t.p * m0 * static_cast<double>(sum_n) +
       totd * t.p * m0 * t.p * m0) /
      totd / (static_cast<double>(t.p) * t.p);

  Histogram h;
  h.lo = -0.5;
  h.hi = t.p + 0.5;
  h.counts.assign(hist.begin(), hist.end());

  Report rep;
  rep.json["p"] = t.p;
  rep.json["n"] = t.n;
  rep.json["mode"] = cfg.exhaustive ? "exhaustive" : "sampled";
  rep.json["probability"] = probability;
  rep.json["threshold"] = threshold;
  rep.json["seed"] = cfg.seed;
  rep.json["size"] = t.size;
  rep.json["set_size"] = set_size;
  rep.json[cfg.exhaustive ? "pairs" : "samples"] = total;
  rep.json["mean_count"] = mean_n;
  rep.json["variance_count"] = var_n;
  rep.json["literal_bound"] = 0.5;
  rep.json["chebyshev_bound"] = chebyshev;
  rep.json["second_moment"] = second_moment;
  rep.json["spectral_second_moment"] = lambda_sq * m0 * (1.0 - m0);
  ordered_json lambda;
  lambda["num"] = t.size / t.p - 1;
  lambda["den"] = t.size - 1;
  lambda["value"] = lambda_sq;
  rep.json["lambda_sq"] = lambda;
  if (!cfg.exhaustive)
    rep.json["se"] = std::sqrt(probability * (1.0 - probability) / totd);
  rep.json["histogram"] = histogram_json(h);
  rep.csv = histogram_csv(h);
  return rep;
}

}  // namespace geosect
