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

#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "errors.hpp"

namespace geosect {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Histogram make_histogram(const std::vector<double>& values, int bins, double lo,
                         double min_hi) {
  if (bins < 1) throw config_error("make_histogram: bins must be positive");
  Histogram h;
  h.lo = lo;
  h.hi = min_hi;
  for (double v : values) h.hi = std::max(h.hi, v);
  if (h.hi <= h.lo) h.hi = h.lo + 1.0;
  h.counts.assign(bins, 0);
  const double width = (h.hi - h.lo) / bins;
  for (double v : values) {
    int idx = static_cast<int>((v - h.lo) / width);
    idx = std::clamp(idx, 0, bins - 1);
    ++h.counts[idx];
  }
  return h;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_left,bin_right,count\n";
  const int bins = static_cast<int>(h.counts.size());
  const double width = (h.hi - h.lo) / bins;
  for (int i = 0; i < bins; ++i) {
    out += format_double(h.lo + i * width);
    out += ',';
    out += format_double(i + 1 == bins ? h.hi : h.lo + (i + 1) * width);
    out += ',';
    out += std::to_string(h.counts[i]);
    out += '\n';
  }
  return out;
}

ordered_json histogram_json(const Histogram& h) {
  const int bins = static_cast<int>(h.counts.size());
  const double width = (h.hi - h.lo) / bins;
  std::vector<double> edges(bins + 1);
  for (int i = 0; i < bins; ++i) edges[i] = h.lo + i * width;
  edges[bins] = h.hi;
  ordered_json j;
  j["bin_edges"] = edges;
  j["counts"] = h.counts;
  return j;
}

double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  s.count = values.size();
  if (s.count == 0) return s;
  s.mean = kahan_sum(values) / static_cast<double>(s.count);
  double m2 = 0.0, c2 = 0.0, m4 = 0.0, c4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    const double d2 = d * d;
    double y = d2 - c2;
    double t = m2 + y;
    c2 = (t - m2) - y;
    m2 = t;
    y = d2 * d2 - c4;
    t = m4 + y;
    c4 = (t - m4) - y;
    m4 = t;
  }
  const double nd = static_cast<double>(s.count);
  s.m4 = m4 / nd;
  s.variance = s.count > 1 ? m2 / (nd - 1.0) : 0.0;
  s.se_mean = std::sqrt(std::max(0.0, s.variance / nd));
  if (s.count > 3) {
    const double var_of_var =
        (s.m4 - s.variance * s.variance * (nd - 3.0) / (nd - 1.0)) / nd;
    s.se_variance = std::sqrt(std::max(0.0, var_of_var));
  }
  return s;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace geosect
