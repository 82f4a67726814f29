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

#ifndef GEOSECT_REPORT_HPP_
#define GEOSECT_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace geosect {

using ordered_json = nlohmann::ordered_json;

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<long long> counts;
};

// Uniform bins over [lo, max(min_hi, observed max)]; the top edge is
// inclusive so the maximum lands in the last bin.
Histogram make_histogram(const std::vector<double>& values, int bins,
                         double lo = 0.0, double min_hi = 2.0);

std::string histogram_csv(const Histogram& h);
ordered_json histogram_json(const Histogram& h);

// Sample statistics with two-pass central moments and compensated sums, so
// results do not depend on how sampling was parallelized.
struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double m4 = 0.0;        // central fourth moment
  double se_mean = 0.0;
  double se_variance = 0.0;
};
Summary summarize(const std::vector<double>& values);

double kahan_sum(const std::vector<double>& values);

// A finished experiment: canonical JSON plus a CSV side table (histogram or
// rows, depending on the experiment).
struct Report {
  ordered_json json;
  std::string csv;
};

// Canonical serialization used everywhere a report leaves the process;
// byte-stable for identical inputs.
std::string dump_json(const ordered_json& j);

}  // namespace geosect

#endif  // GEOSECT_REPORT_HPP_
