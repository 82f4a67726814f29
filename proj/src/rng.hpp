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

#ifndef GEOSECT_RNG_HPP_
#define GEOSECT_RNG_HPP_

#include <cstdint>
#include <random>

namespace geosect {

// splitmix64 finalizer; decorrelates consecutive stream indices.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Independent engine for stream `index` of a run keyed by `seed`.  Streams
// are the unit of parallel work; results must never depend on which worker
// consumes which stream.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Sub-seed for a named phase of a run (per-dimension sweeps, set generation
// vs. sampling, ...).  Nonlinear in both arguments so sub-runs never share
// stream indices with each other or with the parent run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt + 0x632BE59BD9B4E019ULL));
}

}  // namespace geosect

#endif  // GEOSECT_RNG_HPP_
