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

#ifndef GEOSECT_PARALLEL_HPP_
#define GEOSECT_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "rng.hpp"

namespace geosect {

// Samples are produced in fixed-size chunks, one RNG stream per chunk, and
// written into a preallocated vector.  Workers race only for chunk indices,
// so the output is identical for every worker count; downstream reductions
// then run sequentially in index order.
inline constexpr std::size_t kChunkSize = 4096;

template <class T, class Fn>
std::vector<T> run_chunked(std::uint64_t seed, std::size_t count, int workers,
                           Fn&& fn) {
  std::vector<T> values(count);
  const std::size_t nchunks = (count + kChunkSize - 1) / kChunkSize;
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      std::mt19937_64 rng = stream_engine(seed, c);
      const std::size_t lo = c * kChunkSize;
      const std::size_t hi = std::min(count, lo + kChunkSize);
      for (std::size_t i = lo; i < hi; ++i) values[i] = fn(rng, i);
    }
  };
  std::size_t nw = workers < 1 ? 1 : static_cast<std::size_t>(workers);
  nw = std::min(nw, nchunks == 0 ? std::size_t{1} : nchunks);
  if (nw <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return values;
}

}  // namespace geosect

#endif  // GEOSECT_PARALLEL_HPP_
