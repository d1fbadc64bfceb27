// Copyright 2026 The randmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace randmax {

// A seeded random stream.
//
// Every randomized operation in the library draws from a Stream. A stream is
// identified by a 64-bit seed and a 64-bit substream index; the pair is fed
// through std::seed_seq, so substreams of the same seed are statistically
// independent. Parallel Monte Carlo assigns substream k to chunk k, which
// makes results depend only on (seed, chunk size), never on thread count.
//
// Uniform variates are built from the raw 64-bit output rather than through
// std::uniform_real_distribution so the bit pattern of every draw is fixed by
// the engine alone.
class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t substream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t substream() const { return substream_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1): odd multiples of 2^-53. The set of
  // values is symmetric about 1/2, so 1 - uniform() is exact.
  double uniform() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Unit-mean exponential by inversion.
  double exponential();

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::mt19937_64 engine_;
};

// Draws per parallel chunk. Part of the reproducibility contract: changing it
// changes every Monte Carlo result for a given seed.
inline constexpr std::size_t kChunkSize = 4096;

// Runs body(chunk_index, begin, end, stream) for every chunk of [0, n), where
// stream is Stream(seed, chunk_index). Chunks are distributed over `threads`
// worker threads; body must only write to the index range it is given.
void for_each_chunk(
    std::size_t n, std::uint64_t seed, unsigned threads,
    const std::function<void(std::size_t, std::size_t, std::size_t, Stream&)>&
        body);

}  // namespace randmax
