// Copyright 2026 The Blemish Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace blemish {

// xoshiro256** seeded through splitmix64. The algorithm is fixed so that a
// seed produces the same sequence on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();
  // [0, 1) with 53 bits of resolution.
  double uniform01();
  // (0, 1].
  double uniform_open_closed();
  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);
  bool coin();

 private:
  std::array<std::uint64_t, 4> state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

// FNV-1a over the seed bytes (little-endian), column bytes, a 0x1f separator
// and family bytes, finalized with one splitmix64 step.
std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view column,
                             std::string_view family);
RandomStream derive_substream(std::uint64_t master_seed, std::string_view column,
                              std::string_view family);

// Exactly k distinct indices from [0, n_total) \ exclude, sorted ascending.
// Throws kCapacity when fewer than k indices are eligible.
std::vector<std::size_t> sample_rows(std::size_t n_total, std::size_t k,
                                     std::span<const std::size_t> exclude,
                                     RandomStream& stream);
// Same, over an explicit eligible list.
std::vector<std::size_t> sample_from(std::span<const std::size_t> eligible, std::size_t k,
                                     RandomStream& stream);

// Box-Muller; consumes two uniforms per draw even when sd == 0.
double normal(RandomStream& stream, double mean, double sd);
double clamped_normal(RandomStream& stream, double mean, double sd, double lo, double hi);

}  // namespace blemish
