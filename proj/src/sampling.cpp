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

#include "blemish/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blemish/error.hpp"

namespace blemish {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, unsigned char byte) {
  h ^= byte;
  h *= kFnvPrime;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) word = splitmix64(sm);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open_closed() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::kValidation, "uniform_index bound must be positive");
  // Rejection on the largest multiple of bound that fits in 64 bits.
  const std::uint64_t limit = -bound % bound;  // == 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= limit) return x % bound;
  }
}

bool RandomStream::coin() { return (next_u64() >> 63) != 0; }

std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view column,
                             std::string_view family) {
  std::uint64_t h = kFnvOffset;
  for (int i = 0; i < 8; ++i) fnv_mix(h, static_cast<unsigned char>(master_seed >> (8 * i)));
  for (char c : column) fnv_mix(h, static_cast<unsigned char>(c));
  fnv_mix(h, 0x1f);
  for (char c : family) fnv_mix(h, static_cast<unsigned char>(c));
  return splitmix64(h);
}

RandomStream derive_substream(std::uint64_t master_seed, std::string_view column,
                              std::string_view family) {
  return RandomStream(substream_seed(master_seed, column, family));
}

std::vector<std::size_t> sample_from(std::span<const std::size_t> eligible, std::size_t k,
                                     RandomStream& stream) {
  if (k > eligible.size()) {
    throw Error(ErrorKind::kCapacity, "requested " + std::to_string(k) + " rows but only " +
                                          std::to_string(eligible.size()) + " are eligible");
  }
  std::vector<std::size_t> pool(eligible.begin(), eligible.end());
  // Partial Fisher-Yates over the first k positions.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.uniform_index(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::size_t> sample_rows(std::size_t n_total, std::size_t k,
                                     std::span<const std::size_t> exclude,
                                     RandomStream& stream) {
  std::vector<bool> excluded(n_total, false);
  for (std::size_t row : exclude) {
    if (row < n_total) excluded[row] = true;
  }
  std::vector<std::size_t> eligible;
  eligible.reserve(n_total);
  for (std::size_t i = 0; i < n_total; ++i) {
    if (!excluded[i]) eligible.push_back(i);
  }
  return sample_from(eligible, k, stream);
}

double normal(RandomStream& stream, double mean, double sd) {
  const double u1 = stream.uniform_open_closed();
  const double u2 = stream.uniform01();
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  if (sd == 0.0) return mean;
  return mean + sd * z;
}

double clamped_normal(RandomStream& stream, double mean, double sd, double lo, double hi) {
  return std::clamp(normal(stream, mean, sd), lo, hi);
}

}  // namespace blemish
