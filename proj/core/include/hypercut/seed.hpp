// Copyright 2026 The hypercut Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hypercut {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive statistically independent sub-seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// FNV-1a over a tag string; tags name the consumer of a seed stream.
constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Seed splitting: child = splitmix64(splitmix64(parent ^ fnv1a(tag)) + index).
///
/// Every random decision in the library draws from an Rng seeded by a chain
/// of derive_seed calls rooted at the single user seed, e.g.
/// command -> "solve3" -> round t -> "bipartition" -> trial j.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag,
                                    std::uint64_t index = 0) noexcept {
  return splitmix64(splitmix64(parent ^ fnv1a(tag)) + index);
}

inline Rng make_rng(std::uint64_t parent, std::string_view tag, std::uint64_t index = 0) {
  return Rng(derive_seed(parent, tag, index));
}

}  // namespace hypercut
