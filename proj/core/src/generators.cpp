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

#include "hypercut/generators.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hypercut/errors.hpp"
#include "hypercut/seed.hpp"

namespace hypercut {

Hypergraph gen_random_3graph(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  auto rng = make_rng(seed, "random3");
  std::bernoulli_distribution keep(p);
  HypergraphBuilder builder(3, n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (keep(rng)) builder.add_edge({a, b, c});
      }
    }
  }
  return builder.build();
}

LinearGeneration gen_random_linear_3graph(Vertex n, std::uint64_t target_m, std::uint64_t seed) {
  const std::uint64_t packing_bound =
      n < 3 ? 0 : static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 6;
  if (target_m > packing_bound) {
    throw InputError("target " + std::to_string(target_m) + " exceeds the packing bound " +
                     std::to_string(packing_bound) + " for n = " + std::to_string(n));
  }
  LinearGeneration out;
  HypergraphBuilder builder(3, n);
  if (target_m == 0) {
    out.graph = builder.build();
    return out;
  }
  auto rng = make_rng(seed, "linear3");
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
  auto pair_used = [&](Vertex a, Vertex b) { return covered[static_cast<std::size_t>(a) * n + b]; };
  auto mark = [&](Vertex a, Vertex b) {
    covered[static_cast<std::size_t>(a) * n + b] = true;
    covered[static_cast<std::size_t>(b) * n + a] = true;
  };

  const std::uint64_t budget = 50 * target_m;
  std::uint64_t accepted = 0;
  while (accepted < target_m && out.rejections < budget) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    const Vertex c = pick(rng);
    if (a == b || a == c || b == c || pair_used(a, b) || pair_used(a, c) || pair_used(b, c)) {
      ++out.rejections;
      continue;
    }
    mark(a, b);
    mark(a, c);
    mark(b, c);
    builder.add_edge({a, b, c});
    ++accepted;
  }
  out.shortfall = accepted < target_m;
  out.graph = builder.build();
  return out;
}

Hypergraph gen_complete(int r, Vertex n) {
  if (r < kMinUniformity || r > kMaxUniformity) throw InputError("uniformity out of range");
  if (n < static_cast<Vertex>(r)) {
    throw InputError("complete " + std::to_string(r) + "-graph needs n >= r, got n = " + std::to_string(n));
  }
  HypergraphBuilder builder(r, n);
  std::vector<Vertex> combo(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
  while (true) {
    builder.add_edge(combo);
    int i = r - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - static_cast<Vertex>(r - i)) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return builder.build();
}

double edwards_bound(std::uint64_t m) {
  return (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 8.0;
}

}  // namespace hypercut
