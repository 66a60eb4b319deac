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

#include "hypercut/hypergraph.hpp"

namespace hypercut {

/// Binomial random 3-graph: each of the C(n,3) triples independently with probability p.
Hypergraph gen_random_3graph(Vertex n, double p, std::uint64_t seed);

struct LinearGeneration {
  Hypergraph graph;
  /// True when the rejection budget ran out before reaching the target.
  bool shortfall = false;
  std::uint64_t rejections = 0;
};

/// Greedy random packing of triples with no pair covered twice. Gives up
/// after 50 * target_m rejections. Throws InputError if target_m exceeds
/// n(n-1)/6.
LinearGeneration gen_random_linear_3graph(Vertex n, std::uint64_t target_m, std::uint64_t seed);

/// Complete r-graph on n vertices. Throws InputError if n < r.
Hypergraph gen_complete(int r, Vertex n);

/// (sqrt(8m + 1) - 1) / 8
double edwards_bound(std::uint64_t m);

}  // namespace hypercut
