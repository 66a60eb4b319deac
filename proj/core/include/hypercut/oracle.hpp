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

#include "hypercut/hypergraph.hpp"

namespace hypercut {

/// Largest k^n the exhaustive search accepts.
inline constexpr double kOracleCapacity = 1e8;

/**
 * Exact Max-k-Cut by exhaustive enumeration.
 *
 * Vertex 0 is pinned to part 0, which loses nothing since part labels are
 * interchangeable. Assignments are visited in lexicographic order with
 * incremental cut updates, and the first maximum is kept, so the result is
 * the lexicographically smallest optimal assignment.
 *
 * Throws CapacityError when k^n exceeds kOracleCapacity.
 */
KCut brute_force_max_kcut(const Hypergraph& h, int k);

}  // namespace hypercut
