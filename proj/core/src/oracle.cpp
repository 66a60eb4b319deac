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

#include "hypercut/oracle.hpp"

#include <cmath>
#include <string>

#include "hypercut/errors.hpp"
#include "part_counts.hpp"

namespace hypercut {

KCut brute_force_max_kcut(const Hypergraph& h, int k) {
  if (k < 2) throw InputError("oracle needs k >= 2");
  const Vertex n = h.num_vertices();
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) > kOracleCapacity) {
    throw CapacityError("exhaustive search over " + std::to_string(k) + "^" + std::to_string(n) +
                        " assignments exceeds the oracle capacity");
  }
  if (n == 0) return make_kcut(h, {}, k);

  const IncidenceIndex incidence(h);
  detail::PartCounts state(h, incidence, k, std::vector<Part>(n, 0));
  std::vector<Part> best = state.assignment();
  Multiplicity best_value = state.value();

  // Mixed-radix odometer over vertices 1..n-1, vertex n-1 least significant.
  while (true) {
    Vertex j = n - 1;
    while (j >= 1 && state.part(j) == k - 1) {
      state.move(j, 0);
      --j;
    }
    if (j == 0) break;
    state.move(j, state.part(j) + 1);
    if (state.value() > best_value) {
      best_value = state.value();
      best = state.assignment();
    }
  }
  return make_kcut(h, std::move(best), k);
}

}  // namespace hypercut
