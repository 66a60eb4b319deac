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
#include <span>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut::detail {

// Per-edge part occupancy for a fixed assignment, supporting O(deg(v))
// evaluation and application of single-vertex moves.
class PartCounts {
 public:
  PartCounts(const Hypergraph& h, const IncidenceIndex& incidence, int k, std::vector<Part> assignment)
      : h_(h), incidence_(incidence), k_(k), assignment_(std::move(assignment)),
        counts_(h.num_distinct_edges() * static_cast<std::size_t>(k), 0),
        covered_(h.num_distinct_edges(), 0) {
    for (std::size_t e = 0; e < h.num_distinct_edges(); ++e) {
      for (Vertex v : h.edge(e)) {
        if (counts_[slot(e, assignment_[v])]++ == 0) ++covered_[e];
      }
      if (covered_[e] == k_) value_ += h.multiplicity(e);
    }
  }

  Multiplicity value() const noexcept { return value_; }
  const std::vector<Part>& assignment() const noexcept { return assignment_; }
  Part part(Vertex v) const noexcept { return assignment_[v]; }

  // Change in cut value if v moves to part "to" (to != part(v)).
  std::int64_t gain(Vertex v, Part to) const noexcept {
    const Part from = assignment_[v];
    std::int64_t delta = 0;
    for (std::size_t e : incidence_.edges_of(v)) {
      const int before = covered_[e];
      const int after = before - (counts_[slot(e, from)] == 1 ? 1 : 0) + (counts_[slot(e, to)] == 0 ? 1 : 0);
      const auto mult = static_cast<std::int64_t>(h_.multiplicity(e));
      if (before == k_) delta -= mult;
      if (after == k_) delta += mult;
    }
    return delta;
  }

  void move(Vertex v, Part to) noexcept {
    const Part from = assignment_[v];
    if (from == to) return;
    for (std::size_t e : incidence_.edges_of(v)) {
      const bool was_cut = covered_[e] == k_;
      if (--counts_[slot(e, from)] == 0) --covered_[e];
      if (counts_[slot(e, to)]++ == 0) ++covered_[e];
      const bool is_cut = covered_[e] == k_;
      if (was_cut && !is_cut) value_ -= h_.multiplicity(e);
      if (!was_cut && is_cut) value_ += h_.multiplicity(e);
    }
    assignment_[v] = to;
  }

 private:
  std::size_t slot(std::size_t e, Part p) const noexcept {
    return e * static_cast<std::size_t>(k_) + static_cast<std::size_t>(p);
  }

  const Hypergraph& h_;
  const IncidenceIndex& incidence_;
  int k_;
  std::vector<Part> assignment_;
  std::vector<std::uint8_t> counts_;
  std::vector<int> covered_;
  Multiplicity value_ = 0;
};

}  // namespace hypercut::detail
