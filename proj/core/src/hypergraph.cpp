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

#include "hypercut/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "hypercut/errors.hpp"

namespace hypercut {

namespace {

using Tuple = std::array<Vertex, kMaxUniformity>;
constexpr Vertex kPad = std::numeric_limits<Vertex>::max();

void check_uniformity(int r) {
  if (r < kMinUniformity || r > kMaxUniformity) {
    throw InputError("uniformity must be in [" + std::to_string(kMinUniformity) + ", " +
                     std::to_string(kMaxUniformity) + "], got " + std::to_string(r));
  }
}

// All q-subsets of every edge, merged, with summed multiplicities. q may be 1.
std::vector<std::pair<Tuple, Multiplicity>> subset_counts(const Hypergraph& h, int q) {
  const int r = h.uniformity();
  std::vector<std::pair<Tuple, Multiplicity>> out;
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    const auto e = h.edge(i);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      if (std::popcount(mask) != q) continue;
      Tuple t;
      t.fill(kPad);
      int pos = 0;
      for (int j = 0; j < r; ++j) {
        if (mask & (1u << j)) t[static_cast<std::size_t>(pos++)] = e[static_cast<std::size_t>(j)];
      }
      out.emplace_back(t, h.multiplicity(i));
    }
  }
  std::sort(out.begin(), out.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (w > 0 && out[w - 1].first == out[i].first) {
      out[w - 1].second += out[i].second;
    } else {
      out[w++] = out[i];
    }
  }
  out.resize(w);
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int r, Vertex n) : r_(r), n_(n) { check_uniformity(r); }

HypergraphBuilder::HypergraphBuilder(int r, Vertex n) : r_(r), n_(n) { check_uniformity(r); }

HypergraphBuilder& HypergraphBuilder::add_edge(std::span<const Vertex> vertices, Multiplicity mult) {
  if (vertices.size() != static_cast<std::size_t>(r_)) {
    throw InputError("edge has " + std::to_string(vertices.size()) + " vertices, expected " +
                     std::to_string(r_));
  }
  if (mult == 0) throw InputError("edge multiplicity must be positive");
  Tuple t;
  t.fill(kPad);
  std::copy(vertices.begin(), vertices.end(), t.begin());
  std::sort(t.begin(), t.begin() + r_);
  for (int j = 0; j < r_; ++j) {
    if (t[static_cast<std::size_t>(j)] >= n_) {
      throw InputError("vertex " + std::to_string(t[static_cast<std::size_t>(j)]) +
                       " out of range for n = " + std::to_string(n_));
    }
    if (j > 0 && t[static_cast<std::size_t>(j)] == t[static_cast<std::size_t>(j - 1)]) {
      throw InputError("edge repeats vertex " + std::to_string(t[static_cast<std::size_t>(j)]));
    }
  }
  pending_.emplace_back(t, mult);
  return *this;
}

Hypergraph HypergraphBuilder::build() const {
  auto items = pending_;
  std::sort(items.begin(), items.end());
  Hypergraph h(r_, n_);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!h.multiplicities_.empty() && i > 0 && items[i - 1].first == items[i].first) {
      h.multiplicities_.back() += items[i].second;
    } else {
      h.vertices_.insert(h.vertices_.end(), items[i].first.begin(), items[i].first.begin() + r_);
      h.multiplicities_.push_back(items[i].second);
    }
    h.total_ += items[i].second;
  }
  return h;
}

IncidenceIndex::IncidenceIndex(const Hypergraph& h) : offsets_(h.num_vertices() + std::size_t{1}, 0) {
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    for (Vertex v : h.edge(i)) ++offsets_[v + 1];
  }
  for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
  edges_.resize(offsets_.back());
  auto fill = offsets_;
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    for (Vertex v : h.edge(i)) edges_[fill[v]++] = i;
  }
}

ColoredMultigraph::ColoredMultigraph(Vertex n, std::vector<ColoredEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u >= e.v) throw InputError("colored edge must satisfy u < v");
    if (e.v >= n_) throw InputError("colored edge endpoint out of range");
    if (e.multiplicity == 0) throw InputError("colored edge multiplicity must be positive");
    total_ += e.multiplicity;
  }
}

Multiplicity ColoredMultigraph::max_degree() const {
  std::vector<Multiplicity> deg(n_, 0);
  for (const auto& e : edges_) {
    deg[e.u] += e.multiplicity;
    deg[e.v] += e.multiplicity;
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Multiplicity ColoredMultigraph::max_color_degree() const {
  std::vector<std::pair<std::pair<Vertex, Vertex>, Multiplicity>> items;
  items.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    items.push_back({{e.u, e.color}, e.multiplicity});
    items.push_back({{e.v, e.color}, e.multiplicity});
  }
  std::sort(items.begin(), items.end());
  Multiplicity best = 0;
  Multiplicity run = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    run = (i > 0 && items[i].first == items[i - 1].first) ? run + items[i].second : items[i].second;
    best = std::max(best, run);
  }
  return best;
}

Multiplicity cut_size(const Hypergraph& h, std::span<const Part> assignment, int k) {
  if (assignment.size() != h.num_vertices()) {
    throw InputError("assignment has length " + std::to_string(assignment.size()) + ", expected " +
                     std::to_string(h.num_vertices()));
  }
  if (k < 1 || k > 31) throw InputError("part count out of range");
  for (Part p : assignment) {
    if (p < 0 || p >= k) throw InputError("part id " + std::to_string(p) + " outside [0, k)");
  }
  const unsigned full = (1u << k) - 1;
  Multiplicity total = 0;
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    unsigned mask = 0;
    for (Vertex v : h.edge(i)) mask |= 1u << assignment[v];
    if (mask == full) total += h.multiplicity(i);
  }
  return total;
}

std::uint64_t stirling2(int r, int k) {
  if (r < 0 || k < 0) throw InputError("stirling2 arguments must be non-negative");
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= r; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

Rational random_cut_coefficient(int r, int k) {
  check_uniformity(r);
  if (k < 2 || k > r) {
    throw InputError("random cut coefficient needs 2 <= k <= r, got r = " + std::to_string(r) +
                     ", k = " + std::to_string(k));
  }
  std::int64_t factorial = 1;
  std::int64_t power = 1;
  for (int i = 1; i <= k; ++i) factorial *= i;
  for (int i = 0; i < r; ++i) power *= k;
  return Rational(static_cast<std::int64_t>(stirling2(r, k)) * factorial, power);
}

namespace {

Rational surplus_from_value(const Hypergraph& h, Multiplicity value, int k) {
  if (k > h.uniformity()) {
    // No edge can meet more parts than it has vertices; the random cut expectation is zero.
    return Rational(static_cast<std::int64_t>(value));
  }
  return Rational(static_cast<std::int64_t>(value)) -
         random_cut_coefficient(h.uniformity(), k) * Rational(static_cast<std::int64_t>(h.num_edges()));
}

}  // namespace

KCut make_kcut(const Hypergraph& h, std::vector<Part> assignment, int k) {
  if (k < 2) throw InputError("a k-cut needs k >= 2");
  KCut cut;
  cut.k = k;
  cut.cut_value = cut_size(h, assignment, k);
  cut.assignment = std::move(assignment);
  cut.surplus = surplus_from_value(h, cut.cut_value, k);
  return cut;
}

Rational surplus_of_cut(const Hypergraph& h, const KCut& cut) {
  if (cut_size(h, cut.assignment, cut.k) != cut.cut_value) {
    throw InputError("cut value does not match its assignment");
  }
  return surplus_from_value(h, cut.cut_value, cut.k);
}

Hypergraph underlying_multigraph(const Hypergraph& h, int q) {
  if (q < 2 || q >= h.uniformity()) {
    throw InputError("underlying multigraph needs 2 <= q < r, got q = " + std::to_string(q));
  }
  HypergraphBuilder builder(q, h.num_vertices());
  for (const auto& [tuple, mult] : subset_counts(h, q)) {
    builder.add_edge(std::span<const Vertex>(tuple.data(), static_cast<std::size_t>(q)), mult);
  }
  return builder.build();
}

ColoredMultigraph colored_pair_graph(const Hypergraph& h) {
  if (h.uniformity() != 3) throw InputError("colored pair graph requires a 3-uniform hypergraph");
  std::vector<ColoredEdge> edges;
  edges.reserve(3 * h.num_distinct_edges());
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    const auto e = h.edge(i);
    const Multiplicity mu = h.multiplicity(i);
    edges.push_back({e[0], e[1], e[2], mu});
    edges.push_back({e[0], e[2], e[1], mu});
    edges.push_back({e[1], e[2], e[0], mu});
  }
  return ColoredMultigraph(h.num_vertices(), std::move(edges));
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile profile;
  profile.m = h.num_edges();
  profile.n = h.num_vertices();
  std::vector<Multiplicity> deg(h.num_vertices(), 0);
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    for (Vertex v : h.edge(i)) deg[v] += h.multiplicity(i);
  }
  if (!deg.empty()) profile.max_degree = *std::max_element(deg.begin(), deg.end());
  for (const auto& item : subset_counts(h, h.uniformity() - 1)) {
    profile.max_codegree = std::max(profile.max_codegree, item.second);
  }
  return profile;
}

InducedSubgraph induced_sub(const Hypergraph& h, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> relabel(h.num_vertices(), kAbsent);
  for (Vertex v : vertices) {
    if (v >= h.num_vertices()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(h.num_vertices()));
    }
    relabel[v] = 0;
  }
  InducedSubgraph sub;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (relabel[v] != kAbsent) {
      relabel[v] = static_cast<Vertex>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  HypergraphBuilder builder(h.uniformity(), static_cast<Vertex>(sub.to_parent.size()));
  std::array<Vertex, kMaxUniformity> mapped{};
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    const auto e = h.edge(i);
    bool inside = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (relabel[e[j]] == kAbsent) {
        inside = false;
        break;
      }
      mapped[j] = relabel[e[j]];
    }
    if (inside) builder.add_edge(std::span<const Vertex>(mapped.data(), e.size()), h.multiplicity(i));
  }
  sub.graph = builder.build();
  return sub;
}

}  // namespace hypercut
