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

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace hypercut {

using Vertex = std::uint32_t;
using Multiplicity = std::uint64_t;
using Part = int;
using Rational = boost::rational<std::int64_t>;

inline constexpr int kMinUniformity = 2;
inline constexpr int kMaxUniformity = 6;

/**
 * An r-uniform multi-hypergraph on the dense vertex range [0, n).
 *
 * Edges are stored once per distinct vertex set, sorted ascending, with an
 * integer multiplicity. Distinct edges are kept in lexicographic order, so
 * two hypergraphs with the same edge multiset compare equal. Instances are
 * immutable; use HypergraphBuilder to create them.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edgeless hypergraph.
  Hypergraph(int r, Vertex n);

  int uniformity() const noexcept { return r_; }
  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_distinct_edges() const noexcept { return multiplicities_.size(); }
  /// Total edge count m, counting multiplicity.
  Multiplicity num_edges() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }

  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {vertices_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }
  Multiplicity multiplicity(std::size_t i) const noexcept { return multiplicities_[i]; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend class HypergraphBuilder;

  int r_ = kMinUniformity;
  Vertex n_ = 0;
  std::vector<Vertex> vertices_;  // r_ entries per distinct edge
  std::vector<Multiplicity> multiplicities_;
  Multiplicity total_ = 0;
};

/// Accumulates edges, validates them, and merges repeated vertex sets.
class HypergraphBuilder {
 public:
  HypergraphBuilder(int r, Vertex n);

  /// Vertices may be given in any order; they are sorted on insertion.
  /// Throws InputError on wrong arity, repeated or out-of-range vertices, or mult == 0.
  HypergraphBuilder& add_edge(std::span<const Vertex> vertices, Multiplicity mult = 1);
  HypergraphBuilder& add_edge(std::initializer_list<Vertex> vertices, Multiplicity mult = 1) {
    return add_edge(std::span<const Vertex>(vertices.begin(), vertices.size()), mult);
  }

  Hypergraph build() const;

 private:
  using Tuple = std::array<Vertex, kMaxUniformity>;
  int r_;
  Vertex n_;
  std::vector<std::pair<Tuple, Multiplicity>> pending_;
};

/// Vertex -> indices of distinct edges containing it.
class IncidenceIndex {
 public:
  explicit IncidenceIndex(const Hypergraph& h);

  std::span<const std::size_t> edges_of(Vertex v) const noexcept {
    return {edges_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> edges_;
};

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;  // u < v
  Vertex color = 0;
  Multiplicity multiplicity = 1;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Pair multigraph whose edges carry a color (for 3-graphs: the removed third vertex).
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  /// Throws InputError if an edge has u >= v, an endpoint >= n, or zero multiplicity.
  ColoredMultigraph(Vertex n, std::vector<ColoredEdge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }
  Multiplicity num_edges() const noexcept { return total_; }

  /// Maximum over vertices of the total multiplicity of incident edges.
  Multiplicity max_degree() const;
  /// Maximum over (vertex, color) of the multiplicity of incident edges of that color.
  Multiplicity max_color_degree() const;

 private:
  Vertex n_ = 0;
  std::vector<ColoredEdge> edges_;
  Multiplicity total_ = 0;
};

/// A partition of the vertices into k labelled parts with its evaluated size.
struct KCut {
  int k = 2;
  std::vector<Part> assignment;
  Multiplicity cut_value = 0;
  Rational surplus{0};

  double surplus_value() const { return boost::rational_cast<double>(surplus); }
};

struct DegreeProfile {
  Multiplicity max_degree = 0;
  Multiplicity max_codegree = 0;
  Multiplicity m = 0;
  Vertex n = 0;
};

struct InducedSubgraph {
  Hypergraph graph;
  /// to_parent[i] is the original id of relabelled vertex i.
  std::vector<Vertex> to_parent;
};

/// Number of edges (with multiplicity) meeting all k parts.
/// Throws InputError on a length mismatch or a part id outside [0, k).
Multiplicity cut_size(const Hypergraph& h, std::span<const Part> assignment, int k);

/// Stirling number of the second kind S(r, k).
std::uint64_t stirling2(int r, int k);

/// S(r,k) k! / k^r: the expected fraction of edges cut by a uniform random k-partition.
/// Requires 2 <= k <= r <= kMaxUniformity.
Rational random_cut_coefficient(int r, int k);

/// Evaluates assignment on h and fills in cut value and surplus.
KCut make_kcut(const Hypergraph& h, std::vector<Part> assignment, int k);

/// cut_value - random_cut_coefficient(r, k) * m, after checking the cut against h.
Rational surplus_of_cut(const Hypergraph& h, const KCut& cut);

/// The q-uniform multigraph in which each q-set appears once per containing edge.
Hypergraph underlying_multigraph(const Hypergraph& h, int q);

/// Each edge {u,v,w} contributes (u,v | w), (u,w | v), (v,w | u). Requires r == 3.
ColoredMultigraph colored_pair_graph(const Hypergraph& h);

DegreeProfile degree_profile(const Hypergraph& h);

/// Keeps edges lying entirely inside vertices; relabels to [0, |vertices|) in ascending order.
/// Duplicate ids are ignored.
InducedSubgraph induced_sub(const Hypergraph& h, std::span<const Vertex> vertices);

}  // namespace hypercut
