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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypercut/hypergraph.hpp"
#include "hypercut/seed.hpp"

namespace hypercut {

struct SamplePlan {
  /// Per-vertex probability of joining the sampled part X.
  double p = 1.0 / 3.0;
  /// Sampling rounds; a quarter as many random restarts are added as a baseline.
  int trials = 30;
  std::uint64_t seed = 0;
  /// Rounding trials per bipartition; 0 selects default_rounding_trials(|V \ X|).
  int bipartition_trials = 0;
  /// Random lifts per step of the k-cut reduction chain.
  int lift_trials = 200;
  /// Worker threads for independent rounds. Results do not depend on it.
  int threads = 1;
};

/// Throws InputError unless 0 < p < 1, trials >= 1, lift_trials >= 1, threads >= 1.
void validate(const SamplePlan& plan);

/**
 * The pair multigraph G* left after sampling X from a 3-graph.
 *
 * G* lives on V \ X (relabelled densely, in ascending order of the original
 * ids). Each hyperedge {u, v, w} with exactly one vertex w in X contributes
 * its multiplicity to the pair {u, v}, so for any split (Y, Z) of V \ X the
 * 3-cut (X, Y, Z) of H has exactly e_{G*}(Y, Z) edges.
 */
struct ReducedInstance {
  std::vector<bool> sampled;
  std::vector<Vertex> kept;
  Hypergraph reduced{2, 0};
  /// origins[i] lists the hyperedge indices behind distinct edge i of reduced.
  std::vector<std::vector<std::size_t>> origins;
};

ReducedInstance sample_and_reduce(const Hypergraph& h, const std::vector<bool>& sampled);
ReducedInstance sample_and_reduce(const Hypergraph& h, std::span<const Vertex> sampled);

/// Uniform random assignment of n vertices to k parts.
std::vector<Part> random_assignment(Vertex n, int k, Rng& rng);

/// First-improvement local search over (vertex, target part) moves in cyclic
/// order; stops when a full pass over the vertices finds no improving move.
KCut kway_local_search(const Hypergraph& h, std::vector<Part> assignment, int k);

/// True when a should be preferred: larger cut, then lexicographically smaller assignment.
bool better_cut(const KCut& a, const KCut& b);

/**
 * 3-cut by vertex sampling and spectral bipartition.
 *
 * Each round samples X with probability plan.p, bipartitions G* with
 * best_bipartition, and assembles (X, Y, Z) as parts (0, 1, 2); the result
 * is then polished by kway_local_search. ceil(trials / 4) random
 * tripartitions polished the same way form the baseline. Returns the best
 * cut seen. An edgeless H yields the all-zero assignment.
 */
KCut solve_3cut(const Hypergraph& h, const SamplePlan& plan);

struct HeavyReport {
  Multiplicity heavy_threshold = 0;
  Multiplicity degree_threshold = 0;
  /// Vertices of a greedy maximal matching of pairs with weight >= heavy_threshold.
  std::vector<Vertex> matched;
  /// Vertices whose degree in the underlying pair graph exceeds degree_threshold.
  std::vector<Vertex> high_degree;
  /// V minus both sets above, ascending.
  std::vector<Vertex> kept;
  Multiplicity kept_edges = 0;
  DegreeProfile kept_profile;
};

/// Removes heavy pairs and high-degree vertices. Requires r == 3 and both thresholds >= 1.
HeavyReport preprocess_heavy(const Hypergraph& h, Multiplicity heavy_threshold, Multiplicity degree_threshold);

/// ceil(m^(1/5)) and ceil(m^(3/5)), computed exactly; both at least 1.
Multiplicity default_heavy_threshold(Multiplicity m);
Multiplicity default_degree_threshold(Multiplicity m);

/// Best of solve_3cut on H and solve_3cut on the preprocessed H[W], the
/// latter extended to V by random parts and 3-way local search.
KCut solve_3cut_auto(const Hypergraph& h, const SamplePlan& plan);

/**
 * Lifts an (r-1)-cut of an r-graph to an r-cut: each trial moves every
 * vertex to the new part r-1 with probability 1/r. Returns the best trial.
 */
KCut reduce_cut_up(const Hypergraph& h, const KCut& cut, int trials, std::uint64_t seed);

struct KCutSolution {
  KCut cut;
  /// False when k lies outside {r-1, r} and only the local-search baseline ran.
  bool in_guarantee_range = true;
  /// "bipartition", "three-cut", "reduction-chain" or "baseline".
  std::string source;
};

/**
 * k-cut of an r-graph.
 *
 * (2,2) and (3,2) go through best_bipartition on the (underlying) pair
 * multigraph. (3,3) is solve_3cut_auto. For r >= 4 and k in {r-1, r} the
 * chain H_r -> ... -> H_3 of underlying multigraphs is built, H_3 is 3-cut,
 * and the partition is lifted with reduce_cut_up until it has k parts. Every
 * path is compared against random restarts with k-way local search.
 */
KCutSolution solve_kcut(const Hypergraph& h, int k, const SamplePlan& plan);

}  // namespace hypercut
