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
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "hypercut/hypergraph.hpp"
#include "hypercut/three_cut.hpp"

namespace hypercut {

/// One sampled trial of the colour-sampling concentration experiment.
struct ExperimentRecord {
  int rep = 0;
  std::uint64_t seed = 0;  // per-rep seed; re-running with it reproduces the row
  Vertex n = 0;
  Multiplicity m = 0;
  double p = 0.0;
  Multiplicity max_degree = 0;        // Delta of the colored multigraph
  Multiplicity max_color_degree = 0;  // D: per-vertex per-color degree bound
  std::size_t sampled_colors = 0;
  double norm_dev = 0.0;    // ||pA - B||
  double energy_dev = 0.0;  // E(pA - B)
  double frobenius_dev = 0.0;
  double threshold = 0.0;   // 20 ln(m) sqrt(Delta D)
  bool pass = false;        // norm_dev <= threshold
  /// ||p sum_c A_c^2||, only when requested; NaN otherwise.
  double w_norm = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentOptions {
  bool measure_w = false;
  int threads = 1;
};

/// 20 ln(m) sqrt(max_degree * max_color_degree).
double concentration_threshold(Multiplicity m, Multiplicity max_degree, Multiplicity max_color_degree);

/**
 * Samples every color class of g independently with probability p, forms
 * the adjacency matrix B of the kept edges, and measures pA - B against the
 * full adjacency matrix A. One record per rep, in rep order.
 *
 * Requires 0 < p <= 1 and reps >= 1.
 */
std::vector<ExperimentRecord> colored_sampling_experiment(const ColoredMultigraph& g, double p, int reps,
                                                          std::uint64_t seed, const ExperimentOptions& options = {});

double pass_rate(std::span<const ExperimentRecord> records);

struct ScalingRow {
  Vertex n = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  Multiplicity m = 0;
  Multiplicity max_degree = 0;
  Multiplicity max_codegree = 0;
  Multiplicity cut_value = 0;
  double surplus = 0.0;
};

/// Edge probability as a function of n.
using EdgeProbabilityRule = std::function<double(Vertex)>;

/// p = 1/n
double inverse_n_rule(Vertex n);

/// For each n and rep: a random 3-graph with edge probability p_rule(n),
/// solved by solve_3cut_auto with the given plan (its seed is replaced per row).
std::vector<ScalingRow> surplus_scaling_study(std::span<const Vertex> sizes, int reps, std::uint64_t seed,
                                              const SamplePlan& plan = {},
                                              const EdgeProbabilityRule& p_rule = inverse_n_rule);

// CSV writers: one header line, one row per record, fixed column order.
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
void write_csv(std::ostream& out, std::span<const ScalingRow> rows);

}  // namespace hypercut
