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

#include "hypercut/three_cut.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hypercut/errors.hpp"
#include "hypercut/rounding.hpp"
#include "hypercut/spectral.hpp"
#include "parallel.hpp"
#include "part_counts.hpp"

namespace hypercut {

namespace {

void require_three_uniform(const Hypergraph& h, const char* what) {
  if (h.uniformity() != 3) throw InputError(std::string(what) + " requires a 3-uniform hypergraph");
}

KCut local_search(const Hypergraph& h, const IncidenceIndex& incidence, std::vector<Part> assignment, int k) {
  detail::PartCounts state(h, incidence, k, std::move(assignment));
  const Vertex n = h.num_vertices();
  Vertex v = 0;
  Vertex since_improvement = 0;
  while (n > 0 && since_improvement < n) {
    bool moved = false;
    for (Part to = 0; to < k; ++to) {
      if (to != state.part(v) && state.gain(v, to) > 0) {
        state.move(v, to);
        moved = true;
        break;
      }
    }
    since_improvement = moved ? 0 : since_improvement + 1;
    v = (v + 1) % n;
  }
  return make_kcut(h, state.assignment(), k);
}

KCut best_of(std::vector<KCut>& candidates) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (better_cut(candidates[i], candidates[best])) best = i;
  }
  return std::move(candidates[best]);
}

KCut sampling_round(const Hypergraph& h, const IncidenceIndex& incidence, const SamplePlan& plan,
                    std::uint64_t round) {
  auto rng = make_rng(plan.seed, "solve3-sample", round);
  std::bernoulli_distribution pick(plan.p);
  std::vector<bool> sampled(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) sampled[v] = pick(rng);
  const auto reduced = sample_and_reduce(h, sampled);

  std::vector<Part> assignment(h.num_vertices(), 0);
  for (Vertex v : reduced.kept) assignment[v] = 1;
  if (!reduced.reduced.empty()) {
    const auto a = adjacency_matrix(reduced.reduced);
    const int trials =
        plan.bipartition_trials > 0 ? plan.bipartition_trials : default_rounding_trials(a.size());
    const auto split = best_bipartition(a, trials, derive_seed(plan.seed, "solve3-bipartition", round));
    for (std::size_t i = 0; i < reduced.kept.size(); ++i) {
      assignment[reduced.kept[i]] = split.signs[i] > 0 ? 1 : 2;
    }
  }
  return local_search(h, incidence, std::move(assignment), 3);
}

KCut random_restarts(const Hypergraph& h, int k, int count, std::uint64_t seed, int threads) {
  const IncidenceIndex incidence(h);
  std::vector<KCut> results(static_cast<std::size_t>(count));
  detail::parallel_for(results.size(), threads, [&](std::size_t i) {
    auto rng = make_rng(seed, "restart", i);
    results[i] = local_search(h, incidence, random_assignment(h.num_vertices(), k, rng), k);
  });
  return best_of(results);
}

// Smallest x >= 1 with x^5 >= m^power.
Multiplicity ceil_fifth_root_of_power(Multiplicity m, int power) {
  __extension__ typedef unsigned __int128 Wide;
  Wide target = 1;
  for (int i = 0; i < power; ++i) target *= m;
  auto fifth = [](Multiplicity x) {
    Wide r = 1;
    for (int i = 0; i < 5; ++i) r *= x;
    return r;
  };
  const long double estimate = std::pow(static_cast<long double>(m), power / 5.0L);
  Multiplicity x = std::max<Multiplicity>(1, static_cast<Multiplicity>(estimate));
  while (fifth(x) < target) ++x;
  while (x > 1 && fifth(x - 1) >= target) --x;
  return x;
}

}  // namespace

void validate(const SamplePlan& plan) {
  if (!(plan.p > 0.0 && plan.p < 1.0)) throw InputError("sampling probability must lie in (0, 1)");
  if (plan.trials < 1) throw InputError("trials must be at least 1");
  if (plan.lift_trials < 1) throw InputError("lift trials must be at least 1");
  if (plan.bipartition_trials < 0) throw InputError("bipartition trials must be non-negative");
  if (plan.threads < 1) throw InputError("threads must be at least 1");
}

ReducedInstance sample_and_reduce(const Hypergraph& h, const std::vector<bool>& sampled) {
  require_three_uniform(h, "sample_and_reduce");
  if (sampled.size() != h.num_vertices()) throw InputError("sample mask length does not match n");
  ReducedInstance out;
  out.sampled = sampled;
  std::vector<Vertex> relabel(h.num_vertices(), 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (!sampled[v]) {
      relabel[v] = static_cast<Vertex>(out.kept.size());
      out.kept.push_back(v);
    }
  }

  // Distinct hyperedges map to pairs that may coincide; merge through the
  // builder and recover per-pair origins afterwards.
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> contributions;
  HypergraphBuilder builder(2, static_cast<Vertex>(out.kept.size()));
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    const auto e = h.edge(i);
    int in_sample = 0;
    std::array<Vertex, 2> rest{};
    int filled = 0;
    for (Vertex v : e) {
      if (sampled[v]) {
        ++in_sample;
      } else if (filled < 2) {
        rest[static_cast<std::size_t>(filled++)] = relabel[v];
      }
    }
    if (in_sample != 1) continue;
    builder.add_edge({rest[0], rest[1]}, h.multiplicity(i));
    contributions.push_back({{std::min(rest[0], rest[1]), std::max(rest[0], rest[1])}, i});
  }
  out.reduced = builder.build();
  std::sort(contributions.begin(), contributions.end());
  out.origins.resize(out.reduced.num_distinct_edges());
  std::size_t c = 0;
  for (std::size_t i = 0; i < out.reduced.num_distinct_edges(); ++i) {
    const auto e = out.reduced.edge(i);
    while (c < contributions.size() && contributions[c].first == std::pair{e[0], e[1]}) {
      out.origins[i].push_back(contributions[c++].second);
    }
  }
  return out;
}

ReducedInstance sample_and_reduce(const Hypergraph& h, std::span<const Vertex> sampled) {
  std::vector<bool> mask(h.num_vertices(), false);
  for (Vertex v : sampled) {
    if (v >= h.num_vertices()) throw InputError("sampled vertex out of range");
    mask[v] = true;
  }
  return sample_and_reduce(h, mask);
}

std::vector<Part> random_assignment(Vertex n, int k, Rng& rng) {
  std::uniform_int_distribution<Part> part(0, k - 1);
  std::vector<Part> out(n);
  for (auto& p : out) p = part(rng);
  return out;
}

bool better_cut(const KCut& a, const KCut& b) {
  if (a.cut_value != b.cut_value) return a.cut_value > b.cut_value;
  return a.assignment < b.assignment;
}

KCut kway_local_search(const Hypergraph& h, std::vector<Part> assignment, int k) {
  if (k < 2) throw InputError("k-way local search needs k >= 2");
  cut_size(h, assignment, k);  // validates length and part ids
  const IncidenceIndex incidence(h);
  return local_search(h, incidence, std::move(assignment), k);
}

KCut solve_3cut(const Hypergraph& h, const SamplePlan& plan) {
  require_three_uniform(h, "solve_3cut");
  validate(plan);
  const Vertex n = h.num_vertices();
  if (h.empty()) return make_kcut(h, std::vector<Part>(n, 0), 3);

  const IncidenceIndex incidence(h);
  const auto rounds = static_cast<std::size_t>(plan.trials);
  const auto restarts = static_cast<std::size_t>((plan.trials + 3) / 4);
  std::vector<KCut> results(rounds + restarts);
  detail::parallel_for(results.size(), plan.threads, [&](std::size_t i) {
    if (i < rounds) {
      results[i] = sampling_round(h, incidence, plan, i);
    } else {
      auto rng = make_rng(plan.seed, "solve3-restart", i - rounds);
      results[i] = local_search(h, incidence, random_assignment(n, 3, rng), 3);
    }
  });
  return best_of(results);
}

Multiplicity default_heavy_threshold(Multiplicity m) { return ceil_fifth_root_of_power(m, 1); }

Multiplicity default_degree_threshold(Multiplicity m) { return ceil_fifth_root_of_power(m, 3); }

HeavyReport preprocess_heavy(const Hypergraph& h, Multiplicity heavy_threshold, Multiplicity degree_threshold) {
  require_three_uniform(h, "preprocess_heavy");
  if (heavy_threshold < 1 || degree_threshold < 1) throw InputError("thresholds must be at least 1");
  HeavyReport report;
  report.heavy_threshold = heavy_threshold;
  report.degree_threshold = degree_threshold;

  const Vertex n = h.num_vertices();
  const auto pairs = underlying_multigraph(h, 2);
  std::vector<bool> matched(n, false);
  std::vector<Multiplicity> degree(n, 0);
  for (std::size_t i = 0; i < pairs.num_distinct_edges(); ++i) {
    const auto e = pairs.edge(i);
    const auto w = pairs.multiplicity(i);
    degree[e[0]] += w;
    degree[e[1]] += w;
    if (w >= heavy_threshold && !matched[e[0]] && !matched[e[1]]) {
      matched[e[0]] = matched[e[1]] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const bool high = degree[v] > degree_threshold;
    if (matched[v]) report.matched.push_back(v);
    if (high) report.high_degree.push_back(v);
    if (!matched[v] && !high) report.kept.push_back(v);
  }
  const auto sub = induced_sub(h, report.kept);
  report.kept_edges = sub.graph.num_edges();
  report.kept_profile = degree_profile(sub.graph);
  return report;
}

KCut solve_3cut_auto(const Hypergraph& h, const SamplePlan& plan) {
  require_three_uniform(h, "solve_3cut_auto");
  validate(plan);
  KCut best = solve_3cut(h, plan);
  if (h.empty()) return best;

  const auto m = h.num_edges();
  const auto report = preprocess_heavy(h, default_heavy_threshold(m), default_degree_threshold(m));
  if (report.kept.size() == h.num_vertices() || report.kept_edges == 0) return best;

  const auto sub = induced_sub(h, report.kept);
  SamplePlan sub_plan = plan;
  sub_plan.seed = derive_seed(plan.seed, "auto-restricted");
  const auto partial = solve_3cut(sub.graph, sub_plan);

  auto rng = make_rng(plan.seed, "auto-extend");
  auto assignment = random_assignment(h.num_vertices(), 3, rng);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) assignment[sub.to_parent[i]] = partial.assignment[i];
  auto extended = kway_local_search(h, std::move(assignment), 3);
  return better_cut(extended, best) ? extended : best;
}

KCut reduce_cut_up(const Hypergraph& h, const KCut& cut, int trials, std::uint64_t seed) {
  const int r = h.uniformity();
  if (r < 3) throw InputError("reduce_cut_up needs r >= 3");
  if (cut.k != r - 1) {
    throw InputError("reduce_cut_up expects an " + std::to_string(r - 1) + "-cut, got k = " + std::to_string(cut.k));
  }
  if (trials < 1) throw InputError("reduce_cut_up needs at least one trial");
  cut_size(h, cut.assignment, cut.k);  // validates the input partition

  std::bernoulli_distribution to_new_part(1.0 / r);
  KCut best;
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, "lift", static_cast<std::uint64_t>(t));
    auto assignment = cut.assignment;
    for (auto& p : assignment) {
      if (to_new_part(rng)) p = r - 1;
    }
    auto lifted = make_kcut(h, std::move(assignment), r);
    if (t == 0 || better_cut(lifted, best)) best = std::move(lifted);
  }
  return best;
}

KCutSolution solve_kcut(const Hypergraph& h, int k, const SamplePlan& plan) {
  validate(plan);
  if (k < 2) throw InputError("k must be at least 2");
  const int r = h.uniformity();
  const Vertex n = h.num_vertices();
  const auto baseline_seed = derive_seed(plan.seed, "kcut-baseline");
  KCutSolution solution;

  if (k == 2 && (r == 2 || r == 3)) {
    const Hypergraph pairs = r == 2 ? h : underlying_multigraph(h, 2);
    std::vector<Part> assignment(n, 0);
    if (!pairs.empty()) {
      const auto a = adjacency_matrix(pairs);
      const int trials = plan.bipartition_trials > 0 ? plan.bipartition_trials : default_rounding_trials(n);
      const auto split = best_bipartition(a, trials, derive_seed(plan.seed, "kcut-bipartition"));
      for (Vertex v = 0; v < n; ++v) assignment[v] = split.signs[v] > 0 ? 0 : 1;
    }
    solution.cut = kway_local_search(h, std::move(assignment), 2);
    solution.source = "bipartition";
  } else if (r == 3 && k == 3) {
    solution.cut = solve_3cut_auto(h, plan);
    solution.source = "three-cut";
    return solution;
  } else if (r >= 4 && (k == r - 1 || k == r)) {
    std::vector<Hypergraph> chain(static_cast<std::size_t>(r) + 1);
    chain[static_cast<std::size_t>(r)] = h;
    for (int i = r - 1; i >= 3; --i) {
      chain[static_cast<std::size_t>(i)] = underlying_multigraph(chain[static_cast<std::size_t>(i) + 1], i);
    }
    auto assignment = solve_3cut_auto(chain[3], plan).assignment;
    for (int parts = 3; parts < k; ++parts) {
      const auto& next = chain[static_cast<std::size_t>(parts) + 1];
      const auto current = make_kcut(next, std::move(assignment), parts);
      assignment = reduce_cut_up(next, current, plan.lift_trials,
                                 derive_seed(plan.seed, "kcut-lift", static_cast<std::uint64_t>(parts)))
                       .assignment;
    }
    solution.cut = kway_local_search(h, std::move(assignment), k);
    solution.source = "reduction-chain";
  } else {
    solution.cut = random_restarts(h, k, plan.trials, baseline_seed, plan.threads);
    solution.source = "baseline";
    solution.in_guarantee_range = false;
    return solution;
  }

  auto baseline = random_restarts(h, k, plan.trials, baseline_seed, plan.threads);
  if (better_cut(baseline, solution.cut)) {
    solution.cut = std::move(baseline);
    solution.source = "baseline";
  }
  return solution;
}

}  // namespace hypercut
