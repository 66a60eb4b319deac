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

#include "hypercut/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

#include "hypercut/errors.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/seed.hpp"
#include "hypercut/spectral.hpp"
#include "parallel.hpp"

namespace hypercut {

namespace {

// W = p * sum over colors of A_c^2, accumulated through shared endpoints.
SymmetricMatrix color_square_sum(const ColoredMultigraph& g, double p) {
  std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<Vertex, double>>> neighbours;  // (color, x) -> (y, w)
  for (const auto& e : g.edges()) {
    const auto w = static_cast<double>(e.multiplicity);
    neighbours[{e.color, e.u}].push_back({e.v, w});
    neighbours[{e.color, e.v}].push_back({e.u, w});
  }
  SymmetricMatrix sum(g.num_vertices());
  for (const auto& [key, list] : neighbours) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i; j < list.size(); ++j) {
        const Vertex a = list[i].first;
        const Vertex b = list[j].first;
        const double w = list[i].second * list[j].second;
        // Off-diagonal pairs count once per walk direction; add() mirrors a != b.
        sum.add(a, b, (i != j && a == b) ? 2.0 * w : w);
      }
    }
  }
  return p * std::move(sum);
}

}  // namespace

double concentration_threshold(Multiplicity m, Multiplicity max_degree, Multiplicity max_color_degree) {
  if (m == 0) return 0.0;
  return 20.0 * std::log(static_cast<double>(m)) *
         std::sqrt(static_cast<double>(max_degree) * static_cast<double>(max_color_degree));
}

std::vector<ExperimentRecord> colored_sampling_experiment(const ColoredMultigraph& g, double p, int reps,
                                                          std::uint64_t seed, const ExperimentOptions& options) {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("color sampling probability must lie in (0, 1]");
  if (reps < 1) throw InputError("reps must be at least 1");

  const auto a = adjacency_matrix(g);
  std::vector<Vertex> colors;
  for (const auto& e : g.edges()) colors.push_back(e.color);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

  ExperimentRecord base;
  base.n = g.num_vertices();
  base.m = g.num_edges();
  base.p = p;
  base.max_degree = g.max_degree();
  base.max_color_degree = g.max_color_degree();
  base.threshold = concentration_threshold(base.m, base.max_degree, base.max_color_degree);
  if (options.measure_w && g.num_vertices() > 0) {
    base.w_norm = spectral_stats(color_square_sum(g, p)).spectral_radius;
  }

  std::vector<ExperimentRecord> records(static_cast<std::size_t>(reps), base);
  detail::parallel_for(records.size(), options.threads, [&](std::size_t rep) {
    auto& record = records[rep];
    record.rep = static_cast<int>(rep);
    record.seed = derive_seed(seed, "concentration", rep);
    Rng rng(record.seed);
    std::bernoulli_distribution keep(p);
    std::vector<bool> kept(colors.size());
    for (std::size_t c = 0; c < colors.size(); ++c) {
      kept[c] = keep(rng);
      if (kept[c]) ++record.sampled_colors;
    }
    SymmetricMatrix deviation = p * a;
    for (const auto& e : g.edges()) {
      const auto c = static_cast<std::size_t>(std::lower_bound(colors.begin(), colors.end(), e.color) - colors.begin());
      if (kept[c]) deviation.add(e.u, e.v, -static_cast<double>(e.multiplicity));
    }
    if (deviation.size() > 0) {
      const auto eig = eigen_decompose(deviation);
      record.norm_dev = eig.spectral_radius();
      record.energy_dev = energy(eig);
    }
    record.frobenius_dev = deviation.frobenius_norm();
    record.pass = record.norm_dev <= record.threshold;
  });
  return records;
}

double pass_rate(std::span<const ExperimentRecord> records) {
  if (records.empty()) return 0.0;
  const auto passed = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  return static_cast<double>(passed) / static_cast<double>(records.size());
}

double inverse_n_rule(Vertex n) { return 1.0 / static_cast<double>(n); }

std::vector<ScalingRow> surplus_scaling_study(std::span<const Vertex> sizes, int reps, std::uint64_t seed,
                                              const SamplePlan& plan, const EdgeProbabilityRule& p_rule) {
  if (reps < 1) throw InputError("reps must be at least 1");
  std::vector<ScalingRow> rows;
  for (Vertex n : sizes) {
    if (n == 0) throw InputError("scaling study sizes must be positive");
    for (int rep = 0; rep < reps; ++rep) {
      ScalingRow row;
      row.n = n;
      row.rep = rep;
      row.seed = derive_seed(derive_seed(seed, "scaling", n), "rep", static_cast<std::uint64_t>(rep));
      row.p = p_rule(n);
      const auto h = gen_random_3graph(n, row.p, row.seed);
      const auto profile = degree_profile(h);
      row.m = profile.m;
      row.max_degree = profile.max_degree;
      row.max_codegree = profile.max_codegree;
      SamplePlan row_plan = plan;
      row_plan.seed = derive_seed(row.seed, "solve");
      const auto cut = solve_3cut_auto(h, row_plan);
      row.cut_value = cut.cut_value;
      row.surplus = cut.surplus_value();
      rows.push_back(row);
    }
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  const auto old_precision = out.precision(12);
  out << "rep,seed,n,m,p,max_degree,max_color_degree,sampled_colors,norm_dev,energy_dev,frobenius_dev,threshold,pass,w_norm\n";
  for (const auto& r : records) {
    out << r.rep << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.p << ',' << r.max_degree << ','
        << r.max_color_degree << ',' << r.sampled_colors << ',' << r.norm_dev << ',' << r.energy_dev << ','
        << r.frobenius_dev << ',' << r.threshold << ',' << (r.pass ? 1 : 0) << ',';
    if (!std::isnan(r.w_norm)) out << r.w_norm;
    out << '\n';
  }
  out.precision(old_precision);
}

void write_csv(std::ostream& out, std::span<const ScalingRow> rows) {
  const auto old_precision = out.precision(12);
  out << "n,rep,seed,p,m,max_degree,max_codegree,cut_value,surplus\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.rep << ',' << r.seed << ',' << r.p << ',' << r.m << ',' << r.max_degree << ','
        << r.max_codegree << ',' << r.cut_value << ',' << r.surplus << '\n';
  }
  out.precision(old_precision);
}

}  // namespace hypercut
