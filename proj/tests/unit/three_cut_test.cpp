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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/three_cut.hpp"

namespace hypercut {
namespace {

using testing::for_each_assignment;
using testing::naive_cut;

Hypergraph triple() { return HypergraphBuilder(3, 3).add_edge({0, 1, 2}).build(); }

SamplePlan plan_with_seed(std::uint64_t seed, int trials = 30) {
  SamplePlan plan;
  plan.seed = seed;
  plan.trials = trials;
  return plan;
}

TEST(Plan, Validation) {
  SamplePlan plan;
  EXPECT_NO_THROW(validate(plan));
  for (double p : {0.0, 1.0, -0.1, 1.5}) {
    plan.p = p;
    EXPECT_THROW(validate(plan), InputError) << p;
  }
  plan = {};
  plan.trials = 0;
  EXPECT_THROW(validate(plan), InputError);
  plan = {};
  plan.threads = 0;
  EXPECT_THROW(validate(plan), InputError);
}

TEST(SampleAndReduce, Examples) {
  auto r1 = sample_and_reduce(triple(), std::vector<Vertex>{2});
  EXPECT_EQ(r1.kept, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(r1.reduced, HypergraphBuilder(2, 2).add_edge({0, 1}).build());

  auto r2 = sample_and_reduce(triple(), std::vector<Vertex>{1, 2});
  EXPECT_TRUE(r2.reduced.empty());

  auto h = HypergraphBuilder(3, 4).add_edge({0, 1, 2}).add_edge({0, 1, 3}).build();
  auto r3 = sample_and_reduce(h, std::vector<Vertex>{2, 3});
  EXPECT_EQ(r3.reduced, HypergraphBuilder(2, 2).add_edge({0, 1}, 2).build());
  ASSERT_EQ(r3.origins.size(), 1u);
  EXPECT_EQ(r3.origins[0], (std::vector<std::size_t>{0, 1}));

  EXPECT_THROW(sample_and_reduce(gen_complete(4, 5), std::vector<Vertex>{0}), InputError);
  EXPECT_THROW(sample_and_reduce(triple(), std::vector<bool>{true}), InputError);
  EXPECT_THROW(sample_and_reduce(triple(), std::vector<Vertex>{3}), InputError);
}

TEST(SampleAndReduce, MultiplicityIsSumOverSampledColors) {
  std::mt19937_64 rng(1);
  auto h = testing::random_hypergraph(3, 9, 40, rng);
  std::vector<bool> mask(9);
  for (Vertex v = 0; v < 9; ++v) mask[v] = v % 3 == 0;
  auto red = sample_and_reduce(h, mask);
  Multiplicity expected = 0;
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    int inside = 0;
    for (Vertex v : h.edge(i)) inside += mask[v] ? 1 : 0;
    if (inside == 1) expected += h.multiplicity(i);
  }
  EXPECT_EQ(red.reduced.num_edges(), expected);
  for (std::size_t i = 0; i < red.reduced.num_distinct_edges(); ++i) {
    Multiplicity from_origins = 0;
    for (auto o : red.origins[i]) from_origins += h.multiplicity(o);
    EXPECT_EQ(red.reduced.multiplicity(i), from_origins);
  }
}

// Every X and every split (Y, Z) of the rest, on small random 3-graphs.
TEST(SampleAndReduce, ReductionIdentityExhaustive) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 3; ++rep) {
    const Vertex n = 6;
    auto h = testing::random_hypergraph(3, n, 14, rng);
    for (std::uint32_t xmask = 0; xmask < (1U << n); ++xmask) {
      std::vector<bool> sampled(n);
      for (Vertex v = 0; v < n; ++v) sampled[v] = (xmask >> v) & 1U;
      auto red = sample_and_reduce(h, sampled);
      const auto rest = static_cast<Vertex>(red.kept.size());
      for (std::uint32_t ymask = 0; ymask < (1U << rest); ++ymask) {
        std::vector<Part> three(n, 0);
        std::vector<Part> two(rest, 0);
        for (Vertex i = 0; i < rest; ++i) {
          two[i] = static_cast<Part>((ymask >> i) & 1U);
          three[red.kept[i]] = 1 + two[i];
        }
        ASSERT_EQ(naive_cut(h, three, 3), naive_cut(red.reduced, two, 2));
      }
    }
  }
}

TEST(KwayLocalSearch, LocalOptimum) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const int k = 2 + rep % 3;
    auto h = testing::random_hypergraph(3 + rep % 2, 10, 40, rng);
    auto start = random_assignment(10, k, rng);
    const auto before = naive_cut(h, start, k);
    auto cut = kway_local_search(h, start, k);
    EXPECT_GE(cut.cut_value, before);
    EXPECT_EQ(cut.cut_value, naive_cut(h, cut.assignment, k));
    for (Vertex v = 0; v < 10; ++v) {
      for (Part p = 0; p < k; ++p) {
        auto moved = cut.assignment;
        moved[v] = p;
        EXPECT_LE(naive_cut(h, moved, k), cut.cut_value);
      }
    }
  }
  EXPECT_THROW(kway_local_search(triple(), {0, 1}, 3), InputError);
}

TEST(BetterCut, PrefersValueThenLexicographicallySmaller) {
  KCut a{3, {0, 1, 2}, 1, Rational(7, 9)};
  KCut b{3, {1, 0, 2}, 1, Rational(7, 9)};
  KCut c{3, {0, 0, 0}, 0, Rational(-2, 9)};
  EXPECT_TRUE(better_cut(a, b));
  EXPECT_FALSE(better_cut(b, a));
  EXPECT_TRUE(better_cut(b, c));
  EXPECT_FALSE(better_cut(a, a));
}

TEST(Solve3Cut, Examples) {
  auto single = solve_3cut(triple(), plan_with_seed(1));
  EXPECT_EQ(single.cut_value, 1u);
  EXPECT_EQ(single.surplus, Rational(7, 9));

  // Parts (2,1,1): a triple is cut iff the vertex it misses is in the pair.
  EXPECT_EQ(solve_3cut(gen_complete(3, 4), plan_with_seed(2)).cut_value, 2u);
  EXPECT_EQ(brute_force_max_kcut(gen_complete(3, 4), 3).cut_value, 2u);

  HypergraphBuilder sunflower(3, 11);
  for (Vertex i = 0; i < 5; ++i) sunflower.add_edge({0, 1 + 2 * i, 2 + 2 * i});
  EXPECT_EQ(solve_3cut(sunflower.build(), plan_with_seed(3)).cut_value, 5u);

  auto empty = solve_3cut(Hypergraph(3, 4), plan_with_seed(4));
  EXPECT_EQ(empty.cut_value, 0u);
  EXPECT_EQ(empty.assignment, (std::vector<Part>(4, 0)));

  EXPECT_THROW(solve_3cut(gen_complete(2, 4), plan_with_seed(5)), InputError);
}

TEST(Solve3Cut, ConsistentAndNonNegativeSurplus) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto h = gen_random_3graph(14, 0.15, seed);
    auto cut = solve_3cut(h, plan_with_seed(seed, 10));
    EXPECT_EQ(cut.cut_value, naive_cut(h, cut.assignment, 3));
    EXPECT_EQ(cut.surplus, surplus_of_cut(h, cut));
    EXPECT_GE(cut.surplus, Rational(0));
  }
}

TEST(Solve3Cut, ThreadCountDoesNotChangeResult) {
  auto h = gen_random_3graph(20, 0.1, 9);
  auto plan = plan_with_seed(77, 12);
  auto one = solve_3cut(h, plan);
  plan.threads = 3;
  auto three = solve_3cut(h, plan);
  EXPECT_EQ(one.assignment, three.assignment);
  EXPECT_EQ(one.cut_value, three.cut_value);
}

TEST(Solve3Cut, Deterministic) {
  auto h = gen_random_3graph(16, 0.2, 4);
  EXPECT_EQ(solve_3cut(h, plan_with_seed(5)).assignment, solve_3cut(h, plan_with_seed(5)).assignment);
}

TEST(PreprocessHeavy, Examples) {
  auto fano = HypergraphBuilder(3, 7)
                  .add_edge({0, 1, 2}).add_edge({0, 3, 4}).add_edge({0, 5, 6}).add_edge({1, 3, 5})
                  .add_edge({1, 4, 6}).add_edge({2, 3, 6}).add_edge({2, 4, 5})
                  .build();
  auto linear = preprocess_heavy(fano, 2, 100);
  EXPECT_TRUE(linear.matched.empty());
  EXPECT_TRUE(linear.high_degree.empty());
  EXPECT_EQ(linear.kept.size(), 7u);
  EXPECT_EQ(linear.kept_edges, 7u);

  auto heavy = HypergraphBuilder(3, 6).add_edge({0, 1, 2}).add_edge({0, 1, 3}).add_edge({0, 1, 4}).add_edge({2, 3, 5}).build();
  auto report = preprocess_heavy(heavy, 3, 100);
  EXPECT_TRUE(std::count(report.matched.begin(), report.matched.end(), 0u));
  EXPECT_TRUE(std::count(report.matched.begin(), report.matched.end(), 1u));
  EXPECT_EQ(report.kept, (std::vector<Vertex>{2, 3, 4, 5}));
  EXPECT_EQ(report.kept_edges, 1u);

  // Pair degree of vertex 0 is 6 (two per incident triple).
  auto degrees = preprocess_heavy(heavy, 100, 5);
  EXPECT_EQ(degrees.high_degree, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(preprocess_heavy(heavy, 100, 6).high_degree.empty());

  EXPECT_THROW(preprocess_heavy(heavy, 0, 5), InputError);
  EXPECT_THROW(preprocess_heavy(gen_complete(2, 3), 1, 1), InputError);
}

TEST(PreprocessHeavy, MatchingIsMaximalAndSetsPartitionV) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto h = gen_random_3graph(15, 0.3, seed);
    auto pairs = underlying_multigraph(h, 2);
    const Multiplicity d = 3;
    auto report = preprocess_heavy(h, d, 40);
    std::vector<bool> matched(15, false);
    for (Vertex v : report.matched) matched[v] = true;
    for (std::size_t i = 0; i < pairs.num_distinct_edges(); ++i) {
      if (pairs.multiplicity(i) >= d) EXPECT_TRUE(matched[pairs.edge(i)[0]] || matched[pairs.edge(i)[1]]);
    }
    EXPECT_EQ(report.matched.size() % 2, 0u);
    for (Vertex v : report.kept) {
      EXPECT_FALSE(matched[v]);
      EXPECT_FALSE(std::count(report.high_degree.begin(), report.high_degree.end(), v));
    }
    EXPECT_EQ(report.kept_edges, induced_sub(h, report.kept).graph.num_edges());
  }
}

TEST(PreprocessHeavy, DefaultThresholds) {
  EXPECT_EQ(default_heavy_threshold(0), 1u);
  EXPECT_EQ(default_heavy_threshold(1), 1u);
  EXPECT_EQ(default_heavy_threshold(32), 2u);
  EXPECT_EQ(default_heavy_threshold(33), 3u);
  EXPECT_EQ(default_heavy_threshold(100000), 10u);
  EXPECT_EQ(default_heavy_threshold(100001), 11u);
  EXPECT_EQ(default_degree_threshold(32), 8u);
  EXPECT_EQ(default_degree_threshold(243), 27u);
  EXPECT_EQ(default_degree_threshold(244), 28u);
  EXPECT_EQ(default_degree_threshold(100000), 1000u);
}

TEST(Solve3CutAuto, Examples) {
  // Twenty disjoint triples: nothing is heavy and no pair degree exceeds ceil(20^(3/5)) = 7.
  HypergraphBuilder builder(3, 60);
  for (Vertex i = 0; i < 20; ++i) builder.add_edge({3 * i, 3 * i + 1, 3 * i + 2});
  auto disjoint = builder.build();
  auto report = preprocess_heavy(disjoint, default_heavy_threshold(20), default_degree_threshold(20));
  EXPECT_EQ(report.kept.size(), 60u);
  auto plan = plan_with_seed(6);
  EXPECT_EQ(solve_3cut_auto(disjoint, plan).assignment, solve_3cut(disjoint, plan).assignment);
  EXPECT_EQ(solve_3cut_auto(disjoint, plan).cut_value, 20u);

  auto k7 = gen_complete(3, 7);
  auto cut = solve_3cut_auto(k7, plan_with_seed(7));
  EXPECT_LE(cut.cut_value, brute_force_max_kcut(k7, 3).cut_value);
  EXPECT_GE(Rational(static_cast<std::int64_t>(cut.cut_value)), Rational(2, 9) * 35);

  EXPECT_EQ(solve_3cut_auto(Hypergraph(3, 5), plan).cut_value, 0u);
}

TEST(Solve3CutAuto, NeverWorseThanDirectSolve) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    // Heavy pairs make the restricted instance differ from H.
    HypergraphBuilder builder(3, 18);
    auto base = gen_random_3graph(18, 0.08, seed);
    for (std::size_t i = 0; i < base.num_distinct_edges(); ++i) builder.add_edge(base.edge(i), base.multiplicity(i));
    for (Vertex w = 2; w < 10; ++w) builder.add_edge({0, 1, w}, 2);
    auto h = builder.build();
    auto plan = plan_with_seed(seed, 10);
    EXPECT_GE(solve_3cut_auto(h, plan).cut_value, solve_3cut(h, plan).cut_value);
  }
}

TEST(ReduceCutUp, Examples) {
  auto lifted = reduce_cut_up(triple(), make_kcut(triple(), {0, 0, 1}, 2), 50, 1);
  EXPECT_EQ(lifted.k, 3);
  EXPECT_EQ(lifted.cut_value, 1u);

  auto k45 = gen_complete(4, 5);
  auto best3 = brute_force_max_kcut(k45, 3);
  EXPECT_EQ(best3.cut_value, 4u);
  auto best4 = reduce_cut_up(k45, best3, 200, 2);
  EXPECT_EQ(best4.cut_value, brute_force_max_kcut(k45, 4).cut_value);
  EXPECT_EQ(best4.cut_value, 2u);

  EXPECT_THROW(reduce_cut_up(triple(), make_kcut(triple(), {0, 1, 2}, 3), 5, 1), InputError);
  EXPECT_THROW(reduce_cut_up(gen_complete(2, 3), make_kcut(gen_complete(2, 3), {0, 1, 0}, 2), 5, 1), InputError);
}

// A single lift cuts each input-cut edge with probability 2(1-1/r)^(r-1)/r.
TEST(ReduceCutUp, SingleTrialMeanMatchesLiftProbability) {
  for (int r : {3, 4, 5}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(r));
    auto h = testing::random_hypergraph(r, 9, 30, rng);
    auto input = brute_force_max_kcut(h, r - 1);
    const double c = 2.0 * std::pow(1.0 - 1.0 / r, r - 1) / r;
    const double expected = c * static_cast<double>(input.cut_value);
    const int runs = 200;
    double sum = 0.0;
    double sq = 0.0;
    for (int s = 0; s < runs; ++s) {
      const double v = static_cast<double>(reduce_cut_up(h, input, 1, static_cast<std::uint64_t>(s)).cut_value);
      sum += v;
      sq += v * v;
    }
    const double mean = sum / runs;
    const double sd = std::sqrt(std::max(0.0, sq / runs - mean * mean));
    EXPECT_NEAR(mean, expected, 3.0 * sd / std::sqrt(static_cast<double>(runs))) << "r=" << r;
    EXPECT_GE(static_cast<double>(reduce_cut_up(h, input, runs, 99).cut_value), expected);
  }
}

TEST(SolveKCut, Examples) {
  auto plan = plan_with_seed(8);
  auto h = gen_random_3graph(12, 0.2, 3);
  auto via_kcut = solve_kcut(h, 3, plan);
  EXPECT_EQ(via_kcut.cut.assignment, solve_3cut_auto(h, plan).assignment);
  EXPECT_EQ(via_kcut.source, "three-cut");
  EXPECT_TRUE(via_kcut.in_guarantee_range);

  auto k46 = gen_complete(4, 6);
  auto three = solve_kcut(k46, 3, plan);
  EXPECT_GE(Rational(static_cast<std::int64_t>(three.cut.cut_value)), random_cut_coefficient(4, 3) * 15);
  EXPECT_LE(three.cut.cut_value, brute_force_max_kcut(k46, 3).cut_value);

  auto single = HypergraphBuilder(4, 4).add_edge({0, 1, 2, 3}).build();
  auto four = solve_kcut(single, 4, plan);
  EXPECT_EQ(four.cut.cut_value, 1u);
  EXPECT_TRUE(four.in_guarantee_range);
}

TEST(SolveKCut, OutOfRangeFallsBackToBaseline) {
  auto k46 = gen_complete(4, 6);
  auto sol = solve_kcut(k46, 2, plan_with_seed(9));
  EXPECT_FALSE(sol.in_guarantee_range);
  EXPECT_EQ(sol.source, "baseline");
  EXPECT_EQ(sol.cut.cut_value, naive_cut(k46, sol.cut.assignment, 2));
  EXPECT_THROW(solve_kcut(k46, 1, plan_with_seed(9)), InputError);
}

TEST(SolveKCut, GraphBipartitionFloor) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 5; ++rep) {
    auto g = testing::random_multigraph(12, rng);
    auto sol = solve_kcut(g, 2, plan_with_seed(static_cast<std::uint64_t>(rep)));
    EXPECT_GE(sol.cut.surplus, Rational(0));
  }
}

TEST(SolveKCut, ReductionChainAgainstOracle) {
  std::mt19937_64 rng(11);
  for (int r : {4, 5}) {
    auto h = testing::random_hypergraph(r, 7, 20, rng);
    for (int k : {r - 1, r}) {
      auto sol = solve_kcut(h, k, plan_with_seed(static_cast<std::uint64_t>(r * 10 + k), 10));
      EXPECT_EQ(sol.cut.cut_value, naive_cut(h, sol.cut.assignment, k));
      EXPECT_LE(sol.cut.cut_value, brute_force_max_kcut(h, k).cut_value);
      EXPECT_GE(sol.cut.surplus, Rational(0)) << "r=" << r << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace hypercut
