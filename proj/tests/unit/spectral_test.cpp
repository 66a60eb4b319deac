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
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/spectral.hpp"

namespace hypercut {
namespace {

constexpr double kTol = 1e-9;

SymmetricMatrix adjacency_of_complete(Vertex n) { return adjacency_matrix(gen_complete(2, n)); }

SymmetricMatrix one_edge() { return adjacency_of_complete(2); }

void expect_values(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], kTol) << "index " << i;
}

TEST(Matrix, SymmetricWritesAndArithmetic) {
  SymmetricMatrix a(3);
  a.set(0, 2, 1.5);
  a.add(0, 2, 0.5);
  a.add(1, 1, 3.0);
  EXPECT_EQ(a(2, 0), 2.0);
  EXPECT_EQ(a(0, 2), 2.0);
  EXPECT_EQ(a.trace(), 3.0);
  EXPECT_FALSE(a.has_zero_diagonal());
  EXPECT_NEAR(a.frobenius_norm(), std::sqrt(4.0 + 4.0 + 9.0), 1e-15);
  auto b = 2.0 * a - a;
  EXPECT_EQ(b, a);
  std::vector<std::size_t> idx{2, 0};
  auto sub = a.principal_submatrix(idx);
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub(0, 1), 2.0);
  EXPECT_EQ(sub(0, 0), 0.0);
  EXPECT_EQ(inner_product(a, a), 17.0);
}

TEST(Matrix, AdjacencyFromMultigraph) {
  auto a = adjacency_matrix(HypergraphBuilder(2, 3).add_edge({0, 2}, 3).add_edge({1, 2}).build());
  EXPECT_EQ(a(0, 2), 3.0);
  EXPECT_EQ(a(2, 1), 1.0);
  EXPECT_EQ(a(0, 1), 0.0);
  EXPECT_TRUE(a.has_zero_diagonal());
  EXPECT_THROW(adjacency_matrix(gen_complete(3, 4)), InputError);

  ColoredMultigraph g(3, {{0, 1, 2, 1}, {0, 1, 5, 2}});
  EXPECT_EQ(adjacency_matrix(g)(0, 1), 3.0);
}

TEST(Matrix, TextRoundTrip) {
  std::mt19937_64 rng(1);
  auto a = testing::random_symmetric(5, rng);
  std::stringstream s;
  write_matrix(s, a);
  EXPECT_EQ(read_matrix(s), a);
}

TEST(Eigen, Examples) {
  expect_values(eigen_decompose(SymmetricMatrix(3)).eigenvalues, {0, 0, 0});
  expect_values(eigen_decompose(one_edge()).eigenvalues, {1, -1});
  expect_values(eigen_decompose(adjacency_of_complete(3)).eigenvalues, {2, -1, -1});
}

TEST(Eigen, RejectsBadInput) {
  EXPECT_THROW(eigen_decompose(SymmetricMatrix(0)), InputError);
  SymmetricMatrix nan(2);
  nan.set(0, 1, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(eigen_decompose(nan), InputError);
  SymmetricMatrix inf(2);
  inf.set(1, 1, std::numeric_limits<double>::infinity());
  EXPECT_THROW(eigen_decompose(inf), InputError);
  EXPECT_THROW(eigen_decompose(one_edge(), 0.0), InputError);
  EXPECT_THROW(eigen_decompose(one_edge(), -1.0), InputError);
}

TEST(Eigen, SweepCapReportsAchievedOffDiagonal) {
  std::mt19937_64 rng(2);
  auto a = testing::random_symmetric(12, rng);
  try {
    eigen_decompose(a, 1e-10, 1);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_GT(e.achieved(), 1e-10 * a.frobenius_norm());
  }
  EXPECT_THROW(eigen_decompose(a, 1e-10, 0), InputError);
  EXPECT_LE(eigen_decompose(a).sweeps, kJacobiSweepCap);
}

TEST(Eigen, HugeEntriesDoNotOverflowTheStoppingRule) {
  SymmetricMatrix a(2);
  a.set(0, 1, 1e300);
  a.set(0, 0, 1e300);
  EXPECT_TRUE(std::isfinite(a.frobenius_norm()));
  auto eig = eigen_decompose(a);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(eig.eigenvalues[0] / 1e300, golden, 1e-12);
  EXPECT_NEAR(eig.eigenvalues[1] / 1e300, 1.0 - golden, 1e-12);
}

TEST(Eigen, MatchesReferenceSolver) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    auto a = testing::random_symmetric(n, rng);
    auto eig = eigen_decompose(a);
    auto ref = testing::reference_eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(eig.eigenvalues[i], ref[i], 1e-9 * static_cast<double>(n));
    EXPECT_TRUE(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
  }
}

TEST(Eigen, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 64; n += 9) {
    auto a = testing::random_symmetric(n, rng);
    auto eig = eigen_decompose(a);
    const double nd = static_cast<double>(n);
    EXPECT_LE(eig.orthogonality_error, 1e-10);
    EXPECT_LE(eig.residual, 1e-10);
    EXPECT_NEAR(std::accumulate(eig.eigenvalues.begin(), eig.eigenvalues.end(), 0.0), a.trace(), nd * 1e-10);

    // Reconstruction from independent outer products.
    SymmetricMatrix rebuilt(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto v = eig.vector(k);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) rebuilt.add(i, j, eig.eigenvalues[k] * v[i] * v[j]);
      }
    }
    EXPECT_LE((rebuilt - a).frobenius_norm(), nd * 1e-10);

    double sq = 0.0;
    for (double l : eig.eigenvalues) sq += l * l;
    EXPECT_NEAR(std::sqrt(sq), a.frobenius_norm(), 1e-9);
  }
}

TEST(Eigen, Weyl) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rep) % 31;
    auto a = testing::random_symmetric(n, rng);
    auto b = testing::random_symmetric(n, rng);
    auto la = eigen_decompose(a).eigenvalues;
    auto lab = eigen_decompose(a + b).eigenvalues;
    const double nb = eigen_decompose(b).spectral_radius();
    for (std::size_t k = 0; k < n; ++k) EXPECT_LE(std::abs(lab[k] - la[k]), nb + 1e-8);
  }
}

TEST(Eigen, CauchyInterlacing) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 3 + static_cast<std::size_t>(rep) % 20;
    auto a = testing::random_symmetric(n, rng);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t m = 1 + rng() % (n - 1);
    idx.resize(m);
    auto la = eigen_decompose(a).eigenvalues;
    auto lb = eigen_decompose(a.principal_submatrix(idx)).eigenvalues;
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_GE(la[i] + 1e-8, lb[i]);
      EXPECT_GE(lb[i] + 1e-8, la[i + (n - m)]);
    }
  }
}

TEST(Energy, Examples) {
  EXPECT_NEAR(energy(one_edge()), 2.0, kTol);
  EXPECT_NEAR(energy(adjacency_of_complete(3)), 4.0, kTol);
  EXPECT_NEAR(energy(adjacency_of_complete(5)), 8.0, kTol);
  EXPECT_NEAR(energy(SymmetricMatrix(4)), 0.0, kTol);
}

TEST(Energy, MatchesReferenceAndIsSubadditiveUpToFour) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 4 + static_cast<std::size_t>(rep) * 4;
    auto a = testing::random_symmetric(n, rng);
    auto b = testing::random_symmetric(n, rng);
    const double ea = energy(a);
    EXPECT_NEAR(ea, testing::reference_energy(a), 1e-8 * static_cast<double>(n));
    EXPECT_LE(energy(a + b), 4.0 * (ea + energy(b)) + 1e-8);
    // Energy is a norm, so the factor 4 is loose; the triangle inequality holds too.
    EXPECT_LE(energy(a + b), ea + energy(b) + 1e-8);
  }
}

TEST(SpectralStats, Examples) {
  auto s1 = spectral_stats(one_edge());
  EXPECT_NEAR(s1.spectral_radius, 1.0, kTol);
  EXPECT_NEAR(s1.frobenius, std::sqrt(2.0), kTol);
  EXPECT_EQ(s1.trace, 0.0);
  auto s2 = spectral_stats(adjacency_of_complete(3));
  EXPECT_NEAR(s2.spectral_radius, 2.0, kTol);
  EXPECT_NEAR(s2.frobenius, std::sqrt(6.0), kTol);
  auto s3 = spectral_stats(SymmetricMatrix(3));
  EXPECT_EQ(s3.spectral_radius, 0.0);
  EXPECT_EQ(s3.frobenius, 0.0);
  EXPECT_EQ(s3.trace, 0.0);
}

void expect_matrix(const SymmetricMatrix& got, const std::vector<std::vector<double>>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(got(i, j), want[i][j], kTol) << i << "," << j;
  }
}

TEST(NegativeEigenspace, Examples) {
  SymmetricMatrix psd(2);
  psd.set(0, 0, 2.0);
  psd.set(1, 1, 1.0);
  psd.set(0, 1, 0.5);
  expect_matrix(negative_eigenspace_psd(eigen_decompose(psd)), {{0, 0}, {0, 0}});
  expect_matrix(negative_eigenspace_psd(eigen_decompose(one_edge())), {{0.5, -0.5}, {-0.5, 0.5}});
  const double d = 2.0 / 3.0;
  const double o = -1.0 / 3.0;
  expect_matrix(negative_eigenspace_psd(eigen_decompose(adjacency_of_complete(3))), {{d, o, o}, {o, d, o}, {o, o, d}});
}

TEST(NegativeEigenspace, IsPsdWithDiagonalAtMostOne) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = testing::random_symmetric(3 + static_cast<std::size_t>(rep) * 3, rng, true);
    auto x = negative_eigenspace_psd(eigen_decompose(a));
    for (double l : testing::reference_eigenvalues(x)) EXPECT_GE(l, -1e-9);
    for (std::size_t j = 0; j < x.size(); ++j) EXPECT_LE(x(j, j), 1.0 + 1e-9);
  }
}

TEST(NegativeEigenspace, NumericalZerosStayOut) {
  // Rank-one PSD matrix: n-1 eigenvalues are zero up to rounding.
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  std::vector<double> u(20);
  for (auto& x : u) x = normal(rng);
  SymmetricMatrix a(20);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = i; j < 20; ++j) a.set(i, j, u[i] * u[j]);
  }
  EXPECT_TRUE(eigen_decompose(a).negative_indices().empty());
}

TEST(SdpBound, Examples) {
  EXPECT_NEAR(sdp_energy_bound(one_edge()), 0.5, kTol);
  EXPECT_NEAR(sdp_energy_bound(adjacency_of_complete(3)), 1.0, kTol);
  EXPECT_EQ(sdp_energy_bound(SymmetricMatrix(3)), 0.0);
}

TEST(SdpBound, EqualsQuarterEnergyForTracelessMatrices) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rep) * 3;
    auto a = testing::random_symmetric(n, rng, true);
    EXPECT_NEAR(sdp_energy_bound(a), testing::reference_energy(a) / 4.0, 1e-8 * static_cast<double>(n));
  }
}

TEST(SdpBound, RejectsNonzeroTrace) {
  SymmetricMatrix a(2);
  a.set(0, 0, 1.0);
  EXPECT_THROW(sdp_energy_bound(a), PreconditionError);
}

TEST(Spectral, BasisInvariantUnderPermutation) {
  // Complete graphs repeat the eigenvalue -1, so the eigenbasis is not unique.
  std::mt19937_64 rng(12);
  for (Vertex n : {5u, 7u, 9u}) {
    auto a = adjacency_of_complete(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto b = a.principal_submatrix(perm);
    auto xa = negative_eigenspace_psd(eigen_decompose(a));
    auto xb = negative_eigenspace_psd(eigen_decompose(b));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(xb(i, j), xa(perm[i], perm[j]), 1e-9);
    }
    EXPECT_NEAR(energy(a), energy(b), 1e-9);
    EXPECT_NEAR(sdp_energy_bound(a), sdp_energy_bound(b), 1e-9);
  }
}

}  // namespace
}  // namespace hypercut
