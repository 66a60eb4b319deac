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

#include "hypercut/spectral.hpp"

namespace hypercut {

/// Entries are -1 or +1.
using SignVector = std::vector<int>;

/// Rows z_1..z_n of dimension d = number of negative eigenvalues, with
/// z_i(j) = v_j(i) over the negative eigenvectors v_j, so <z_i, z_k> = X(i,k).
struct GramVectors {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> coords;  // row-major n x dim

  std::span<const double> vector(std::size_t i) const noexcept { return {coords.data() + i * dim, dim}; }
  double norm(std::size_t i) const;
};

struct BipartitionResult {
  SignVector signs;
  /// -1/2 * sum_{i<j} A(i,j) x(i) x(j); for an adjacency matrix this is cut - m/2.
  double value = 0.0;
  int trials = 0;
  std::size_t flips = 0;
  /// Which candidate family produced the result: "hyperplane", "random",
  /// "eigenvector", "local-search" or "empty".
  std::string source;
};

GramVectors gram_vectors(const EigenDecomposition& eig);

/// Surplus of the bipartition given by x, summing over unordered pairs.
double quadratic_surplus(const SymmetricMatrix& a, std::span<const int> x);

/// 100 * ceil(log2(n + 1)).
int default_rounding_trials(std::size_t n);

/// Hyperplane rounding: for each trial draw g ~ N(0, I_d) and set
/// x(i) = sign(<g, z_i>), with a fair coin for zero products and (near) zero
/// vectors. Returns the best trial; ties go to the lexicographically smallest x.
BipartitionResult gaussian_sign_round(const GramVectors& z, const SymmetricMatrix& a, int trials,
                                      std::uint64_t seed);

/// First-improvement single-sign flips in cyclic vertex order until no flip
/// strictly increases the value.
BipartitionResult local_search_1flip(const SymmetricMatrix& a, SignVector x);

/// Best bipartition over hyperplane-rounded Gram vectors, uniformly random
/// signs, and the sign patterns of each negative eigenvector, every candidate
/// polished by local_search_1flip. Requires a zero diagonal.
BipartitionResult best_bipartition(const SymmetricMatrix& a, int trials, std::uint64_t seed);
BipartitionResult best_bipartition(const SymmetricMatrix& a, std::uint64_t seed);

}  // namespace hypercut
