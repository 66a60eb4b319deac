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

#include "hypercut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypercut/errors.hpp"
#include "hypercut/seed.hpp"

namespace hypercut {

namespace {

constexpr double kZeroNorm = 1e-12;

// Strictly better value, or equal value and lexicographically smaller signs.
bool improves(const BipartitionResult& candidate, const BipartitionResult& incumbent) {
  if (incumbent.signs.empty() && !candidate.signs.empty()) return true;
  if (candidate.value != incumbent.value) return candidate.value > incumbent.value;
  return candidate.signs < incumbent.signs;
}

SignVector round_once(const GramVectors& z, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> g(z.dim);
  for (double& x : g) x = normal(rng);
  SignVector signs(z.n);
  for (std::size_t i = 0; i < z.n; ++i) {
    const auto zi = z.vector(i);
    double dot = 0.0;
    double norm2 = 0.0;
    for (std::size_t j = 0; j < z.dim; ++j) {
      dot += g[j] * zi[j];
      norm2 += zi[j] * zi[j];
    }
    if (norm2 <= kZeroNorm * kZeroNorm || dot == 0.0) {
      signs[i] = coin(rng) ? 1 : -1;
    } else {
      signs[i] = dot > 0.0 ? 1 : -1;
    }
  }
  return signs;
}

void check_signs(const SymmetricMatrix& a, std::span<const int> x) {
  if (x.size() != a.size()) throw InputError("sign vector length does not match matrix dimension");
  for (int s : x) {
    if (s != 1 && s != -1) throw InputError("sign vector entries must be -1 or +1");
  }
}

}  // namespace

double GramVectors::norm(std::size_t i) const {
  double s = 0.0;
  for (double x : vector(i)) s += x * x;
  return std::sqrt(s);
}

GramVectors gram_vectors(const EigenDecomposition& eig) {
  const auto negatives = eig.negative_indices();
  GramVectors z;
  z.n = eig.n;
  z.dim = negatives.size();
  z.coords.resize(z.n * z.dim);
  for (std::size_t j = 0; j < z.dim; ++j) {
    const auto v = eig.vector(negatives[j]);
    for (std::size_t i = 0; i < z.n; ++i) z.coords[i * z.dim + j] = v[i];
  }
  return z;
}

double quadratic_surplus(const SymmetricMatrix& a, std::span<const int> x) {
  check_signs(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto row = a.row(i);
    double partial = 0.0;
    for (std::size_t j = i + 1; j < a.size(); ++j) partial += row[j] * x[j];
    s += partial * x[i];
  }
  return -0.5 * s;
}

int default_rounding_trials(std::size_t n) {
  return 100 * static_cast<int>(std::ceil(std::log2(static_cast<double>(n) + 1.0)));
}

BipartitionResult gaussian_sign_round(const GramVectors& z, const SymmetricMatrix& a, int trials,
                                      std::uint64_t seed) {
  if (z.n != a.size()) throw InputError("Gram vectors and matrix have different dimensions");
  if (trials < 1) throw InputError("gaussian_sign_round needs at least one trial");
  BipartitionResult best;
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, "hyperplane", static_cast<std::uint64_t>(t));
    BipartitionResult candidate;
    candidate.signs = round_once(z, rng);
    candidate.value = quadratic_surplus(a, candidate.signs);
    if (improves(candidate, best)) best = std::move(candidate);
  }
  best.trials = trials;
  best.source = "hyperplane";
  return best;
}

BipartitionResult local_search_1flip(const SymmetricMatrix& a, SignVector x) {
  check_signs(a, x);
  const std::size_t n = a.size();
  // field[i] = sum_j A(i,j) x(j), j != i; flipping i changes the value by x(i) * field[i].
  std::vector<double> field(n, 0.0);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) field[i] += row[j] * x[j];
      scale = std::max(scale, std::abs(row[j]));
    }
  }
  const double eps = 1e-12 * std::max(1.0, scale);

  BipartitionResult result;
  std::size_t since_improvement = 0;
  std::size_t i = 0;
  while (n > 0 && since_improvement < n) {
    const double gain = x[i] * field[i];
    if (gain > eps) {
      const int old = x[i];
      x[i] = -old;
      const auto row = a.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) field[j] -= 2.0 * row[j] * old;
      }
      ++result.flips;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    i = (i + 1) % n;
  }
  result.value = quadratic_surplus(a, x);
  result.signs = std::move(x);
  result.trials = 1;
  result.source = "local-search";
  return result;
}

BipartitionResult best_bipartition(const SymmetricMatrix& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("best_bipartition needs at least one trial");
  if (!a.has_zero_diagonal()) throw InputError("best_bipartition requires a zero diagonal");
  BipartitionResult best;
  if (a.size() == 0) {
    best.source = "empty";
    return best;
  }
  int evaluated = 0;
  auto consider = [&](SignVector x, const char* source) {
    auto polished = local_search_1flip(a, std::move(x));
    polished.source = source;
    ++evaluated;
    if (improves(polished, best)) best = std::move(polished);
  };

  const auto eig = eigen_decompose(a);
  const auto z = gram_vectors(eig);
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, "hyperplane", static_cast<std::uint64_t>(t));
    consider(round_once(z, rng), "hyperplane");
  }

  const int random_trials = std::max(1, (trials + 3) / 4);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < random_trials; ++t) {
    auto rng = make_rng(seed, "random-signs", static_cast<std::uint64_t>(t));
    SignVector x(a.size());
    for (int& s : x) s = coin(rng) ? 1 : -1;
    consider(std::move(x), "random");
  }

  for (std::size_t idx : eig.negative_indices()) {
    const auto v = eig.vector(idx);
    SignVector x(a.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = v[i] < 0.0 ? -1 : 1;
    consider(std::move(x), "eigenvector");
  }

  best.trials = evaluated;
  return best;
}

BipartitionResult best_bipartition(const SymmetricMatrix& a, std::uint64_t seed) {
  return best_bipartition(a, default_rounding_trials(a.size()), seed);
}

}  // namespace hypercut
