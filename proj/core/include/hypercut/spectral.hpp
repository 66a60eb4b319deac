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
#include <iosfwd>
#include <span>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

inline constexpr double kDefaultEigenTolerance = 1e-10;
inline constexpr int kJacobiSweepCap = 100;

/// Dense real symmetric matrix. Writes go through set()/add(), which keep
/// both triangles identical, so A(i,j) == A(j,i) holds bit for bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  void set(std::size_t i, std::size_t j, double value) noexcept {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  void add(std::size_t i, std::size_t j, double value) noexcept {
    data_[i * n_ + j] += value;
    if (i != j) data_[j * n_ + i] += value;
  }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  bool has_zero_diagonal() const noexcept;

  /// Rows and columns listed in indices, in that order.
  SymmetricMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator-=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double scale) noexcept;

  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
  friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
  friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Entrywise scalar product <A, B> = sum_ij A(i,j) B(i,j).
double inner_product(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Adjacency matrix of a 2-uniform multigraph: A(u,v) = multiplicity, zero diagonal.
SymmetricMatrix adjacency_matrix(const Hypergraph& graph);
/// Adjacency matrix of the colored multigraph with all colors merged.
SymmetricMatrix adjacency_matrix(const ColoredMultigraph& graph);

/// Dense whitespace text form: "n" then n rows.
void write_matrix(std::ostream& out, const SymmetricMatrix& a);
SymmetricMatrix read_matrix(std::istream& in);

struct EigenDecomposition {
  std::size_t n = 0;
  /// Sorted descending.
  std::vector<double> eigenvalues;
  /// Column-major: eigenvector i occupies [i*n, (i+1)*n).
  std::vector<double> eigenvectors;
  /// max_ij |(A v_i - lambda_i v_i)_j|
  double residual = 0.0;
  /// max_ij |<v_i, v_j> - delta_ij|
  double orthogonality_error = 0.0;
  double tolerance = kDefaultEigenTolerance;
  int sweeps = 0;

  std::span<const double> vector(std::size_t i) const noexcept { return {eigenvectors.data() + i * n, n}; }
  /// max(|lambda_1|, |lambda_n|)
  double spectral_radius() const noexcept;
  /// Indices i with lambda_i < -n * tolerance * spectral_radius().
  std::vector<std::size_t> negative_indices() const;
};

/// Cyclic Jacobi eigensolver. Rotates until every off-diagonal entry is at
/// most tol * ||A||_F, then runs one extra sweep. Throws NumericError if the
/// threshold is not met within max_sweeps sweeps, and InputError for an
/// empty matrix, non-finite entries, or tol <= 0.
EigenDecomposition eigen_decompose(const SymmetricMatrix& a, double tol = kDefaultEigenTolerance,
                                   int max_sweeps = kJacobiSweepCap);

/// Sum of absolute eigenvalues.
double energy(const EigenDecomposition& eig);
double energy(const SymmetricMatrix& a);

struct SpectralStats {
  double spectral_radius = 0.0;
  double frobenius = 0.0;
  double trace = 0.0;
};

SpectralStats spectral_stats(const SymmetricMatrix& a);

/// X = sum over negative eigenpairs of v_i v_i^T. X is PSD and X(j,j) <= 1.
SymmetricMatrix negative_eigenspace_psd(const EigenDecomposition& eig);

/// -1/2 <X, A> with X from negative_eigenspace_psd; equals energy(A) / 4
/// when tr(A) = 0. Throws PreconditionError when |tr(A)| exceeds
/// n * tol * max(1, ||A||_F).
double sdp_energy_bound(const SymmetricMatrix& a, double tol = kDefaultEigenTolerance);

}  // namespace hypercut
