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

#include "hypercut/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "hypercut/errors.hpp"

namespace hypercut {

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
  return t;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double scale = 0.0;
  for (double x : data_) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (double x : data_) s += (x / scale) * (x / scale);
  return scale * std::sqrt(s);
}

bool SymmetricMatrix::has_zero_diagonal() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (data_[i * n_ + i] != 0.0) return false;
  }
  return true;
}

SymmetricMatrix SymmetricMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SymmetricMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= n_) throw InputError("principal submatrix index out of range");
    for (std::size_t b = 0; b < indices.size(); ++b) {
      sub.data_[a * sub.n_ + b] = (*this)(indices[a], indices[b]);
    }
  }
  return sub;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.n_ != n_) throw InputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
  if (other.n_ != n_) throw InputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double scale) noexcept {
  for (double& x : data_) x *= scale;
  return *this;
}

double inner_product(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.size() != b.size()) throw InputError("matrix dimension mismatch");
  return std::inner_product(a.data().begin(), a.data().end(), b.data().begin(), 0.0);
}

SymmetricMatrix adjacency_matrix(const Hypergraph& graph) {
  if (graph.uniformity() != 2) throw InputError("adjacency matrix requires a 2-uniform multigraph");
  SymmetricMatrix a(graph.num_vertices());
  for (std::size_t i = 0; i < graph.num_distinct_edges(); ++i) {
    const auto e = graph.edge(i);
    a.add(e[0], e[1], static_cast<double>(graph.multiplicity(i)));
  }
  return a;
}

SymmetricMatrix adjacency_matrix(const ColoredMultigraph& graph) {
  SymmetricMatrix a(graph.num_vertices());
  for (const auto& e : graph.edges()) a.add(e.u, e.v, static_cast<double>(e.multiplicity));
  return a;
}

void write_matrix(std::ostream& out, const SymmetricMatrix& a) {
  const auto old_precision = out.precision(17);
  out << a.size() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  out.precision(old_precision);
}

SymmetricMatrix read_matrix(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) throw InputError("matrix text: missing dimension");
  std::vector<double> values(n * n);
  for (auto& x : values) {
    if (!(in >> x)) throw InputError("matrix text: truncated");
  }
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (values[i * n + j] != values[j * n + i]) throw InputError("matrix text: not symmetric");
      a.set(i, j, values[i * n + j]);
    }
  }
  return a;
}

double EigenDecomposition::spectral_radius() const noexcept {
  if (eigenvalues.empty()) return 0.0;
  return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

std::vector<std::size_t> EigenDecomposition::negative_indices() const {
  const double threshold = -static_cast<double>(n) * tolerance * spectral_radius();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i] < threshold) out.push_back(i);
  }
  return out;
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& a, double tol, int max_sweeps) {
  const std::size_t n = a.size();
  if (n == 0) throw InputError("eigen_decompose: empty matrix");
  if (!(tol > 0.0)) throw InputError("eigen_decompose: tolerance must be positive");
  if (max_sweeps < 1) throw InputError("eigen_decompose: sweep cap must be positive");
  for (double x : a.data()) {
    if (!std::isfinite(x)) throw InputError("eigen_decompose: non-finite entry");
  }

  // Working copy of A (row-major, kept symmetric) and accumulated rotations V
  // (row-major here: V[k*n + i] is component k of eigenvector i).
  std::vector<double> w(a.data().begin(), a.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = tol * a.frobenius_norm();
  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) m = std::max(m, std::abs(w[p * n + q]));
    }
    return m;
  };

  // Once the threshold is met, one more sweep is run; convergence is
  // quadratic by then, so it takes the off-diagonal part to rounding level.
  int sweeps = 0;
  bool polishing = false;
  double off = max_off();
  while (off > 0.0) {
    if (off <= threshold) {
      if (polishing) break;
      polishing = true;
    } else if (sweeps >= max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge; max off-diagonal " + std::to_string(off), off);
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w[p * n + q];
        if (std::abs(apq) <= threshold * 1e-3 || apq == 0.0) continue;
        const double theta = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = w[k * n + p];
          const double akq = w[k * n + q];
          const double new_kp = c * akp - s * akq;
          const double new_kq = s * akp + c * akq;
          w[k * n + p] = w[p * n + k] = new_kp;
          w[k * n + q] = w[q * n + k] = new_kq;
        }
        w[p * n + p] -= t * apq;
        w[q * n + q] += t * apq;
        w[p * n + q] = w[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = max_off();
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w[x * n + x] > w[y * n + y]; });

  EigenDecomposition eig;
  eig.n = n;
  eig.tolerance = tol;
  eig.sweeps = sweeps;
  eig.eigenvalues.resize(n);
  eig.eigenvectors.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    eig.eigenvalues[i] = w[src * n + src];
    for (std::size_t k = 0; k < n; ++k) eig.eigenvectors[i * n + k] = v[k * n + src];
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto vi = eig.vector(i);
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = a.row(r);
      const double av = std::inner_product(row.begin(), row.end(), vi.begin(), 0.0);
      eig.residual = std::max(eig.residual, std::abs(av - eig.eigenvalues[i] * vi[r]));
    }
    for (std::size_t j = i; j < n; ++j) {
      const auto vj = eig.vector(j);
      const double dot = std::inner_product(vi.begin(), vi.end(), vj.begin(), 0.0);
      eig.orthogonality_error = std::max(eig.orthogonality_error, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return eig;
}

double energy(const EigenDecomposition& eig) {
  double e = 0.0;
  for (double lambda : eig.eigenvalues) e += std::abs(lambda);
  return e;
}

double energy(const SymmetricMatrix& a) {
  if (a.size() == 0) return 0.0;
  return energy(eigen_decompose(a));
}

SpectralStats spectral_stats(const SymmetricMatrix& a) {
  SpectralStats stats;
  stats.frobenius = a.frobenius_norm();
  stats.trace = a.trace();
  if (a.size() > 0) stats.spectral_radius = eigen_decompose(a).spectral_radius();
  return stats;
}

SymmetricMatrix negative_eigenspace_psd(const EigenDecomposition& eig) {
  const std::size_t n = eig.n;
  SymmetricMatrix x(n);
  for (std::size_t idx : eig.negative_indices()) {
    const auto vi = eig.vector(idx);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) x.add(r, c, r == c ? vi[r] * vi[r] : vi[r] * vi[c]);
    }
  }
  return x;
}

double sdp_energy_bound(const SymmetricMatrix& a, double tol) {
  if (a.size() == 0) return 0.0;
  const double n = static_cast<double>(a.size());
  if (std::abs(a.trace()) > n * tol * std::max(1.0, a.frobenius_norm())) {
    throw PreconditionError("sdp_energy_bound requires tr(A) = 0, got " + std::to_string(a.trace()));
  }
  const auto x = negative_eigenspace_psd(eigen_decompose(a, tol));
  return -0.5 * inner_product(x, a);
}

}  // namespace hypercut
