// Copyright 2026 The prasym Authors.
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

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "prasym/graph.hpp"

namespace prasym {

inline constexpr std::size_t kDefaultDenseLimit = 2048;

struct SpectralOptions {
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::uint64_t seed = 0;
};

// Power-iteration estimate with a residual certificate. `residual` is
// ||B²x - μx|| / μ for the squared operator, which bounds the relative
// error of μ against the nearest eigenvalue of B².
struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// P = A D^-1 and Q = D^-1/2 A D^-1/2 applied matrix-free. Holds a scratch
// buffer, so one instance must not be shared between threads; construction
// is O(n).
class WalkOperator {
 public:
  // Throws StructuralError on an empty graph or an isolated vertex.
  explicit WalkOperator(const Graph& g);

  std::size_t size() const { return inv_degree_.size(); }
  void apply_P(std::span<const double> x, std::span<double> y) const;
  void apply_Q(std::span<const double> x, std::span<double> y) const;
  // Q̃x = Qx - u1(u1ᵀx), re-projected against u1.
  void apply_Q_deflated(std::span<const double> x, std::span<double> y) const;
  // Removes the u1 component in place.
  void project_out_perron(std::span<double> x) const;

  std::span<const double> inv_degree() const { return inv_degree_; }
  std::span<const double> inv_sqrt_degree() const { return inv_sqrt_degree_; }
  std::span<const double> perron() const { return perron_; }

 private:
  const Graph* graph_;
  std::vector<double> inv_degree_;
  std::vector<double> inv_sqrt_degree_;
  std::vector<double> perron_;
  mutable std::vector<double> scratch_;
};

std::vector<double> matvec_P(const Graph& g, std::span<const double> x);
std::vector<double> matvec_Q(const Graph& g, std::span<const double> x);

// u1 = D^1/2 1 / sqrt(vol). Throws StructuralError when vol = 0.
std::vector<double> perron_vector(const Graph& g);

// max(|λ2(Q)|, |λn(Q)|) by power iteration on Q̃², reported as the square
// root of the Rayleigh quotient (a lower estimate that converges from below).
SpectralEstimate second_eigenvalue_magnitude(const Graph& g, const SpectralOptions& opts = {});

using SymmetricOperator = std::function<void(std::span<const double>, std::span<double>)>;

// Largest |eigenvalue| of a symmetric operator, by power iteration on op².
SpectralEstimate spectral_norm_sym(const SymmetricOperator& op, std::size_t n,
                                   const SpectralOptions& opts = {});

// Dense oracles -------------------------------------------------------------

struct DenseSpectrum {
  std::vector<double> eigenvalues;  // descending
  Eigen::MatrixXd eigenvectors;     // column k pairs with eigenvalues[k]
};

Eigen::MatrixXd dense_adjacency(const Graph& g, std::size_t dense_limit = kDefaultDenseLimit);
Eigen::MatrixXd dense_P(const Graph& g, std::size_t dense_limit = kDefaultDenseLimit);
Eigen::MatrixXd dense_Q(const Graph& g, std::size_t dense_limit = kDefaultDenseLimit);

// Full eigendecomposition of Q. Throws SizeError above dense_limit.
DenseSpectrum dense_spectrum(const Graph& g, std::size_t dense_limit = kDefaultDenseLimit);

// Largest |eigenvalue| of a dense symmetric matrix.
double dense_spectral_norm(const Eigen::MatrixXd& m);

}  // namespace prasym
