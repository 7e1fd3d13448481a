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
#include <span>
#include <vector>

#include "prasym/graph.hpp"
#include "prasym/graph_models.hpp"
#include "prasym/pagerank.hpp"

namespace prasym {

// π̄ = α d/vol + (1-α) v. Valid for alpha in [0, 1].
std::vector<double> approx_mixture(const Graph& g, const PreferenceVector& v, double alpha);

struct SbmApproxStructure {
  double beta = 0.0;
  std::vector<double> u;  // +1/sqrt(n) on C1, -1/sqrt(n) on C2
  // (Σ_{C1} v, Σ_{C2} v)
  double mass_c1 = 0.0;
  double mass_c2 = 0.0;
};

SbmApproxStructure sbm_structure(const SbmParams& params, const PreferenceVector& v);

// (1-α)(I - αP̄)⁻¹v with P̄ = ĀW⁻¹, reduced to a 2×2 system in the two
// community sums of W⁻¹π̄. O(n).
std::vector<double> approx_sbm_general(const SbmParams& params, const PreferenceVector& v,
                                       double alpha);

// Equal communities, closed form:
// α/n 1 + (1-α)(v + αβ/(1-αβ) (vᵀu) u).
std::vector<double> approx_sbm_equal(std::size_t n, double p, double q,
                                     const PreferenceVector& v, double alpha);

// Explicit P̄ = ĀW⁻¹ as a dense matrix; test oracle for the two routes above.
Eigen::MatrixXd dense_average_transition(const SbmParams& params);
std::vector<double> approx_sbm_dense(const SbmParams& params, const PreferenceVector& v,
                                     double alpha);

// π rebuilt from the eigendecomposition of Q:
// (1-α) D^{1/2} [Σ_i uᵢuᵢᵀ / (1-αλᵢ)] D^{-1/2} v. Dense oracle, small n only.
std::vector<double> pagerank_spectral_form(const Graph& g, const PreferenceVector& v,
                                           double alpha,
                                           std::size_t dense_limit = kDefaultDenseLimit);

// ε = π - π̄.
std::vector<double> error_vector(std::span<const double> pi, std::span<const double> pibar);

}  // namespace prasym
