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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "prasym/graph.hpp"

namespace prasym {

// ---------------------------------------------------------------------------
// Expected-degree recipes.

struct ConstantWeights {
  double w = 1.0;
};

// I.i.d. geometric draws rescaled to `target_mean`, then clipped into
// [L, ratio*L] with L searched so the clipped mean matches the target.
struct GeometricClippedWeights {
  double target_mean = 1.0;
  double ratio = 7.0;
};

enum class PowerLawOffset {
  // i0 = n * d(beta-1) / (m(beta-2))
  kVerbatim,
  // i0 = n * (d(beta-2) / (m(beta-1)))^(beta-1), which makes the largest
  // weight equal to max_degree.
  kStandard,
};

// w_i = c (i0 + i)^(-1/(beta-1)), i = 1..n, with
// c = (beta-2)/(beta-1) * d * n^(1/(beta-1)).
struct PowerLawWeights {
  double beta = 4.0;
  double avg_degree = 1.0;
  double max_degree = 1.0;
  PowerLawOffset offset = PowerLawOffset::kVerbatim;
};

struct ExplicitWeights {
  std::vector<double> w;
};

using WeightSpec =
    std::variant<ConstantWeights, GeometricClippedWeights, PowerLawWeights, ExplicitWeights>;

// `seed` only matters for the geometric recipe.
std::vector<double> realize_weights(const WeightSpec& spec, std::size_t n,
                                    std::uint64_t seed = 0);

double power_law_scale(const PowerLawWeights& spec, std::size_t n);
double power_law_offset(const PowerLawWeights& spec, std::size_t n);

// Throws ParameterError naming the first index with w_i <= 0 or
// w_i^2 > sum(w).
void check_weights_feasible(std::span<const double> w);

// ---------------------------------------------------------------------------
// Two-community block model. Vertices [0, m) form C1 and [m, n) form C2.

struct SbmParams {
  std::size_t m = 1;
  std::size_t n = 2;
  double p = 0.0;
  double q = 0.0;

  // Expected degree of a C1 / C2 vertex under the full-block convention
  // (diagonal entry p counted).
  double degree_c1() const { return static_cast<double>(m) * p + static_cast<double>(n - m) * q; }
  double degree_c2() const { return static_cast<double>(m) * q + static_cast<double>(n - m) * p; }
  double w_max() const;
  double w_min() const;
  // (p - q) / (p + q)
  double beta() const;
  bool in_c1(std::size_t i) const { return i < m; }

  // Throws ParameterError unless 1 <= m <= n-1, p, q in [0, 1] and q <= p
  // (the last check is skipped when allow_q_above_p is set).
  void validate(bool allow_q_above_p = false) const;
};

// Ā = E(A) with the diagonal filled by the within-community value. Matvec
// is O(n) through the two community sums.
class SbmExpectation {
 public:
  explicit SbmExpectation(SbmParams params);

  const SbmParams& params() const { return params_; }
  std::size_t size() const { return params_.n; }
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;
  std::vector<double> expected_degrees() const;
  double diagonal(std::size_t i) const { (void)i; return params_.p; }

 private:
  SbmParams params_;
};

SbmExpectation expected_adjacency_sbm(const SbmParams& params);

// Ā = w wᵀ / Σw for the expected-degree model, diagonal included.
class ChungLuExpectation {
 public:
  explicit ChungLuExpectation(std::vector<double> w);

  std::size_t size() const { return w_.size(); }
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> expected_degrees() const { return w_; }
  double diagonal(std::size_t i) const { return w_[i] * w_[i] / total_; }
  std::span<const double> weights() const { return w_; }

 private:
  std::vector<double> w_;
  double total_ = 0.0;
};

using ExpectedAdjacency = std::variant<SbmExpectation, ChungLuExpectation>;

void apply_expected(const ExpectedAdjacency& e, std::span<const double> x, std::span<double> y);
std::vector<double> expected_degrees(const ExpectedAdjacency& e);
double expected_diagonal(const ExpectedAdjacency& e, std::size_t i);

// ---------------------------------------------------------------------------
// Generators. Each unordered pair {i, j}, i < j, is decided by a uniform
// that is a pure function of (seed, i, j); the output does not depend on
// `threads`. Self-loops are never sampled.

Graph gen_er(std::size_t n, double p, std::uint64_t seed, unsigned threads = 1);
Graph gen_chung_lu(std::span<const double> w, std::uint64_t seed, unsigned threads = 1);
Graph gen_chung_lu(const WeightSpec& spec, std::size_t n, std::uint64_t seed,
                   unsigned threads = 1);
Graph gen_sbm(const SbmParams& params, std::uint64_t seed, unsigned threads = 1,
              bool allow_q_above_p = false);

}  // namespace prasym
