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
#include <span>
#include <string_view>
#include <vector>

#include "prasym/graph.hpp"
#include "prasym/spectral.hpp"

namespace prasym {

// Restart distribution: nonnegative, sums to 1 within 1e-12.
class PreferenceVector {
 public:
  explicit PreferenceVector(std::vector<double> entries);

  static PreferenceVector uniform(std::size_t n);
  // e_k with a 0-based index.
  static PreferenceVector point_mass(std::size_t n, std::size_t k);
  // Uniform over [begin, end).
  static PreferenceVector indicator(std::size_t n, std::size_t begin, std::size_t end);

  std::size_t size() const { return entries_.size(); }
  std::span<const double> entries() const { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
};

struct PageRankConfig {
  double alpha = 0.85;
  double tol = 1e-12;
  std::size_t max_iter = 10000;
};

enum class PageRankMethod { kPower, kDense, kSeries, kStationary };
std::string_view to_string(PageRankMethod m);

struct PageRankResult {
  std::vector<double> pi;
  // ||x - P̃x||_1 of the last iterate (power), or of the solution (dense).
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  PageRankMethod method = PageRankMethod::kPower;
};

// Fixed point of x <- αPx + (1-α)v, renormalized every step, stopped on the
// L1 residual of the fixed-point equation.
PageRankResult pagerank_power(const Graph& g, const PreferenceVector& v,
                              const PageRankConfig& cfg = {});

// Direct solve of (I - αP)π = (1-α)v. The ground-truth oracle.
PageRankResult pagerank_dense(const Graph& g, const PreferenceVector& v, double alpha,
                              std::size_t dense_limit = kDefaultDenseLimit);

struct SeriesResult {
  std::vector<double> partial_sum;  // (1-α) Σ_{t<=k} αᵗ Pᵗ v
  double tail_bound = 0.0;          // α^{k+1}, bounds the L1 truncation error
};

SeriesResult pagerank_series(const Graph& g, const PreferenceVector& v, double alpha,
                             std::size_t k);

struct StationaryResult {
  std::vector<double> pi;  // d / vol
  bool connected = true;   // false: the α = 1 fixed point is not unique
};

StationaryResult stationary(const Graph& g);

}  // namespace prasym
