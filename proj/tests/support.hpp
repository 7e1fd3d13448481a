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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "prasym/graph.hpp"
#include "prasym/graph_models.hpp"
#include "prasym/pagerank.hpp"

namespace prasym::testing {

inline Graph path3() {
  const Edge e[] = {{0, 1}, {1, 2}};
  return Graph::from_edges(3, e);
}

inline Graph triangle() {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}};
  return Graph::from_edges(3, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.push_back({i, static_cast<std::uint32_t>((i + 1) % n)});
  return Graph::from_edges(n, e);
}

// Random probability vector with strictly positive entries.
inline std::vector<double> random_simplex(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> x(n);
  double s = 0.0;
  for (auto& xi : x) s += (xi = ex(rng) + 1e-3);
  for (auto& xi : x) xi /= s;
  return x;
}

inline PreferenceVector random_preference(std::size_t n, std::mt19937_64& rng) {
  auto x = random_simplex(n, rng);
  double s = 0.0;
  for (double xi : x) s += xi;
  x[0] += 1.0 - s;
  return PreferenceVector(std::move(x));
}

// A connected sample from one of the four models, n in [lo, hi]. Uses the
// largest component so every degree is positive.
inline Graph random_model_graph(int model, std::mt19937_64& rng, std::size_t lo = 20,
                                std::size_t hi = 200) {
  std::uniform_int_distribution<std::size_t> nd(lo, hi);
  const std::size_t n = nd(rng);
  const std::uint64_t seed = rng();
  Graph g;
  switch (model % 4) {
    case 0:
      g = gen_er(n, 8.0 / static_cast<double>(n), seed);
      break;
    case 1:
      g = gen_chung_lu(GeometricClippedWeights{8.0, 2.0}, n, seed);
      break;
    case 2:
      g = gen_sbm(SbmParams{n / 2, n, 0.2, 0.03}, seed);
      break;
    default:
      g = gen_chung_lu(PowerLawWeights{4.0, 4.0, std::sqrt(static_cast<double>(n)),
                                       PowerLawOffset::kStandard},
                       n, seed);
      break;
  }
  auto lcc = largest_component(g);
  return std::move(lcc.graph);
}

}  // namespace prasym::testing
