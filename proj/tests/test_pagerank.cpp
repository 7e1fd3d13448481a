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

#include <cmath>
#include <random>

#include "doctest.h"
#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"
#include "prasym/pagerank.hpp"
#include "support.hpp"

using namespace prasym;
using prasym::testing::path3;
using prasym::testing::triangle;

TEST_CASE("preference vectors validate") {
  CHECK_THROWS_AS(PreferenceVector({0.5, 0.6}), ParameterError);
  CHECK_THROWS_AS(PreferenceVector({1.5, -0.5}), ParameterError);
  const auto e = PreferenceVector::point_mass(4, 2);
  CHECK(e[2] == 1.0);
  const auto ind = PreferenceVector::indicator(4, 0, 2);
  CHECK(ind[0] == 0.5);
  CHECK(ind[3] == 0.0);
}

TEST_CASE("3-path PageRank at alpha one half") {
  const auto v = PreferenceVector::uniform(3);
  const auto dense = pagerank_dense(path3(), v, 0.5);
  CHECK(std::abs(dense.pi[0] - 5.0 / 18.0) <= 1e-12);
  CHECK(std::abs(dense.pi[1] - 4.0 / 9.0) <= 1e-12);
  CHECK(std::abs(dense.pi[2] - 5.0 / 18.0) <= 1e-12);
  const auto power = pagerank_power(path3(), v, {0.5, 1e-12, 1000});
  CHECK(power.converged);
  CHECK(kernels::max_abs_diff(power.pi, dense.pi) <= 1e-12);
}

TEST_CASE("alpha zero returns the preference vector") {
  std::mt19937_64 rng(1);
  const Graph g = prasym::testing::random_model_graph(1, rng);
  const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
  const auto p = pagerank_power(g, v, {0.0, 1e-12, 10});
  CHECK(kernels::max_abs_diff(p.pi, v.entries()) <= 1e-15);
  const auto d = pagerank_dense(g, v, 0.0);
  CHECK(kernels::max_abs_diff(d.pi, v.entries()) <= 1e-15);
  const auto s = pagerank_series(g, v, 0.0, 5);
  CHECK(kernels::max_abs_diff(s.partial_sum, v.entries()) == 0.0);
}

TEST_CASE("symmetric and stationary fixed points") {
  const auto k3 = pagerank_power(triangle(), PreferenceVector::uniform(3), {0.9, 1e-12, 1000});
  for (double x : k3.pi) CHECK(x == doctest::Approx(1.0 / 3.0));

  std::mt19937_64 rng(8);
  const Graph g = prasym::testing::random_model_graph(2, rng);
  const auto st = stationary(g);
  CHECK(st.connected);
  const PreferenceVector v(st.pi);
  const auto d = pagerank_dense(g, v, 0.7);
  CHECK(kernels::max_abs_diff(d.pi, st.pi) <= 1e-13);

  const auto p3 = stationary(path3());
  CHECK(p3.pi == std::vector<double>{0.25, 0.5, 0.25});
}

TEST_CASE("series truncation") {
  const auto v = PreferenceVector::uniform(3);
  const auto s0 = pagerank_series(path3(), v, 0.4, 0);
  CHECK(s0.tail_bound == doctest::Approx(0.4));
  for (double x : s0.partial_sum) CHECK(x == doctest::Approx(0.6 / 3.0));
  const auto s = pagerank_series(path3(), v, 0.5, 40);
  const auto d = pagerank_dense(path3(), v, 0.5);
  CHECK(kernels::abs_diff_sum(s.partial_sum, d.pi) <= std::pow(2.0, -40.0) + 1e-12);
}

TEST_CASE("power, dense and series agree on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = prasym::testing::random_model_graph(trial, rng);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.15, 0.5, 0.85}) {
      const auto d = pagerank_dense(g, v, alpha);
      const auto p = pagerank_power(g, v, {alpha, 1e-12, 10000});
      CHECK(p.converged);
      CHECK(p.residual <= 1e-12);
      CHECK(kernels::max_abs_diff(p.pi, d.pi) <= 1e-10);
      CHECK(std::abs(kernels::sum(p.pi) - 1.0) <= 1e-12);
      for (double x : p.pi) CHECK(x >= 0.0);
      for (std::size_t k : {5, 20, 60}) {
        const auto s = pagerank_series(g, v, alpha, k);
        CHECK(kernels::abs_diff_sum(s.partial_sum, d.pi) <= std::pow(alpha, k + 1) + 1e-12);
      }
    }
  }
}

TEST_CASE("PageRank rejects bad inputs") {
  const auto v = PreferenceVector::uniform(3);
  CHECK_THROWS_AS(pagerank_power(path3(), v, {1.0, 1e-12, 10}), ParameterError);
  CHECK_THROWS_AS(pagerank_power(path3(), PreferenceVector::uniform(4)), ParameterError);
  const Edge e[] = {{0, 1}};
  CHECK_THROWS_AS(pagerank_power(Graph::from_edges(3, e), v), StructuralError);
  CHECK_THROWS_AS(pagerank_dense(prasym::testing::cycle(30), PreferenceVector::uniform(30), 0.5, 10),
                  SizeError);
}

TEST_CASE("an iteration cap reports non-convergence") {
  const auto r = pagerank_power(prasym::testing::cycle(50), PreferenceVector::point_mass(50, 0),
                                {0.99, 1e-14, 3});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
}
