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
#include "prasym/asymptotics.hpp"
#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"
#include "support.hpp"

using namespace prasym;
using prasym::testing::path3;

TEST_CASE("mixture approximation on the 3-path") {
  const auto v = PreferenceVector::uniform(3);
  const auto pb = approx_mixture(path3(), v, 0.5);
  CHECK(std::abs(pb[0] - 7.0 / 24.0) <= 1e-15);
  CHECK(std::abs(pb[1] - 5.0 / 12.0) <= 1e-15);
  const auto a0 = approx_mixture(path3(), v, 0.0);
  CHECK(kernels::max_abs_diff(a0, v.entries()) == 0.0);
  const auto a1 = approx_mixture(path3(), v, 1.0);
  CHECK(a1 == std::vector<double>{0.25, 0.5, 0.25});

  const auto pi = pagerank_dense(path3(), v, 0.5).pi;
  const auto eps = error_vector(pi, pb);
  CHECK(std::abs(eps[0] + 1.0 / 72.0) <= 1e-12);
  CHECK(std::abs(eps[1] - 2.0 / 72.0) <= 1e-12);
  CHECK(std::abs(eps[2] + 1.0 / 72.0) <= 1e-12);
}

TEST_CASE("mixture approximation is a probability vector") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = prasym::testing::random_model_graph(trial, rng);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.0, 0.3, 0.85, 1.0}) {
      const auto pb = approx_mixture(g, v, alpha);
      CHECK(std::abs(kernels::sum(pb) - 1.0) <= 1e-12);
      for (double x : pb) CHECK(x >= 0.0);
    }
  }
}

TEST_CASE("SBM closed form on the community indicator") {
  const std::size_t n = 1000;
  const auto v = PreferenceVector::indicator(n, 0, n / 2);
  const auto eq = approx_sbm_equal(n, 0.1, 0.01, v, 0.5);
  const double nn = static_cast<double>(n);
  CHECK(eq[0] * nn == doctest::Approx(1.84615).epsilon(1e-5));
  CHECK(eq[n - 1] * nn == doctest::Approx(0.15385).epsilon(1e-5));
  // β = 9/11 gives exactly 24/13 and 2/13.
  CHECK(std::abs(eq[0] * nn - 24.0 / 13.0) <= 1e-12);
  CHECK(std::abs(eq[n - 1] * nn - 2.0 / 13.0) <= 1e-12);

  const auto uni = approx_sbm_equal(n, 0.1, 0.01, PreferenceVector::uniform(n), 0.85);
  for (double x : uni) CHECK(std::abs(x - 1.0 / nn) <= 1e-15);
  CHECK(sbm_structure(SbmParams{500, 1000, 0.1, 0.01}, v).beta == doctest::Approx(9.0 / 11.0));
}

TEST_CASE("SBM routes agree") {
  std::mt19937_64 rng(4);
  for (std::size_t n : {100, 1000}) {
    for (double ratio : {2.0, 10.0}) {
      for (double alpha : {0.15, 0.85}) {
        const double p = 0.2;
        const double q = p / ratio;
        for (int vk = 0; vk < 3; ++vk) {
          const PreferenceVector v = vk == 0   ? PreferenceVector::uniform(n)
                                     : vk == 1 ? PreferenceVector::indicator(n, 0, n / 2)
                                               : prasym::testing::random_preference(n, rng);
          const SbmParams sp{n / 2, n, p, q};
          const auto gen = approx_sbm_general(sp, v, alpha);
          const auto eq = approx_sbm_equal(n, p, q, v, alpha);
          CHECK(kernels::max_abs_diff(gen, eq) <= 1e-12);
          if (n == 100) CHECK(kernels::max_abs_diff(gen, approx_sbm_dense(sp, v, alpha)) <= 1e-12);
        }
      }
    }
  }
  // Unequal communities: only the general and dense routes apply.
  const SbmParams uneven{30, 100, 0.3, 0.05};
  const auto v = prasym::testing::random_preference(100, rng);
  CHECK(kernels::max_abs_diff(approx_sbm_general(uneven, v, 0.7),
                              approx_sbm_dense(uneven, v, 0.7)) <= 1e-12);
}

TEST_CASE("SBM with p = q is the plain mixture with uniform stationary vector") {
  std::mt19937_64 rng(6);
  const std::size_t n = 200;
  const auto v = prasym::testing::random_preference(n, rng);
  const auto out = approx_sbm_general(SbmParams{70, n, 0.1, 0.1}, v, 0.6);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(out[i] - (0.6 / static_cast<double>(n) + 0.4 * v[i])) <= 1e-12);
  }
}

TEST_CASE("closed form deviates from the mixture only along the split vector") {
  std::mt19937_64 rng(9);
  const std::size_t n = 400;
  const double alpha = 0.7;
  const auto v = prasym::testing::random_preference(n, rng);
  const auto st = sbm_structure(SbmParams{n / 2, n, 0.1, 0.02}, v);
  const auto out = approx_sbm_equal(n, 0.1, 0.02, v, alpha);
  double vu = 0.0;
  for (std::size_t i = 0; i < n; ++i) vu += v[i] * st.u[i];
  const double coeff = (1.0 - alpha) * alpha * st.beta / (1.0 - alpha * st.beta) * vu;
  for (std::size_t i = 0; i < n; ++i) {
    const double rest = out[i] - alpha / static_cast<double>(n) - (1.0 - alpha) * v[i];
    CHECK(std::abs(rest - coeff * st.u[i]) <= 1e-15);
  }
}

TEST_CASE("spectral form reproduces the dense solve") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = prasym::testing::random_model_graph(trial, rng, 30, 300);
    const auto v = prasym::testing::random_preference(g.num_vertices(), rng);
    for (double alpha : {0.15, 0.85}) {
      const auto a = pagerank_spectral_form(g, v, alpha);
      const auto b = pagerank_dense(g, v, alpha).pi;
      CHECK(kernels::max_abs_diff(a, b) <= 1e-8);
    }
  }
}

TEST_CASE("approximations reject bad parameters") {
  const auto v = PreferenceVector::uniform(10);
  CHECK_THROWS_AS(approx_sbm_equal(11, 0.1, 0.01, PreferenceVector::uniform(11), 0.5),
                  ParameterError);
  CHECK_THROWS_AS(approx_sbm_general(SbmParams{5, 10, 0.1, 0.01}, v, 1.0), ParameterError);
  CHECK_THROWS_AS(approx_mixture(path3(), v, 0.5), ParameterError);
  CHECK_THROWS_AS(error_vector(std::vector<double>(2), std::vector<double>(3)), ParameterError);
}
