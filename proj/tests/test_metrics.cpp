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
#include "prasym/metrics.hpp"
#include "support.hpp"

using namespace prasym;

TEST_CASE("norms") {
  const auto z = norms(std::vector<double>(4, 0.0));
  CHECK(z.l1 == 0.0);
  CHECK(z.linf == 0.0);
  const auto e = norms(std::vector<double>{0.0, 1.0, 0.0});
  CHECK(e.l1 == 1.0);
  CHECK(e.l2 == 1.0);
  CHECK(e.linf == 1.0);
  const auto t = norms(std::vector<double>{3.0, -4.0});
  CHECK(t.l1 == 7.0);
  CHECK(t.l2 == 5.0);
  CHECK(t.linf == 4.0);
}

TEST_CASE("TV distance fixtures") {
  const std::vector<double> a{1.0, 0.0}, b{0.0, 1.0};
  CHECK(tv_distance(a, a) == 0.0);
  CHECK(tv_distance(a, b) == 1.0);
  CHECK(tv_distance(std::vector<double>{0.5, 0.5}, std::vector<double>{0.25, 0.75}) == 0.25);
  CHECK_THROWS_AS(tv_distance(std::vector<double>{0.5, 0.6}, a), ParameterError);
  CHECK_NOTHROW(tv_distance(std::vector<double>{0.5, 0.6}, a, InputCheck::kRelaxed));
  CHECK_THROWS_AS(tv_distance(a, std::vector<double>{1.0}), ParameterError);
}

TEST_CASE("3-path error metrics") {
  const std::vector<double> pi{5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
  const std::vector<double> pb{7.0 / 24.0, 5.0 / 12.0, 7.0 / 24.0};
  CHECK(std::abs(tv_distance(pi, pb) - 1.0 / 36.0) <= 1e-12);
  CHECK(std::abs(max_relative_error(pi, pb) - 1.0 / 15.0) <= 1e-12);
  const auto r = error_report(pi, pb);
  CHECK(r.tv == doctest::Approx(0.5 * r.l1));
  CHECK_FALSE(r.weak_gap.has_value());
  CHECK_THROWS_AS(max_relative_error(pi, std::vector<double>{0.5, 0.5, 0.0}), ParameterError);
}

TEST_CASE("weak convergence gap") {
  const std::vector<double> pi{0.2, 0.3, 0.5};
  const std::vector<double> pb{0.3, 0.3, 0.4};
  CHECK(std::abs(weak_convergence_gap(pi, pb, std::vector<double>(3, 1.0))) <= 1e-16);
  const std::vector<double> sign{-1.0, 0.0, 1.0};
  CHECK(weak_convergence_gap(pi, pb, sign) == doctest::Approx(2.0 * tv_distance(pi, pb)));
  CHECK_THROWS_AS(weak_convergence_gap(pi, pb, std::vector<double>{2.0, 0.0, 0.0}),
                  ParameterError);
}

TEST_CASE("metric properties on random vectors") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> nd(1, 60);
  std::uniform_real_distribution<double> fu(-1.0, 1.0);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = nd(rng);
    const auto a = prasym::testing::random_simplex(n, rng);
    const auto b = prasym::testing::random_simplex(n, rng);
    const auto c = prasym::testing::random_simplex(n, rng);
    const double ab = tv_distance(a, b);
    CHECK(ab == tv_distance(b, a));
    CHECK(tv_distance(a, c) <= ab + tv_distance(b, c) + 1e-15);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    std::vector<double> f(n);
    for (auto& x : f) x = fu(rng);
    CHECK(weak_convergence_gap(a, b, f) <= 2.0 * ab);

    std::vector<double> x(n);
    for (auto& xi : x) xi = g(rng);
    const auto nx = norms(x);
    const double rn = std::sqrt(static_cast<double>(n));
    CHECK(nx.l1 <= rn * nx.l2 * (1.0 + 1e-15));
    CHECK(rn * nx.l2 <= static_cast<double>(n) * nx.linf * (1.0 + 1e-15));

    double linf = 0.0, pbmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      linf = std::max(linf, std::abs(a[i] - b[i]));
      pbmax = std::max(pbmax, b[i]);
    }
    CHECK(max_relative_error(a, b) >= linf / pbmax * (1.0 - 1e-15));
  }
}
