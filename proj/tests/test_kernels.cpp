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
#include <vector>

#include "doctest.h"
#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"

using namespace prasym;
namespace k = prasym::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& xi : x) xi = u(rng);
  return x;
}

// Reduction orders differ between variants, so compare against the scale
// of the summed magnitudes.
void check_close(double a, double b, double scale) {
  CHECK(std::abs(a - b) <= 1e-14 * (scale + 1.0));
}

}  // namespace

TEST_CASE("scalar reductions on fixed inputs") {
  const auto& t = k::scalar_table();
  const std::vector<double> x{3.0, -4.0};
  CHECK(k::sum(t, x) == -1.0);
  CHECK(k::abs_sum(t, x) == 7.0);
  CHECK(k::sq_sum(t, x) == 25.0);
  CHECK(k::max_abs(t, x) == 4.0);
  const std::vector<double> y{1.0, 1.0};
  CHECK(k::dot(t, x, y) == -1.0);
  CHECK(k::abs_diff_sum(t, x, y) == 7.0);
  CHECK(k::max_abs_diff(t, x, y) == 5.0);
  CHECK(k::sum(t, std::vector<double>{}) == 0.0);
  CHECK(k::max_abs(t, std::vector<double>{}) == 0.0);
}

TEST_CASE("length mismatch is a parameter error") {
  const std::vector<double> a(3, 1.0), b(4, 1.0);
  CHECK_THROWS_AS(k::dot(a, b), ParameterError);
  std::vector<double> out(3);
  CHECK_THROWS_AS(k::axpby(1.0, a, 1.0, b, out), ParameterError);
}

TEST_CASE("pairwise sum of many ones is exact") {
  const std::vector<double> ones(100003, 1.0);
  CHECK(k::sum(k::scalar_table(), ones) == 100003.0);
}

TEST_CASE("AVX2 variants match the scalar reference") {
  const k::KernelTable* avx = k::avx2_table();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  const auto& ref = k::scalar_table();
  std::mt19937_64 rng(20260);
  for (std::size_t n : {0, 1, 3, 4, 7, 8, 15, 16, 17, 255, 256, 257, 1000, 4099}) {
    CAPTURE(n);
    const auto x = random_vec(n, rng);
    const auto y = random_vec(n, rng);
    const double scale = k::abs_sum(ref, x) + k::abs_sum(ref, y);
    check_close(k::sum(*avx, x), k::sum(ref, x), scale);
    check_close(k::abs_sum(*avx, x), k::abs_sum(ref, x), scale);
    check_close(k::sq_sum(*avx, x), k::sq_sum(ref, x), scale);
    check_close(k::dot(*avx, x, y), k::dot(ref, x, y), scale);
    check_close(k::abs_diff_sum(*avx, x, y), k::abs_diff_sum(ref, x, y), scale);
    CHECK(k::max_abs(*avx, x) == k::max_abs(ref, x));
    CHECK(k::max_abs_diff(*avx, x, y) == k::max_abs_diff(ref, x, y));

    std::vector<double> o1(n), o2(n);
    k::axpby(*avx, 0.3, x, -1.7, y, o1);
    k::axpby(ref, 0.3, x, -1.7, y, o2);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) <= 1e-15 * 4.0);
    k::hadamard(*avx, x, y, o1);
    k::hadamard(ref, x, y, o2);
    CHECK(o1 == o2);
  }
}

TEST_CASE("AVX2 gather matches the scalar reference") {
  const k::KernelTable* avx = k::avx2_table();
  if (avx == nullptr) return;
  std::mt19937_64 rng(7);
  const std::size_t rows = 300;
  const std::size_t cols_n = 500;
  std::vector<std::uint64_t> offsets{0};
  std::vector<std::uint32_t> cols;
  std::uniform_int_distribution<std::uint32_t> pick(0, cols_n - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t len = r % 37;
    for (std::size_t j = 0; j < len; ++j) cols.push_back(pick(rng));
    offsets.push_back(cols.size());
  }
  const auto z = random_vec(cols_n, rng);
  std::vector<double> a(rows), b(rows);
  k::gather_row_sums(*avx, offsets, cols, z, a);
  k::gather_row_sums(k::scalar_table(), offsets, cols, z, b);
  for (std::size_t r = 0; r < rows; ++r) CHECK(std::abs(a[r] - b[r]) <= 1e-13);
}

TEST_CASE("set_active switches the dispatched table") {
  const auto before = k::active().isa;
  k::set_active(k::Isa::kScalar);
  CHECK(k::active().isa == k::Isa::kScalar);
  if (k::avx2_table() != nullptr) {
    k::set_active(k::Isa::kAvx2);
    CHECK(k::active().isa == k::Isa::kAvx2);
  } else {
    CHECK_THROWS_AS(k::set_active(k::Isa::kAvx2), ParameterError);
  }
  k::set_active(before);
}
