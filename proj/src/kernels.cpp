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

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "prasym/errors.hpp"

namespace prasym::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(PRASYM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* detect() {
  const KernelTable* best = avx2_table();
  if (const char* forced = std::getenv("PRASYM_KERNELS")) {
    const std::string name(forced);
    if (name == "scalar") return &scalar_table();
    if (name == "avx2" && best != nullptr) return best;
  }
  return best != nullptr ? best : &scalar_table();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{detect()};
  return slot;
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw ParameterError("kernel operands differ in length");
}

// Pairwise combination of per-block partial sums. The split points depend
// only on n, so a given table always produces the same bits.
template <class Leaf>
double pairwise(std::size_t begin, std::size_t n, const Leaf& leaf) {
  if (n <= kPairwiseBlock) return leaf(begin, n);
  const std::size_t half = n / 2;
  return pairwise(begin, half, leaf) + pairwise(begin + half, n - half, leaf);
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(PRASYM_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *active_slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (isa == Isa::kScalar) {
    active_slot().store(&scalar_table());
    return;
  }
  const KernelTable* t = avx2_table();
  if (t == nullptr) throw ParameterError("AVX2 kernels are not available on this machine");
  active_slot().store(t);
}

double sum(const KernelTable& t, std::span<const double> x) {
  return pairwise(0, x.size(), [&](std::size_t b, std::size_t n) { return t.sum(x.data() + b, n); });
}

double abs_sum(const KernelTable& t, std::span<const double> x) {
  return pairwise(0, x.size(),
                  [&](std::size_t b, std::size_t n) { return t.abs_sum(x.data() + b, n); });
}

double sq_sum(const KernelTable& t, std::span<const double> x) {
  return pairwise(0, x.size(),
                  [&](std::size_t b, std::size_t n) { return t.sq_sum(x.data() + b, n); });
}

double dot(const KernelTable& t, std::span<const double> x, std::span<const double> y) {
  check_same_size(x.size(), y.size());
  return pairwise(0, x.size(), [&](std::size_t b, std::size_t n) {
    return t.dot(x.data() + b, y.data() + b, n);
  });
}

double abs_diff_sum(const KernelTable& t, std::span<const double> x,
                    std::span<const double> y) {
  check_same_size(x.size(), y.size());
  return pairwise(0, x.size(), [&](std::size_t b, std::size_t n) {
    return t.abs_diff_sum(x.data() + b, y.data() + b, n);
  });
}

double max_abs(const KernelTable& t, std::span<const double> x) {
  return t.max_abs(x.data(), x.size());
}

double max_abs_diff(const KernelTable& t, std::span<const double> x,
                    std::span<const double> y) {
  check_same_size(x.size(), y.size());
  return t.max_abs_diff(x.data(), y.data(), x.size());
}

void axpby(const KernelTable& t, double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out) {
  check_same_size(x.size(), y.size());
  check_same_size(x.size(), out.size());
  t.axpby(a, x.data(), b, y.data(), out.data(), x.size());
}

void hadamard(const KernelTable& t, std::span<const double> x, std::span<const double> s,
              std::span<double> out) {
  check_same_size(x.size(), s.size());
  check_same_size(x.size(), out.size());
  t.hadamard(x.data(), s.data(), out.data(), x.size());
}

void gather_row_sums(const KernelTable& t, std::span<const std::uint64_t> offsets,
                     std::span<const std::uint32_t> cols, std::span<const double> z,
                     std::span<double> out) {
  if (offsets.size() != out.size() + 1) throw ParameterError("offsets/out size mismatch");
  if (!offsets.empty() && offsets.back() > cols.size()) {
    throw ParameterError("offsets exceed column array");
  }
  t.gather_row_sums(offsets.data(), cols.data(), z.data(), out.data(), out.size());
}

}  // namespace prasym::kernels
