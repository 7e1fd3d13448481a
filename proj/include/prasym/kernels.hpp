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

// Data-parallel inner loops. Every kernel has a scalar reference variant and,
// on x86-64, an AVX2 variant; the active table is chosen once at startup
// from CPUID and may be forced with PRASYM_KERNELS=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace prasym::kernels {

enum class Isa { kScalar, kAvx2 };

// Leaf kernels work on one contiguous block. Reductions are combined
// pairwise across blocks by the wrappers below.
struct KernelTable {
  Isa isa;
  std::string_view name;
  double (*sum)(const double* x, std::size_t n);
  double (*abs_sum)(const double* x, std::size_t n);
  double (*sq_sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*abs_diff_sum)(const double* x, const double* y, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
  // out = a*x + b*y
  void (*axpby)(double a, const double* x, double b, const double* y, double* out,
                std::size_t n);
  // out = x .* s
  void (*hadamard)(const double* x, const double* s, double* out, std::size_t n);
  // out[r] = sum_{k in [offsets[r], offsets[r+1])} z[cols[k]]
  void (*gather_row_sums)(const std::uint64_t* offsets, const std::uint32_t* cols,
                          const double* z, double* out, std::size_t rows);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

const KernelTable& active();
// Test hook; throws ParameterError if the ISA is unavailable.
void set_active(Isa isa);

inline constexpr std::size_t kPairwiseBlock = 256;

double sum(const KernelTable& t, std::span<const double> x);
double abs_sum(const KernelTable& t, std::span<const double> x);
double sq_sum(const KernelTable& t, std::span<const double> x);
double dot(const KernelTable& t, std::span<const double> x, std::span<const double> y);
double abs_diff_sum(const KernelTable& t, std::span<const double> x,
                    std::span<const double> y);
double max_abs(const KernelTable& t, std::span<const double> x);
double max_abs_diff(const KernelTable& t, std::span<const double> x,
                    std::span<const double> y);
void axpby(const KernelTable& t, double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out);
void hadamard(const KernelTable& t, std::span<const double> x, std::span<const double> s,
              std::span<double> out);
void gather_row_sums(const KernelTable& t, std::span<const std::uint64_t> offsets,
                     std::span<const std::uint32_t> cols, std::span<const double> z,
                     std::span<double> out);

inline double sum(std::span<const double> x) { return sum(active(), x); }
inline double abs_sum(std::span<const double> x) { return abs_sum(active(), x); }
inline double sq_sum(std::span<const double> x) { return sq_sum(active(), x); }
inline double dot(std::span<const double> x, std::span<const double> y) {
  return dot(active(), x, y);
}
inline double abs_diff_sum(std::span<const double> x, std::span<const double> y) {
  return abs_diff_sum(active(), x, y);
}
inline double max_abs(std::span<const double> x) { return max_abs(active(), x); }
inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  return max_abs_diff(active(), x, y);
}
inline void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
                  std::span<double> out) {
  axpby(active(), a, x, b, y, out);
}
inline void hadamard(std::span<const double> x, std::span<const double> s,
                     std::span<double> out) {
  hadamard(active(), x, s, out);
}
inline void gather_row_sums(std::span<const std::uint64_t> offsets,
                            std::span<const std::uint32_t> cols, std::span<const double> z,
                            std::span<double> out) {
  gather_row_sums(active(), offsets, cols, z, out);
}

}  // namespace prasym::kernels
