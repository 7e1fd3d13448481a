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

#include "prasym/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "prasym/errors.hpp"
#include "prasym/kernels.hpp"

namespace prasym {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ParameterError("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void check_probability(std::span<const double> x, const char* name) {
  for (double v : x) {
    if (!(v >= 0.0)) throw ParameterError(std::string(name) + " has a negative or NaN entry");
  }
  const double total = kernels::sum(x);
  if (std::fabs(total - 1.0) > 1e-9) {
    throw ParameterError(std::string(name) + " sums to " + std::to_string(total) + ", not 1");
  }
}

void check_pair(std::span<const double> a, std::span<const double> b, InputCheck check) {
  check_lengths(a.size(), b.size());
  if (check == InputCheck::kStrict) {
    check_probability(a, "first vector");
    check_probability(b, "second vector");
  }
}

}  // namespace

Norms norms(std::span<const double> x) {
  return {kernels::abs_sum(x), std::sqrt(kernels::sq_sum(x)), kernels::max_abs(x)};
}

double tv_distance(std::span<const double> a, std::span<const double> b, InputCheck check) {
  check_pair(a, b, check);
  return 0.5 * kernels::abs_diff_sum(a, b);
}

double max_relative_error(std::span<const double> pi, std::span<const double> pibar,
                          InputCheck check) {
  check_pair(pi, pibar, check);
  double worst = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pibar[i] == 0.0) {
      throw ParameterError("relative error undefined: reference entry " + std::to_string(i) +
                           " is zero");
    }
    worst = std::fmax(worst, std::fabs(pi[i] - pibar[i]) / std::fabs(pibar[i]));
  }
  return worst;
}

double weak_convergence_gap(std::span<const double> pi, std::span<const double> pibar,
                            std::span<const double> f, InputCheck check) {
  check_pair(pi, pibar, check);
  check_lengths(pi.size(), f.size());
  if (kernels::max_abs(f) > 1.0) throw ParameterError("test function exceeds |f| <= 1");
  std::vector<double> diff(pi.size());
  kernels::axpby(1.0, pi, -1.0, pibar, diff);
  return std::fabs(kernels::dot(f, diff));
}

ErrorReport error_report(std::span<const double> pi, std::span<const double> pibar,
                         std::span<const double> f) {
  ErrorReport r;
  std::vector<double> diff(pi.size());
  check_pair(pi, pibar, InputCheck::kStrict);
  kernels::axpby(1.0, pi, -1.0, pibar, diff);
  const Norms nm = norms(diff);
  r.l1 = nm.l1;
  r.tv = 0.5 * nm.l1;
  r.l2 = nm.l2;
  r.linf = nm.linf;
  r.max_relative = max_relative_error(pi, pibar, InputCheck::kRelaxed);
  if (!f.empty()) r.weak_gap = weak_convergence_gap(pi, pibar, f, InputCheck::kRelaxed);
  return r;
}

}  // namespace prasym
