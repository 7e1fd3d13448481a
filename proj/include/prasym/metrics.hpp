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

#include <optional>
#include <span>

namespace prasym {

// Strict rejects inputs that are not probability vectors (entries >= 0,
// sum within 1e-9 of 1). Relaxed only checks lengths.
enum class InputCheck { kStrict, kRelaxed };

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

Norms norms(std::span<const double> x);

double tv_distance(std::span<const double> a, std::span<const double> b,
                   InputCheck check = InputCheck::kStrict);

// max_i |π_i - π̄_i| / π̄_i. Throws ParameterError if some π̄_i = 0.
double max_relative_error(std::span<const double> pi, std::span<const double> pibar,
                          InputCheck check = InputCheck::kStrict);

// |Σ f π - Σ f π̄| for test values with max |f| <= 1.
double weak_convergence_gap(std::span<const double> pi, std::span<const double> pibar,
                            std::span<const double> f, InputCheck check = InputCheck::kStrict);

struct ErrorReport {
  double tv = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double max_relative = 0.0;
  std::optional<double> weak_gap;
};

ErrorReport error_report(std::span<const double> pi, std::span<const double> pibar,
                         std::span<const double> f = {});

}  // namespace prasym
