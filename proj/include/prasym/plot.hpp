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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "prasym/experiment.hpp"

namespace prasym {

struct PlotSummary {
  double slope = 0.0;       // least-squares slope through the per-n medians
  std::size_t plotted = 0;  // per-seed points drawn
  std::size_t skipped = 0;  // nonpositive, non-finite, or excluded records
};

// Points that survive the log-scale filter, grouped by x.
struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> median_x;
  std::vector<double> median_y;
  std::size_t skipped = 0;
};

PlotSeries collect_series(const std::vector<ExperimentRecord>& records, std::string_view x_field,
                          std::string_view y_field);

// Self-contained SVG with log10 axes, per-seed scatter, per-x median markers
// and the fitted slope in the legend.
std::string render_loglog_svg(const PlotSeries& series, std::string_view title,
                              std::string_view x_label, std::string_view y_label);

// Writes `path` (SVG) and a gnuplot-readable `path` with extension .dat.
PlotSummary emit_loglog_plot(const std::vector<ExperimentRecord>& records,
                             std::string_view x_field, std::string_view y_field,
                             const std::filesystem::path& path, std::string_view title = {});

}  // namespace prasym
