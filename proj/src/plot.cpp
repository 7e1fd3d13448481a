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

#include "prasym/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "prasym/errors.hpp"
#include "prasym/io.hpp"

namespace prasym {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

// Decade-aligned log10 range covering the values, at least one decade wide.
Range log_range(const std::vector<double>& v) {
  double lo = std::log10(*std::min_element(v.begin(), v.end()));
  double hi = std::log10(*std::max_element(v.begin(), v.end()));
  lo = std::floor(lo);
  hi = std::ceil(hi);
  if (hi <= lo) hi = lo + 1.0;
  return {lo, hi};
}

}  // namespace

PlotSeries collect_series(const std::vector<ExperimentRecord>& records, std::string_view x_field,
                          std::string_view y_field) {
  PlotSeries s;
  std::map<double, std::vector<double>> groups;
  for (const auto& r : records) {
    const double x = record_field(r, x_field);
    const double y = record_field(r, y_field);
    if (r.excluded() || !(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      ++s.skipped;
      continue;
    }
    s.x.push_back(x);
    s.y.push_back(y);
    groups[x].push_back(y);
  }
  for (auto& [x, ys] : groups) {
    s.median_x.push_back(x);
    s.median_y.push_back(median(ys));
  }
  return s;
}

std::string render_loglog_svg(const PlotSeries& s, std::string_view title,
                              std::string_view x_label, std::string_view y_label) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  if (s.x.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\">no plottable points</text>\n</svg>\n";
    return out.str();
  }
  const Range rx = log_range(s.x);
  const Range ry = log_range(s.y);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (std::log10(x) - rx.lo) / (rx.hi - rx.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (std::log10(y) - ry.lo) / (ry.hi - ry.lo) * ph; };

  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Decade ticks.
  for (double e = rx.lo; e <= rx.hi + 1e-9; e += 1.0) {
    const double x = kLeft + (e - rx.lo) / (rx.hi - rx.lo) * pw;
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fmt(x) << "\" y2=\""
        << kTop << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << kTop + ph + 18
        << "\" text-anchor=\"middle\">1e" << static_cast<int>(e) << "</text>\n";
  }
  for (double e = ry.lo; e <= ry.hi + 1e-9; e += 1.0) {
    const double y = kTop + ph - (e - ry.lo) / (ry.hi - ry.lo) * ph;
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft + pw << "\" y2=\""
        << fmt(y) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\">1e" << static_cast<int>(e) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  out << "<text transform=\"translate(18," << kTop + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";

  for (std::size_t i = 0; i < s.x.size(); ++i) {
    out << "<circle cx=\"" << fmt(px(s.x[i])) << "\" cy=\"" << fmt(py(s.y[i]))
        << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.3\"/>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < s.median_x.size(); ++i) {
    out << (i ? " " : "") << fmt(px(s.median_x[i])) << ',' << fmt(py(s.median_y[i]));
  }
  out << "\"/>\n";
  for (std::size_t i = 0; i < s.median_x.size(); ++i) {
    const double cx = px(s.median_x[i]);
    const double cy = py(s.median_y[i]);
    out << "<rect x=\"" << fmt(cx - 4) << "\" y=\"" << fmt(cy - 4)
        << "\" width=\"8\" height=\"8\" fill=\"#d62728\"/>\n";
  }
  const double slope = fit_loglog_slope(s.median_x, s.median_y);
  char legend[64];
  std::snprintf(legend, sizeof legend, "median, slope %.3f", slope);
  const double lx = kLeft + pw - 190;
  out << "<rect x=\"" << lx << "\" y=\"" << kTop + 8
      << "\" width=\"182\" height=\"44\" fill=\"white\" stroke=\"#999\"/>\n";
  out << "<circle cx=\"" << lx + 12 << "\" cy=\"" << kTop + 22
      << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.3\"/>\n";
  out << "<text x=\"" << lx + 24 << "\" y=\"" << kTop + 26 << "\">per seed</text>\n";
  out << "<rect x=\"" << lx + 8 << "\" y=\"" << kTop + 36 << "\" width=\"8\" height=\"8\" fill=\"#d62728\"/>\n";
  out << "<text x=\"" << lx + 24 << "\" y=\"" << kTop + 44 << "\">" << legend << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

PlotSummary emit_loglog_plot(const std::vector<ExperimentRecord>& records,
                             std::string_view x_field, std::string_view y_field,
                             const std::filesystem::path& path, std::string_view title) {
  const PlotSeries s = collect_series(records, x_field, y_field);
  PlotSummary summary;
  summary.plotted = s.x.size();
  summary.skipped = s.skipped;
  summary.slope = fit_loglog_slope(s.median_x, s.median_y);

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::string heading = title.empty() ? std::string(y_field) : std::string(title);
  {
    std::ofstream svg(path, std::ios::binary);
    if (!svg) throw IoError("cannot open for writing: " + path.string());
    svg << render_loglog_svg(s, heading, x_field, y_field);
    if (!svg) throw IoError("SVG write failed: " + path.string());
  }
  auto dat_path = path;
  dat_path.replace_extension(".dat");
  std::ofstream dat(dat_path, std::ios::binary);
  if (!dat) throw IoError("cannot open for writing: " + dat_path.string());
  dat << "# " << x_field << ' ' << y_field << "\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    dat << io::format_double(s.x[i]) << ' ' << io::format_double(s.y[i]) << '\n';
  }
  dat << "\n\n# median " << x_field << ' ' << y_field << "\n";
  for (std::size_t i = 0; i < s.median_x.size(); ++i) {
    dat << io::format_double(s.median_x[i]) << ' ' << io::format_double(s.median_y[i]) << '\n';
  }
  if (!dat) throw IoError("dat write failed: " + dat_path.string());
  return summary;
}

}  // namespace prasym
