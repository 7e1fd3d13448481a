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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "prasym/errors.hpp"
#include "prasym/io.hpp"

namespace prasym::io {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (std::uint32_t j : g.neighbors(i)) {
      if (j > i) out << i << ' ' << j << '\n';
    }
  }
  if (!out) throw IoError("edge list write failed");
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw IoError("edge list: missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    if (!(in >> i >> j)) {
      throw IoError("edge list: expected " + std::to_string(m) + " edges, got " +
                    std::to_string(k));
    }
    if (i >= n || j >= n) throw ParameterError("edge list: endpoint out of range");
    edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  }
  std::string extra;
  if (in >> extra) throw IoError("edge list: trailing data after declared edges");
  return Graph::from_edges(n, edges);
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void write_vector(std::ostream& out, std::span<const double> x) {
  for (double v : x) out << format_double(v) << '\n';
  if (!out) throw IoError("vector write failed");
}

std::vector<double> read_vector(std::istream& in) {
  std::vector<double> x;
  std::string token;
  while (in >> token) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
      throw IoError("vector file: not a number: " + token);
    }
    x.push_back(v);
  }
  return x;
}

void write_vector(const std::filesystem::path& path, std::span<const double> x) {
  auto out = open_out(path);
  write_vector(out, x);
}

std::vector<double> read_vector(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_vector(in);
}

}  // namespace prasym::io
