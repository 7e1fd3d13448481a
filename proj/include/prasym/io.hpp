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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "prasym/graph.hpp"

namespace prasym::io {

// Edge-list text: "n m" header, then one "i j" line per edge with i < j in
// lexicographic order. Reading accepts any whitespace layout but requires
// the declared edge count.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void write_edge_list(const std::filesystem::path& path, const Graph& g);
Graph read_edge_list(const std::filesystem::path& path);

// One decimal per line, 17 significant digits.
std::string format_double(double x);
void write_vector(std::ostream& out, std::span<const double> x);
std::vector<double> read_vector(std::istream& in);
void write_vector(const std::filesystem::path& path, std::span<const double> x);
std::vector<double> read_vector(const std::filesystem::path& path);

}  // namespace prasym::io
