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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prasym {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted; degrees and the volume are cached.
class Graph {
 public:
  Graph() = default;

  // Validates: endpoints < n, no self-loops, no duplicates (in either
  // orientation). Edge orientation in the input is irrelevant.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  // Rows of strictly-upper neighbors: upper[i] holds sorted j > i. Used by
  // the generators; validates ordering.
  static Graph from_upper_rows(std::size_t n, const std::vector<std::vector<std::uint32_t>>& upper);

  std::size_t num_vertices() const { return degrees_.size(); }
  std::size_t num_edges() const { return static_cast<std::size_t>(volume_ / 2); }

  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::uint32_t degree(std::size_t i) const { return degrees_[i]; }
  std::span<const std::uint32_t> degrees() const { return degrees_; }
  std::uint64_t volume() const { return volume_; }
  std::uint32_t min_degree() const { return min_degree_; }
  std::uint32_t max_degree() const { return max_degree_; }

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const std::uint32_t> targets() const { return targets_; }

  bool has_edge(std::size_t i, std::size_t j) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void finalize();

  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> degrees_;
  std::uint64_t volume_ = 0;
  std::uint32_t min_degree_ = 0;
  std::uint32_t max_degree_ = 0;
};

// Component id per vertex, numbered in order of smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<std::uint32_t> vertices;  // original id of each new vertex
};

// Largest connected component (ties broken by smallest vertex id), relabeled
// in increasing original-id order.
InducedSubgraph largest_component(const Graph& g);

}  // namespace prasym
