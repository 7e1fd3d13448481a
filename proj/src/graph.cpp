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

#include "prasym/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "prasym/errors.hpp"

namespace prasym {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError("vertex count exceeds 32-bit index range");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParameterError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw ParameterError("parallel edge " + std::to_string(dup->u) + " " +
                         std::to_string(dup->v));
  }

  std::vector<std::vector<std::uint32_t>> upper(n);
  for (const Edge& e : normalized) upper[e.u].push_back(e.v);
  return from_upper_rows(n, upper);
}

Graph Graph::from_upper_rows(std::size_t n,
                             const std::vector<std::vector<std::uint32_t>>& upper) {
  if (upper.size() != n) throw ParameterError("upper row count differs from n");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError("vertex count exceeds 32-bit index range");
  }
  Graph g;
  g.degrees_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t prev = static_cast<std::uint32_t>(i);
    for (std::uint32_t j : upper[i]) {
      if (j <= prev || j >= n) throw ParameterError("upper rows must be strictly increasing, j > i");
      prev = j;
      ++g.degrees_[j];
    }
    g.degrees_[i] += static_cast<std::uint32_t>(upper[i].size());
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + g.degrees_[i];
  g.targets_.resize(g.offsets_[n]);

  // Row j receives its lower neighbors i < j while i is scanned upward, then
  // its own upper row, so every row ends up sorted.
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j : upper[i]) {
      g.targets_[cursor[i]++] = j;
      g.targets_[cursor[j]++] = static_cast<std::uint32_t>(i);
    }
  }
  g.finalize();
  return g;
}

void Graph::finalize() {
  volume_ = offsets_.back();
  if (degrees_.empty()) {
    min_degree_ = max_degree_ = 0;
    return;
  }
  auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
  min_degree_ = *lo;
  max_degree_ = *hi;
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    for (std::uint32_t j : neighbors(i)) {
      if (j > i) out.push_back({static_cast<std::uint32_t>(i), j});
    }
  }
  return out;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t w : g.neighbors(queue[head])) {
        if (label[w] == kUnset) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](std::uint32_t l) { return l == 0; });
}

InducedSubgraph largest_component(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  auto labels = component_labels(g);
  const std::uint32_t count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (std::uint32_t l : labels) ++sizes[l];
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  InducedSubgraph out;
  std::vector<std::uint32_t> new_id(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == best) {
      new_id[i] = static_cast<std::uint32_t>(out.vertices.size());
      out.vertices.push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<std::vector<std::uint32_t>> upper(out.vertices.size());
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    for (std::uint32_t w : g.neighbors(out.vertices[k])) {
      if (w > out.vertices[k]) upper[k].push_back(new_id[w]);
    }
  }
  out.graph = Graph::from_upper_rows(out.vertices.size(), upper);
  return out;
}

}  // namespace prasym
