// Copyright 2026 The mcpaths Authors
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

#ifndef MCPATHS_SHORTEST_PATH_HPP_
#define MCPATHS_SHORTEST_PATH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"

namespace mcpaths {

// Simple s-t path with its lengths cached.
struct Path {
  std::vector<EdgeId> edges;
  std::vector<NodeId> nodes;
  EnsembledWeight ew_length;
  CriteriaVector criteria_length;

  friend bool operator==(const Path&, const Path&) = default;
};

// Builds a Path from a node sequence; throws std::invalid_argument when two
// consecutive nodes are not joined by a traversable edge.
Path make_path(const Graph& g, const BitLayout& layout,
               std::span<const NodeId> nodes);

// Builds a Path from edge indices walked starting at `start`.
Path make_path_from_edges(const Graph& g, const BitLayout& layout,
                          NodeId start, std::span<const std::uint32_t> edges);

// Nodes and edges (by index) a search must not touch.
struct SearchMask {
  std::vector<bool> blocked_nodes;
  std::vector<bool> blocked_edges;

  bool node_blocked(NodeId n) const {
    return n < blocked_nodes.size() && blocked_nodes[n];
  }
  bool edge_blocked(std::size_t e) const {
    return e < blocked_edges.size() && blocked_edges[e];
  }
};

enum class SearchDirection { kForward, kBackward };

struct Predecessor {
  std::uint32_t edge = 0;  // edge index
  NodeId node = 0;
};

template <class W>
struct BasicDistanceMap {
  NodeId source = 0;
  std::vector<W> dist;
  std::vector<bool> reached;
  std::vector<std::optional<Predecessor>> pred;

  bool is_reached(NodeId v) const { return reached[v]; }
};

using DistanceMap = BasicDistanceMap<EnsembledWeight>;

// Dijkstra over per-edge weights indexed by edge position. kBackward follows
// arcs against their direction, giving distances *to* `source`. Among equal
// tentative distances the lowest node id is settled first; a predecessor is
// replaced only on strict improvement.
template <class W>
BasicDistanceMap<W> dijkstra_on(const Graph& g, std::span<const W> edge_weight,
                                NodeId source,
                                SearchDirection direction = SearchDirection::kForward,
                                const SearchMask* mask = nullptr) {
  const std::size_t n = g.node_count();
  BasicDistanceMap<W> dm;
  dm.source = source;
  dm.dist.assign(n, W{});
  dm.reached.assign(n, false);
  dm.pred.assign(n, std::nullopt);
  if (mask != nullptr && mask->node_blocked(source)) return dm;

  using Entry = std::pair<W, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::vector<bool> settled(n, false);
  dm.reached[source] = true;
  heap.emplace(W{}, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d != dm.dist[u]) continue;
    settled[u] = true;
    const auto arcs = direction == SearchDirection::kForward ? g.out_arcs(u)
                                                             : g.in_arcs(u);
    for (const Arc& a : arcs) {
      const NodeId v = a.head;
      if (settled[v]) continue;
      if (mask != nullptr &&
          (mask->node_blocked(v) || mask->edge_blocked(a.edge))) {
        continue;
      }
      W candidate = d + edge_weight[a.edge];
      if (!dm.reached[v] || candidate < dm.dist[v]) {
        dm.reached[v] = true;
        dm.dist[v] = candidate;
        dm.pred[v] = Predecessor{a.edge, u};
        heap.emplace(std::move(candidate), v);
      }
    }
  }
  return dm;
}

// Removes every edge whose ensembled weight is >= threshold; no threshold
// keeps the graph unchanged. Edge ids are preserved.
Graph filter_by_threshold(const Graph& g, const BitLayout& layout,
                          const std::optional<EnsembledWeight>& threshold);

// Generalized Dijkstra over ensembled weights.
DistanceMap dijkstra(const Graph& g, const BitLayout& layout, NodeId source);

// Follows predecessors back from t. nullopt when t was not reached.
std::optional<Path> extract_path(const Graph& g, const BitLayout& layout,
                                 const DistanceMap& dm, NodeId t);

}  // namespace mcpaths

#endif  // MCPATHS_SHORTEST_PATH_HPP_
