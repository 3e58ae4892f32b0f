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

#include "mcpaths/shortest_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcpaths {

namespace {

Path finish_path(const Graph& g, const BitLayout& layout,
                 std::vector<NodeId> nodes,
                 std::span<const std::uint32_t> edges) {
  Path p;
  p.nodes = std::move(nodes);
  p.criteria_length.assign(g.criteria_count(), 0);
  for (std::uint32_t idx : edges) {
    const Edge& e = g.edge(idx);
    p.edges.push_back(e.id);
    p.ew_length += pack(layout, e.weights);
    for (std::size_t i = 0; i < e.weights.size(); ++i) {
      p.criteria_length[i] += e.weights[i];
    }
  }
  return p;
}

}  // namespace

Path make_path(const Graph& g, const BitLayout& layout,
               std::span<const NodeId> nodes) {
  if (nodes.empty()) throw std::invalid_argument("make_path: empty node sequence");
  std::vector<std::uint32_t> edges;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto idx = g.find_edge(nodes[i], nodes[i + 1]);
    if (!idx) {
      throw std::invalid_argument("make_path: no edge " + std::to_string(nodes[i]) +
                                  " -> " + std::to_string(nodes[i + 1]));
    }
    edges.push_back(static_cast<std::uint32_t>(*idx));
  }
  return finish_path(g, layout, {nodes.begin(), nodes.end()}, edges);
}

Path make_path_from_edges(const Graph& g, const BitLayout& layout,
                          NodeId start, std::span<const std::uint32_t> edges) {
  std::vector<NodeId> nodes{start};
  for (std::uint32_t idx : edges) {
    const Edge& e = g.edge(idx);
    const NodeId at = nodes.back();
    NodeId next;
    if (e.u == at) {
      next = e.v;
    } else if (!g.directed() && e.v == at) {
      next = e.u;
    } else {
      throw std::invalid_argument("make_path_from_edges: edge id " +
                                  std::to_string(e.id) + " does not leave node " +
                                  std::to_string(at));
    }
    nodes.push_back(next);
  }
  return finish_path(g, layout, std::move(nodes), edges);
}

Graph filter_by_threshold(const Graph& g, const BitLayout& layout,
                          const std::optional<EnsembledWeight>& threshold) {
  if (!threshold) return g;
  return g.filtered([&](std::size_t i) {
    return pack(layout, g.edge(i).weights) < *threshold;
  });
}

DistanceMap dijkstra(const Graph& g, const BitLayout& layout, NodeId source) {
  if (!g.has_node(source)) throw std::invalid_argument("dijkstra: source out of range");
  const std::vector<EnsembledWeight> weights = pack_edges(g, layout);
  return dijkstra_on<EnsembledWeight>(g, weights, source);
}

std::optional<Path> extract_path(const Graph& g, const BitLayout& layout,
                                 const DistanceMap& dm, NodeId t) {
  if (!g.has_node(t)) throw std::invalid_argument("extract_path: node out of range");
  if (!dm.is_reached(t)) return std::nullopt;
  std::vector<NodeId> nodes{t};
  std::vector<std::uint32_t> edges;
  for (NodeId v = t; v != dm.source;) {
    const Predecessor& p = *dm.pred[v];
    edges.push_back(p.edge);
    v = p.node;
    nodes.push_back(v);
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(edges.begin(), edges.end());
  return finish_path(g, layout, std::move(nodes), edges);
}

}  // namespace mcpaths
