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

#include "mcpaths/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace mcpaths {

namespace {

std::string describe(std::size_t position, NodeId u, NodeId v) {
  return "edge #" + std::to_string(position) + " (" + std::to_string(u) +
         ", " + std::to_string(v) + ")";
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<bool> reach(const Graph& g, NodeId start, bool forward) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (const Arc& a : forward ? g.out_arcs(x) : g.in_arcs(x)) {
      if (!seen[a.head]) {
        seen[a.head] = true;
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

}  // namespace

Graph Graph::build(Directedness directedness, std::size_t node_count,
                   std::size_t q, std::span<const EdgeSpec> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.push_back(Edge{edges[i].u, edges[i].v, edges[i].weights,
                       static_cast<EdgeId>(i)});
  }
  return from_edges(directedness, node_count, q, std::move(out));
}

Graph Graph::from_edges(Directedness directedness, std::size_t node_count,
                        std::size_t q, std::vector<Edge> edges) {
  Graph g;
  g.directedness_ = directedness;
  g.node_count_ = node_count;
  g.q_ = q;

  std::unordered_set<std::uint64_t> pairs;
  std::unordered_set<EdgeId> ids;
  pairs.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= node_count || e.v >= node_count) {
      throw GraphError(i, describe(i, e.u, e.v) + ": endpoint out of range [0, " +
                       std::to_string(node_count) + ")");
    }
    if (e.u == e.v) throw GraphError(i, describe(i, e.u, e.v) + ": self-loop");
    if (e.weights.size() != q) {
      throw GraphError(i, describe(i, e.u, e.v) + ": expected " +
                       std::to_string(q) + " weights, got " +
                       std::to_string(e.weights.size()));
    }
    for (std::size_t c = 0; c < q; ++c) {
      if (e.weights[c] < 0) {
        throw GraphError(i, describe(i, e.u, e.v) + ": negative weight for criterion " +
                         std::to_string(c + 1));
      }
    }
    const NodeId a = directedness == Directedness::kUndirected ? std::min(e.u, e.v) : e.u;
    const NodeId b = directedness == Directedness::kUndirected ? std::max(e.u, e.v) : e.v;
    if (!pairs.insert(pair_key(a, b)).second) {
      throw GraphError(i, describe(i, e.u, e.v) + ": parallel edge");
    }
    if (!ids.insert(e.id).second) {
      throw GraphError(i, describe(i, e.u, e.v) + ": duplicate edge id " +
                       std::to_string(e.id));
    }
    if (e.id != i) g.identity_ids_ = false;
  }
  g.edges_ = std::move(edges);
  if (!g.identity_ids_) {
    g.id_to_index_.reserve(g.edges_.size());
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      g.id_to_index_.emplace(g.edges_[i].id, static_cast<std::uint32_t>(i));
    }
  }
  g.index_adjacency();
  return g;
}

void Graph::index_adjacency() {
  const bool undirected = !directed();
  std::vector<std::uint32_t> out_deg(node_count_ + 1, 0);
  std::vector<std::uint32_t> in_deg(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_deg[e.u];
    ++in_deg[e.v];
    if (undirected) {
      ++out_deg[e.v];
      ++in_deg[e.u];
    }
  }
  auto prefix = [this](std::vector<std::uint32_t>& deg) {
    std::vector<std::uint32_t> offsets(node_count_ + 1, 0);
    for (std::size_t i = 0; i < node_count_; ++i) {
      offsets[i + 1] = offsets[i] + deg[i];
    }
    return offsets;
  };
  out_offsets_ = prefix(out_deg);
  in_offsets_ = prefix(in_deg);
  out_arcs_.assign(out_offsets_.back(), Arc{});
  in_arcs_.assign(in_offsets_.back(), Arc{});
  std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    out_arcs_[out_fill[e.u]++] = Arc{e.v, i};
    in_arcs_[in_fill[e.v]++] = Arc{e.u, i};
    if (undirected) {
      out_arcs_[out_fill[e.v]++] = Arc{e.u, i};
      in_arcs_[in_fill[e.u]++] = Arc{e.v, i};
    }
  }
  auto by_head = [](const Arc& a, const Arc& b) { return a.head < b.head; };
  for (std::size_t n = 0; n < node_count_; ++n) {
    std::sort(out_arcs_.begin() + out_offsets_[n],
              out_arcs_.begin() + out_offsets_[n + 1], by_head);
    std::sort(in_arcs_.begin() + in_offsets_[n],
              in_arcs_.begin() + in_offsets_[n + 1], by_head);
  }
}

std::span<const Arc> Graph::out_arcs(NodeId node) const {
  return std::span<const Arc>(out_arcs_).subspan(
      out_offsets_[node], out_offsets_[node + 1] - out_offsets_[node]);
}

std::span<const Arc> Graph::in_arcs(NodeId node) const {
  return std::span<const Arc>(in_arcs_).subspan(
      in_offsets_[node], in_offsets_[node + 1] - in_offsets_[node]);
}

std::optional<std::size_t> Graph::find_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return std::nullopt;
  const auto arcs = out_arcs(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, NodeId x) { return a.head < x; });
  if (it == arcs.end() || it->head != v) return std::nullopt;
  return it->edge;
}

std::optional<std::size_t> Graph::index_of(EdgeId id) const {
  if (identity_ids_) {
    if (id < edges_.size()) return id;
    return std::nullopt;
  }
  auto it = id_to_index_.find(id);
  if (it == id_to_index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::filtered(const std::function<bool(std::size_t)>& keep) const {
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (keep(i)) kept.push_back(edges_[i]);
  }
  return from_edges(directedness_, node_count_, q_, std::move(kept));
}

Graph reverse(const Graph& g) {
  if (!g.directed()) throw std::invalid_argument("reverse: graph is undirected");
  std::vector<Edge> flipped(g.edges().begin(), g.edges().end());
  for (Edge& e : flipped) std::swap(e.u, e.v);
  return Graph::from_edges(Directedness::kDirected, g.node_count(),
                           g.criteria_count(), std::move(flipped));
}

std::optional<PrunedGraph> reachability_prune(const Graph& g, NodeId s,
                                              NodeId t) {
  if (!g.has_node(s) || !g.has_node(t)) {
    throw std::invalid_argument("reachability_prune: node out of range");
  }
  const std::vector<bool> from_s = reach(g, s, true);
  if (!from_s[t]) return std::nullopt;
  const std::vector<bool> to_t = reach(g, t, false);

  constexpr NodeId kDropped = ~NodeId{0};
  std::vector<NodeId> remap(g.node_count(), kDropped);
  PrunedGraph out{g, {}, 0, 0};
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (from_s[x] && to_t[x]) {
      remap[x] = static_cast<NodeId>(out.original_node.size());
      out.original_node.push_back(x);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped) {
      kept.push_back(Edge{remap[e.u], remap[e.v], e.weights, e.id});
    }
  }
  out.graph = Graph::from_edges(g.directedness(), out.original_node.size(),
                                g.criteria_count(), std::move(kept));
  out.source = remap[s];
  out.target = remap[t];
  return out;
}

}  // namespace mcpaths
