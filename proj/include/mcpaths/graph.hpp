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

#ifndef MCPATHS_GRAPH_HPP_
#define MCPATHS_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcpaths {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

// Per-edge weights w_1..w_q ordered by descending priority (position 0 is the
// most important criterion). Entries are non-negative.
using CriteriaVector = std::vector<Weight>;

// Rejected graph input; the message names the offending edge.
class GraphError : public std::invalid_argument {
 public:
  GraphError(std::size_t edge_position, const std::string& what)
      : std::invalid_argument(what), edge_position_(edge_position) {}

  // Position of the offending edge in the input sequence.
  std::size_t edge_position() const { return edge_position_; }

 private:
  std::size_t edge_position_;
};

enum class Directedness { kDirected, kUndirected };

struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  CriteriaVector weights;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  CriteriaVector weights;
  EdgeId id = 0;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

// A traversable direction of an edge. Undirected edges yield two arcs that
// share the same edge index.
struct Arc {
  NodeId head = 0;
  std::uint32_t edge = 0;  // index into Graph::edges()
};

// Immutable simple graph with q criteria per edge. Edge ids are labels that
// survive subgraph extraction; edge indices are positions in edges().
class Graph {
 public:
  // Edge ids are assigned 0..m-1 in input order.
  static Graph build(Directedness directedness, std::size_t node_count,
                     std::size_t q, std::span<const EdgeSpec> edges);

  // Keeps the given edge ids, which must be unique.
  static Graph from_edges(Directedness directedness, std::size_t node_count,
                          std::size_t q, std::vector<Edge> edges);

  bool directed() const { return directedness_ == Directedness::kDirected; }
  Directedness directedness() const { return directedness_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t criteria_count() const { return q_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  // Arcs leaving / entering `node`, sorted by the far endpoint. For
  // undirected graphs both return every incident edge.
  std::span<const Arc> out_arcs(NodeId node) const;
  std::span<const Arc> in_arcs(NodeId node) const;

  bool has_node(NodeId node) const { return node < node_count_; }

  // Index of the edge traversable from u to v, if any.
  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;
  std::optional<std::size_t> index_of(EdgeId id) const;

  // Same node set, only the edges whose index satisfies `keep`.
  Graph filtered(const std::function<bool(std::size_t)>& keep) const;

 private:
  Graph() = default;
  void index_adjacency();

  Directedness directedness_ = Directedness::kDirected;
  std::size_t node_count_ = 0;
  std::size_t q_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<Arc> out_arcs_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<Arc> in_arcs_;
  bool identity_ids_ = true;
  std::unordered_map<EdgeId, std::uint32_t> id_to_index_;
};

inline Graph build_graph(Directedness directedness, std::size_t node_count,
                         std::size_t q, std::span<const EdgeSpec> edges) {
  return Graph::build(directedness, node_count, q, edges);
}

// Directed graphs only: every (u,v) becomes (v,u), ids and weights kept.
Graph reverse(const Graph& g);

struct PrunedGraph {
  Graph graph;
  std::vector<NodeId> original_node;  // pruned id -> id in the input graph
  NodeId source = 0;
  NodeId target = 0;
};

// Restricts g to nodes reachable from s that also reach t, renumbered densely
// in increasing original order. Returns nullopt when t is unreachable.
std::optional<PrunedGraph> reachability_prune(const Graph& g, NodeId s,
                                              NodeId t);

}  // namespace mcpaths

#endif  // MCPATHS_GRAPH_HPP_
