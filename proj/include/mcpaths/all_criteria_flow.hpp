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

#ifndef MCPATHS_ALL_CRITERIA_FLOW_HPP_
#define MCPATHS_ALL_CRITERIA_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/shortest_path.hpp"

namespace mcpaths {

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

inline constexpr std::string_view kNoAllCriteriaPathMessage =
    "No path from s to t shortest w.r.t. each criterion c_i exist";
inline constexpr std::string_view kNoKPathsMessage =
    "There exist no k paths from s to t shortest w.r.t. each criterion c_i";

// Aggregated weight w(e) = sum_i w_i(e) and the distances built on it.
struct AggregatedWeights {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<Weight> w;      // per edge index
  std::vector<Weight> d_fwd;  // d(s, x), kUnreachable if none
  std::vector<Weight> d_bwd;  // d(y, t), kUnreachable if none
  CriteriaVector d_i_st;      // d_i(s, t) per criterion

  Weight d_st() const { return d_fwd[target]; }
};

// One forward and one backward Dijkstra on w plus one forward Dijkstra per
// criterion. nullopt when t is unreachable from s. Requires a directed graph.
std::optional<AggregatedWeights> aggregate_and_distances(const Graph& g, NodeId s,
                                                         NodeId t);

// d(s, t) == sum_i d_i(s, t).
bool feasibility_check(const AggregatedWeights& aw);

// Nodes and edges lying on at least one aggregated-shortest s-t path.
struct ShortestSubgraph {
  std::vector<bool> node_in;
  std::vector<bool> edge_in;              // per edge index
  std::vector<std::uint32_t> edges;       // indices with edge_in set, ascending

  // The subgraph as a Graph over the same node ids, edge ids preserved.
  Graph as_graph(const Graph& g) const;
};

ShortestSubgraph build_subgraph(const Graph& g, const AggregatedWeights& aw);

struct FlowArc {
  NodeId from = 0;
  NodeId to = 0;
  std::uint32_t edge = 0;  // edge index in the source graph
  EdgeId id = 0;
};

// 0/1 flow over unit-capacity arcs.
struct FlowState {
  std::size_t node_count = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::uint8_t> flow;  // per arc
  std::int64_t value = 0;
};

// Blocking-flow max-flow on the subgraph's arcs, stopping as soon as the
// value reaches k.
FlowState max_flow_unit(const Graph& g, const ShortestSubgraph& sub, NodeId s,
                        NodeId t, std::size_t k);

// Conservation at every node other than s and t, and value equal to the net
// outflow of s.
bool is_valid_flow(const FlowState& fs, NodeId s, NodeId t);

// One run of the path-finding routine: walks flow arcs backwards from t,
// cancelling any flow cycle it closes, until it reaches s; then removes that
// path from the flow. Arcs entering a node are tried lowest edge id first.
// Returns the path's edge indices from s to t. Throws std::logic_error when
// fs carries no flow.
std::vector<std::uint32_t> extract_flow_path(FlowState& fs, NodeId s, NodeId t);

class InsufficientFlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k path extractions. Throws InsufficientFlowError when fs.value < k.
std::vector<Path> decompose_flow(FlowState fs, const Graph& g, const BitLayout& layout,
                                 NodeId s, NodeId t, std::size_t k);

enum class AllCriteriaStatus { kOk, kNoAllCriteriaPath, kFewerThanK };

struct AllCriteriaResult {
  AllCriteriaStatus status = AllCriteriaStatus::kOk;
  std::string message;
  std::vector<Path> paths;
  std::int64_t flow_value = 0;
};

// k pairwise edge-disjoint s-t paths, each shortest under every criterion.
AllCriteriaResult k_disjoint_all_criteria(const Graph& g, NodeId s, NodeId t,
                                          std::size_t k);

}  // namespace mcpaths

#endif  // MCPATHS_ALL_CRITERIA_FLOW_HPP_
