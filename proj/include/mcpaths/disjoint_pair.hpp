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

#ifndef MCPATHS_DISJOINT_PAIR_HPP_
#define MCPATHS_DISJOINT_PAIR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/shortest_path.hpp"

namespace mcpaths {

enum class DisjointMode { kNode, kEdge };

// kEachShortest: both paths individually shortest between their terminals.
// kMinTotal: minimum combined length; ties go to the lighter first path,
// then to node sequences.
enum class PairObjective { kEachShortest, kMinTotal };

inline constexpr std::size_t kDefaultExhaustiveNodeBound = 16;

class ExhaustiveBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct GadgetTerminals {
  NodeId s1 = 0;
  NodeId s2 = 0;
  NodeId t1 = 0;
  NodeId t2 = 0;
};

// Two-source/two-sink graph over single ensembled weights. `graph` carries
// topology only (q == 0); weights live in `weight`, indexed by edge position.
struct GadgetGraph {
  Graph graph;
  std::vector<EnsembledWeight> weight;
  GadgetTerminals terminals;
  DisjointMode mode = DisjointMode::kNode;
  std::vector<bool> dummy;                       // per edge index
  std::vector<NodeId> node_origin;               // gadget node -> node of G
  std::vector<std::optional<EdgeId>> edge_origin;  // nullopt for dummy edges

  bool is_dummy(std::size_t edge_index) const { return dummy[edge_index]; }
};

struct GadgetPath {
  std::vector<NodeId> nodes;
  std::vector<std::uint32_t> edges;  // edge indices in the gadget
  EnsembledWeight length;
};

struct GadgetPair {
  GadgetPath first;   // s1 -> t1
  GadgetPath second;  // s2 -> t2
};

struct DisjointPair {
  Path first;
  Path second;
  DisjointMode mode = DisjointMode::kNode;
};

// Adds s1, s2 hanging off s and t1, t2 hanging off t with zero-weight dummy
// edges. Original nodes keep their ids; s1, s2, t1, t2 are n..n+3.
GadgetGraph build_edge_disjoint_gadget(const Graph& g, const BitLayout& layout,
                                       NodeId s, NodeId t);

// Splits every edge at s into its own entry node s_v (and every edge at t into
// an exit node t_v), joins each entry to s1, s2 and each exit to t1, t2 with
// dummy edges of ensembled weight 1, and drops s and t. An s-t edge becomes
// s'-t'. Remaining original nodes are renumbered in increasing order, followed
// by s1, s2, t1, t2, the entry nodes and the exit nodes.
GadgetGraph build_node_disjoint_gadget(const Graph& g, const BitLayout& layout,
                                       NodeId s, NodeId t);

// True when the terminal quadruple is not rigid, i.e. not both
// {s1, t1} within L(s2, t2) and {s2, t2} within L(s1, t1).
bool check_not_rigid(const GadgetGraph& gg);

// Exhaustive two-pair disjoint shortest paths over the gadget (node-disjoint
// for node gadgets, edge-disjoint for edge gadgets). Ties are broken on node
// sequences mapped through node_origin. Throws ExhaustiveBoundError when the
// gadget has more than node_bound nodes.
std::optional<GadgetPair> solve_2dsp_exhaustive(
    const GadgetGraph& gg, PairObjective objective,
    std::size_t node_bound = kDefaultExhaustiveNodeBound);

// Shrinks the terminal dummy edges back onto s and t and maps the rest of
// each path into g. Throws std::logic_error if a dummy edge appears inside a
// path.
DisjointPair abridge(const Graph& g, const BitLayout& layout,
                     const GadgetGraph& gg, const GadgetPair& pair);

struct TwoDisjointOptions {
  PairObjective objective = PairObjective::kMinTotal;
  std::size_t exhaustive_node_bound = kDefaultExhaustiveNodeBound;
};

// Layout, gadget, rigidity check, 2DSP and abridgement on an undirected g.
// nullopt when no disjoint pair exists.
std::optional<DisjointPair> two_disjoint_shortest(
    const Graph& g, NodeId s, NodeId t, DisjointMode mode,
    const TwoDisjointOptions& options = {});

}  // namespace mcpaths

#endif  // MCPATHS_DISJOINT_PAIR_HPP_
