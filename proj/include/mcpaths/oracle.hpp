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

#ifndef MCPATHS_ORACLE_HPP_
#define MCPATHS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcpaths/disjoint_pair.hpp"
#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/yen_ksp.hpp"

// Brute-force reference implementations for small graphs. Everything here
// works by enumerating simple paths and never calls the fast algorithms.
namespace mcpaths::oracle {

inline constexpr std::size_t kDefaultNodeBound = 12;

class OracleBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EnumeratedPath {
  std::vector<NodeId> nodes;
  std::vector<std::uint32_t> edges;  // edge indices
  CriteriaVector criteria;           // per-criterion sums
};

struct PathEnumeration {
  std::vector<EnumeratedPath> paths;
};

// Every simple s-t path exactly once (s == t gives the single empty path).
// Throws OracleBoundError when g has more than node_bound nodes.
PathEnumeration enumerate_simple_paths(const Graph& g, NodeId s, NodeId t,
                                       std::size_t node_bound = kDefaultNodeBound);

// Sorts by (pack(layout, criteria sums), node sequence) and keeps k.
KspResult oracle_ksp(const Graph& g, const PathEnumeration& paths,
                     const BitLayout& layout, std::size_t k);

// Best pair of distinct s-t paths that share only s and t (kNode) or no edge
// (kEdge), chosen over all ordered pairs with the same key as the gadget
// solver: kMinTotal minimizes (EW1 + EW2, EW1, nodes1, nodes2); kEachShortest
// requires EW1 == EW2 == min EW and minimizes (nodes1, nodes2).
std::optional<DisjointPair> oracle_disjoint_pair(
    const Graph& g, NodeId s, NodeId t, DisjointMode mode, PairObjective objective,
    std::size_t node_bound = kDefaultNodeBound);

// Largest number of pairwise edge-disjoint paths among `paths`.
std::size_t max_edge_disjoint(const Graph& g, const PathEnumeration& paths);

// Paths whose criteria vector equals the per-criterion minimum over all
// simple s-t paths. Empty when no single path attains every minimum.
PathEnumeration all_criteria_shortest(const PathEnumeration& paths);

// Per-criterion minima over the enumerated paths; empty when there are none.
CriteriaVector criterion_minima(const PathEnumeration& paths, std::size_t q);

}  // namespace mcpaths::oracle

#endif  // MCPATHS_ORACLE_HPP_
