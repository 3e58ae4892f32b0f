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

#include "mcpaths/yen_ksp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mcpaths {

namespace {

struct Candidate {
  EnsembledWeight length;
  std::vector<NodeId> nodes;

  friend bool operator<(const Candidate& a, const Candidate& b) {
    return std::tie(a.length, a.nodes) < std::tie(b.length, b.nodes);
  }
};

// Shortest from -> to path under `mask` whose node sequence is
// lexicographically smallest among all shortest simple paths.
class SpurSearch {
 public:
  SpurSearch(const Graph& g, const std::vector<EnsembledWeight>& weights)
      : g_(g), weights_(weights) {
    has_zero_edge_ = std::any_of(weights.begin(), weights.end(),
                                 [](const EnsembledWeight& w) { return w.is_zero(); });
  }

  std::optional<Candidate> run(NodeId from, NodeId to, const SearchMask& mask) {
    const auto to_target = dijkstra_on<EnsembledWeight>(
        g_, weights_, to, SearchDirection::kBackward, &mask);
    if (!to_target.is_reached(from)) return std::nullopt;

    Candidate out{to_target.dist[from], {from}};
    std::vector<bool> visited(g_.node_count(), false);
    visited[from] = true;
    NodeId x = from;
    while (x != to) {
      bool advanced = false;
      for (const Arc& a : g_.out_arcs(x)) {
        const NodeId v = a.head;
        if (visited[v] || mask.node_blocked(v) || mask.edge_blocked(a.edge)) continue;
        if (!to_target.is_reached(v)) continue;
        if (to_target.dist[x] != to_target.dist[v] + weights_[a.edge]) continue;
        // A tight arc into unvisited v always completes when every tight arc
        // strictly decreases the distance; zero-weight arcs can lead back
        // into the visited prefix.
        if (has_zero_edge_ && !completes(v, to, to_target, visited, mask)) continue;
        visited[v] = true;
        out.nodes.push_back(v);
        x = v;
        advanced = true;
        break;
      }
      if (!advanced) throw std::logic_error("yen_ksp: spur walk stalled");
    }
    return out;
  }

 private:
  bool completes(NodeId start, NodeId to, const DistanceMap& to_target,
                 const std::vector<bool>& visited, const SearchMask& mask) const {
    std::vector<bool> seen(visited);
    std::vector<NodeId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (const Arc& a : g_.out_arcs(x)) {
        const NodeId v = a.head;
        if (seen[v] || mask.node_blocked(v) || mask.edge_blocked(a.edge)) continue;
        if (!to_target.is_reached(v) ||
            to_target.dist[x] != to_target.dist[v] + weights_[a.edge]) {
          continue;
        }
        seen[v] = true;
        stack.push_back(v);
      }
    }
    return false;
  }

  const Graph& g_;
  const std::vector<EnsembledWeight>& weights_;
  bool has_zero_edge_ = false;
};

}  // namespace

KspResult yen_ksp(const Graph& g, const BitLayout& layout, NodeId s, NodeId t,
                  std::size_t k, const std::optional<EnsembledWeight>& threshold) {
  if (k == 0) throw std::invalid_argument("yen_ksp: k must be >= 1");
  if (!g.has_node(s) || !g.has_node(t)) {
    throw std::invalid_argument("yen_ksp: node out of range");
  }
  const Graph searched = filter_by_threshold(g, layout, threshold);
  KspResult result;
  if (s == t) {
    const NodeId only[] = {s};
    result.paths.push_back(make_path(searched, layout, only));
    result.exhausted = k > 1;
    return result;
  }

  const std::vector<EnsembledWeight> weights = pack_edges(searched, layout);
  SpurSearch spur_search(searched, weights);

  std::vector<Candidate> accepted;
  std::set<Candidate> pending;
  std::set<std::vector<NodeId>> seen;

  SearchMask empty_mask;
  if (auto first = spur_search.run(s, t, empty_mask)) {
    seen.insert(first->nodes);
    accepted.push_back(std::move(*first));
  }

  while (!accepted.empty() && accepted.size() < k) {
    const Candidate& last = accepted.back();
    EnsembledWeight root_length;
    for (std::size_t i = 0; i + 1 < last.nodes.size(); ++i) {
      const NodeId spur = last.nodes[i];
      SearchMask mask;
      mask.blocked_nodes.assign(searched.node_count(), false);
      mask.blocked_edges.assign(searched.edge_count(), false);
      for (std::size_t j = 0; j < i; ++j) mask.blocked_nodes[last.nodes[j]] = true;
      for (const Candidate& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(p.nodes.begin(), p.nodes.begin() + i + 1, last.nodes.begin())) {
          mask.blocked_edges[*searched.find_edge(p.nodes[i], p.nodes[i + 1])] = true;
        }
      }
      if (auto tail = spur_search.run(spur, t, mask)) {
        Candidate joined{root_length + tail->length,
                         {last.nodes.begin(), last.nodes.begin() + i}};
        joined.nodes.insert(joined.nodes.end(), tail->nodes.begin(), tail->nodes.end());
        if (seen.insert(joined.nodes).second) pending.insert(std::move(joined));
      }
      root_length += weights[*searched.find_edge(spur, last.nodes[i + 1])];
    }
    if (pending.empty()) break;
    accepted.push_back(std::move(pending.extract(pending.begin()).value()));
  }

  for (const Candidate& c : accepted) {
    result.paths.push_back(make_path(searched, layout, c.nodes));
  }
  result.exhausted = result.paths.size() < k;
  return result;
}

}  // namespace mcpaths
