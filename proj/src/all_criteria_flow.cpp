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

#include "mcpaths/all_criteria_flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mcpaths {

namespace {

std::vector<Weight> to_distances(const BasicDistanceMap<Weight>& dm) {
  std::vector<Weight> out(dm.dist.size(), kUnreachable);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (dm.reached[i]) out[i] = dm.dist[i];
  }
  return out;
}

// Path-finding routine state shared across extractions so the total work over
// all of them stays linear in the number of arcs.
class PathFinder {
 public:
  PathFinder(FlowState& fs, NodeId s, NodeId t) : fs_(fs), s_(s), t_(t) {
    std::vector<std::uint32_t> deg(fs.node_count + 1, 0);
    for (const FlowArc& a : fs.arcs) ++deg[a.to + 1];
    for (std::size_t i = 0; i < fs.node_count; ++i) deg[i + 1] += deg[i];
    in_offsets_ = deg;
    in_arcs_.assign(fs.arcs.size(), 0);
    std::vector<std::uint32_t> fill(deg.begin(), deg.end() - 1);
    for (std::uint32_t i = 0; i < fs.arcs.size(); ++i) in_arcs_[fill[fs.arcs[i].to]++] = i;
    for (std::size_t v = 0; v < fs.node_count; ++v) {
      std::sort(in_arcs_.begin() + in_offsets_[v], in_arcs_.begin() + in_offsets_[v + 1],
                [&](std::uint32_t a, std::uint32_t b) { return fs.arcs[a].id < fs.arcs[b].id; });
    }
    cursor_.assign(in_offsets_.begin(), in_offsets_.end() - 1);
    marked_.assign(fs.node_count, false);
  }

  std::vector<std::uint32_t> extract() {
    if (fs_.value <= 0) throw std::logic_error("extract_flow_path: flow value is zero");
    std::vector<std::uint32_t> stack;

    // Phase 1: walk backwards from t along arcs carrying flow.
    NodeId v = t_;
    marked_[v] = true;
    while (true) {
      const std::uint32_t a = next_into(v);
      stack.push_back(a);
      v = fs_.arcs[a].from;
      if (v == s_) break;
      if (!marked_[v]) {
        marked_[v] = true;
        continue;
      }
      // Phase 2: the walk closed a cycle at v; cancel it and resume from v.
      const NodeId z = v;
      while (true) {
        const std::uint32_t c = stack.back();
        stack.pop_back();
        fs_.flow[c] = 0;
        const NodeId head = fs_.arcs[c].to;
        if (head == z) break;
        marked_[head] = false;
      }
    }

    // Phase 3: the stack holds an s-t path, top arc leaving s.
    std::vector<std::uint32_t> path;
    path.reserve(stack.size());
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      fs_.flow[*it] = 0;
      marked_[fs_.arcs[*it].to] = false;
      path.push_back(fs_.arcs[*it].edge);
    }
    marked_[s_] = false;
    --fs_.value;
    return path;
  }

 private:
  std::uint32_t next_into(NodeId v) {
    std::uint32_t& c = cursor_[v];
    while (c < in_offsets_[v + 1] && fs_.flow[in_arcs_[c]] == 0) ++c;
    if (c == in_offsets_[v + 1]) {
      throw std::logic_error("extract_flow_path: no flow enters node " + std::to_string(v));
    }
    return in_arcs_[c];
  }

  FlowState& fs_;
  NodeId s_;
  NodeId t_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<std::uint32_t> in_arcs_;
  std::vector<std::uint32_t> cursor_;
  std::vector<bool> marked_;
};

}  // namespace

std::optional<AggregatedWeights> aggregate_and_distances(const Graph& g, NodeId s,
                                                         NodeId t) {
  if (!g.directed()) {
    throw std::invalid_argument("aggregate_and_distances: graph must be directed");
  }
  if (!g.has_node(s) || !g.has_node(t)) {
    throw std::invalid_argument("aggregate_and_distances: node out of range");
  }
  AggregatedWeights aw;
  aw.source = s;
  aw.target = t;
  aw.w.reserve(g.edge_count());
  // Bounding the grand total by half the range keeps d(s,u) + w + d(v,t)
  // representable.
  constexpr Weight kLimit = std::numeric_limits<Weight>::max() / 2;
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    Weight sum = 0;
    for (Weight x : e.weights) {
      if (x > kLimit - total - sum) {
        throw std::overflow_error("aggregate_and_distances: aggregated weights overflow");
      }
      sum += x;
    }
    total += sum;
    aw.w.push_back(sum);
  }

  aw.d_fwd = to_distances(dijkstra_on<Weight>(g, aw.w, s));
  if (aw.d_fwd[t] == kUnreachable) return std::nullopt;
  aw.d_bwd = to_distances(dijkstra_on<Weight>(g, aw.w, t, SearchDirection::kBackward));

  std::vector<Weight> wi(g.edge_count());
  for (std::size_t i = 0; i < g.criteria_count(); ++i) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) wi[e] = g.edge(e).weights[i];
    const auto dm = dijkstra_on<Weight>(g, wi, s);
    aw.d_i_st.push_back(dm.dist[t]);
  }
  return aw;
}

bool feasibility_check(const AggregatedWeights& aw) {
  Weight sum = 0;
  for (Weight d : aw.d_i_st) sum += d;
  return aw.d_st() == sum;
}

Graph ShortestSubgraph::as_graph(const Graph& g) const {
  return g.filtered([this](std::size_t i) { return edge_in[i]; });
}

ShortestSubgraph build_subgraph(const Graph& g, const AggregatedWeights& aw) {
  ShortestSubgraph sub;
  const Weight d_st = aw.d_st();
  sub.node_in.assign(g.node_count(), false);
  sub.edge_in.assign(g.edge_count(), false);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    sub.node_in[u] = aw.d_fwd[u] != kUnreachable && aw.d_bwd[u] != kUnreachable &&
                     aw.d_fwd[u] + aw.d_bwd[u] == d_st;
  }
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (aw.d_fwd[e.u] == kUnreachable || aw.d_bwd[e.v] == kUnreachable) continue;
    if (aw.d_fwd[e.u] + aw.w[i] + aw.d_bwd[e.v] == d_st) {
      sub.edge_in[i] = true;
      sub.edges.push_back(i);
    }
  }
  return sub;
}

FlowState max_flow_unit(const Graph& g, const ShortestSubgraph& sub, NodeId s, NodeId t,
                        std::size_t k) {
  if (!g.directed()) throw std::invalid_argument("max_flow_unit: graph must be directed");
  FlowState fs;
  fs.node_count = g.node_count();
  for (std::uint32_t idx : sub.edges) {
    const Edge& e = g.edge(idx);
    fs.arcs.push_back(FlowArc{e.u, e.v, idx, e.id});
  }
  fs.flow.assign(fs.arcs.size(), 0);
  if (s == t || k == 0) return fs;

  // Residual arc 2i is arc i forward, 2i + 1 its reverse.
  const std::size_t n = fs.node_count;
  std::vector<std::uint8_t> cap(2 * fs.arcs.size(), 0);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t i = 0; i < fs.arcs.size(); ++i) {
    cap[2 * i] = 1;
    adj[fs.arcs[i].from].push_back(2 * i);
    adj[fs.arcs[i].to].push_back(2 * i + 1);
  }
  auto head = [&](std::uint32_t r) {
    return (r & 1U) == 0 ? fs.arcs[r / 2].to : fs.arcs[r / 2].from;
  };

  std::vector<int> level(n);
  std::vector<std::size_t> it(n);
  std::vector<std::uint32_t> path;
  const auto target = static_cast<std::int64_t>(k);
  while (fs.value < target) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<NodeId> bfs;
    level[s] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      const NodeId x = bfs.front();
      bfs.pop();
      for (std::uint32_t r : adj[x]) {
        if (cap[r] != 0 && level[head(r)] < 0) {
          level[head(r)] = level[x] + 1;
          bfs.push(head(r));
        }
      }
    }
    if (level[t] < 0) break;
    std::fill(it.begin(), it.end(), 0);

    // Unit augmenting paths in the level graph until blocked or value k.
    while (fs.value < target) {
      path.clear();
      NodeId x = s;
      bool blocked = false;
      while (x != t) {
        bool advanced = false;
        while (it[x] < adj[x].size()) {
          const std::uint32_t r = adj[x][it[x]];
          if (cap[r] != 0 && level[head(r)] == level[x] + 1) {
            path.push_back(r);
            x = head(r);
            advanced = true;
            break;
          }
          ++it[x];
        }
        if (advanced) continue;
        if (x == s) {
          blocked = true;
          break;
        }
        level[x] = -1;
        const std::uint32_t back = path.back();
        path.pop_back();
        x = head(back ^ 1U);
        ++it[x];
      }
      if (blocked) break;
      for (std::uint32_t r : path) {
        cap[r] = 0;
        cap[r ^ 1U] = 1;
      }
      ++fs.value;
    }
  }
  for (std::uint32_t i = 0; i < fs.arcs.size(); ++i) fs.flow[i] = cap[2 * i + 1];
  return fs;
}

bool is_valid_flow(const FlowState& fs, NodeId s, NodeId t) {
  std::vector<std::int64_t> net(fs.node_count, 0);  // outflow - inflow
  for (std::size_t i = 0; i < fs.arcs.size(); ++i) {
    if (fs.flow[i] > 1) return false;
    net[fs.arcs[i].from] += fs.flow[i];
    net[fs.arcs[i].to] -= fs.flow[i];
  }
  for (NodeId v = 0; v < fs.node_count; ++v) {
    if (v != s && v != t && net[v] != 0) return false;
  }
  return net[s] == fs.value;
}

std::vector<std::uint32_t> extract_flow_path(FlowState& fs, NodeId s, NodeId t) {
  return PathFinder(fs, s, t).extract();
}

std::vector<Path> decompose_flow(FlowState fs, const Graph& g, const BitLayout& layout,
                                 NodeId s, NodeId t, std::size_t k) {
  if (fs.value < static_cast<std::int64_t>(k)) {
    throw InsufficientFlowError(std::string(kNoKPathsMessage));
  }
  PathFinder finder(fs, s, t);
  std::vector<Path> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<std::uint32_t> edges = finder.extract();
    out.push_back(make_path_from_edges(g, layout, s, edges));
  }
  return out;
}

AllCriteriaResult k_disjoint_all_criteria(const Graph& g, NodeId s, NodeId t,
                                          std::size_t k) {
  if (k == 0) throw std::invalid_argument("k_disjoint_all_criteria: k must be >= 1");
  if (s == t) throw std::invalid_argument("k_disjoint_all_criteria: s and t must differ");
  AllCriteriaResult result;
  const auto aw = aggregate_and_distances(g, s, t);
  if (!aw || !feasibility_check(*aw)) {
    result.status = AllCriteriaStatus::kNoAllCriteriaPath;
    result.message = std::string(kNoAllCriteriaPathMessage);
    return result;
  }
  const ShortestSubgraph sub = build_subgraph(g, *aw);
  FlowState fs = max_flow_unit(g, sub, s, t, k);
  result.flow_value = fs.value;
  if (fs.value < static_cast<std::int64_t>(k)) {
    result.status = AllCriteriaStatus::kFewerThanK;
    result.message = std::string(kNoKPathsMessage);
    return result;
  }
  result.paths = decompose_flow(std::move(fs), g, compute_layout(g), s, t, k);
  return result;
}

}  // namespace mcpaths
