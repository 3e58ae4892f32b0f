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

#include "mcpaths/disjoint_pair.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace mcpaths {

namespace {

class GadgetBuilder {
 public:
  explicit GadgetBuilder(DisjointMode mode) { gg_.mode = mode; }

  NodeId add_node(NodeId origin) {
    gg_.node_origin.push_back(origin);
    return static_cast<NodeId>(gg_.node_origin.size() - 1);
  }

  void add_edge(NodeId u, NodeId v, EnsembledWeight w, std::optional<EdgeId> origin) {
    edges_.push_back(Edge{u, v, {}, static_cast<EdgeId>(edges_.size())});
    gg_.weight.push_back(std::move(w));
    gg_.dummy.push_back(!origin.has_value());
    gg_.edge_origin.push_back(origin);
  }

  GadgetGraph finish(GadgetTerminals terminals) && {
    gg_.terminals = terminals;
    gg_.graph = Graph::from_edges(Directedness::kUndirected, gg_.node_origin.size(),
                                  0, std::move(edges_));
    return std::move(gg_);
  }

 private:
  GadgetGraph gg_{Graph::build(Directedness::kUndirected, 0, 0, {}), {}, {}, {}, {}, {}, {}};
  std::vector<Edge> edges_;
};

void check_endpoints(const Graph& g, NodeId s, NodeId t, const char* who) {
  if (g.directed()) {
    throw std::invalid_argument(std::string(who) + ": graph must be undirected");
  }
  if (!g.has_node(s) || !g.has_node(t)) {
    throw std::invalid_argument(std::string(who) + ": node out of range");
  }
  if (s == t) throw std::invalid_argument(std::string(who) + ": s and t must differ");
}

// Dense bitset sized at construction.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Route {
  GadgetPath path;
  std::vector<NodeId> mapped;
  Bits node_bits;
  Bits edge_bits;
};

std::vector<Route> all_routes(const GadgetGraph& gg, NodeId from, NodeId to) {
  const Graph& g = gg.graph;
  std::vector<Route> out;
  std::vector<bool> on_path(g.node_count(), false);
  GadgetPath cur;
  cur.nodes.push_back(from);
  on_path[from] = true;

  auto emit = [&] {
    Route r{cur, {}, Bits(g.node_count()), Bits(g.edge_count())};
    r.path.length = EnsembledWeight{};
    for (std::uint32_t e : cur.edges) {
      r.path.length += gg.weight[e];
      r.edge_bits.set(e);
    }
    for (NodeId n : cur.nodes) {
      r.mapped.push_back(gg.node_origin[n]);
      r.node_bits.set(n);
    }
    out.push_back(std::move(r));
  };

  // Iterative DFS: cursor[d] is the next arc to try at depth d.
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const NodeId x = cur.nodes.back();
    if (x == to) {
      emit();
    } else {
      const auto arcs = g.out_arcs(x);
      bool descended = false;
      while (cursor.back() < arcs.size()) {
        const Arc a = arcs[cursor.back()++];
        if (on_path[a.head]) continue;
        on_path[a.head] = true;
        cur.nodes.push_back(a.head);
        cur.edges.push_back(a.edge);
        cursor.push_back(0);
        descended = true;
        break;
      }
      if (descended) continue;
    }
    cursor.pop_back();
    on_path[cur.nodes.back()] = false;
    cur.nodes.pop_back();
    if (!cur.edges.empty()) cur.edges.pop_back();
  }
  return out;
}

bool compatible(const GadgetGraph& gg, const Route& a, const Route& b) {
  return gg.mode == DisjointMode::kNode ? !a.node_bits.intersects(b.node_bits)
                                        : !a.edge_bits.intersects(b.edge_bits);
}

}  // namespace

GadgetGraph build_edge_disjoint_gadget(const Graph& g, const BitLayout& layout,
                                       NodeId s, NodeId t) {
  check_endpoints(g, s, t, "build_edge_disjoint_gadget");
  GadgetBuilder b(DisjointMode::kEdge);
  for (NodeId x = 0; x < g.node_count(); ++x) b.add_node(x);
  const NodeId s1 = b.add_node(s);
  const NodeId s2 = b.add_node(s);
  const NodeId t1 = b.add_node(t);
  const NodeId t2 = b.add_node(t);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, pack(layout, e.weights), e.id);
  b.add_edge(s1, s, 0, std::nullopt);
  b.add_edge(s2, s, 0, std::nullopt);
  b.add_edge(t, t1, 0, std::nullopt);
  b.add_edge(t, t2, 0, std::nullopt);
  return std::move(b).finish({s1, s2, t1, t2});
}

GadgetGraph build_node_disjoint_gadget(const Graph& g, const BitLayout& layout,
                                       NodeId s, NodeId t) {
  check_endpoints(g, s, t, "build_node_disjoint_gadget");
  GadgetBuilder b(DisjointMode::kNode);
  std::vector<NodeId> renumbered(g.node_count(), 0);
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (x != s && x != t) renumbered[x] = b.add_node(x);
  }
  const NodeId s1 = b.add_node(s);
  const NodeId s2 = b.add_node(s);
  const NodeId t1 = b.add_node(t);
  const NodeId t2 = b.add_node(t);

  // entry[v] is s_v (s' for v == t); exit[v] is t_v (t' for v == s).
  std::vector<NodeId> entry(g.node_count(), 0);
  std::vector<NodeId> exit(g.node_count(), 0);
  for (const Arc& a : g.out_arcs(s)) entry[a.head] = b.add_node(s);
  for (const Arc& a : g.out_arcs(t)) exit[a.head] = b.add_node(t);

  for (const Edge& e : g.edges()) {
    const EnsembledWeight w = pack(layout, e.weights);
    const bool at_s = e.u == s || e.v == s;
    const bool at_t = e.u == t || e.v == t;
    if (at_s && at_t) {
      b.add_edge(entry[t], exit[s], w, e.id);
    } else if (at_s) {
      const NodeId v = e.other(s);
      b.add_edge(entry[v], renumbered[v], w, e.id);
    } else if (at_t) {
      const NodeId v = e.other(t);
      b.add_edge(renumbered[v], exit[v], w, e.id);
    } else {
      b.add_edge(renumbered[e.u], renumbered[e.v], w, e.id);
    }
  }
  for (const Arc& a : g.out_arcs(s)) {
    b.add_edge(s1, entry[a.head], 1, std::nullopt);
    b.add_edge(s2, entry[a.head], 1, std::nullopt);
  }
  for (const Arc& a : g.out_arcs(t)) {
    b.add_edge(exit[a.head], t1, 1, std::nullopt);
    b.add_edge(exit[a.head], t2, 1, std::nullopt);
  }
  return std::move(b).finish({s1, s2, t1, t2});
}

bool check_not_rigid(const GadgetGraph& gg) {
  const Graph& g = gg.graph;
  const auto& [s1, s2, t1, t2] = gg.terminals;

  // u in L(a, b): u lies on some shortest a-b path. The distance equality
  // alone also admits detours over zero-weight edges into dead ends, so an
  // interior node must additionally be passable.
  auto in_l = [&](NodeId a, NodeId b, NodeId u) {
    const auto from_a = dijkstra_on<EnsembledWeight>(g, gg.weight, a);
    if (!from_a.is_reached(b)) return false;
    if (u == a || u == b) return true;
    const auto to_b = dijkstra_on<EnsembledWeight>(g, gg.weight, b,
                                                   SearchDirection::kBackward);
    if (!from_a.is_reached(u) || !to_b.is_reached(u)) return false;
    const bool passable = g.directed()
                              ? !g.in_arcs(u).empty() && !g.out_arcs(u).empty()
                              : g.out_arcs(u).size() >= 2;
    return passable && from_a.dist[u] + to_b.dist[u] == from_a.dist[b];
  };

  const bool rigid = in_l(s2, t2, s1) && in_l(s2, t2, t1) &&
                     in_l(s1, t1, s2) && in_l(s1, t1, t2);
  return !rigid;
}

std::optional<GadgetPair> solve_2dsp_exhaustive(const GadgetGraph& gg,
                                                PairObjective objective,
                                                std::size_t node_bound) {
  if (gg.graph.node_count() > node_bound) {
    throw ExhaustiveBoundError("exhaustive solver bound exceeded: gadget has " +
                               std::to_string(gg.graph.node_count()) +
                               " nodes, bound is " + std::to_string(node_bound));
  }
  std::vector<Route> firsts = all_routes(gg, gg.terminals.s1, gg.terminals.t1);
  std::vector<Route> seconds = all_routes(gg, gg.terminals.s2, gg.terminals.t2);
  if (firsts.empty() || seconds.empty()) return std::nullopt;
  auto by_length = [](const Route& a, const Route& b) {
    return std::tie(a.path.length, a.mapped) < std::tie(b.path.length, b.mapped);
  };
  std::sort(firsts.begin(), firsts.end(), by_length);
  std::sort(seconds.begin(), seconds.end(), by_length);

  const Route* best_a = nullptr;
  const Route* best_b = nullptr;
  if (objective == PairObjective::kEachShortest) {
    // Sorted by (length, mapped): the first compatible hit is minimal.
    for (const Route& a : firsts) {
      if (a.path.length != firsts.front().path.length) break;
      for (const Route& b : seconds) {
        if (b.path.length != seconds.front().path.length) break;
        if (compatible(gg, a, b)) {
          best_a = &a;
          best_b = &b;
          break;
        }
      }
      if (best_a != nullptr) break;
    }
  } else {
    EnsembledWeight best_total;
    for (const Route& a : firsts) {
      if (best_a != nullptr && a.path.length + seconds.front().path.length > best_total) break;
      for (const Route& b : seconds) {
        EnsembledWeight total = a.path.length + b.path.length;
        if (best_a != nullptr && total > best_total) break;
        if (!compatible(gg, a, b)) continue;
        if (best_a == nullptr ||
            std::tie(total, a.path.length, a.mapped, b.mapped) <
                std::tie(best_total, best_a->path.length, best_a->mapped, best_b->mapped)) {
          best_a = &a;
          best_b = &b;
          best_total = std::move(total);
        }
      }
    }
  }
  if (best_a == nullptr) return std::nullopt;
  return GadgetPair{best_a->path, best_b->path};
}

DisjointPair abridge(const Graph& g, const BitLayout& layout, const GadgetGraph& gg,
                     const GadgetPair& pair) {
  auto shrink = [&](const GadgetPath& p) {
    if (p.edges.size() < 2 || !gg.is_dummy(p.edges.front()) ||
        !gg.is_dummy(p.edges.back())) {
      throw std::logic_error("abridge: path does not start and end on dummy edges");
    }
    std::vector<std::uint32_t> original;
    for (std::size_t i = 1; i + 1 < p.edges.size(); ++i) {
      const auto& origin = gg.edge_origin[p.edges[i]];
      if (!origin) throw std::logic_error("abridge: dummy edge inside a path");
      original.push_back(static_cast<std::uint32_t>(*g.index_of(*origin)));
    }
    Path out = make_path_from_edges(g, layout, gg.node_origin[p.nodes.front()], original);
    if (out.nodes.back() != gg.node_origin[p.nodes.back()]) {
      throw std::logic_error("abridge: path does not end at t");
    }
    return out;
  };
  DisjointPair out{shrink(pair.first), shrink(pair.second), gg.mode};

  if (gg.mode == DisjointMode::kNode) {
    for (std::size_t i = 1; i + 1 < out.first.nodes.size(); ++i) {
      if (std::find(out.second.nodes.begin() + 1, out.second.nodes.end() - 1,
                    out.first.nodes[i]) != out.second.nodes.end() - 1) {
        throw std::logic_error("abridge: paths share an intermediate node");
      }
    }
  }
  for (EdgeId e : out.first.edges) {
    if (std::find(out.second.edges.begin(), out.second.edges.end(), e) !=
        out.second.edges.end()) {
      throw std::logic_error("abridge: paths share an edge");
    }
  }
  return out;
}

std::optional<DisjointPair> two_disjoint_shortest(const Graph& g, NodeId s, NodeId t,
                                                  DisjointMode mode,
                                                  const TwoDisjointOptions& options) {
  check_endpoints(g, s, t, "two_disjoint_shortest");
  const BitLayout layout = compute_layout(g);
  const GadgetGraph gg = mode == DisjointMode::kNode
                             ? build_node_disjoint_gadget(g, layout, s, t)
                             : build_edge_disjoint_gadget(g, layout, s, t);
  if (!check_not_rigid(gg)) {
    throw std::logic_error("two_disjoint_shortest: terminal quadruple is rigid");
  }
  auto pair = solve_2dsp_exhaustive(gg, options.objective, options.exhaustive_node_bound);
  if (!pair) return std::nullopt;
  return abridge(g, layout, gg, *pair);
}

}  // namespace mcpaths
