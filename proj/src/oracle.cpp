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

#include "mcpaths/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace mcpaths::oracle {

namespace {

void dfs(const Graph& g, NodeId x, NodeId t, std::vector<bool>& on_path,
         EnumeratedPath& cur, PathEnumeration& out) {
  if (x == t) {
    out.paths.push_back(cur);
    return;
  }
  for (const Arc& a : g.out_arcs(x)) {
    if (on_path[a.head]) continue;
    const Edge& e = g.edge(a.edge);
    on_path[a.head] = true;
    cur.nodes.push_back(a.head);
    cur.edges.push_back(a.edge);
    for (std::size_t i = 0; i < cur.criteria.size(); ++i) cur.criteria[i] += e.weights[i];
    dfs(g, a.head, t, on_path, cur, out);
    for (std::size_t i = 0; i < cur.criteria.size(); ++i) cur.criteria[i] -= e.weights[i];
    cur.edges.pop_back();
    cur.nodes.pop_back();
    on_path[a.head] = false;
  }
}

Path to_path(const Graph& g, const BitLayout& layout, const EnumeratedPath& p) {
  Path out;
  out.nodes = p.nodes;
  for (std::uint32_t e : p.edges) out.edges.push_back(g.edge(e).id);
  out.criteria_length = p.criteria;
  out.ew_length = pack(layout, p.criteria);
  return out;
}

bool shares_interior_node(const EnumeratedPath& a, const EnumeratedPath& b) {
  for (std::size_t i = 1; i + 1 < a.nodes.size(); ++i) {
    for (std::size_t j = 1; j + 1 < b.nodes.size(); ++j) {
      if (a.nodes[i] == b.nodes[j]) return true;
    }
  }
  return false;
}

bool shares_edge(const EnumeratedPath& a, const EnumeratedPath& b) {
  for (std::uint32_t x : a.edges) {
    if (std::find(b.edges.begin(), b.edges.end(), x) != b.edges.end()) return true;
  }
  return false;
}

}  // namespace

PathEnumeration enumerate_simple_paths(const Graph& g, NodeId s, NodeId t,
                                       std::size_t node_bound) {
  if (g.node_count() > node_bound) {
    throw OracleBoundError("oracle: graph has " + std::to_string(g.node_count()) +
                           " nodes, bound is " + std::to_string(node_bound));
  }
  if (!g.has_node(s) || !g.has_node(t)) {
    throw std::invalid_argument("oracle: node out of range");
  }
  PathEnumeration out;
  EnumeratedPath cur;
  cur.nodes.push_back(s);
  cur.criteria.assign(g.criteria_count(), 0);
  std::vector<bool> on_path(g.node_count(), false);
  on_path[s] = true;
  dfs(g, s, t, on_path, cur, out);
  return out;
}

KspResult oracle_ksp(const Graph& g, const PathEnumeration& paths,
                     const BitLayout& layout, std::size_t k) {
  std::vector<Path> all;
  all.reserve(paths.paths.size());
  for (const EnumeratedPath& p : paths.paths) all.push_back(to_path(g, layout, p));
  std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
    return std::tie(a.ew_length, a.nodes) < std::tie(b.ew_length, b.nodes);
  });
  KspResult out;
  out.exhausted = all.size() < k;
  if (all.size() > k) all.resize(k);
  out.paths = std::move(all);
  return out;
}

std::optional<DisjointPair> oracle_disjoint_pair(const Graph& g, NodeId s, NodeId t,
                                                 DisjointMode mode,
                                                 PairObjective objective,
                                                 std::size_t node_bound) {
  const BitLayout layout = compute_layout(g);
  const PathEnumeration paths = enumerate_simple_paths(g, s, t, node_bound);
  std::vector<EnsembledWeight> ew;
  for (const EnumeratedPath& p : paths.paths) ew.push_back(pack(layout, p.criteria));
  std::optional<EnsembledWeight> shortest;
  for (const EnsembledWeight& w : ew) {
    if (!shortest || w < *shortest) shortest = w;
  }

  std::optional<std::pair<std::size_t, std::size_t>> best;
  EnsembledWeight best_total;
  for (std::size_t i = 0; i < paths.paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.paths.size(); ++j) {
      if (i == j) continue;
      const EnumeratedPath& a = paths.paths[i];
      const EnumeratedPath& b = paths.paths[j];
      const bool disjoint = mode == DisjointMode::kNode ? !shares_interior_node(a, b)
                                                        : !shares_edge(a, b);
      if (!disjoint) continue;
      if (objective == PairObjective::kEachShortest) {
        if (ew[i] != *shortest || ew[j] != *shortest) continue;
        if (!best || std::tie(a.nodes, b.nodes) <
                         std::tie(paths.paths[best->first].nodes,
                                  paths.paths[best->second].nodes)) {
          best = {i, j};
        }
      } else {
        EnsembledWeight total = ew[i] + ew[j];
        if (!best || std::tie(total, ew[i], a.nodes, b.nodes) <
                         std::tie(best_total, ew[best->first],
                                  paths.paths[best->first].nodes,
                                  paths.paths[best->second].nodes)) {
          best = {i, j};
          best_total = std::move(total);
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return DisjointPair{to_path(g, layout, paths.paths[best->first]),
                      to_path(g, layout, paths.paths[best->second]), mode};
}

std::size_t max_edge_disjoint(const Graph& g, const PathEnumeration& paths) {
  // Disjoint paths leave s over distinct edges and enter t over distinct
  // edges, so group by first edge and branch one group at a time.
  std::vector<std::uint32_t> firsts;
  std::vector<std::uint32_t> lasts;
  for (const EnumeratedPath& p : paths.paths) {
    if (p.edges.empty()) continue;
    firsts.push_back(p.edges.front());
    lasts.push_back(p.edges.back());
  }
  std::sort(firsts.begin(), firsts.end());
  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
  std::sort(lasts.begin(), lasts.end());
  lasts.erase(std::unique(lasts.begin(), lasts.end()), lasts.end());
  const std::size_t cap = std::min(firsts.size(), lasts.size());

  std::vector<std::vector<const EnumeratedPath*>> groups(firsts.size());
  for (const EnumeratedPath& p : paths.paths) {
    if (p.edges.empty()) continue;
    const auto at = std::lower_bound(firsts.begin(), firsts.end(), p.edges.front());
    groups[static_cast<std::size_t>(at - firsts.begin())].push_back(&p);
  }

  std::vector<bool> taken(g.edge_count(), false);
  std::size_t best = 0;
  auto search = [&](auto&& self, std::size_t group, std::size_t chosen) -> void {
    best = std::max(best, chosen);
    if (best == cap || group == groups.size()) return;
    if (chosen + (groups.size() - group) <= best) return;
    for (const EnumeratedPath* p : groups[group]) {
      if (std::any_of(p->edges.begin(), p->edges.end(),
                      [&](std::uint32_t e) { return taken[e]; })) {
        continue;
      }
      for (std::uint32_t e : p->edges) taken[e] = true;
      self(self, group + 1, chosen + 1);
      for (std::uint32_t e : p->edges) taken[e] = false;
      if (best == cap) return;
    }
    self(self, group + 1, chosen);
  };
  search(search, 0, 0);
  return best;
}

CriteriaVector criterion_minima(const PathEnumeration& paths, std::size_t q) {
  if (paths.paths.empty()) return {};
  CriteriaVector mins(q, 0);
  for (std::size_t i = 0; i < q; ++i) {
    mins[i] = std::min_element(paths.paths.begin(), paths.paths.end(),
                               [i](const EnumeratedPath& a, const EnumeratedPath& b) {
                                 return a.criteria[i] < b.criteria[i];
                               })
                  ->criteria[i];
  }
  return mins;
}

PathEnumeration all_criteria_shortest(const PathEnumeration& paths) {
  PathEnumeration out;
  if (paths.paths.empty()) return out;
  const CriteriaVector mins =
      criterion_minima(paths, paths.paths.front().criteria.size());
  for (const EnumeratedPath& p : paths.paths) {
    if (p.criteria == mins) out.paths.push_back(p);
  }
  return out;
}

}  // namespace mcpaths::oracle
