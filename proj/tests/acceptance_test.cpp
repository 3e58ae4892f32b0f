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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcpaths/all_criteria_flow.hpp"
#include "mcpaths/disjoint_pair.hpp"
#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/oracle.hpp"
#include "mcpaths/shortest_path.hpp"
#include "mcpaths/yen_ksp.hpp"
#include "test_graphs.hpp"

namespace mcpaths {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Weight aggregated(const CriteriaVector& c) {
  Weight sum = 0;
  for (const Weight x : c) sum += x;
  return sum;
}

std::string nodes_text(const std::vector<NodeId>& nodes) {
  std::string s;
  for (const NodeId v : nodes) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

void worked_example_layout(Outcome& out) {
  const auto start = Clock::now();
  const Graph g = testing::worked_line_graph();
  const BitLayout layout = compute_layout(g);
  const std::vector<EnsembledWeight> ew = pack_edges(g, layout);
  const double elapsed = ms_since(start);
  if (layout.segment_bits != std::vector<std::size_t>{4, 5, 4}) out.fail("segment widths");
  if (layout.offsets != std::vector<std::size_t>{9, 4, 0}) out.fail("offsets");
  const std::vector<std::uint64_t> want = {1605, 2098, 613, 2162};
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (ew[i] != BigUint(want[i])) {
      out.fail("edge " + std::to_string(i) + " packs to " + ew[i].to_decimal());
    }
  }
  if (elapsed >= 1.0) out.fail("took " + std::to_string(elapsed) + " ms");
  out.detail << "l=(4,5,4) r=(9,4,0) EW=1605,2098,613,2162 in " << elapsed << " ms";
}

void worked_example_distance(Outcome& out) {
  const Graph g = testing::worked_line_graph();
  const BitLayout layout = compute_layout(g);
  const auto p = extract_path(g, layout, dijkstra(g, layout, 0), 4);
  if (!p) {
    out.fail("no path A-E");
    return;
  }
  if (p->ew_length != BigUint(6478)) out.fail("distance " + p->ew_length.to_decimal());
  const CriteriaVector c = unpack(layout, p->ew_length);
  if (c != CriteriaVector{12, 20, 14}) out.fail("unpacked vector differs");
  out.detail << "d(A,E)=" << p->ew_length << " -> (" << c[0] << "," << c[1] << "," << c[2]
             << ")";
}

void order_embedding(Outcome& out) {
  std::mt19937_64 rng(1001);
  testing::RandomGraphSpec spec;
  spec.max_nodes = 8;
  spec.max_q = 4;
  spec.max_weight = 7;
  std::size_t comparisons = 0;
  constexpr int kGraphs = 600;
  for (int trial = 0; trial < kGraphs; ++trial) {
    spec.directedness = trial % 2 ? Directedness::kDirected : Directedness::kUndirected;
    const Graph g = testing::random_graph(rng, spec);
    const BitLayout layout = compute_layout(g);
    const std::vector<EnsembledWeight> ew = pack_edges(g, layout);
    std::vector<std::pair<EnsembledWeight, CriteriaVector>> sums;
    for (NodeId t = 0; t < g.node_count(); ++t) {
      for (const auto& p : oracle::enumerate_simple_paths(g, 0, t).paths) {
        EnsembledWeight total;
        for (const auto e : p.edges) total += ew[e];
        if (total != pack(layout, p.criteria)) out.fail("pack is not additive");
        if (unpack(layout, total) != p.criteria) out.fail("unpack does not invert");
        sums.emplace_back(total, p.criteria);
      }
    }
    for (const auto& [ea, ca] : sums) {
      for (const auto& [eb, cb] : sums) {
        ++comparisons;
        if ((ea <=> eb) != compare_lex(ca, cb)) out.fail("order mismatch");
      }
    }
  }
  out.detail << kGraphs << " graphs, " << comparisons << " path-pair comparisons";
}

void ksp_equivalence(Outcome& out) {
  std::mt19937_64 rng(1002);
  testing::RandomGraphSpec spec;
  spec.min_nodes = 4;
  spec.edge_probability = 0.65;
  std::uniform_int_distribution<std::size_t> kdist(1, 5);
  constexpr int kInstances = 600;
  std::size_t paths = 0;
  const auto start = Clock::now();
  for (int trial = 0; trial < kInstances; ++trial) {
    spec.directedness = trial % 2 ? Directedness::kDirected : Directedness::kUndirected;
    const Graph g = testing::random_graph(rng, spec);
    const BitLayout layout = compute_layout(g);
    const NodeId t = static_cast<NodeId>(g.node_count() - 1);
    const std::size_t k = kdist(rng);
    const KspResult got = yen_ksp(g, layout, 0, t, k);
    const KspResult want =
        oracle::oracle_ksp(g, oracle::enumerate_simple_paths(g, 0, t), layout, k);
    paths += got.paths.size();
    if (got.paths != want.paths || got.exhausted != want.exhausted) {
      out.fail("instance " + std::to_string(trial));
    }
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 10000.0) out.fail("took " + std::to_string(elapsed) + " ms");
  out.detail << kInstances << " instances, " << paths << " paths compared in " << elapsed
             << " ms";
}

void two_disjoint_end_to_end(Outcome& out) {
  std::mt19937_64 rng(1003);
  testing::RandomGraphSpec spec;
  spec.min_nodes = 3;
  spec.max_nodes = 8;
  spec.max_q = 3;
  spec.edge_probability = 0.5;
  constexpr int kInstances = 320;
  std::size_t found = 0;
  std::size_t none = 0;
  std::size_t gadgets = 0;
  for (int trial = 0; trial < kInstances; ++trial) {
    // Small weights on half the instances so equal-length routes occur.
    spec.max_weight = trial % 2 ? 7 : 1;
    const Graph g = testing::random_graph(rng, spec);
    const NodeId t = static_cast<NodeId>(g.node_count() - 1);
    const BitLayout layout = compute_layout(g);
    for (const DisjointMode mode : {DisjointMode::kNode, DisjointMode::kEdge}) {
      const GadgetGraph gg = mode == DisjointMode::kNode
                                 ? build_node_disjoint_gadget(g, layout, 0, t)
                                 : build_edge_disjoint_gadget(g, layout, 0, t);
      ++gadgets;
      if (!check_not_rigid(gg)) out.fail("rigid gadget on instance " + std::to_string(trial));
      for (const PairObjective obj : {PairObjective::kMinTotal, PairObjective::kEachShortest}) {
        const auto got = two_disjoint_shortest(g, 0, t, mode, {obj, 32});
        const auto want = oracle::oracle_disjoint_pair(g, 0, t, mode, obj);
        if (got.has_value() != want.has_value()) {
          out.fail("existence differs on instance " + std::to_string(trial));
          continue;
        }
        if (!got) {
          ++none;
          continue;
        }
        ++found;
        if (got->first != want->first || got->second != want->second) {
          out.fail("pair differs on instance " + std::to_string(trial) + ": got " +
                   nodes_text(got->first.nodes) + " | " + nodes_text(got->second.nodes));
        }
      }
    }
  }
  out.detail << kInstances << " instances x 2 modes x 2 objectives: " << found << " pairs, "
             << none << " none; " << gadgets << " gadgets non-rigid";
}

testing::RandomGraphSpec directed_spec(Weight min_weight) {
  testing::RandomGraphSpec spec;
  spec.directedness = Directedness::kDirected;
  spec.min_nodes = 3;
  spec.max_nodes = 8;
  spec.max_q = 3;
  spec.min_weight = min_weight;
  spec.max_weight = 2;
  spec.edge_probability = 0.5;
  return spec;
}

void all_criteria_pipeline(Outcome& out) {
  std::mt19937_64 rng(1004);
  constexpr int kInstances = 400;
  std::size_t feasible = 0;
  std::size_t decomposed = 0;
  std::size_t flow_total = 0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const Graph g = testing::random_graph(rng, directed_spec(0));
    const NodeId t = static_cast<NodeId>(g.node_count() - 1);
    const auto all = oracle::enumerate_simple_paths(g, 0, t);
    const auto aw = aggregate_and_distances(g, 0, t);
    if (aw.has_value() == all.paths.empty()) out.fail("reachability differs");
    const bool brute = !oracle::all_criteria_shortest(all).paths.empty();
    const bool fast = aw && feasibility_check(*aw);
    if (brute != fast) out.fail("(a) feasibility differs on instance " + std::to_string(trial));
    if (!fast) continue;
    ++feasible;

    const ShortestSubgraph sub = build_subgraph(g, *aw);
    const FlowState fs = max_flow_unit(g, sub, 0, t, g.edge_count() + 1);
    const Graph sg = sub.as_graph(g);
    const std::size_t brute_flow =
        oracle::max_edge_disjoint(sg, oracle::enumerate_simple_paths(sg, 0, t));
    if (!is_valid_flow(fs, 0, t)) out.fail("(b) invalid flow");
    if (static_cast<std::size_t>(fs.value) != brute_flow) {
      out.fail("(b) flow " + std::to_string(fs.value) + " vs " + std::to_string(brute_flow));
    }
    flow_total += brute_flow;

    const std::size_t k = static_cast<std::size_t>(fs.value);
    const AllCriteriaResult r = k_disjoint_all_criteria(g, 0, t, k);
    if (r.status != AllCriteriaStatus::kOk || r.paths.size() != k) {
      out.fail("(c) pipeline did not return k paths");
      continue;
    }
    std::set<EdgeId> used;
    for (const Path& p : r.paths) {
      ++decomposed;
      if (p.criteria_length != aw->d_i_st) out.fail("(c) path not shortest for every c_i");
      if (p.nodes.front() != 0 || p.nodes.back() != t) out.fail("(c) wrong endpoints");
      for (const EdgeId id : p.edges) {
        if (!used.insert(id).second) out.fail("(c) paths share an edge");
      }
    }
  }
  out.detail << kInstances << " instances, " << feasible << " feasible, flow total "
             << flow_total << ", " << decomposed << " decomposed paths checked";
}

void subgraph_suite(Outcome& out) {
  std::mt19937_64 rng(1005);
  constexpr int kInstances = 320;
  std::size_t members = 0;
  std::size_t shortest_paths = 0;
  std::size_t inner_paths = 0;
  for (int trial = 0; trial < 2 * kInstances; ++trial) {
    // Membership is checked on positive weights; containment on any weights.
    const bool positive = trial < kInstances;
    const Graph g = testing::random_graph(rng, directed_spec(positive ? 1 : 0));
    const NodeId t = static_cast<NodeId>(g.node_count() - 1);
    const auto aw = aggregate_and_distances(g, 0, t);
    if (!aw) continue;
    const ShortestSubgraph sub = build_subgraph(g, *aw);
    const auto all = oracle::enumerate_simple_paths(g, 0, t);

    std::vector<bool> node_on(g.node_count(), false);
    std::vector<bool> edge_on(g.edge_count(), false);
    for (const auto& p : all.paths) {
      if (aggregated(p.criteria) != aw->d_st()) continue;
      ++shortest_paths;
      for (const NodeId v : p.nodes) {
        node_on[v] = true;
        if (!sub.node_in[v]) out.fail("shortest path leaves the subgraph at a node");
      }
      for (const auto e : p.edges) {
        edge_on[e] = true;
        if (!sub.edge_in[e]) out.fail("shortest path leaves the subgraph at an edge");
      }
    }
    if (positive) {
      for (NodeId v = 0; v < g.node_count(); ++v) {
        ++members;
        if (node_on[v] != sub.node_in[v]) out.fail("node membership " + std::to_string(v));
      }
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        ++members;
        if (edge_on[e] != sub.edge_in[e]) out.fail("edge membership " + std::to_string(e));
      }
    }

    const Graph sg = sub.as_graph(g);
    for (const auto& p : oracle::enumerate_simple_paths(sg, 0, t).paths) {
      ++inner_paths;
      if (aggregated(p.criteria) != aw->d_st()) out.fail("subgraph path is not shortest");
      if (feasibility_check(*aw) && p.criteria != aw->d_i_st) {
        out.fail("subgraph path misses a criterion minimum");
      }
    }
  }
  out.detail << 2 * kInstances << " instances, " << members << " membership tests, "
             << shortest_paths << " shortest paths inside, " << inner_paths
             << " subgraph paths shortest";
}

// 100 layers of 100 nodes; every forward edge between two adjacent layers
// carries that layer gap's weight vector, so all s-t routes tie. Extra edges
// point backwards or stay in a layer with random weights.
Graph layered_graph(std::mt19937_64& rng, NodeId& s, NodeId& t) {
  constexpr NodeId kLayers = 100;
  constexpr NodeId kWidth = 100;
  constexpr std::size_t kEdges = 50000;
  constexpr std::size_t kForward = 45000;
  const std::size_t n = static_cast<std::size_t>(kLayers) * kWidth;
  s = 0;
  t = static_cast<NodeId>(n - 1);
  std::uniform_int_distribution<NodeId> col(0, kWidth - 1);
  std::uniform_int_distribution<NodeId> gap(0, kLayers - 2);
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<Weight> small(1, 5);
  std::uniform_int_distribution<Weight> noise(0, 7);
  std::vector<CriteriaVector> gap_weight(kLayers - 1);
  for (auto& w : gap_weight) w = {small(rng), small(rng), small(rng)};

  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<EdgeSpec> edges;
  auto add = [&](NodeId u, NodeId v, CriteriaVector w) {
    if (u == v || !seen.emplace(u, v).second) return;
    edges.push_back({u, v, std::move(w)});
  };
  for (NodeId j = 0; j < 6; ++j) {
    add(s, kWidth + j * 7, gap_weight[0]);
    add((kLayers - 2) * kWidth + j * 11, t, gap_weight[kLayers - 2]);
  }
  while (edges.size() < kForward) {
    const NodeId layer = gap(rng);
    add(layer * kWidth + col(rng), (layer + 1) * kWidth + col(rng), gap_weight[layer]);
  }
  while (edges.size() < kEdges) {
    NodeId u = any(rng);
    NodeId v = any(rng);
    if (u / kWidth < v / kWidth) std::swap(u, v);
    add(u, v, {noise(rng), noise(rng), noise(rng)});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return build_graph(Directedness::kDirected, n, 3, edges);
}

void scale_check(Outcome& out) {
  std::mt19937_64 rng(1006);
  NodeId s = 0;
  NodeId t = 0;
  const Graph g = layered_graph(rng, s, t);
  constexpr std::size_t k = 4;
  const auto start = Clock::now();
  const AllCriteriaResult r = k_disjoint_all_criteria(g, s, t, k);
  const double elapsed = ms_since(start);
  if (r.status != AllCriteriaStatus::kOk || r.paths.size() != k) {
    out.fail("status " + r.message);
  }
  // Independent per-criterion distances.
  CriteriaVector d(3);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Weight> w(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) w[e] = g.edge(e).weights[i];
    const auto dm = dijkstra_on<Weight>(g, w, s);
    d[i] = dm.dist[t];
  }
  std::set<EdgeId> used;
  for (const Path& p : r.paths) {
    if (p.criteria_length != d) out.fail("path not shortest for every criterion");
    for (const EdgeId id : p.edges) {
      if (!used.insert(id).second) out.fail("paths share an edge");
    }
  }
  if (elapsed >= 10000.0) out.fail("took " + std::to_string(elapsed) + " ms");
  out.detail << "|V|=" << g.node_count() << " |E|=" << g.edge_count() << " q=3 k=" << k
             << ": " << r.paths.size() << " paths, flow " << r.flow_value << ", "
             << elapsed << " ms";
}

}  // namespace
}  // namespace mcpaths

int main() {
  using mcpaths::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"worked-example bit layout and packed edge weights", mcpaths::worked_example_layout},
      {"worked-example ensembled distance", mcpaths::worked_example_distance},
      {"order embedding of packed weights", mcpaths::order_embedding},
      {"k shortest paths match exhaustive oracle", mcpaths::ksp_equivalence},
      {"two disjoint shortest paths match exhaustive oracle", mcpaths::two_disjoint_end_to_end},
      {"all-criteria feasibility, flow value and decomposition", mcpaths::all_criteria_pipeline},
      {"shortest-path subgraph membership and containment", mcpaths::subgraph_suite},
      {"scale: 10^4 nodes, 5*10^4 edges, k=4", mcpaths::scale_check},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " [" << out.detail.str() << "]\n";
    failures += out.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
