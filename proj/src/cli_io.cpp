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

#include "mcpaths/cli_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcpaths/all_criteria_flow.hpp"
#include "mcpaths/disjoint_pair.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/oracle.hpp"
#include "mcpaths/shortest_path.hpp"
#include "mcpaths/yen_ksp.hpp"

namespace mcpaths {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_uint(const Token& tok, std::size_t line, std::uint64_t max,
                         const char* what) {
  if (!tok.text.empty() && tok.text.front() == '-') {
    throw ParseError(line, tok.column,
                     std::string("negative ") + what + " '" + std::string(tok.text) + "'");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > max)) {
    throw ParseError(line, tok.column,
                     std::string(what) + " '" + std::string(tok.text) + "' out of range");
  }
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column,
                     std::string("expected a non-negative integer ") + what + ", got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  std::optional<Directedness> directedness;
  std::size_t node_count = 0;
  std::size_t q = 0;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (!directedness) {
      if (toks[0].text != "mcgraph") {
        throw ParseError(line_no, toks[0].column, "expected header 'mcgraph <directed|undirected> <node_count> <q>'");
      }
      if (toks.size() != 4) {
        throw ParseError(line_no, toks[0].column, "header needs 4 tokens, got " + std::to_string(toks.size()));
      }
      if (toks[1].text == "directed") {
        directedness = Directedness::kDirected;
      } else if (toks[1].text == "undirected") {
        directedness = Directedness::kUndirected;
      } else {
        throw ParseError(line_no, toks[1].column, "expected 'directed' or 'undirected', got '" + std::string(toks[1].text) + "'");
      }
      node_count = parse_uint(toks[2], line_no, std::numeric_limits<NodeId>::max(), "node count");
      q = parse_uint(toks[3], line_no, 1U << 16, "criterion count");
      continue;
    }

    if (toks.size() != q + 2) {
      throw ParseError(line_no, toks[0].column,
                       "expected " + std::to_string(q + 2) + " tokens (u v and " + std::to_string(q) +
                           " weights), got " + std::to_string(toks.size()));
    }
    EdgeSpec e;
    e.u = static_cast<NodeId>(parse_uint(toks[0], line_no, std::numeric_limits<NodeId>::max(), "node id"));
    e.v = static_cast<NodeId>(parse_uint(toks[1], line_no, std::numeric_limits<NodeId>::max(), "node id"));
    for (std::size_t i = 0; i < q; ++i) {
      e.weights.push_back(static_cast<Weight>(
          parse_uint(toks[i + 2], line_no, std::numeric_limits<Weight>::max(), "weight")));
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
  }
  if (!directedness) throw ParseError(line_no, 1, "missing 'mcgraph' header");

  try {
    return build_graph(*directedness, node_count, q, edges);
  } catch (const GraphError& e) {
    throw ParseError(edge_lines[e.edge_position()], 1, e.what());
  }
}

std::string format_graph_file(const Graph& g) {
  std::ostringstream os;
  os << "mcgraph " << (g.directed() ? "directed" : "undirected") << ' ' << g.node_count()
     << ' ' << g.criteria_count() << '\n';
  for (const Edge& e : g.edges()) {
    os << e.u << ' ' << e.v;
    for (Weight w : e.weights) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

namespace {

struct Query {
  std::string command;
  std::string graph_path;
  NodeId source = 0;
  NodeId dest = 0;
  std::optional<std::string> threshold;
  std::size_t k = 1;
  std::string mode = "node";
  std::string objective = "min-total";
  std::size_t exhaustive_bound = kDefaultExhaustiveNodeBound;
  bool verify = false;
  std::string format = "text";
};

struct Outcome {
  json doc;
  int exit_code = kExitOk;
};

json layout_json(const BitLayout& layout) {
  return json{{"W", layout.totals}, {"l", layout.segment_bits}, {"r", layout.offsets}};
}

json path_json(const Path& p) {
  return json{{"nodes", p.nodes},
              {"edges", p.edges},
              {"ensembled_length", p.ew_length.to_decimal()},
              {"criteria", p.criteria_length}};
}

json paths_json(const std::vector<Path>& paths) {
  json arr = json::array();
  for (const Path& p : paths) arr.push_back(path_json(p));
  return arr;
}

json verify_json(bool checked, bool agrees, const std::string& note) {
  return json{{"checked", checked}, {"agrees", agrees}, {"note", note}};
}

bool verify_in_bounds(const Graph& g) { return g.node_count() <= oracle::kDefaultNodeBound; }

json verify_skipped() {
  return verify_json(false, true,
                     "skipped: more than " + std::to_string(oracle::kDefaultNodeBound) + " nodes");
}

void require_node(const Graph& g, NodeId n, const char* flag) {
  if (!g.has_node(n)) {
    throw std::invalid_argument(std::string(flag) + " " + std::to_string(n) +
                                " is not a node of the graph");
  }
}

void set_negative(Outcome& o, const std::string& status, const std::string& message) {
  o.doc["status"] = status;
  o.doc["message"] = message;
  o.exit_code = kExitNoPaths;
}

Outcome run_pack(const Graph& g, const Query& q) {
  Outcome o;
  const BitLayout layout = compute_layout(g);
  o.doc["layout"] = layout_json(layout);
  json edges = json::array();
  bool agrees = true;
  for (const Edge& e : g.edges()) {
    const EnsembledWeight ew = pack(layout, e.weights);
    edges.push_back(json{{"id", e.id},
                         {"u", e.u},
                         {"v", e.v},
                         {"weights", e.weights},
                         {"ensembled", ew.to_decimal()}});
    if (q.verify && unpack(layout, ew) != e.weights) agrees = false;
  }
  o.doc["edges"] = std::move(edges);
  o.doc["status"] = "ok";
  if (q.verify) o.doc["verify"] = verify_json(true, agrees, "unpack(pack(w)) == w per edge");
  return o;
}

std::optional<EnsembledWeight> threshold_of(const Query& q) {
  if (!q.threshold) return std::nullopt;
  return BigUint::from_decimal(*q.threshold);
}

Outcome run_sp(const Graph& g, const Query& q) {
  Outcome o;
  require_node(g, q.source, "--source");
  require_node(g, q.dest, "--dest");
  const BitLayout layout = compute_layout(g);
  const auto threshold = threshold_of(q);
  o.doc["layout"] = layout_json(layout);
  const Graph searched = filter_by_threshold(g, layout, threshold);
  const DistanceMap dm = dijkstra(searched, layout, q.source);
  const auto path = extract_path(searched, layout, dm, q.dest);
  o.doc["paths"] = json::array();
  if (path) {
    o.doc["status"] = "ok";
    o.doc["paths"].push_back(path_json(*path));
  } else {
    set_negative(o, "no_path", "no path from s to t");
  }
  if (q.verify) {
    if (!verify_in_bounds(searched)) {
      o.doc["verify"] = verify_skipped();
    } else {
      const auto ref = oracle::oracle_ksp(
          searched, oracle::enumerate_simple_paths(searched, q.source, q.dest), layout, 1);
      const bool agrees = ref.paths.empty() ? !path.has_value()
                                            : path && path->ew_length == ref.paths[0].ew_length;
      o.doc["verify"] = verify_json(true, agrees, "shortest length matches exhaustive enumeration");
    }
  }
  return o;
}

Outcome run_ksp(const Graph& g, const Query& q) {
  Outcome o;
  require_node(g, q.source, "--source");
  require_node(g, q.dest, "--dest");
  const BitLayout layout = compute_layout(g);
  const auto threshold = threshold_of(q);
  o.doc["layout"] = layout_json(layout);
  const KspResult res = yen_ksp(g, layout, q.source, q.dest, q.k, threshold);
  o.doc["paths"] = paths_json(res.paths);
  o.doc["exhausted"] = res.exhausted;
  if (res.paths.empty()) {
    set_negative(o, "no_path", "no path from s to t");
  } else {
    o.doc["status"] = "ok";
  }
  if (q.verify) {
    const Graph searched = filter_by_threshold(g, layout, threshold);
    if (!verify_in_bounds(searched)) {
      o.doc["verify"] = verify_skipped();
    } else {
      const auto ref = oracle::oracle_ksp(
          searched, oracle::enumerate_simple_paths(searched, q.source, q.dest), layout, q.k);
      const bool agrees = ref.paths == res.paths && ref.exhausted == res.exhausted;
      o.doc["verify"] = verify_json(true, agrees, "top-k matches exhaustive enumeration");
    }
  }
  return o;
}

Outcome run_2dsp(const Graph& g, const Query& q) {
  Outcome o;
  require_node(g, q.source, "--source");
  require_node(g, q.dest, "--dest");
  DisjointMode mode;
  if (q.mode == "node") {
    mode = DisjointMode::kNode;
  } else if (q.mode == "edge") {
    mode = DisjointMode::kEdge;
  } else {
    throw std::invalid_argument("--mode must be node or edge");
  }
  TwoDisjointOptions options;
  options.exhaustive_node_bound = q.exhaustive_bound;
  if (q.objective == "min-total") {
    options.objective = PairObjective::kMinTotal;
  } else if (q.objective == "each-shortest") {
    options.objective = PairObjective::kEachShortest;
  } else {
    throw std::invalid_argument("--objective must be each-shortest or min-total");
  }
  o.doc["layout"] = layout_json(compute_layout(g));
  const auto pair = two_disjoint_shortest(g, q.source, q.dest, mode, options);
  o.doc["paths"] = json::array();
  if (pair) {
    o.doc["status"] = "ok";
    o.doc["paths"].push_back(path_json(pair->first));
    o.doc["paths"].push_back(path_json(pair->second));
  } else {
    set_negative(o, "none", "no disjoint pair of s-t paths exists");
  }
  if (q.verify) {
    if (!verify_in_bounds(g)) {
      o.doc["verify"] = verify_skipped();
    } else {
      const auto ref = oracle::oracle_disjoint_pair(g, q.source, q.dest, mode, options.objective);
      const bool agrees = ref.has_value() == pair.has_value() &&
                          (!ref || (ref->first == pair->first && ref->second == pair->second));
      o.doc["verify"] = verify_json(true, agrees, "pair matches exhaustive search on the input graph");
    }
  }
  return o;
}

Outcome run_kdisjoint(const Graph& g, const Query& q) {
  Outcome o;
  require_node(g, q.source, "--source");
  require_node(g, q.dest, "--dest");
  o.doc["layout"] = layout_json(compute_layout(g));
  const AllCriteriaResult res = k_disjoint_all_criteria(g, q.source, q.dest, q.k);
  o.doc["paths"] = paths_json(res.paths);
  if (res.status == AllCriteriaStatus::kOk) {
    o.doc["status"] = "ok";
  } else {
    set_negative(o, res.status == AllCriteriaStatus::kNoAllCriteriaPath ? "infeasible" : "fewer_than_k",
                 res.message);
  }
  if (q.verify) {
    if (!verify_in_bounds(g)) {
      o.doc["verify"] = verify_skipped();
    } else {
      const auto all = oracle::enumerate_simple_paths(g, q.source, q.dest);
      const auto best = oracle::all_criteria_shortest(all);
      const std::size_t max_disjoint = oracle::max_edge_disjoint(g, best);
      bool agrees = (res.status == AllCriteriaStatus::kOk) == (max_disjoint >= q.k) &&
                    (res.status == AllCriteriaStatus::kNoAllCriteriaPath) == best.paths.empty();
      const CriteriaVector mins = oracle::criterion_minima(all, g.criteria_count());
      for (const Path& p : res.paths) agrees = agrees && p.criteria_length == mins;
      o.doc["verify"] = verify_json(true, agrees, "feasibility and path count match exhaustive search");
    }
  }
  return o;
}

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i != 0) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

void render_text(const json& doc, std::ostream& out) {
  out << "command: " << doc["command"].get<std::string>() << '\n';
  if (doc.contains("layout")) {
    const json& l = doc["layout"];
    out << "layout: W=(" << join(l["W"], ",") << ") l=(" << join(l["l"], ",") << ") r=("
        << join(l["r"], ",") << ")\n";
  }
  if (doc.contains("edges")) {
    for (const json& e : doc["edges"]) {
      out << "edge " << e["id"] << ": " << e["u"] << "-" << e["v"] << " weights=("
          << join(e["weights"], ",") << ") ensembled=" << e["ensembled"].get<std::string>() << '\n';
    }
  }
  out << "status: " << doc["status"].get<std::string>() << '\n';
  if (doc.contains("message")) out << "message: " << doc["message"].get<std::string>() << '\n';
  if (doc.contains("paths")) {
    std::size_t i = 0;
    for (const json& p : doc["paths"]) {
      out << "path " << ++i << ": nodes=" << join(p["nodes"], ",") << " edges=" << join(p["edges"], ",")
          << " ensembled=" << p["ensembled_length"].get<std::string>() << " criteria=("
          << join(p["criteria"], ",") << ")\n";
    }
  }
  if (doc.contains("exhausted")) out << "exhausted: " << (doc["exhausted"].get<bool>() ? "true" : "false") << '\n';
  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    out << "verify: "
        << (!v["checked"].get<bool>() ? "skipped" : v["agrees"].get<bool>() ? "agrees" : "MISMATCH")
        << " (" << v["note"].get<std::string>() << ")\n";
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Query q;
  CLI::App app{"Prioritized multi-criteria shortest and disjoint path queries", "mcpaths"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--verify", q.verify, "Cross-check the result against exhaustive search (<= 12 nodes)");
  app.add_option("--format", q.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_common = [&](CLI::App* sub, bool endpoints) {
    sub->add_option("--graph", q.graph_path, "Graph file")->required();
    if (endpoints) {
      sub->add_option("--source", q.source, "Source node id")->required();
      sub->add_option("--dest", q.dest, "Destination node id")->required();
    }
  };
  CLI::App* pack_cmd = app.add_subcommand("pack", "Print the bit layout and ensembled edge weights");
  add_common(pack_cmd, false);
  CLI::App* sp_cmd = app.add_subcommand("sp", "Prioritized multi-criteria shortest path");
  add_common(sp_cmd, true);
  sp_cmd->add_option("--threshold", q.threshold, "Drop edges with ensembled weight >= T");
  CLI::App* ksp_cmd = app.add_subcommand("ksp", "Prioritized multi-criteria k shortest simple paths");
  add_common(ksp_cmd, true);
  ksp_cmd->add_option("--threshold", q.threshold, "Drop edges with ensembled weight >= T");
  ksp_cmd->add_option("-k", q.k, "Number of paths")->check(CLI::PositiveNumber);
  CLI::App* dsp_cmd = app.add_subcommand("2dsp", "Prioritized 2-disjoint shortest paths (undirected)");
  add_common(dsp_cmd, true);
  dsp_cmd->add_option("--mode", q.mode, "Disjointness")->check(CLI::IsMember({"node", "edge"}));
  dsp_cmd->add_option("--objective", q.objective, "Pair objective")
      ->check(CLI::IsMember({"each-shortest", "min-total"}));
  dsp_cmd->add_option("--exhaustive-bound", q.exhaustive_bound, "Node bound for the exhaustive solver");
  CLI::App* kd_cmd = app.add_subcommand("kdisjoint", "k edge-disjoint all-criteria-shortest paths (directed)");
  add_common(kd_cmd, true);
  kd_cmd->add_option("-k", q.k, "Number of paths")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"mcpaths"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }
  q.command = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    std::ifstream in(q.graph_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open graph file '" + q.graph_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const Graph g = parse_graph_file(text.str());
    if (q.threshold) BigUint::from_decimal(*q.threshold);

    if (q.command == "pack") {
      outcome = run_pack(g, q);
    } else if (q.command == "sp") {
      outcome = run_sp(g, q);
    } else if (q.command == "ksp") {
      outcome = run_ksp(g, q);
    } else if (q.command == "2dsp") {
      outcome = run_2dsp(g, q);
    } else {
      outcome = run_kdisjoint(g, q);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  json query{{"graph", q.graph_path}};
  if (q.command != "pack") {
    query["source"] = q.source;
    query["dest"] = q.dest;
  }
  if (q.command == "sp" || q.command == "ksp") {
    query["threshold"] = q.threshold ? json(*q.threshold) : json(nullptr);
  }
  if (q.command == "ksp" || q.command == "kdisjoint") query["k"] = q.k;
  if (q.command == "2dsp") {
    query["mode"] = q.mode;
    query["objective"] = q.objective;
  }
  outcome.doc["command"] = q.command;
  outcome.doc["query"] = std::move(query);

  if (q.format == "json") {
    out << outcome.doc.dump(2) << '\n';
  } else {
    render_text(outcome.doc, out);
  }
  if (outcome.doc.contains("verify") && !outcome.doc["verify"]["agrees"].get<bool>()) {
    err << "error: result disagrees with exhaustive search\n";
    return kExitVerifyMismatch;
  }
  return outcome.exit_code;
}

}  // namespace mcpaths
