#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "diwidth/expressions.hpp"
#include "diwidth/layout.hpp"
#include "diwidth/pathdecomp.hpp"
#include "diwidth/properties.hpp"
#include "diwidth/rankdec.hpp"
#include "diwidth/threshold.hpp"

namespace diwidth {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "diwidth/1";

// ---- graph text format -------------------------------------------------------
//
//   n m        directed header, then m lines "u v" for arcs (u,v)
//   u n m      undirected header, then m lines "u v" for edges {u,v}
//
// Blank lines and '#' comments are ignored. Vertex labels may be arbitrary
// tokens; integers in [0,n) map to themselves, anything else is numbered in
// first-occurrence order. The label table is kept for output.

struct ParsedGraph {
  bool directed = true;
  Digraph digraph;
  UndirectedGraph graph;
  std::vector<std::string> labels;  // id -> original token

  int vertex_count() const { return directed ? digraph.vertex_count() : graph.vertex_count(); }
};

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_graph_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

inline bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stol(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

}  // namespace detail

inline ParsedGraph parse_graph(std::istream& in) {
  auto lines = detail::tokenize_graph_lines(in);
  if (lines.empty()) throw input_error("graph file: missing header line");

  ParsedGraph out;
  long n = 0, m = 0;
  const auto& header = lines[0];
  if (!header.empty() && header[0] == "u") {
    out.directed = false;
    if (header.size() != 3 || !detail::parse_int(header[1], n) || !detail::parse_int(header[2], m))
      throw input_error("graph file: undirected header must be 'u n m'");
  } else {
    out.directed = true;
    if (header.size() != 2 || !detail::parse_int(header[0], n) || !detail::parse_int(header[1], m))
      throw input_error("graph file: header must be 'n m'");
  }
  if (n < 0 || n > kMaxVertices) throw input_error("graph file: vertex count out of range");
  if (m < 0) throw input_error("graph file: negative arc count");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw input_error("graph file: expected " + std::to_string(m) + " arc lines, found " +
                      std::to_string(lines.size() - 1));

  // decide the label mapping: identity when every endpoint token is an
  // integer in [0,n), first-occurrence numbering otherwise
  bool plain = true;
  for (size_t i = 1; i < lines.size() && plain; ++i) {
    if (lines[i].size() != 2) throw input_error("graph file: arc line " + std::to_string(i + 1) +
                                                " must name two vertices");
    for (const auto& tok : lines[i]) {
      long v;
      if (!detail::parse_int(tok, v) || v < 0 || v >= n) plain = false;
    }
  }

  std::vector<std::string> labels;
  auto vertex_of = [&](const std::string& tok) -> int {
    if (plain) {
      long v;
      detail::parse_int(tok, v);
      return static_cast<int>(v);
    }
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == tok) return static_cast<int>(i);
    if (static_cast<long>(labels.size()) >= n)
      throw input_error("graph file: more than " + std::to_string(n) + " distinct vertex labels");
    labels.push_back(tok);
    return static_cast<int>(labels.size()) - 1;
  };

  if (out.directed)
    out.digraph = Digraph(static_cast<int>(n));
  else
    out.graph = UndirectedGraph(static_cast<int>(n));
  for (size_t i = 1; i < lines.size(); ++i) {
    int a = vertex_of(lines[i][0]);
    int b = vertex_of(lines[i][1]);
    try {
      if (out.directed) {
        if (out.digraph.has_arc(a, b))
          throw input_error("duplicate arc");
        out.digraph.add_arc(a, b);
      } else {
        if (out.graph.has_edge(a, b)) throw input_error("duplicate edge");
        out.graph.add_edge(a, b);
      }
    } catch (const input_error& e) {
      throw input_error("graph file, line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (plain) {
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else {
    while (static_cast<long>(labels.size()) < n)
      labels.push_back("_v" + std::to_string(labels.size()));
  }
  out.labels = std::move(labels);
  return out;
}

inline void write_digraph(std::ostream& os, const Digraph& g) {
  os << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const auto& [u, v] : g.arcs()) os << u << ' ' << v << '\n';
}

inline void write_undirected(std::ostream& os, const UndirectedGraph& g) {
  os << "u " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

// ---- witness JSON --------------------------------------------------------------

inline json layout_to_json(const Layout& l) { return json(l.order); }

inline Layout layout_from_json(const json& j) {
  if (!j.is_array()) throw input_error("witness: layout must be an array of vertex ids");
  Layout l;
  for (const auto& e : j) l.order.push_back(e.get<int>());
  return l;
}

inline json dpd_to_json(const DirectedPathDecomposition& d) {
  json bags = json::array();
  for (VertexMask bag : d.bags) {
    json b = json::array();
    for (int v : bits(bag)) b.push_back(v);
    bags.push_back(std::move(b));
  }
  return json{{"schema", kSchemaTag}, {"kind", "dpd"}, {"width", width(d)}, {"bags", bags}};
}

inline DirectedPathDecomposition dpd_from_json(const json& j) {
  DirectedPathDecomposition d;
  if (!j.contains("bags") || !j["bags"].is_array()) throw input_error("witness: dpd needs bags");
  for (const auto& bag : j["bags"]) {
    VertexMask mask = 0;
    for (const auto& e : bag) {
      int v = e.get<int>();
      if (v < 0 || v >= kMaxVertices) throw input_error("witness: bag vertex out of range");
      mask |= vertex_bit(v);
    }
    d.bags.push_back(mask);
  }
  return d;
}

namespace detail {

inline json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json a = json::array();
  for (const auto& [x, y] : pairs) a.push_back(json::array({x, y}));
  return a;
}

inline std::vector<std::pair<int, int>> pairs_from_json(const json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw input_error("witness: relation entries are pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace detail

inline json expr_to_json(const NlcExpr& x) {
  json ops = json::array();
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case NlcOp::Kind::Leaf:
        ops.push_back({{"op", "leaf"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case NlcOp::Kind::Join:
        ops.push_back({{"op", "join"},
                       {"label", op.label},
                       {"v", op.vertex},
                       {"fwd", detail::pairs_to_json(op.fwd)},
                       {"bwd", detail::pairs_to_json(op.bwd)}});
        break;
      case NlcOp::Kind::Relabel:
        ops.push_back({{"op", "relabel"}, {"map", op.map}});
        break;
    }
  }
  return json{{"schema", kSchemaTag}, {"kind", "nlc"}, {"k", x.k}, {"ops", ops}};
}

inline json expr_to_json(const CwExpr& x) {
  json ops = json::array();
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case CwOp::Kind::Leaf:
        ops.push_back({{"op", "leaf"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case CwOp::Kind::Union:
        ops.push_back({{"op", "union"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case CwOp::Kind::AddArcs:
        ops.push_back({{"op", "add-arcs"}, {"from", op.from}, {"to", op.to}});
        break;
      case CwOp::Kind::Relabel:
        ops.push_back({{"op", "relabel"}, {"from", op.from}, {"to", op.to}});
        break;
    }
  }
  return json{{"schema", kSchemaTag}, {"kind", "cw"}, {"k", x.k}, {"ops", ops}};
}

inline json expr_to_json(const UNlcExpr& x) {
  json ops = json::array();
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case UNlcOp::Kind::Leaf:
        ops.push_back({{"op", "leaf"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case UNlcOp::Kind::Join:
        ops.push_back({{"op", "join"},
                       {"label", op.label},
                       {"v", op.vertex},
                       {"rel", detail::pairs_to_json(op.rel)}});
        break;
      case UNlcOp::Kind::Relabel:
        ops.push_back({{"op", "relabel"}, {"map", op.map}});
        break;
    }
  }
  return json{{"schema", kSchemaTag}, {"kind", "nlc-u"}, {"k", x.k}, {"ops", ops}};
}

inline json expr_to_json(const UCwExpr& x) {
  json ops = json::array();
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case UCwOp::Kind::Leaf:
        ops.push_back({{"op", "leaf"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case UCwOp::Kind::Union:
        ops.push_back({{"op", "union"}, {"label", op.label}, {"v", op.vertex}});
        break;
      case UCwOp::Kind::AddEdges:
        ops.push_back({{"op", "add-edges"}, {"from", op.from}, {"to", op.to}});
        break;
      case UCwOp::Kind::Relabel:
        ops.push_back({{"op", "relabel"}, {"from", op.from}, {"to", op.to}});
        break;
    }
  }
  return json{{"schema", kSchemaTag}, {"kind", "cw-u"}, {"k", x.k}, {"ops", ops}};
}

inline std::string expr_kind(const json& j) {
  if (!j.contains("kind")) throw input_error("witness: expression without kind");
  return j["kind"].get<std::string>();
}

inline NlcExpr nlc_from_json(const json& j) {
  NlcExpr x;
  x.k = j.value("k", 0);
  for (const auto& o : j.at("ops")) {
    NlcOp op;
    std::string kind = o.at("op").get<std::string>();
    if (kind == "leaf") {
      op.kind = NlcOp::Kind::Leaf;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
    } else if (kind == "join") {
      op.kind = NlcOp::Kind::Join;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
      if (o.contains("fwd")) op.fwd = detail::pairs_from_json(o["fwd"]);
      if (o.contains("bwd")) op.bwd = detail::pairs_from_json(o["bwd"]);
    } else if (kind == "relabel") {
      op.kind = NlcOp::Kind::Relabel;
      op.map = o.at("map").get<std::vector<int>>();
    } else {
      throw input_error("witness: unknown nlc op '" + kind + "'");
    }
    x.ops.push_back(std::move(op));
  }
  return x;
}

inline CwExpr cw_from_json(const json& j) {
  CwExpr x;
  x.k = j.value("k", 0);
  for (const auto& o : j.at("ops")) {
    CwOp op;
    std::string kind = o.at("op").get<std::string>();
    if (kind == "leaf" || kind == "union") {
      op.kind = kind == "leaf" ? CwOp::Kind::Leaf : CwOp::Kind::Union;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
    } else if (kind == "add-arcs") {
      op.kind = CwOp::Kind::AddArcs;
      op.from = o.at("from").get<int>();
      op.to = o.at("to").get<int>();
    } else if (kind == "relabel") {
      op.kind = CwOp::Kind::Relabel;
      op.from = o.at("from").get<int>();
      op.to = o.at("to").get<int>();
    } else {
      throw input_error("witness: unknown cw op '" + kind + "'");
    }
    x.ops.push_back(op);
  }
  return x;
}

inline UNlcExpr nlc_u_from_json(const json& j) {
  UNlcExpr x;
  x.k = j.value("k", 0);
  for (const auto& o : j.at("ops")) {
    UNlcOp op;
    std::string kind = o.at("op").get<std::string>();
    if (kind == "leaf") {
      op.kind = UNlcOp::Kind::Leaf;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
    } else if (kind == "join") {
      op.kind = UNlcOp::Kind::Join;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
      if (o.contains("rel")) op.rel = detail::pairs_from_json(o["rel"]);
    } else if (kind == "relabel") {
      op.kind = UNlcOp::Kind::Relabel;
      op.map = o.at("map").get<std::vector<int>>();
    } else {
      throw input_error("witness: unknown undirected nlc op '" + kind + "'");
    }
    x.ops.push_back(std::move(op));
  }
  return x;
}

inline UCwExpr cw_u_from_json(const json& j) {
  UCwExpr x;
  x.k = j.value("k", 0);
  for (const auto& o : j.at("ops")) {
    UCwOp op;
    std::string kind = o.at("op").get<std::string>();
    if (kind == "leaf" || kind == "union") {
      op.kind = kind == "leaf" ? UCwOp::Kind::Leaf : UCwOp::Kind::Union;
      op.label = o.at("label").get<int>();
      op.vertex = o.value("v", -1);
    } else if (kind == "add-edges") {
      op.kind = UCwOp::Kind::AddEdges;
      op.from = o.at("from").get<int>();
      op.to = o.at("to").get<int>();
    } else if (kind == "relabel") {
      op.kind = UCwOp::Kind::Relabel;
      op.from = o.at("from").get<int>();
      op.to = o.at("to").get<int>();
    } else {
      throw input_error("witness: unknown undirected cw op '" + kind + "'");
    }
    x.ops.push_back(op);
  }
  return x;
}

inline json threshold_to_json(const ThresholdBuildSequence& seq) {
  json ops = json::array();
  for (ThresholdOp op : seq.ops) ops.push_back(to_string(op));
  json j{{"schema", kSchemaTag}, {"kind", "threshold"}, {"ops", ops}};
  if (!seq.vertices.empty()) j["vertices"] = seq.vertices;
  return j;
}

inline ThresholdBuildSequence threshold_from_json(const json& j) {
  ThresholdBuildSequence seq;
  for (const auto& o : j.at("ops")) {
    ThresholdOp op;
    if (!threshold_op_from_string(o.get<std::string>(), op))
      throw input_error("witness: unknown threshold op '" + o.get<std::string>() + "'");
    seq.ops.push_back(op);
  }
  if (j.contains("vertices")) seq.vertices = j["vertices"].get<std::vector<int>>();
  return seq;
}

inline json rankdec_to_json(const CaterpillarDecomposition& d) {
  return json{{"schema", kSchemaTag},
              {"kind", "rankdec"},
              {"width", d.width},
              {"leaf_order", d.leaf_order}};
}

inline CaterpillarDecomposition rankdec_from_json(const json& j) {
  CaterpillarDecomposition d;
  d.width = j.value("width", 0);
  d.leaf_order = j.at("leaf_order").get<std::vector<int>>();
  return d;
}

inline json sweep_report_to_json(const SweepReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json arcs = json::array();
    for (const auto& [a, b] : v.arcs) arcs.push_back(json::array({a, b}));
    violations.push_back(
        {{"property", v.property}, {"n", v.n}, {"arcs", arcs}, {"observed", v.observed}});
  }
  json extremal = json::object();
  for (const auto& [id, w] : r.extremal) {
    json arcs = json::array();
    for (const auto& [a, b] : w.arcs) arcs.push_back(json::array({a, b}));
    extremal[id] = {{"slack", w.slack}, {"n", w.n}, {"arcs", arcs}, {"observed", w.observed}};
  }
  return json{{"schema", kSchemaTag},       {"suite", r.suite},
              {"n", r.n},                   {"up_to_iso", r.up_to_iso},
              {"instances_checked", r.instances_checked},
              {"violations", violations},   {"extremal", extremal},
              {"notes", r.notes}};
}

}  // namespace diwidth
