#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "diwidth/digraph.hpp"
#include "diwidth/util.hpp"

namespace diwidth {

// Linear width expressions build a graph one vertex at a time, so the AST is
// a chain and is stored as a flat op sequence in evaluation order. Labels are
// 1-based values in [1..k]. Vertex-creating ops may carry the id the vertex
// should receive in the evaluated graph; -1 means "use the insertion index".

struct NlcOp {
  enum class Kind { Leaf, Join, Relabel };
  Kind kind = Kind::Leaf;
  int label = 0;
  int vertex = -1;
  // Join: arcs (u, new) for (lab(u), label) in fwd, (new, u) for (label, lab(u)) in bwd.
  std::vector<std::pair<int, int>> fwd, bwd;
  // Relabel: map[a-1] is the image of label a.
  std::vector<int> map;
};

struct NlcExpr {
  int k = 0;
  std::vector<NlcOp> ops;
};

struct CwOp {
  enum class Kind { Leaf, Union, AddArcs, Relabel };
  Kind kind = Kind::Leaf;
  int label = 0;
  int vertex = -1;
  int from = 0, to = 0;  // AddArcs: arcs from all `from`-labeled to all `to`-labeled; Relabel: from -> to
};

struct CwExpr {
  int k = 0;
  std::vector<CwOp> ops;
};

// Undirected counterparts: one relation per join, edge insertion per label pair.
struct UNlcOp {
  enum class Kind { Leaf, Join, Relabel };
  Kind kind = Kind::Leaf;
  int label = 0;
  int vertex = -1;
  std::vector<std::pair<int, int>> rel;  // edges {u, new} for (lab(u), label) in rel
  std::vector<int> map;
};

struct UNlcExpr {
  int k = 0;
  std::vector<UNlcOp> ops;
};

struct UCwOp {
  enum class Kind { Leaf, Union, AddEdges, Relabel };
  Kind kind = Kind::Leaf;
  int label = 0;
  int vertex = -1;
  int from = 0, to = 0;
};

struct UCwExpr {
  int k = 0;
  std::vector<UCwOp> ops;
};

struct LabeledDigraph {
  Digraph digraph;
  std::vector<int> labels;  // by vertex id
};

struct LabeledGraph {
  UndirectedGraph graph;
  std::vector<int> labels;
};

namespace detail {

inline void check_label(int a, int k, const char* where) {
  if (a < 1 || a > k) throw input_error(std::string(where) + ": label " + std::to_string(a) +
                                        " outside [1.." + std::to_string(k) + "]");
}

inline void check_rel(const std::vector<std::pair<int, int>>& rel, int k, const char* where) {
  for (const auto& [a, b] : rel) {
    check_label(a, k, where);
    check_label(b, k, where);
  }
}

// Resolves the vertex ids of the creation ops: either all explicit and a
// permutation of 0..n-1, or all defaulted to the insertion index.
inline std::vector<int> resolve_vertex_ids(const std::vector<int>& given, const char* where) {
  const int n = static_cast<int>(given.size());
  std::vector<int> ids(n);
  bool any_explicit = false, any_default = false;
  for (int i = 0; i < n; ++i) (given[i] < 0 ? any_default : any_explicit) = true;
  if (any_explicit && any_default)
    throw input_error(std::string(where) + ": mixed explicit and defaulted vertex ids");
  if (any_explicit) {
    VertexMask seen = 0;
    for (int i = 0; i < n; ++i) {
      int v = given[i];
      if (v < 0 || v >= n || (seen & vertex_bit(v)))
        throw input_error(std::string(where) + ": vertex ids must form 0..n-1");
      seen |= vertex_bit(v);
      ids[i] = v;
    }
  } else {
    for (int i = 0; i < n; ++i) ids[i] = i;
  }
  return ids;
}

}  // namespace detail

inline LabeledDigraph eval_nlc(const NlcExpr& x) {
  const int k = x.k;
  std::vector<int> given;
  for (const auto& op : x.ops)
    if (op.kind != NlcOp::Kind::Relabel) given.push_back(op.vertex);
  std::vector<int> ids = detail::resolve_vertex_ids(given, "eval_nlc");
  const int n = static_cast<int>(ids.size());
  if (n > 0 && k < 1) throw input_error("eval_nlc: k must be >= 1 for a nonempty expression");

  LabeledDigraph out;
  out.digraph = Digraph(n);
  out.labels.assign(n, 0);
  std::vector<int> placed;  // vertex ids in insertion order
  int next = 0;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case NlcOp::Kind::Leaf: {
        if (!placed.empty()) throw input_error("eval_nlc: leaf after the first vertex");
        detail::check_label(op.label, k, "eval_nlc");
        out.labels[ids[next]] = op.label;
        placed.push_back(ids[next++]);
        break;
      }
      case NlcOp::Kind::Join: {
        if (placed.empty()) throw input_error("eval_nlc: join before any leaf");
        detail::check_label(op.label, k, "eval_nlc");
        detail::check_rel(op.fwd, k, "eval_nlc");
        detail::check_rel(op.bwd, k, "eval_nlc");
        const int v = ids[next++];
        const int a = op.label;
        for (int u : placed) {
          for (const auto& [b, c] : op.fwd)
            if (b == out.labels[u] && c == a && !out.digraph.has_arc(u, v))
              out.digraph.add_arc(u, v);
          for (const auto& [b, c] : op.bwd)
            if (b == a && c == out.labels[u] && !out.digraph.has_arc(v, u))
              out.digraph.add_arc(v, u);
        }
        out.labels[v] = a;
        placed.push_back(v);
        break;
      }
      case NlcOp::Kind::Relabel: {
        if (static_cast<int>(op.map.size()) != k)
          throw input_error("eval_nlc: relabel map must cover all k labels");
        for (int img : op.map) detail::check_label(img, k, "eval_nlc");
        for (int u : placed) out.labels[u] = op.map[out.labels[u] - 1];
        break;
      }
    }
  }
  return out;
}

inline LabeledDigraph eval_cw(const CwExpr& x) {
  const int k = x.k;
  std::vector<int> given;
  for (const auto& op : x.ops)
    if (op.kind == CwOp::Kind::Leaf || op.kind == CwOp::Kind::Union) given.push_back(op.vertex);
  std::vector<int> ids = detail::resolve_vertex_ids(given, "eval_cw");
  const int n = static_cast<int>(ids.size());
  if (n > 0 && k < 1) throw input_error("eval_cw: k must be >= 1 for a nonempty expression");

  LabeledDigraph out;
  out.digraph = Digraph(n);
  out.labels.assign(n, 0);
  std::vector<int> placed;
  int next = 0;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case CwOp::Kind::Leaf:
      case CwOp::Kind::Union: {
        if (op.kind == CwOp::Kind::Leaf && !placed.empty())
          throw input_error("eval_cw: leaf after the first vertex");
        if (op.kind == CwOp::Kind::Union && placed.empty())
          throw input_error("eval_cw: union before any leaf");
        detail::check_label(op.label, k, "eval_cw");
        out.labels[ids[next]] = op.label;
        placed.push_back(ids[next++]);
        break;
      }
      case CwOp::Kind::AddArcs: {
        detail::check_label(op.from, k, "eval_cw");
        detail::check_label(op.to, k, "eval_cw");
        if (op.from == op.to) throw input_error("eval_cw: arc insertion needs two distinct labels");
        for (int u : placed)
          for (int v : placed)
            if (out.labels[u] == op.from && out.labels[v] == op.to && u != v &&
                !out.digraph.has_arc(u, v))
              out.digraph.add_arc(u, v);
        break;
      }
      case CwOp::Kind::Relabel: {
        detail::check_label(op.from, k, "eval_cw");
        detail::check_label(op.to, k, "eval_cw");
        for (int u : placed)
          if (out.labels[u] == op.from) out.labels[u] = op.to;
        break;
      }
    }
  }
  return out;
}

inline LabeledGraph eval_nlc_u(const UNlcExpr& x) {
  const int k = x.k;
  std::vector<int> given;
  for (const auto& op : x.ops)
    if (op.kind != UNlcOp::Kind::Relabel) given.push_back(op.vertex);
  std::vector<int> ids = detail::resolve_vertex_ids(given, "eval_nlc_u");
  const int n = static_cast<int>(ids.size());
  if (n > 0 && k < 1) throw input_error("eval_nlc_u: k must be >= 1 for a nonempty expression");

  LabeledGraph out;
  out.graph = UndirectedGraph(n);
  out.labels.assign(n, 0);
  std::vector<int> placed;
  int next = 0;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case UNlcOp::Kind::Leaf: {
        if (!placed.empty()) throw input_error("eval_nlc_u: leaf after the first vertex");
        detail::check_label(op.label, k, "eval_nlc_u");
        out.labels[ids[next]] = op.label;
        placed.push_back(ids[next++]);
        break;
      }
      case UNlcOp::Kind::Join: {
        if (placed.empty()) throw input_error("eval_nlc_u: join before any leaf");
        detail::check_label(op.label, k, "eval_nlc_u");
        detail::check_rel(op.rel, k, "eval_nlc_u");
        const int v = ids[next++];
        for (int u : placed)
          for (const auto& [b, c] : op.rel)
            if (b == out.labels[u] && c == op.label && !out.graph.has_edge(u, v))
              out.graph.add_edge(u, v);
        out.labels[v] = op.label;
        placed.push_back(v);
        break;
      }
      case UNlcOp::Kind::Relabel: {
        if (static_cast<int>(op.map.size()) != k)
          throw input_error("eval_nlc_u: relabel map must cover all k labels");
        for (int img : op.map) detail::check_label(img, k, "eval_nlc_u");
        for (int u : placed) out.labels[u] = op.map[out.labels[u] - 1];
        break;
      }
    }
  }
  return out;
}

inline LabeledGraph eval_cw_u(const UCwExpr& x) {
  const int k = x.k;
  std::vector<int> given;
  for (const auto& op : x.ops)
    if (op.kind == UCwOp::Kind::Leaf || op.kind == UCwOp::Kind::Union) given.push_back(op.vertex);
  std::vector<int> ids = detail::resolve_vertex_ids(given, "eval_cw_u");
  const int n = static_cast<int>(ids.size());
  if (n > 0 && k < 1) throw input_error("eval_cw_u: k must be >= 1 for a nonempty expression");

  LabeledGraph out;
  out.graph = UndirectedGraph(n);
  out.labels.assign(n, 0);
  std::vector<int> placed;
  int next = 0;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case UCwOp::Kind::Leaf:
      case UCwOp::Kind::Union: {
        if (op.kind == UCwOp::Kind::Leaf && !placed.empty())
          throw input_error("eval_cw_u: leaf after the first vertex");
        if (op.kind == UCwOp::Kind::Union && placed.empty())
          throw input_error("eval_cw_u: union before any leaf");
        detail::check_label(op.label, k, "eval_cw_u");
        out.labels[ids[next]] = op.label;
        placed.push_back(ids[next++]);
        break;
      }
      case UCwOp::Kind::AddEdges: {
        detail::check_label(op.from, k, "eval_cw_u");
        detail::check_label(op.to, k, "eval_cw_u");
        if (op.from == op.to) throw input_error("eval_cw_u: edge insertion needs two distinct labels");
        for (int u : placed)
          for (int v : placed)
            if (u != v && out.labels[u] == op.from && out.labels[v] == op.to &&
                !out.graph.has_edge(u, v))
              out.graph.add_edge(u, v);
        break;
      }
      case UCwOp::Kind::Relabel: {
        detail::check_label(op.from, k, "eval_cw_u");
        detail::check_label(op.to, k, "eval_cw_u");
        for (int u : placed)
          if (out.labels[u] == op.from) out.labels[u] = op.to;
        break;
      }
    }
  }
  return out;
}

namespace detail {

// Realizes an arbitrary label map with single-pair relabel steps, routing
// cycles through a spare label. A step x -> y is only applied once y has no
// pending outgoing move, so classes never travel further than their image;
// when no step qualifies, the remaining moves all lead into cycles, and a
// label sitting on a cycle is parked on the spare to open one up. The spare
// always drains again before the next cycle is reached.
template <typename EmitRho>
void realize_label_map(const std::vector<int>& map, int k, int spare, EmitRho&& emit) {
  std::vector<int> target(spare + 1, 0);  // 0 = no pending move
  for (int a = 1; a <= k; ++a)
    if (map[a - 1] != a) target[a] = map[a - 1];
  while (true) {
    int x = 0;
    for (int s = 1; s <= spare && x == 0; ++s)
      if (target[s] != 0 && target[target[s]] == 0) x = s;
    if (x != 0) {
      emit(x, target[x]);
      target[x] = 0;
      continue;
    }
    int start = 0;
    for (int s = 1; s <= spare && start == 0; ++s)
      if (target[s] != 0) start = s;
    if (start == 0) break;
    // every pending target has an outgoing move, so this walk ends on a cycle
    std::vector<char> seen(spare + 1, 0);
    int c = start;
    while (!seen[c]) {
      seen[c] = 1;
      c = target[c];
    }
    emit(c, spare);
    target[spare] = target[c];
    target[c] = 0;
  }
}

}  // namespace detail

// Simulates each join step with a parked spare label: insert the vertex
// with label k+1, draw its arcs label class by label class, then fold it
// onto its real label. Uses at most k+1 labels.
inline CwExpr nlc_to_cw(const NlcExpr& x) {
  const int k = x.k;
  const int spare = k + 1;
  CwExpr out;
  out.k = x.ops.empty() ? 0 : spare;
  bool first = true;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case NlcOp::Kind::Leaf:
      case NlcOp::Kind::Join: {
        detail::check_label(op.label, k, "nlc_to_cw");
        if (first) {
          out.ops.push_back({CwOp::Kind::Leaf, op.label, op.vertex, 0, 0});
          first = false;
          break;
        }
        out.ops.push_back({CwOp::Kind::Union, spare, op.vertex, 0, 0});
        std::vector<int> into, from;
        for (const auto& [b, c] : op.fwd)
          if (c == op.label) into.push_back(b);
        for (const auto& [b, c] : op.bwd)
          if (b == op.label) from.push_back(c);
        std::sort(into.begin(), into.end());
        into.erase(std::unique(into.begin(), into.end()), into.end());
        std::sort(from.begin(), from.end());
        from.erase(std::unique(from.begin(), from.end()), from.end());
        for (int b : into) out.ops.push_back({CwOp::Kind::AddArcs, 0, -1, b, spare});
        for (int c : from) out.ops.push_back({CwOp::Kind::AddArcs, 0, -1, spare, c});
        out.ops.push_back({CwOp::Kind::Relabel, 0, -1, spare, op.label});
        break;
      }
      case NlcOp::Kind::Relabel: {
        detail::realize_label_map(op.map, k, spare, [&](int a, int b) {
          out.ops.push_back({CwOp::Kind::Relabel, 0, -1, a, b});
        });
        break;
      }
    }
  }
  return out;
}

// Folds every arc insertion into the join of the arc's later endpoint. Needs
// the evaluated digraph to know which arcs each new vertex eventually gets;
// vertices sharing a label when v arrives are treated identically by every
// later op, so the relation below is well defined.
inline NlcExpr cw_to_nlc(const CwExpr& x) {
  LabeledDigraph value = eval_cw(x);
  const Digraph& g = value.digraph;
  const int k = x.k;

  NlcExpr out;
  out.k = x.ops.empty() ? 0 : k;
  std::vector<int> ids;
  for (const auto& op : x.ops)
    if (op.kind == CwOp::Kind::Leaf || op.kind == CwOp::Kind::Union) ids.push_back(op.vertex);
  ids = detail::resolve_vertex_ids(ids, "cw_to_nlc");

  std::vector<int> placed, labels(g.vertex_count(), 0);
  int next = 0;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case CwOp::Kind::Leaf:
      case CwOp::Kind::Union: {
        const int v = ids[next++];
        NlcOp j;
        j.kind = placed.empty() ? NlcOp::Kind::Leaf : NlcOp::Kind::Join;
        j.label = op.label;
        j.vertex = op.vertex;
        for (int u : placed) {
          if (g.has_arc(u, v)) j.fwd.emplace_back(labels[u], op.label);
          if (g.has_arc(v, u)) j.bwd.emplace_back(op.label, labels[u]);
        }
        std::sort(j.fwd.begin(), j.fwd.end());
        j.fwd.erase(std::unique(j.fwd.begin(), j.fwd.end()), j.fwd.end());
        std::sort(j.bwd.begin(), j.bwd.end());
        j.bwd.erase(std::unique(j.bwd.begin(), j.bwd.end()), j.bwd.end());
        out.ops.push_back(std::move(j));
        labels[v] = op.label;
        placed.push_back(v);
        break;
      }
      case CwOp::Kind::AddArcs:
        break;  // already folded into the joins
      case CwOp::Kind::Relabel: {
        NlcOp r;
        r.kind = NlcOp::Kind::Relabel;
        r.map.resize(k);
        for (int a = 1; a <= k; ++a) r.map[a - 1] = (a == op.from) ? op.to : a;
        out.ops.push_back(std::move(r));
        for (int u : placed)
          if (labels[u] == op.from) labels[u] = op.to;
        break;
      }
    }
  }
  return out;
}

// Forgetting directions keeps the shape of the expression: a join fires on
// the union of its two relations, arc insertions become edge insertions.
inline UNlcExpr drop_directions(const NlcExpr& x) {
  UNlcExpr out;
  out.k = x.k;
  for (const auto& op : x.ops) {
    UNlcOp o;
    o.label = op.label;
    o.vertex = op.vertex;
    switch (op.kind) {
      case NlcOp::Kind::Leaf: o.kind = UNlcOp::Kind::Leaf; break;
      case NlcOp::Kind::Join: {
        o.kind = UNlcOp::Kind::Join;
        o.rel = op.fwd;
        for (const auto& [a, b] : op.bwd) o.rel.emplace_back(b, a);
        std::sort(o.rel.begin(), o.rel.end());
        o.rel.erase(std::unique(o.rel.begin(), o.rel.end()), o.rel.end());
        break;
      }
      case NlcOp::Kind::Relabel:
        o.kind = UNlcOp::Kind::Relabel;
        o.map = op.map;
        break;
    }
    out.ops.push_back(std::move(o));
  }
  return out;
}

inline UCwExpr drop_directions(const CwExpr& x) {
  UCwExpr out;
  out.k = x.k;
  for (const auto& op : x.ops) {
    UCwOp o;
    o.label = op.label;
    o.vertex = op.vertex;
    o.from = op.from;
    o.to = op.to;
    switch (op.kind) {
      case CwOp::Kind::Leaf: o.kind = UCwOp::Kind::Leaf; break;
      case CwOp::Kind::Union: o.kind = UCwOp::Kind::Union; break;
      case CwOp::Kind::AddArcs: o.kind = UCwOp::Kind::AddEdges; break;
      case CwOp::Kind::Relabel: o.kind = UCwOp::Kind::Relabel; break;
    }
    out.ops.push_back(o);
  }
  return out;
}

// Complete biorientation of the expression's graph: joins fire in both
// directions, each edge insertion becomes the two opposite arc insertions.
inline NlcExpr biorient(const UNlcExpr& x) {
  NlcExpr out;
  out.k = x.k;
  for (const auto& op : x.ops) {
    NlcOp o;
    o.label = op.label;
    o.vertex = op.vertex;
    switch (op.kind) {
      case UNlcOp::Kind::Leaf: o.kind = NlcOp::Kind::Leaf; break;
      case UNlcOp::Kind::Join: {
        o.kind = NlcOp::Kind::Join;
        o.fwd = op.rel;
        for (const auto& [a, b] : op.rel) o.bwd.emplace_back(b, a);
        break;
      }
      case UNlcOp::Kind::Relabel:
        o.kind = NlcOp::Kind::Relabel;
        o.map = op.map;
        break;
    }
    out.ops.push_back(std::move(o));
  }
  return out;
}

inline CwExpr biorient(const UCwExpr& x) {
  CwExpr out;
  out.k = x.k;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case UCwOp::Kind::Leaf:
        out.ops.push_back({CwOp::Kind::Leaf, op.label, op.vertex, 0, 0});
        break;
      case UCwOp::Kind::Union:
        out.ops.push_back({CwOp::Kind::Union, op.label, op.vertex, 0, 0});
        break;
      case UCwOp::Kind::AddEdges:
        out.ops.push_back({CwOp::Kind::AddArcs, 0, -1, op.from, op.to});
        out.ops.push_back({CwOp::Kind::AddArcs, 0, -1, op.to, op.from});
        break;
      case UCwOp::Kind::Relabel:
        out.ops.push_back({CwOp::Kind::Relabel, 0, -1, op.from, op.to});
        break;
    }
  }
  return out;
}

// Number of labels an expression actually touches.
inline int labels_used(const NlcExpr& x) {
  int hi = 0;
  for (const auto& op : x.ops) {
    hi = std::max(hi, op.label);
    for (const auto& [a, b] : op.fwd) hi = std::max({hi, a, b});
    for (const auto& [a, b] : op.bwd) hi = std::max({hi, a, b});
    for (int img : op.map) hi = std::max(hi, img);
  }
  return hi;
}

inline int labels_used(const CwExpr& x) {
  int hi = 0;
  for (const auto& op : x.ops) hi = std::max({hi, op.label, op.from, op.to});
  return hi;
}

}  // namespace diwidth
