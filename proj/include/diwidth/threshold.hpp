#pragma once

#include <string>
#include <vector>

#include "diwidth/digraph.hpp"
#include "diwidth/expressions.hpp"

namespace diwidth {

// Build steps for directed threshold graphs. Each step adds one vertex that
// is isolated, a universal sink, a universal source, or bidirectionally
// joined to everything built so far. The first entry creates the starting
// vertex; its kind carries no arcs.
enum class ThresholdOp { Isolated, Sink, Source, Series };

inline const char* to_string(ThresholdOp op) {
  switch (op) {
    case ThresholdOp::Isolated: return "isolated";
    case ThresholdOp::Sink: return "sink";
    case ThresholdOp::Source: return "source";
    case ThresholdOp::Series: return "series";
  }
  return "?";
}

inline bool threshold_op_from_string(const std::string& s, ThresholdOp& out) {
  for (ThresholdOp op :
       {ThresholdOp::Isolated, ThresholdOp::Sink, ThresholdOp::Source, ThresholdOp::Series}) {
    if (s == to_string(op)) {
      out = op;
      return true;
    }
  }
  return false;
}

struct ThresholdBuildSequence {
  std::vector<ThresholdOp> ops;
  std::vector<int> vertices;  // vertex id created per op; empty = 0..n-1

  int size() const { return static_cast<int>(ops.size()); }
};

inline Digraph eval_threshold(const ThresholdBuildSequence& seq) {
  const int n = seq.size();
  if (n == 0) throw input_error("eval_threshold: empty build sequence");
  std::vector<int> given = seq.vertices;
  if (given.empty()) given.assign(n, -1);
  if (static_cast<int>(given.size()) != n)
    throw input_error("eval_threshold: vertex list does not match op count");
  std::vector<int> ids = detail::resolve_vertex_ids(given, "eval_threshold");

  Digraph g(n);
  VertexMask placed = 0;
  for (int i = 0; i < n; ++i) {
    const int v = ids[i];
    if (i > 0) {
      switch (seq.ops[i]) {
        case ThresholdOp::Isolated:
          break;
        case ThresholdOp::Sink:
          for (int u : bits(placed)) g.add_arc(u, v);
          break;
        case ThresholdOp::Source:
          for (int u : bits(placed)) g.add_arc(v, u);
          break;
        case ThresholdOp::Series:
          for (int u : bits(placed)) {
            g.add_arc(u, v);
            g.add_arc(v, u);
          }
          break;
      }
    }
    placed |= vertex_bit(v);
  }
  return g;
}

struct ThresholdRecognition {
  bool is_threshold = false;
  ThresholdBuildSequence sequence;  // set on success; eval gives the input back
  VertexMask residual = 0;          // on failure: stuck induced subdigraph
};

// Greedy peeling: repeatedly remove the smallest vertex that is isolated,
// universal sink, universal source, or universal bidirectional within the
//残り set. If any peel order succeeds the greedy one does too; the unit
// tests cross-check that against a full search over peel orders.
inline ThresholdRecognition recognize_threshold(const Digraph& g, bool oriented_only = false) {
  const int n = g.vertex_count();
  if (n == 0) throw input_error("recognize_threshold: empty digraph");
  VertexMask alive = g.vertex_mask();
  std::vector<int> peeled;
  std::vector<ThresholdOp> kinds;
  while (popcount(alive) > 1) {
    int found = -1;
    ThresholdOp kind = ThresholdOp::Isolated;
    for (int v : bits(alive)) {
      const VertexMask others = alive & ~vertex_bit(v);
      const VertexMask in = g.in_mask(v) & others, out = g.out_mask(v) & others;
      if (in == 0 && out == 0) kind = ThresholdOp::Isolated;
      else if (in == others && out == 0) kind = ThresholdOp::Sink;
      else if (out == others && in == 0) kind = ThresholdOp::Source;
      else if (in == others && out == others && !oriented_only) kind = ThresholdOp::Series;
      else continue;
      found = v;
      break;
    }
    if (found < 0) {
      ThresholdRecognition r;
      r.residual = alive;
      return r;
    }
    peeled.push_back(found);
    kinds.push_back(kind);
    alive &= ~vertex_bit(found);
  }

  ThresholdRecognition r;
  r.is_threshold = true;
  r.sequence.ops.push_back(ThresholdOp::Isolated);
  r.sequence.vertices.push_back(std::countr_zero(alive));
  for (int i = static_cast<int>(peeled.size()) - 1; i >= 0; --i) {
    r.sequence.ops.push_back(kinds[i]);
    r.sequence.vertices.push_back(peeled[i]);
  }
  return r;
}

// One label suffices for threshold graphs: each build step turns into a join
// whose relations mirror the step kind.
inline NlcExpr threshold_to_nlc1(const ThresholdBuildSequence& seq) {
  const int n = seq.size();
  if (n == 0) throw input_error("threshold_to_nlc1: empty build sequence");
  NlcExpr x;
  x.k = 1;
  for (int i = 0; i < n; ++i) {
    NlcOp op;
    op.label = 1;
    op.vertex = seq.vertices.empty() ? -1 : seq.vertices[i];
    if (i == 0) {
      op.kind = NlcOp::Kind::Leaf;
    } else {
      op.kind = NlcOp::Kind::Join;
      switch (seq.ops[i]) {
        case ThresholdOp::Isolated: break;
        case ThresholdOp::Sink: op.fwd = {{1, 1}}; break;
        case ThresholdOp::Source: op.bwd = {{1, 1}}; break;
        case ThresholdOp::Series:
          op.fwd = {{1, 1}};
          op.bwd = {{1, 1}};
          break;
      }
    }
    x.ops.push_back(std::move(op));
  }
  return x;
}

inline ThresholdBuildSequence nlc1_to_threshold(const NlcExpr& x) {
  if (labels_used(x) > 1) throw input_error("nlc1_to_threshold: expression uses more than one label");
  ThresholdBuildSequence seq;
  for (const auto& op : x.ops) {
    switch (op.kind) {
      case NlcOp::Kind::Relabel:
        break;  // [1] -> [1] maps are identities
      case NlcOp::Kind::Leaf:
        seq.ops.push_back(ThresholdOp::Isolated);
        seq.vertices.push_back(op.vertex);
        break;
      case NlcOp::Kind::Join: {
        const bool fwd = !op.fwd.empty(), bwd = !op.bwd.empty();
        ThresholdOp kind = fwd ? (bwd ? ThresholdOp::Series : ThresholdOp::Sink)
                               : (bwd ? ThresholdOp::Source : ThresholdOp::Isolated);
        seq.ops.push_back(kind);
        seq.vertices.push_back(op.vertex);
        break;
      }
    }
  }
  if (seq.ops.empty()) throw input_error("nlc1_to_threshold: empty expression");
  bool any_explicit = false;
  for (int v : seq.vertices) any_explicit |= v >= 0;
  if (!any_explicit) seq.vertices.clear();
  return seq;
}

}  // namespace diwidth
