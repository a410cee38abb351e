#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "diwidth/expressions.hpp"
#include "diwidth/solve.hpp"

namespace diwidth {

struct SearchOptions {
  int max_n = 10;
};

struct NlcSearchResult {
  int value = 0;
  NlcExpr witness;
};

struct CwSearchResult {
  int value = 0;
  CwExpr witness;
};

struct UNlcSearchResult {
  int value = 0;
  UNlcExpr witness;
};

struct UCwSearchResult {
  int value = 0;
  UCwExpr witness;
};

namespace detail {

// The searchers below work on canonical label-class states. Two vertices may
// share a label only if every later step treats them identically, which pins
// their adjacency towards the not-yet-inserted vertices ("future signature").
// The directed/undirected cases differ only in the signature type, the arc
// predicates, and the emitted op kinds, captured by these model structs.

struct DirectedModel {
  using Graph = Digraph;
  using NlcExprT = NlcExpr;
  using CwExprT = CwExpr;

  struct Sig {
    VertexMask out = 0, in = 0;
    bool operator==(const Sig&) const = default;
    bool operator<(const Sig& o) const { return out != o.out ? out < o.out : in < o.in; }
  };

  static Sig sig(const Graph& g, int v, VertexMask future) {
    return {g.out_mask(v) & future, g.in_mask(v) & future};
  }
  static bool any_adjacent(const Graph& g, int v, VertexMask s) {
    return ((g.out_mask(v) | g.in_mask(v)) & s) != 0;
  }
  // v's arcs towards the class are all-or-none in each direction
  static bool class_respecting(const Graph& g, int v, VertexMask cls) {
    VertexMask o = g.out_mask(v) & cls, i = g.in_mask(v) & cls;
    return (o == 0 || o == cls) && (i == 0 || i == cls);
  }
  static bool complete_from_to(const Graph& g, VertexMask a, VertexMask b) {
    for (int u : bits(a))
      if ((g.out_mask(u) & b) != b) return false;
    return true;
  }
  // arc insertions needed for v (with class c around it) towards class d
  static bool needs_out(const Graph& g, int v, VertexMask d) { return (g.out_mask(v) & d) != 0; }
  static bool needs_in(const Graph& g, int v, VertexMask d) { return (g.in_mask(v) & d) != 0; }
  // can v's arcs towards class d be drawn when v sits inside class c?
  static bool join_arcs_ok(const Graph& g, int v, VertexMask c, VertexMask d) {
    VertexMask o = g.out_mask(v) & d;
    if (o != 0 && (o != d || !complete_from_to(g, c, d))) return false;
    VertexMask i = g.in_mask(v) & d;
    if (i != 0 && (i != d || !complete_from_to(g, d, c))) return false;
    return true;
  }

  static void emit_nlc_vertex(NlcExprT& e, const Graph& g, int v, int label,
                              const std::vector<std::pair<VertexMask, int>>& classes, bool first) {
    NlcOp op;
    op.kind = first ? NlcOp::Kind::Leaf : NlcOp::Kind::Join;
    op.label = label;
    op.vertex = v;
    for (const auto& [mask, lab] : classes) {
      int rep = std::countr_zero(mask);
      if (g.has_arc(rep, v)) op.fwd.emplace_back(lab, label);
      if (g.has_arc(v, rep)) op.bwd.emplace_back(label, lab);
    }
    e.ops.push_back(std::move(op));
  }
  static void emit_nlc_relabel(NlcExprT& e, const std::vector<int>& map) {
    NlcOp op;
    op.kind = NlcOp::Kind::Relabel;
    op.map = map;
    e.ops.push_back(std::move(op));
  }

  static void emit_cw_vertex(CwExprT& e, int v, int label, bool first) {
    e.ops.push_back({first ? CwOp::Kind::Leaf : CwOp::Kind::Union, label, v, 0, 0});
  }
  static void emit_cw_arcs(CwExprT& e, const Graph& g, int v, int vlabel,
                           const std::vector<std::pair<VertexMask, int>>& others) {
    for (const auto& [mask, lab] : others) {
      if (needs_out(g, v, mask)) e.ops.push_back({CwOp::Kind::AddArcs, 0, -1, vlabel, lab});
      if (needs_in(g, v, mask)) e.ops.push_back({CwOp::Kind::AddArcs, 0, -1, lab, vlabel});
    }
  }
  static void emit_cw_relabel(CwExprT& e, int from, int to) {
    e.ops.push_back({CwOp::Kind::Relabel, 0, -1, from, to});
  }
};

struct UndirectedModel {
  using Graph = UndirectedGraph;
  using NlcExprT = UNlcExpr;
  using CwExprT = UCwExpr;

  struct Sig {
    VertexMask adj = 0;
    bool operator==(const Sig&) const = default;
    bool operator<(const Sig& o) const { return adj < o.adj; }
  };

  static Sig sig(const Graph& g, int v, VertexMask future) { return {g.adj_mask(v) & future}; }
  static bool any_adjacent(const Graph& g, int v, VertexMask s) { return (g.adj_mask(v) & s) != 0; }
  static bool class_respecting(const Graph& g, int v, VertexMask cls) {
    VertexMask a = g.adj_mask(v) & cls;
    return a == 0 || a == cls;
  }
  static bool complete_from_to(const Graph& g, VertexMask a, VertexMask b) {
    for (int u : bits(a))
      if ((g.adj_mask(u) & b) != b) return false;
    return true;
  }
  static bool needs_out(const Graph& g, int v, VertexMask d) { return (g.adj_mask(v) & d) != 0; }
  static bool needs_in(const Graph&, int, VertexMask) { return false; }
  static bool join_arcs_ok(const Graph& g, int v, VertexMask c, VertexMask d) {
    VertexMask a = g.adj_mask(v) & d;
    if (a != 0 && (a != d || !complete_from_to(g, c, d))) return false;
    return true;
  }

  static void emit_nlc_vertex(NlcExprT& e, const Graph& g, int v, int label,
                              const std::vector<std::pair<VertexMask, int>>& classes, bool first) {
    UNlcOp op;
    op.kind = first ? UNlcOp::Kind::Leaf : UNlcOp::Kind::Join;
    op.label = label;
    op.vertex = v;
    for (const auto& [mask, lab] : classes) {
      int rep = std::countr_zero(mask);
      if (g.has_edge(rep, v)) op.rel.emplace_back(lab, label);
    }
    e.ops.push_back(std::move(op));
  }
  static void emit_nlc_relabel(NlcExprT& e, const std::vector<int>& map) {
    UNlcOp op;
    op.kind = UNlcOp::Kind::Relabel;
    op.map = map;
    e.ops.push_back(std::move(op));
  }

  static void emit_cw_vertex(CwExprT& e, int v, int label, bool first) {
    e.ops.push_back({first ? UCwOp::Kind::Leaf : UCwOp::Kind::Union, label, v, 0, 0});
  }
  static void emit_cw_arcs(CwExprT& e, const Graph& g, int v, int vlabel,
                           const std::vector<std::pair<VertexMask, int>>& others) {
    for (const auto& [mask, lab] : others)
      if (needs_out(g, v, mask)) e.ops.push_back({UCwOp::Kind::AddEdges, 0, -1, vlabel, lab});
  }
  static void emit_cw_relabel(CwExprT& e, int from, int to) {
    e.ops.push_back({UCwOp::Kind::Relabel, 0, -1, from, to});
  }
};

// ---- linear NLC feasibility ------------------------------------------------
//
// After collapsing interchangeable labels, a reachable search state is fully
// described by the set P of inserted vertices: the coarsest valid labeling
// groups P by future signature. Inserting v is possible iff the groups are
// not yet exhausted (fresh label) or some inserted vertex will from now on be
// indistinguishable from v (v shares its label).

template <typename Model>
int future_class_count(const typename Model::Graph& g, VertexMask p, VertexMask all) {
  const VertexMask future = all & ~p;
  std::vector<typename Model::Sig> sigs;
  for (int u : bits(p)) sigs.push_back(Model::sig(g, u, future));
  std::sort(sigs.begin(), sigs.end());
  sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
  return static_cast<int>(sigs.size());
}

template <typename Model>
bool nlc_transition_allowed(const typename Model::Graph& g, VertexMask p, int v, int classes,
                            int k, VertexMask all) {
  if (classes < k) return true;
  const VertexMask future = all & ~p & ~vertex_bit(v);
  const auto sv = Model::sig(g, v, future);
  for (int u : bits(p))
    if (Model::sig(g, u, future) == sv) return true;
  return false;
}

template <typename Model>
bool nlc_feasible(const typename Model::Graph& g, int k, std::vector<int>* order_out) {
  const int n = g.vertex_count();
  if (n == 0) {
    if (order_out) order_out->clear();
    return true;
  }
  if (k < 1) return false;
  const VertexMask all = full_mask(n);
  const size_t size = size_t{1} << n;

  std::vector<char> reach(size, 0);
  reach[0] = 1;
  for (VertexMask p = 0; p < all; ++p) {
    if (!reach[p]) continue;
    const int classes = future_class_count<Model>(g, p, all);
    for (int v : bits(all & ~p))
      if (nlc_transition_allowed<Model>(g, p, v, classes, k, all)) reach[p | vertex_bit(v)] = 1;
  }
  if (!reach[all]) return false;
  if (!order_out) return true;

  // lexicographically least insertion order: greedy over co-viable states
  std::vector<char> viable(size, 0);
  viable[all] = 1;
  for (VertexMask p = all; p-- > 0;) {
    const int classes = future_class_count<Model>(g, p, all);
    for (int v : bits(all & ~p))
      if (viable[p | vertex_bit(v)] && nlc_transition_allowed<Model>(g, p, v, classes, k, all)) {
        viable[p] = 1;
        break;
      }
  }
  order_out->clear();
  VertexMask p = 0;
  for (int step = 0; step < n; ++step) {
    const int classes = future_class_count<Model>(g, p, all);
    for (int v : bits(all & ~p)) {
      if (viable[p | vertex_bit(v)] && nlc_transition_allowed<Model>(g, p, v, classes, k, all)) {
        order_out->push_back(v);
        p |= vertex_bit(v);
        break;
      }
    }
  }
  return true;
}

// Emits a k-label expression inserting the vertices in the given order,
// keeping the label classes maximally merged. Valid whenever each step
// either matches an existing class or has a label to spare.
template <typename Model>
typename Model::NlcExprT emit_nlc(const typename Model::Graph& g, const std::vector<int>& order,
                                  int k) {
  const int n = g.vertex_count();
  typename Model::NlcExprT out;
  out.k = n == 0 ? 0 : k;
  const VertexMask all = full_mask(n);
  std::vector<std::pair<VertexMask, int>> classes;  // (members, label), sorted by label
  std::vector<char> label_free(k + 1, 1);
  VertexMask placed = 0;

  for (int v : order) {
    const VertexMask future_after = all & ~placed & ~vertex_bit(v);
    const auto sv = Model::sig(g, v, future_after);
    int join_index = -1;
    for (size_t i = 0; i < classes.size() && join_index < 0; ++i) {
      int rep = std::countr_zero(classes[i].first);
      if (Model::sig(g, rep, future_after) == sv) join_index = static_cast<int>(i);
    }
    int label = 0;
    if (join_index >= 0) {
      label = classes[join_index].second;
    } else {
      for (int l = 1; l <= k; ++l)
        if (label_free[l]) {
          label = l;
          break;
        }
      if (label == 0) throw capacity_error("emit_nlc: insertion order is not realizable with k labels");
    }
    Model::emit_nlc_vertex(out, g, v, label, classes, placed == 0);
    if (join_index >= 0) {
      classes[join_index].first |= vertex_bit(v);
    } else {
      classes.emplace_back(vertex_bit(v), label);
      label_free[label] = 0;
      std::sort(classes.begin(), classes.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
    }
    placed |= vertex_bit(v);

    // collapse classes that became indistinguishable
    std::vector<int> map(k);
    for (int l = 1; l <= k; ++l) map[l - 1] = l;
    bool changed = false;
    std::vector<std::pair<VertexMask, int>> merged;
    for (const auto& cls : classes) {
      int rep = std::countr_zero(cls.first);
      const auto cs = Model::sig(g, rep, future_after);
      bool absorbed = false;
      for (auto& target : merged) {
        int trep = std::countr_zero(target.first);
        if (Model::sig(g, trep, future_after) == cs) {
          target.first |= cls.first;
          map[cls.second - 1] = target.second;
          label_free[cls.second] = 1;
          changed = true;
          absorbed = true;
          break;
        }
      }
      if (!absorbed) merged.push_back(cls);
    }
    classes = std::move(merged);
    if (changed) Model::emit_nlc_relabel(out, map);
  }
  return out;
}

// ---- linear clique-width feasibility ----------------------------------------
//
// States are partitions of the inserted vertices into at most k label
// classes. Arc insertions are applied as early as possible, which keeps
// every inserted arc realized and removes them from the state: a step is
// valid exactly when the new vertex's arcs can be drawn class by class.

using CwState = std::vector<VertexMask>;

struct CwStateHash {
  size_t operator()(const CwState& s) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexMask m : s) {
      h ^= m;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

struct CwScriptStep {
  enum class Kind { Fresh, Join, Merge };
  Kind kind = Kind::Fresh;
  int v = -1;
  VertexMask a = 0, b = 0;  // Join: a = receiving class; Merge: the two classes
};

template <typename Model>
bool cw_fresh_ok(const typename Model::Graph& g, int v, const CwState& classes) {
  for (VertexMask d : classes)
    if (!Model::class_respecting(g, v, d)) return false;
  return true;
}

template <typename Model>
bool cw_join_ok(const typename Model::Graph& g, int v, const CwState& classes, size_t ci,
                VertexMask all) {
  const VertexMask c = classes[ci];
  if (Model::any_adjacent(g, v, c)) return false;  // same-label arcs can never be drawn
  VertexMask p = vertex_bit(v);
  for (VertexMask m : classes) p |= m;
  const VertexMask future = all & ~p;
  int rep = std::countr_zero(c);
  if (!(Model::sig(g, v, future) == Model::sig(g, rep, future))) return false;
  for (size_t di = 0; di < classes.size(); ++di) {
    if (di == ci) continue;
    if (!Model::join_arcs_ok(g, v, c | vertex_bit(v), classes[di])) return false;
  }
  return true;
}

template <typename Model>
bool cw_merge_ok(const typename Model::Graph& g, const CwState& classes, size_t i, size_t j,
                 VertexMask all) {
  VertexMask p = 0;
  for (VertexMask m : classes) p |= m;
  const VertexMask future = all & ~p;
  int ri = std::countr_zero(classes[i]);
  int rj = std::countr_zero(classes[j]);
  return Model::sig(g, ri, future) == Model::sig(g, rj, future);
}

// Depth-first over (vertex insertions by ascending id, joins before fresh
// labels, then class merges); the first accepting branch under this fixed
// order is the returned witness, so results are deterministic.
template <typename Model>
class CwSearcher {
 public:
  CwSearcher(const typename Model::Graph& g, int k) : g_(g), k_(k), all_(full_mask(g.vertex_count())) {}

  bool run(std::vector<CwScriptStep>* script_out) {
    const int n = g_.vertex_count();
    if (n == 0) {
      if (script_out) script_out->clear();
      return true;
    }
    if (k_ < 1) return false;
    CwState start;
    if (dfs(start)) {
      if (script_out) *script_out = path_;
      return true;
    }
    return false;
  }

 private:
  bool dfs(CwState& classes) {
    VertexMask placed = 0;
    for (VertexMask m : classes) placed |= m;
    if (placed == all_) return true;
    if (!failed_.insert(classes).second) return false;

    for (int v : bits(all_ & ~placed)) {
      for (size_t ci = 0; ci < classes.size(); ++ci) {
        if (!cw_join_ok<Model>(g_, v, classes, ci, all_)) continue;
        CwState next = classes;
        next[ci] |= vertex_bit(v);
        std::sort(next.begin(), next.end());
        path_.push_back({CwScriptStep::Kind::Join, v, classes[ci], 0});
        if (dfs(next)) return true;
        path_.pop_back();
      }
      if (static_cast<int>(classes.size()) < k_ && cw_fresh_ok<Model>(g_, v, classes)) {
        CwState next = classes;
        next.push_back(vertex_bit(v));
        std::sort(next.begin(), next.end());
        path_.push_back({CwScriptStep::Kind::Fresh, v, 0, 0});
        if (dfs(next)) return true;
        path_.pop_back();
      }
    }
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j) {
        if (!cw_merge_ok<Model>(g_, classes, i, j, all_)) continue;
        CwState next;
        for (size_t t = 0; t < classes.size(); ++t)
          if (t != i && t != j) next.push_back(classes[t]);
        next.push_back(classes[i] | classes[j]);
        std::sort(next.begin(), next.end());
        path_.push_back({CwScriptStep::Kind::Merge, -1, classes[i], classes[j]});
        if (dfs(next)) return true;
        path_.pop_back();
      }
    return false;
  }

  const typename Model::Graph& g_;
  int k_;
  VertexMask all_;
  std::vector<CwScriptStep> path_;
  std::unordered_set<CwState, CwStateHash> failed_;
};

template <typename Model>
bool cw_feasible(const typename Model::Graph& g, int k, std::vector<CwScriptStep>* script_out) {
  return CwSearcher<Model>(g, k).run(script_out);
}

template <typename Model>
typename Model::CwExprT cw_emit(const typename Model::Graph& g,
                                const std::vector<CwScriptStep>& script, int k) {
  const int n = g.vertex_count();
  typename Model::CwExprT out;
  out.k = n == 0 ? 0 : k;
  std::vector<std::pair<VertexMask, int>> classes;  // (members, label), sorted by label
  std::vector<char> label_free(k + 1, 1);
  bool first = true;

  auto find_class = [&](VertexMask mask) -> size_t {
    for (size_t i = 0; i < classes.size(); ++i)
      if (classes[i].first == mask) return i;
    throw input_error("cw_emit: malformed script");
  };

  for (const auto& step : script) {
    switch (step.kind) {
      case CwScriptStep::Kind::Fresh: {
        int label = 0;
        for (int l = 1; l <= k; ++l)
          if (label_free[l]) {
            label = l;
            break;
          }
        if (label == 0) throw capacity_error("cw_emit: script exceeds the label budget");
        Model::emit_cw_vertex(out, step.v, label, first);
        first = false;
        Model::emit_cw_arcs(out, g, step.v, label, classes);
        classes.emplace_back(vertex_bit(step.v), label);
        label_free[label] = 0;
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        break;
      }
      case CwScriptStep::Kind::Join: {
        size_t ci = find_class(step.a);
        int label = classes[ci].second;
        Model::emit_cw_vertex(out, step.v, label, first);
        first = false;
        std::vector<std::pair<VertexMask, int>> others;
        for (size_t i = 0; i < classes.size(); ++i)
          if (i != ci) others.push_back(classes[i]);
        Model::emit_cw_arcs(out, g, step.v, label, others);
        classes[ci].first |= vertex_bit(step.v);
        break;
      }
      case CwScriptStep::Kind::Merge: {
        size_t i = find_class(step.a), j = find_class(step.b);
        if (classes[i].second > classes[j].second) std::swap(i, j);
        Model::emit_cw_relabel(out, classes[j].second, classes[i].second);
        label_free[classes[j].second] = 1;
        classes[i].first |= classes[j].first;
        classes.erase(classes.begin() + j);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// ---- exact values ------------------------------------------------------------
//
// The neighbourhood-width pins the two candidate values for both expression
// widths: nw <= lnlc <= lcw <= nw + 1 never leaves room for more than a
// binary decision, so each searcher tests the lower candidate and falls back
// to an explicit construction at the upper one.

inline NlcSearchResult exact_dlnlc(const Digraph& g, const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n > opts.max_n)
    throw capacity_error("exact_dlnlc: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(opts.max_n));
  if (n == 0) return {0, {}};
  SolveOptions sopts{std::max(opts.max_n, 20)};
  const int nw = solve_exact(g, MeasureKind::Dnw, sopts).value;
  std::vector<int> order;
  if (detail::nlc_feasible<detail::DirectedModel>(g, nw, &order))
    return {nw, detail::emit_nlc<detail::DirectedModel>(g, order, nw)};
  order = solve_exact(g, MeasureKind::Dnw, sopts).witness.order;
  return {nw + 1, detail::emit_nlc<detail::DirectedModel>(g, order, nw + 1)};
}

inline UNlcSearchResult exact_lnlc(const UndirectedGraph& g, const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n > opts.max_n)
    throw capacity_error("exact_lnlc: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(opts.max_n));
  if (n == 0) return {0, {}};
  SolveOptions sopts{std::max(opts.max_n, 20)};
  const int nw = undirected_measure(g, MeasureKind::UNw, sopts).value;
  std::vector<int> order;
  if (detail::nlc_feasible<detail::UndirectedModel>(g, nw, &order))
    return {nw, detail::emit_nlc<detail::UndirectedModel>(g, order, nw)};
  order = undirected_measure(g, MeasureKind::UNw, sopts).witness.order;
  return {nw + 1, detail::emit_nlc<detail::UndirectedModel>(g, order, nw + 1)};
}

inline CwSearchResult exact_dlcw(const Digraph& g, const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n > opts.max_n)
    throw capacity_error("exact_dlcw: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(opts.max_n));
  if (n == 0) return {0, {}};
  SolveOptions sopts{std::max(opts.max_n, 20)};
  const int nw = solve_exact(g, MeasureKind::Dnw, sopts).value;
  const int lower = detail::nlc_feasible<detail::DirectedModel>(g, nw, nullptr) ? nw : nw + 1;
  std::vector<detail::CwScriptStep> script;
  if (lower <= nw && detail::cw_feasible<detail::DirectedModel>(g, lower, &script))
    return {lower, detail::cw_emit<detail::DirectedModel>(g, script, lower)};
  if (!detail::cw_feasible<detail::DirectedModel>(g, nw + 1, &script))
    throw capacity_error("exact_dlcw: internal search failed at the guaranteed upper bound");
  return {nw + 1, detail::cw_emit<detail::DirectedModel>(g, script, nw + 1)};
}

inline UCwSearchResult exact_lcw(const UndirectedGraph& g, const SearchOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n > opts.max_n)
    throw capacity_error("exact_lcw: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(opts.max_n));
  if (n == 0) return {0, {}};
  SolveOptions sopts{std::max(opts.max_n, 20)};
  const int nw = undirected_measure(g, MeasureKind::UNw, sopts).value;
  const int lower = detail::nlc_feasible<detail::UndirectedModel>(g, nw, nullptr) ? nw : nw + 1;
  std::vector<detail::CwScriptStep> script;
  if (lower <= nw && detail::cw_feasible<detail::UndirectedModel>(g, lower, &script))
    return {lower, detail::cw_emit<detail::UndirectedModel>(g, script, lower)};
  if (!detail::cw_feasible<detail::UndirectedModel>(g, nw + 1, &script))
    throw capacity_error("exact_lcw: internal search failed at the guaranteed upper bound");
  return {nw + 1, detail::cw_emit<detail::UndirectedModel>(g, script, nw + 1)};
}

}  // namespace diwidth
