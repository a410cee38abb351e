#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "diwidth/util.hpp"

namespace diwidth {

// Loop-free digraph on vertices 0..n-1. Adjacency is stored as one
// out-mask and one in-mask per vertex so that arc membership and
// "neighbours within a subset" queries are single word operations.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) { reset(n); }

  Digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
    reset(n);
    for (const auto& [u, v] : arcs) add_arc(u, v);
  }

  int vertex_count() const { return n_; }

  int arc_count() const {
    int m = 0;
    for (VertexMask o : out_) m += popcount(o);
    return m;
  }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_[u] & vertex_bit(v)) != 0;
  }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loops are not allowed: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    out_[u] |= vertex_bit(v);
    in_[v] |= vertex_bit(u);
  }

  VertexMask out_mask(int v) const {
    check_vertex(v);
    return out_[v];
  }

  VertexMask in_mask(int v) const {
    check_vertex(v);
    return in_[v];
  }

  // Neighbours in either direction.
  VertexMask adj_mask(int v) const { return out_mask(v) | in_mask(v); }

  VertexMask vertex_mask() const { return full_mask(n_); }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> a;
    for (int u = 0; u < n_; ++u)
      for (int v : bits(out_[u])) a.emplace_back(u, v);
    return a;
  }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }
  bool operator!=(const Digraph& o) const { return !(*this == o); }

 private:
  void reset(int n) {
    if (n < 0 || n > kMaxVertices) throw input_error("vertex count out of range: " + std::to_string(n));
    n_ = n;
    out_.assign(n, 0);
    in_.assign(n, 0);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range: " + std::to_string(v));
  }

  int n_ = 0;
  std::vector<VertexMask> out_, in_;
};

// Loop-free undirected graph, same representation with a single adjacency mask.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  explicit UndirectedGraph(int n) { reset(n); }

  UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edges) {
    reset(n);
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int m = 0;
    for (VertexMask a : adj_) m += popcount(a);
    return m / 2;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vertex_bit(v)) != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loops are not allowed: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
  }

  VertexMask adj_mask(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexMask vertex_mask() const { return full_mask(n_); }

  int degree(int v) const { return popcount(adj_mask(v)); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
      for (int v : bits(adj_[u]))
        if (u < v) e.emplace_back(u, v);
    return e;
  }

  bool operator==(const UndirectedGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const UndirectedGraph& o) const { return !(*this == o); }

 private:
  void reset(int n) {
    if (n < 0 || n > kMaxVertices) throw input_error("vertex count out of range: " + std::to_string(n));
    n_ = n;
    adj_.assign(n, 0);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range: " + std::to_string(v));
  }

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

struct DegreeProfile {
  int max_out = 0;
  int max_in = 0;
  int max_total = 0;

  int min_in_out() const { return std::min(max_in, max_out); }
  bool operator==(const DegreeProfile&) const = default;
};

inline UndirectedGraph underlying_undirected(const Digraph& g) {
  UndirectedGraph u(g.vertex_count());
  for (const auto& [a, b] : g.arcs())
    if (!u.has_edge(a, b)) u.add_edge(a, b);
  return u;
}

inline Digraph complete_biorientation(const UndirectedGraph& gu) {
  Digraph g(gu.vertex_count());
  for (const auto& [a, b] : gu.edges()) {
    g.add_arc(a, b);
    g.add_arc(b, a);
  }
  return g;
}

inline Digraph converse(const Digraph& g) {
  Digraph c(g.vertex_count());
  for (const auto& [u, v] : g.arcs()) c.add_arc(v, u);
  return c;
}

// Vertices of S are relabeled 0..|S|-1 by ascending original id.
inline Digraph induced_subdigraph(const Digraph& g, VertexMask s) {
  if ((s & ~g.vertex_mask()) != 0) throw input_error("induced_subdigraph: vertex set out of range");
  std::vector<int> order;
  for (int v : bits(s)) order.push_back(v);
  Digraph h(static_cast<int>(order.size()));
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (int j = 0; j < static_cast<int>(order.size()); ++j)
      if (i != j && g.has_arc(order[i], order[j])) h.add_arc(i, j);
  return h;
}

inline UndirectedGraph induced_subgraph(const UndirectedGraph& g, VertexMask s) {
  if ((s & ~g.vertex_mask()) != 0) throw input_error("induced_subgraph: vertex set out of range");
  std::vector<int> order;
  for (int v : bits(s)) order.push_back(v);
  UndirectedGraph h(static_cast<int>(order.size()));
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(order.size()); ++j)
      if (g.has_edge(order[i], order[j])) h.add_edge(i, j);
  return h;
}

inline DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int out = popcount(g.out_mask(v));
    int in = popcount(g.in_mask(v));
    p.max_out = std::max(p.max_out, out);
    p.max_in = std::max(p.max_in, in);
    p.max_total = std::max(p.max_total, out + in);
  }
  return p;
}

// A 2-cycle counts as a directed cycle, so any bioriented edge already
// disqualifies.
inline bool is_dag(const Digraph& g) {
  const int n = g.vertex_count();
  VertexMask alive = g.vertex_mask();
  for (int round = 0; round < n; ++round) {
    VertexMask sources = 0;
    for (int v : bits(alive))
      if ((g.in_mask(v) & alive) == 0) sources |= vertex_bit(v);
    if (sources == 0) break;
    alive &= ~sources;
  }
  return alive == 0;
}

enum class DigraphClass { Edgeless, Oriented, Tournament, Semicomplete, Complete, General };

inline const char* to_string(DigraphClass c) {
  switch (c) {
    case DigraphClass::Edgeless: return "edgeless";
    case DigraphClass::Oriented: return "oriented";
    case DigraphClass::Tournament: return "tournament";
    case DigraphClass::Semicomplete: return "semicomplete";
    case DigraphClass::Complete: return "complete";
    case DigraphClass::General: return "general";
  }
  return "?";
}

inline DigraphClass classify(const Digraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw input_error("classify requires at least one vertex");
  bool any_arc = false, some_pair_none = false, some_pair_single = false, some_pair_both = false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool fwd = g.has_arc(u, v), bwd = g.has_arc(v, u);
      any_arc |= fwd || bwd;
      if (!fwd && !bwd) some_pair_none = true;
      else if (fwd && bwd) some_pair_both = true;
      else some_pair_single = true;
    }
  if (!any_arc) return DigraphClass::Edgeless;
  if (!some_pair_none && !some_pair_both) return DigraphClass::Tournament;
  if (!some_pair_none && !some_pair_single) return DigraphClass::Complete;
  if (!some_pair_none) return DigraphClass::Semicomplete;
  if (!some_pair_both) return DigraphClass::Oriented;
  return DigraphClass::General;
}

inline bool is_semicomplete(DigraphClass c) {
  return c == DigraphClass::Tournament || c == DigraphClass::Semicomplete || c == DigraphClass::Complete;
}

namespace detail {

inline bool extend_induced_embedding(const Digraph& g, const Digraph& h, std::vector<int>& image,
                                     VertexMask used) {
  const int placed = static_cast<int>(image.size());
  if (placed == h.vertex_count()) return true;
  for (int cand = 0; cand < g.vertex_count(); ++cand) {
    if (used & vertex_bit(cand)) continue;
    if (popcount(g.out_mask(cand)) < popcount(h.out_mask(placed))) continue;
    if (popcount(g.in_mask(cand)) < popcount(h.in_mask(placed))) continue;
    bool ok = true;
    for (int j = 0; j < placed && ok; ++j) {
      ok = g.has_arc(image[j], cand) == h.has_arc(j, placed) &&
           g.has_arc(cand, image[j]) == h.has_arc(placed, j);
    }
    if (!ok) continue;
    image.push_back(cand);
    if (extend_induced_embedding(g, h, image, used | vertex_bit(cand))) return true;
    image.pop_back();
  }
  return false;
}

}  // namespace detail

// True iff some vertex subset of g induces a digraph isomorphic to h.
inline bool contains_induced(const Digraph& g, const Digraph& h) {
  if (h.vertex_count() > g.vertex_count()) return false;
  if (h.arc_count() > g.arc_count()) return false;
  std::vector<int> image;
  return detail::extend_induced_embedding(g, h, image, 0);
}

}  // namespace diwidth
