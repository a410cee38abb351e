#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "diwidth/digraph.hpp"
#include "diwidth/gf4.hpp"
#include "diwidth/util.hpp"

namespace diwidth {

// A layout lists the vertices in position order; position(v) = index + 1.
struct Layout {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }

  bool is_permutation_of(int n) const {
    if (size() != n) return false;
    VertexMask seen = 0;
    for (int v : order) {
      if (v < 0 || v >= n || (seen & vertex_bit(v))) return false;
      seen |= vertex_bit(v);
    }
    return true;
  }

  Layout reversed() const {
    Layout r = *this;
    std::reverse(r.order.begin(), r.order.end());
    return r;
  }

  bool operator==(const Layout&) const = default;
};

inline Layout identity_layout(int n) {
  Layout l;
  l.order.resize(n);
  for (int i = 0; i < n; ++i) l.order[i] = i;
  return l;
}

enum class MeasureKind {
  DvsnIn,    // prefix vertices with an in-arc from the suffix
  DvsnOut,   // prefix vertices with an out-arc into the suffix
  DcutwFwd,  // arcs crossing the cut forward
  DcutwBwd,  // arcs crossing the cut backward
  Dnw,       // distinct (out,in)-neighbourhood pairs into the suffix
  Dlrw,      // GF(4) cut rank
  UVsn,      // undirected variants on a plain graph
  UCutw,
  UNw,
  ULrw,
};

inline bool is_directed_kind(MeasureKind k) {
  switch (k) {
    case MeasureKind::UVsn:
    case MeasureKind::UCutw:
    case MeasureKind::UNw:
    case MeasureKind::ULrw:
      return false;
    default:
      return true;
  }
}

inline bool is_rank_kind(MeasureKind k) { return k == MeasureKind::Dlrw || k == MeasureKind::ULrw; }

inline const char* to_string(MeasureKind k) {
  switch (k) {
    case MeasureKind::DvsnIn: return "dvsn-in";
    case MeasureKind::DvsnOut: return "dvsn-out";
    case MeasureKind::DcutwFwd: return "dcutw-fwd";
    case MeasureKind::DcutwBwd: return "dcutw-bwd";
    case MeasureKind::Dnw: return "dnw";
    case MeasureKind::Dlrw: return "dlrw";
    case MeasureKind::UVsn: return "vsn";
    case MeasureKind::UCutw: return "cutw";
    case MeasureKind::UNw: return "nw";
    case MeasureKind::ULrw: return "lrw";
  }
  return "?";
}

// Cost of the cut (S, V \ S); depends only on the prefix as a set, which is
// what makes the subset DP in solve.hpp exact.
inline int prefix_cost(const Digraph& g, MeasureKind kind, VertexMask s) {
  const VertexMask rest = g.vertex_mask() & ~s;
  switch (kind) {
    case MeasureKind::DvsnIn: {
      int c = 0;
      for (int u : bits(s))
        if (g.in_mask(u) & rest) ++c;
      return c;
    }
    case MeasureKind::DvsnOut: {
      int c = 0;
      for (int u : bits(s))
        if (g.out_mask(u) & rest) ++c;
      return c;
    }
    case MeasureKind::DcutwFwd: {
      int c = 0;
      for (int u : bits(s)) c += popcount(g.out_mask(u) & rest);
      return c;
    }
    case MeasureKind::DcutwBwd: {
      int c = 0;
      for (int u : bits(s)) c += popcount(g.in_mask(u) & rest);
      return c;
    }
    case MeasureKind::Dnw: {
      // Number of distinct directed neighbourhoods into the suffix; the
      // empty neighbourhood counts as a class.
      std::vector<std::pair<VertexMask, VertexMask>> sigs;
      for (int u : bits(s)) sigs.emplace_back(g.out_mask(u) & rest, g.in_mask(u) & rest);
      std::sort(sigs.begin(), sigs.end());
      sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
      return static_cast<int>(sigs.size());
    }
    case MeasureKind::Dlrw:
      return cut_rank_gf4(g, s, rest);
    default:
      throw input_error("prefix_cost: undirected kind applied to a digraph");
  }
}

inline int prefix_cost(const UndirectedGraph& g, MeasureKind kind, VertexMask s) {
  const VertexMask rest = g.vertex_mask() & ~s;
  switch (kind) {
    case MeasureKind::UVsn: {
      int c = 0;
      for (int u : bits(s))
        if (g.adj_mask(u) & rest) ++c;
      return c;
    }
    case MeasureKind::UCutw: {
      int c = 0;
      for (int u : bits(s)) c += popcount(g.adj_mask(u) & rest);
      return c;
    }
    case MeasureKind::UNw: {
      std::vector<VertexMask> sigs;
      for (int u : bits(s)) sigs.push_back(g.adj_mask(u) & rest);
      std::sort(sigs.begin(), sigs.end());
      sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
      return static_cast<int>(sigs.size());
    }
    case MeasureKind::ULrw:
      return cut_rank_gf2(g, s, rest);
    default:
      throw input_error("prefix_cost: directed kind applied to an undirected graph");
  }
}

// Rank kinds correspond to caterpillar decompositions whose pendant edges
// induce singleton cuts, so those ranks enter the maximum as well.
inline int singleton_cut_term(const Digraph& g) {
  int r = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    r = std::max(r, cut_rank_gf4(g, vertex_bit(v), g.vertex_mask() & ~vertex_bit(v)));
  return r;
}

inline int singleton_cut_term(const UndirectedGraph& g) {
  int r = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    r = std::max(r, cut_rank_gf2(g, vertex_bit(v), g.vertex_mask() & ~vertex_bit(v)));
  return r;
}

namespace detail {

template <typename Graph>
int measure_cost_impl(const Graph& g, MeasureKind kind, const Layout& layout) {
  const int n = g.vertex_count();
  if (!layout.is_permutation_of(n)) throw input_error("measure_cost: layout is not a bijection on V");
  int worst = 0;
  VertexMask prefix = 0;
  for (int i = 0; i < n; ++i) {
    prefix |= vertex_bit(layout.order[i]);
    worst = std::max(worst, prefix_cost(g, kind, prefix));
  }
  if (is_rank_kind(kind)) worst = std::max(worst, singleton_cut_term(g));
  return worst;
}

}  // namespace detail

inline int measure_cost(const Digraph& g, MeasureKind kind, const Layout& layout) {
  if (!is_directed_kind(kind)) throw input_error("measure_cost: undirected kind applied to a digraph");
  return detail::measure_cost_impl(g, kind, layout);
}

inline int measure_cost(const UndirectedGraph& g, MeasureKind kind, const Layout& layout) {
  if (is_directed_kind(kind)) throw input_error("measure_cost: directed kind applied to an undirected graph");
  return detail::measure_cost_impl(g, kind, layout);
}

}  // namespace diwidth
