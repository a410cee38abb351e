#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diwidth/digraph.hpp"

namespace diwidth {

enum class Family {
  DirectedPath,
  DirectedCycle,
  BidirectionalComplete,
  PathPower,
  BiorientedGrid,
  BiorientedStar,
  BiorientedCompleteBipartite,
  TransitiveTournament,
  OrientedPath,
};

// n is the primary size parameter; k is the power order / second part size;
// orientation holds one bit per path edge (bit i set = edge {i,i+1} points forward).
struct FamilySpec {
  Family family = Family::DirectedPath;
  int n = 0;
  int k = 0;
  std::uint64_t orientation = 0;
};

inline Digraph directed_path(int n) {
  if (n < 1) throw input_error("directed_path: n must be >= 1");
  Digraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
  return g;
}

inline Digraph directed_cycle(int n) {
  if (n < 2) throw input_error("directed_cycle: n must be >= 2");
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

inline Digraph bidirectional_complete(int n) {
  if (n < 1) throw input_error("bidirectional_complete: n must be >= 1");
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.add_arc(u, v);
  return g;
}

// Arc (v_i, v_j) iff 0 < j - i <= k.
inline Digraph path_power(int n, int k) {
  if (n < 1) throw input_error("path_power: n must be >= 1");
  if (k < 1) throw input_error("path_power: k must be >= 1");
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= k; ++j) g.add_arc(i, j);
  return g;
}

inline UndirectedGraph grid_graph(int n) {
  if (n < 1) throw input_error("grid: n must be >= 1");
  if (n * n > kMaxVertices) throw input_error("grid: too many vertices");
  UndirectedGraph g(n * n);
  auto id = [n](int r, int c) { return r * n + c; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < n) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

inline Digraph bioriented_grid(int n) { return complete_biorientation(grid_graph(n)); }

// K_{1,n} with the center as vertex 0.
inline Digraph bioriented_star(int n) {
  if (n < 1) throw input_error("bioriented_star: n must be >= 1");
  Digraph g(n + 1);
  for (int leaf = 1; leaf <= n; ++leaf) {
    g.add_arc(0, leaf);
    g.add_arc(leaf, 0);
  }
  return g;
}

inline Digraph bioriented_complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) throw input_error("bioriented_complete_bipartite: parts must be >= 1");
  Digraph g(n + m);
  for (int u = 0; u < n; ++u)
    for (int w = n; w < n + m; ++w) {
      g.add_arc(u, w);
      g.add_arc(w, u);
    }
  return g;
}

inline Digraph transitive_tournament(int n) {
  if (n < 1) throw input_error("transitive_tournament: n must be >= 1");
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
  return g;
}

inline Digraph oriented_path(int n, std::uint64_t orientation) {
  if (n < 1) throw input_error("oriented_path: n must be >= 1");
  Digraph g(n);
  for (int i = 0; i + 1 < n; ++i) {
    if (orientation & (std::uint64_t{1} << i))
      g.add_arc(i, i + 1);
    else
      g.add_arc(i + 1, i);
  }
  return g;
}

inline Digraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::DirectedPath: return directed_path(spec.n);
    case Family::DirectedCycle: return directed_cycle(spec.n);
    case Family::BidirectionalComplete: return bidirectional_complete(spec.n);
    case Family::PathPower: return path_power(spec.n, spec.k);
    case Family::BiorientedGrid: return bioriented_grid(spec.n);
    case Family::BiorientedStar: return bioriented_star(spec.n);
    case Family::BiorientedCompleteBipartite: return bioriented_complete_bipartite(spec.n, spec.k);
    case Family::TransitiveTournament: return transitive_tournament(spec.n);
    case Family::OrientedPath: return oriented_path(spec.n, spec.orientation);
  }
  throw input_error("generate: unknown family");
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::DirectedPath: return "dipath";
    case Family::DirectedCycle: return "dicycle";
    case Family::BidirectionalComplete: return "bicomplete";
    case Family::PathPower: return "pathpower";
    case Family::BiorientedGrid: return "bigrid";
    case Family::BiorientedStar: return "bistar";
    case Family::BiorientedCompleteBipartite: return "bibipartite";
    case Family::TransitiveTournament: return "tt";
    case Family::OrientedPath: return "orientedpath";
  }
  return "?";
}

inline bool family_from_string(const std::string& s, Family& out) {
  for (Family f : {Family::DirectedPath, Family::DirectedCycle, Family::BidirectionalComplete,
                   Family::PathPower, Family::BiorientedGrid, Family::BiorientedStar,
                   Family::BiorientedCompleteBipartite, Family::TransitiveTournament,
                   Family::OrientedPath}) {
    if (s == to_string(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

}  // namespace diwidth
