#pragma once

#include <string>
#include <vector>

#include "diwidth/layout.hpp"

namespace diwidth {

// Sequence of bags X_1..X_r. A decomposition is valid for G when
//   (1) the bags cover V,
//   (2) every arc (u,v) has u in some X_i and v in some X_j with i <= j,
//   (3) each vertex occupies a contiguous interval of bags.
struct DirectedPathDecomposition {
  std::vector<VertexMask> bags;

  bool operator==(const DirectedPathDecomposition&) const = default;
};

// Max bag size minus one; -1 for the empty decomposition of the empty digraph.
inline int width(const DirectedPathDecomposition& d) {
  int largest = 0;
  for (VertexMask bag : d.bags) largest = std::max(largest, popcount(bag));
  return largest - 1;
}

struct ValidationReport {
  bool ok = true;
  int violated_condition = 0;  // 1, 2 or 3 when !ok
  std::string message;
};

inline ValidationReport validate(const Digraph& g, const DirectedPathDecomposition& d) {
  const int n = g.vertex_count();
  const int r = static_cast<int>(d.bags.size());
  for (VertexMask bag : d.bags)
    if ((bag & ~g.vertex_mask()) != 0) throw input_error("validate: bag vertex out of range");

  VertexMask covered = 0;
  for (VertexMask bag : d.bags) covered |= bag;
  if (covered != g.vertex_mask()) {
    for (int v = 0; v < n; ++v)
      if (!(covered & vertex_bit(v)))
        return {false, 1, "condition (1): vertex " + std::to_string(v) + " is in no bag"};
  }

  std::vector<int> first(n, r), last(n, -1);
  for (int i = 0; i < r; ++i)
    for (int v : bits(d.bags[i])) {
      first[v] = std::min(first[v], i);
      last[v] = std::max(last[v], i);
    }

  for (const auto& [u, v] : g.arcs())
    if (first[u] > last[v])
      return {false, 2,
              "condition (2): arc (" + std::to_string(u) + "," + std::to_string(v) +
                  ") has no bag pair i <= j"};

  for (int v = 0; v < n; ++v)
    for (int i = first[v]; i <= last[v]; ++i)
      if (!(d.bags[i] & vertex_bit(v)))
        return {false, 3,
                "condition (3): vertex " + std::to_string(v) + " is missing from bag " +
                    std::to_string(i + 1) + " inside its interval"};

  return {};
}

// Bag i holds the i-th vertex of the layout together with every earlier
// vertex that still has an in-arc from position i or later. The width never
// exceeds the separation cost of the layout, and for an optimal separation
// layout it attains the directed path-width.
inline DirectedPathDecomposition from_layout(const Digraph& g, const Layout& layout) {
  const int n = g.vertex_count();
  if (!layout.is_permutation_of(n)) throw input_error("from_layout: layout is not a bijection on V");
  DirectedPathDecomposition d;
  d.bags.reserve(n);
  VertexMask placed = 0;
  for (int i = 0; i < n; ++i) {
    const int v = layout.order[i];
    VertexMask not_yet = g.vertex_mask() & ~placed;  // includes v itself
    VertexMask bag = vertex_bit(v);
    for (int u : bits(placed))
      if (g.in_mask(u) & not_yet) bag |= vertex_bit(u);
    d.bags.push_back(bag);
    placed |= vertex_bit(v);
  }
  return d;
}

}  // namespace diwidth
