#pragma once

#include <vector>

#include "diwidth/gf4.hpp"
#include "diwidth/layout.hpp"

namespace diwidth {

// Caterpillar rank decomposition: one spine node per vertex, the i-th spine
// node carrying leaf_order[i] as its pendant leaf. Its tree edges induce the
// prefix cuts of the leaf order plus one singleton cut per vertex.
struct CaterpillarDecomposition {
  std::vector<int> leaf_order;
  int width = 0;
};

inline int caterpillar_width(const Digraph& g, const std::vector<int>& leaf_order) {
  const int n = g.vertex_count();
  if (n < 2) return 0;
  Layout layout{leaf_order};
  if (!layout.is_permutation_of(n))
    throw input_error("caterpillar_width: leaf order is not a bijection on V");
  const VertexMask all = g.vertex_mask();
  int w = 0;
  VertexMask prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {  // spine edges
    prefix |= vertex_bit(leaf_order[i]);
    w = std::max(w, cut_rank_gf4(g, prefix, all & ~prefix));
  }
  for (int v = 0; v < n; ++v)  // pendant edges
    w = std::max(w, cut_rank_gf4(g, vertex_bit(v), all & ~vertex_bit(v)));
  return w;
}

inline int caterpillar_width(const UndirectedGraph& g, const std::vector<int>& leaf_order) {
  const int n = g.vertex_count();
  if (n < 2) return 0;
  Layout layout{leaf_order};
  if (!layout.is_permutation_of(n))
    throw input_error("caterpillar_width: leaf order is not a bijection on V");
  const VertexMask all = g.vertex_mask();
  int w = 0;
  VertexMask prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix |= vertex_bit(leaf_order[i]);
    w = std::max(w, cut_rank_gf2(g, prefix, all & ~prefix));
  }
  for (int v = 0; v < n; ++v)
    w = std::max(w, cut_rank_gf2(g, vertex_bit(v), all & ~vertex_bit(v)));
  return w;
}

// The caterpillar whose pendant leaves follow the layout. Its width never
// exceeds the neighbourhood cost of the layout: each spine cut has at most
// that many distinct rows, and pendant cuts have rank at most one.
inline CaterpillarDecomposition layout_to_rank_decomposition(const Digraph& g,
                                                             const Layout& layout) {
  const int n = g.vertex_count();
  if (!layout.is_permutation_of(n))
    throw input_error("layout_to_rank_decomposition: layout is not a bijection on V");
  CaterpillarDecomposition d;
  d.leaf_order = layout.order;
  d.width = n < 2 ? 0 : caterpillar_width(g, d.leaf_order);
  return d;
}

}  // namespace diwidth
