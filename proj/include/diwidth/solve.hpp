#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "diwidth/layout.hpp"

namespace diwidth {

struct SolveResult {
  int value = 0;
  Layout witness;
};

struct SolveOptions {
  int max_n = 20;  // the DP stores 2^n values
};

namespace detail {

// f(S) = min over orderings placing S first of the max prefix cost, i.e.
// f(S) = max(cost(S), min_{v in S} f(S \ {v})), f(empty) = 0. One table
// entry per subset; Value is uint8_t unless costs can exceed 255.
template <typename Value, typename CostFn>
SolveResult solve_subset_dp(int n, CostFn&& cost) {
  const size_t size = size_t{1} << n;
  constexpr Value kInf = std::numeric_limits<Value>::max();
  std::vector<Value> f(size, kInf);
  f[0] = 0;
  for (VertexMask s = 1; s < size; ++s) {
    Value best = kInf;
    for (int v : bits(s)) {
      Value sub = f[s & ~vertex_bit(v)];
      if (sub < best) best = sub;
    }
    Value c = static_cast<Value>(cost(s));
    f[s] = best > c ? best : c;
  }

  SolveResult result;
  const VertexMask all = full_mask(n);
  result.value = static_cast<int>(f[all]);
  // Witness walk from the full set down, smallest vertex id first.
  VertexMask s = all;
  result.witness.order.assign(n, 0);
  for (int pos = n - 1; pos >= 0; --pos) {
    for (int v : bits(s)) {
      if (f[s & ~vertex_bit(v)] <= f[all]) {
        result.witness.order[pos] = v;
        s &= ~vertex_bit(v);
        break;
      }
    }
  }
  return result;
}

template <typename Graph>
SolveResult solve_impl(const Graph& g, MeasureKind kind, const SolveOptions& opts) {
  const int n = g.vertex_count();
  if (n > opts.max_n)
    throw capacity_error("solve_exact: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(opts.max_n));
  if (n == 0) return SolveResult{};
  auto cost = [&](VertexMask s) { return prefix_cost(g, kind, s); };
  int bound = n;  // vsn/nw/rank costs are at most n
  if (kind == MeasureKind::DcutwFwd || kind == MeasureKind::DcutwBwd || kind == MeasureKind::UCutw)
    bound = n * n;
  SolveResult r = bound < 255 ? solve_subset_dp<std::uint8_t>(n, cost)
                              : solve_subset_dp<std::uint16_t>(n, cost);
  if (is_rank_kind(kind)) r.value = std::max(r.value, singleton_cut_term(g));
  return r;
}

}  // namespace detail

inline SolveResult solve_exact(const Digraph& g, MeasureKind kind, const SolveOptions& opts = {}) {
  if (!is_directed_kind(kind)) throw input_error("solve_exact: undirected kind applied to a digraph");
  return detail::solve_impl(g, kind, opts);
}

inline SolveResult undirected_measure(const UndirectedGraph& g, MeasureKind kind,
                                      const SolveOptions& opts = {}) {
  if (is_directed_kind(kind)) throw input_error("undirected_measure: directed kind");
  return detail::solve_impl(g, kind, opts);
}

// Directed path-width equals the directed vertex separation number; the
// witness layout is the separation ordering.
inline SolveResult dpw(const Digraph& g, const SolveOptions& opts = {}) {
  return solve_exact(g, MeasureKind::DvsnIn, opts);
}

}  // namespace diwidth
