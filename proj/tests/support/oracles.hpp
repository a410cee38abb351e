#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// library's solver/elimination code paths: ranks come from explicit linear
// combinations, widths from enumerating every layout, and recognition from
// exploring every removal order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "diwidth/digraph.hpp"
#include "diwidth/gf4.hpp"
#include "diwidth/layout.hpp"

namespace oracles {

using diwidth::Digraph;
using diwidth::Gf4;
using diwidth::Gf4Matrix;
using diwidth::Layout;
using diwidth::MeasureKind;
using diwidth::UndirectedGraph;
using diwidth::VertexMask;

// A row set is independent iff no nonzero coefficient vector annihilates it.
inline bool rows_independent_gf4(const Gf4Matrix& m, const std::vector<int>& rows) {
  const int t = static_cast<int>(rows.size());
  std::vector<std::uint8_t> coeff(t, 0);
  while (true) {
    int i = 0;
    while (i < t && coeff[i] == 3) coeff[i++] = 0;
    if (i == t) break;
    ++coeff[i];
    bool all_zero = true;
    for (int c = 0; c < m.cols() && all_zero; ++c) {
      Gf4 sum = Gf4::zero();
      for (int j = 0; j < t; ++j) sum += Gf4(coeff[j]) * m.at(rows[j], c);
      all_zero = sum.is_zero();
    }
    if (all_zero) return false;
  }
  return true;
}

inline int brute_force_rank_gf4(const Gf4Matrix& m) {
  int best = 0;
  const int r = m.rows();
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << r); ++sub) {
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
      if (sub & (1u << i)) rows.push_back(i);
    if (static_cast<int>(rows.size()) <= best) continue;
    if (rows_independent_gf4(m, rows)) best = static_cast<int>(rows.size());
  }
  return best;
}

inline bool rows_independent_gf2(const std::vector<std::uint64_t>& rows) {
  const int t = static_cast<int>(rows.size());
  for (std::uint32_t combo = 1; combo < (std::uint32_t{1} << t); ++combo) {
    std::uint64_t sum = 0;
    for (int j = 0; j < t; ++j)
      if (combo & (1u << j)) sum ^= rows[j];
    if (sum == 0) return false;
  }
  return true;
}

inline int brute_force_rank_gf2(const diwidth::Gf2Matrix& m) {
  int best = 0;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << m.rows()); ++sub) {
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < m.rows(); ++i)
      if (sub & (1u << i)) rows.push_back(m.row(i));
    if (static_cast<int>(rows.size()) <= best) continue;
    if (rows_independent_gf2(rows)) best = static_cast<int>(rows.size());
  }
  return best;
}

// Minimum over all n! layouts, straight from the definition.
template <typename Graph>
int brute_force_measure(const Graph& g, MeasureKind kind) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  Layout layout = diwidth::identity_layout(n);
  int best = diwidth::measure_cost(g, kind, layout);
  while (std::next_permutation(layout.order.begin(), layout.order.end()))
    best = std::min(best, diwidth::measure_cost(g, kind, layout));
  return best;
}

// Does any removal order peel g down to one vertex? (threshold membership)
inline bool brute_force_threshold(const Digraph& g, VertexMask alive,
                                  std::map<VertexMask, bool>& memo) {
  if (diwidth::popcount(alive) <= 1) return true;
  auto it = memo.find(alive);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int v : diwidth::bits(alive)) {
    VertexMask others = alive & ~diwidth::vertex_bit(v);
    VertexMask in = g.in_mask(v) & others, out = g.out_mask(v) & others;
    bool removable = (in == 0 && out == 0) || (in == others && out == 0) ||
                     (out == others && in == 0) || (in == others && out == others);
    if (removable && brute_force_threshold(g, others, memo)) {
      ok = true;
      break;
    }
  }
  memo[alive] = ok;
  return ok;
}

inline bool brute_force_threshold(const Digraph& g) {
  if (g.vertex_count() == 0) return false;
  std::map<VertexMask, bool> memo;
  return brute_force_threshold(g, g.vertex_mask(), memo);
}

// ---- independent expression-width oracles ----
//
// Lazy-model feasibility searches that mirror the expression grammars op by
// op: states carry the label partition (and, for clique-width, the realized
// arc set) with no canonicalization beyond sorting. Much slower than the
// library searchers but complete by construction, which makes them a second
// route for the exact width values.

inline bool nlc_feasible_lazy(const Digraph& g, int k,
                              std::vector<VertexMask> classes,
                              std::set<std::vector<VertexMask>>& seen) {
  const VertexMask all = g.vertex_mask();
  VertexMask placed = 0;
  for (VertexMask c : classes) placed |= c;
  if (placed == all) return true;
  std::sort(classes.begin(), classes.end());
  if (!seen.insert(classes).second) return false;

  for (int v : diwidth::bits(all & ~placed)) {
    // arcs between v and each label class must be uniform per direction
    bool ok = true;
    for (VertexMask c : classes) {
      VertexMask o = g.out_mask(v) & c, i = g.in_mask(v) & c;
      if ((o != 0 && o != c) || (i != 0 && i != c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      auto next = classes;
      next[ci] |= diwidth::vertex_bit(v);
      if (nlc_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
    if (static_cast<int>(classes.size()) < k) {
      auto next = classes;
      next.push_back(diwidth::vertex_bit(v));
      if (nlc_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
  }
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j) {
      std::vector<VertexMask> next;
      for (size_t t = 0; t < classes.size(); ++t)
        if (t != i && t != j) next.push_back(classes[t]);
      next.push_back(classes[i] | classes[j]);
      if (nlc_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
  return false;
}

inline int lazy_nlc_width(const Digraph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1; k <= g.vertex_count(); ++k) {
    std::set<std::vector<VertexMask>> seen;
    if (nlc_feasible_lazy(g, k, {}, seen)) return k;
  }
  return g.vertex_count();
}

struct LazyCwState {
  std::vector<VertexMask> classes;
  std::vector<VertexMask> realized;  // arcs drawn so far, per-vertex out-mask

  std::vector<VertexMask> key() const {
    std::vector<VertexMask> k = classes;
    std::sort(k.begin(), k.end());
    k.push_back(~VertexMask{0});
    k.insert(k.end(), realized.begin(), realized.end());
    return k;
  }
};

inline bool cw_feasible_lazy(const Digraph& g, int k, LazyCwState state,
                             std::set<std::vector<VertexMask>>& seen) {
  const VertexMask all = g.vertex_mask();
  const int n = g.vertex_count();
  VertexMask placed = 0;
  for (VertexMask c : state.classes) placed |= c;
  if (placed == all) {
    bool done = true;
    for (int v = 0; v < n; ++v) done &= state.realized[v] == g.out_mask(v);
    if (done) return true;
  }
  if (!seen.insert(state.key()).second) return false;

  for (int v : diwidth::bits(all & ~placed)) {
    for (size_t ci = 0; ci < state.classes.size(); ++ci) {
      LazyCwState next = state;
      next.classes[ci] |= diwidth::vertex_bit(v);
      if (cw_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
    if (static_cast<int>(state.classes.size()) < k) {
      LazyCwState next = state;
      next.classes.push_back(diwidth::vertex_bit(v));
      if (cw_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
  }
  // arc insertions between two label classes, only when every pair is a
  // wanted arc and at least one is still missing
  for (size_t i = 0; i < state.classes.size(); ++i)
    for (size_t j = 0; j < state.classes.size(); ++j) {
      if (i == j) continue;
      bool legal = true, change = false;
      for (int u : diwidth::bits(state.classes[i])) {
        if ((g.out_mask(u) & state.classes[j]) != state.classes[j]) legal = false;
        if ((state.realized[u] & state.classes[j]) != state.classes[j]) change = true;
        if (!legal) break;
      }
      if (!legal || !change) continue;
      LazyCwState next = state;
      for (int u : diwidth::bits(next.classes[i])) next.realized[u] |= next.classes[j];
      if (cw_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
  for (size_t i = 0; i < state.classes.size(); ++i)
    for (size_t j = i + 1; j < state.classes.size(); ++j) {
      LazyCwState next = state;
      next.classes[i] |= next.classes[j];
      next.classes.erase(next.classes.begin() + j);
      if (cw_feasible_lazy(g, k, std::move(next), seen)) return true;
    }
  return false;
}

inline int lazy_cw_width(const Digraph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1; k <= g.vertex_count(); ++k) {
    std::set<std::vector<VertexMask>> seen;
    LazyCwState start;
    start.realized.assign(g.vertex_count(), 0);
    if (cw_feasible_lazy(g, k, std::move(start), seen)) return k;
  }
  return g.vertex_count();
}

// Deterministic random digraphs for the oracle/closure suites.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // true with probability num/den
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

 private:
  std::uint64_t state_;
};

inline Digraph random_digraph(int n, int percent, SplitMix& rng) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(percent, 100)) g.add_arc(u, v);
  return g;
}

inline void for_each_labeled_digraph(int n, const std::function<void(const Digraph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    Digraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (code & (std::uint64_t{1} << i)) g.add_arc(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

}  // namespace oracles
