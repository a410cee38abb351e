#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "diwidth/digraph.hpp"

namespace diwidth {

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

// Streams all loop-free digraphs on n labeled vertices in arc-code order.
// With up_to_iso, only the lexicographically least representative of each
// isomorphism class is emitted (canonical form: minimum arc code over all
// vertex permutations).
inline void enumerate_digraphs(int n, bool up_to_iso,
                               const std::function<void(const Digraph&)>& fn) {
  if (n > 5) throw capacity_error("enumerate_digraphs: n > 5 is not supported");
  if (n < 0) throw input_error("enumerate_digraphs: negative n");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<int> pair_index(std::max(1, n * n), -1);
  for (size_t i = 0; i < pairs.size(); ++i)
    pair_index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);

  std::vector<std::vector<int>> dest;
  if (up_to_iso) {
    for (const auto& perm : detail::all_permutations(n)) {
      std::vector<int> d(pairs.size());
      for (size_t i = 0; i < pairs.size(); ++i)
        d[i] = pair_index[perm[pairs[i].first] * n + perm[pairs[i].second]];
      dest.push_back(std::move(d));
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t code = 0; code < limit; ++code) {
    if (up_to_iso) {
      bool canonical = true;
      for (size_t pi = 1; pi < dest.size() && canonical; ++pi) {
        std::uint64_t mapped = 0;
        for (size_t i = 0; i < pairs.size(); ++i)
          if (code & (std::uint64_t{1} << i)) mapped |= std::uint64_t{1} << dest[pi][i];
        canonical = mapped >= code;
      }
      if (!canonical) continue;
    }
    Digraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (code & (std::uint64_t{1} << i)) g.add_arc(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

inline void enumerate_undirected_graphs(int n, bool up_to_iso,
                                        const std::function<void(const UndirectedGraph&)>& fn) {
  if (n > 6) throw capacity_error("enumerate_undirected_graphs: n > 6 is not supported");
  if (n < 0) throw input_error("enumerate_undirected_graphs: negative n");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<int> pair_index(std::max(1, n * n), -1);
  for (size_t i = 0; i < pairs.size(); ++i) {
    pair_index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
    pair_index[pairs[i].second * n + pairs[i].first] = static_cast<int>(i);
  }

  std::vector<std::vector<int>> dest;
  if (up_to_iso) {
    for (const auto& perm : detail::all_permutations(n)) {
      std::vector<int> d(pairs.size());
      for (size_t i = 0; i < pairs.size(); ++i)
        d[i] = pair_index[perm[pairs[i].first] * n + perm[pairs[i].second]];
      dest.push_back(std::move(d));
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t code = 0; code < limit; ++code) {
    if (up_to_iso) {
      bool canonical = true;
      for (size_t pi = 1; pi < dest.size() && canonical; ++pi) {
        std::uint64_t mapped = 0;
        for (size_t i = 0; i < pairs.size(); ++i)
          if (code & (std::uint64_t{1} << i)) mapped |= std::uint64_t{1} << dest[pi][i];
        canonical = mapped >= code;
      }
      if (!canonical) continue;
    }
    UndirectedGraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (code & (std::uint64_t{1} << i)) g.add_edge(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

}  // namespace diwidth
