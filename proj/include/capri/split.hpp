#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace capri {

/// Partition of a splitgraph into an independent set S and a clique C.
/// Either side may be empty.  Both lists are sorted ascending.
struct SplitPartition {
  std::vector<int> independent;
  std::vector<int> clique;
};

inline bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  const int n = g.vertex_count();
  std::vector<char> mark(n, 0);
  for (int v : p.independent) {
    if (v < 0 || v >= n || mark[v]) return false;
    mark[v] = 1;
  }
  for (int v : p.clique) {
    if (v < 0 || v >= n || mark[v]) return false;
    mark[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!mark[v]) return false;
  for (std::size_t i = 0; i < p.clique.size(); ++i)
    for (std::size_t j = i + 1; j < p.clique.size(); ++j)
      if (!g.has_edge(p.clique[i], p.clique[j])) return false;
  for (std::size_t i = 0; i < p.independent.size(); ++i)
    for (std::size_t j = i + 1; j < p.independent.size(); ++j)
      if (g.has_edge(p.independent[i], p.independent[j])) return false;
  return true;
}

/// Canonical split partition, or nullopt when G is not a splitgraph.
///
/// Splitness is decided by the degree-sequence splittance criterion; the
/// returned partition maximizes |C|, ties broken by the lexicographically
/// smallest sorted C.  Any two valid partitions differ by moving at most one
/// vertex each way (a set that is both a clique and independent has at most
/// one vertex), so the canonical one is found near the criterion's partition.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  // m = largest i (1-based) with d_i >= i-1; the predicate is monotone.
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  std::int64_t top = 0, rest = 0;
  for (int i = 0; i < n; ++i)
    (i < m ? top : rest) += g.degree(order[i]);
  if (top != static_cast<std::int64_t>(m) * (m - 1) + rest) return std::nullopt;

  std::vector<int> base_c(order.begin(), order.begin() + m);
  std::vector<int> base_s(order.begin() + m, order.end());
  std::sort(base_c.begin(), base_c.end());
  std::sort(base_s.begin(), base_s.end());

  std::vector<char> in_s(n, 0);
  for (int v : base_s) in_s[v] = 1;

  auto adjacent_to_all = [&](int v, const std::vector<int>& set, int skip) {
    for (int u : set)
      if (u != skip && u != v && !g.has_edge(v, u)) return false;
    return true;
  };

  std::vector<std::vector<int>> candidates;
  // Grow: some s adjacent to the whole base clique lifts |C| by one.
  for (int s : base_s)
    if (adjacent_to_all(s, base_c, -1)) {
      std::vector<int> c = base_c;
      c.insert(std::lower_bound(c.begin(), c.end(), s), s);
      candidates.push_back(std::move(c));
    }
  if (candidates.empty()) {
    candidates.push_back(base_c);
    // Same-size alternatives: swap one clique vertex for one independent one.
    // x may leave C only if its neighbors inside S are at most {s}.
    for (int x : base_c)
      for (int s : base_s) {
        if (!adjacent_to_all(s, base_c, x)) continue;
        bool ok = true;
        for (int w : g.neighbors(x))
          if (in_s[w] && w != s) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::vector<int> c;
        c.reserve(base_c.size());
        for (int v : base_c)
          if (v != x) c.push_back(v);
        c.insert(std::lower_bound(c.begin(), c.end(), s), s);
        candidates.push_back(std::move(c));
      }
  }

  const std::vector<int>* best = &candidates.front();
  for (const auto& c : candidates)
    if (c < *best) best = &c;

  SplitPartition out;
  out.clique = *best;
  std::vector<char> in_c(n, 0);
  for (int v : out.clique) in_c[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!in_c[v]) out.independent.push_back(v);
  if (!is_valid_split_partition(g, out))
    throw std::logic_error("splittance criterion produced an invalid partition");
  return out;
}

}  // namespace capri
