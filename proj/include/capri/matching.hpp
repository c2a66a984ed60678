#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace capri {

/// Bipartite graph with labeled sides.  Labels are arbitrary 64-bit ids
/// (product vertices use their flat index); the algorithms work on positions
/// within each side.  Every edge crosses sides by construction.
class BipartiteGraph {
public:
  BipartiteGraph(std::vector<std::int64_t> left_labels, std::vector<std::int64_t> right_labels)
      : left_(std::move(left_labels)), right_(std::move(right_labels)), adj_(left_.size()) {
    std::unordered_set<std::int64_t> seen;
    for (auto l : left_)
      if (!seen.insert(l).second) throw std::invalid_argument("duplicate bipartite label");
    for (auto r : right_)
      if (!seen.insert(r).second) throw std::invalid_argument("duplicate bipartite label");
  }

  void add_edge(int left_pos, int right_pos) {
    if (left_pos < 0 || left_pos >= left_size() || right_pos < 0 || right_pos >= right_size())
      throw std::invalid_argument("bipartite edge position out of range");
    adj_[static_cast<std::size_t>(left_pos)].push_back(right_pos);
  }

  int left_size() const { return static_cast<int>(left_.size()); }
  int right_size() const { return static_cast<int>(right_.size()); }
  std::int64_t left_label(int pos) const { return left_.at(static_cast<std::size_t>(pos)); }
  std::int64_t right_label(int pos) const { return right_.at(static_cast<std::size_t>(pos)); }
  const std::vector<int>& adjacency(int left_pos) const {
    return adj_.at(static_cast<std::size_t>(left_pos));
  }

private:
  std::vector<std::int64_t> left_, right_;
  std::vector<std::vector<int>> adj_;
};

struct Matching {
  std::vector<int> left_match, right_match;  // positions, -1 = unmatched
  int size = 0;
};

/// Hopcroft-Karp maximum matching.
inline Matching max_matching(const BipartiteGraph& b) {
  const int nl = b.left_size();
  constexpr int kInf = std::numeric_limits<int>::max();
  Matching m;
  m.left_match.assign(static_cast<std::size_t>(nl), -1);
  m.right_match.assign(static_cast<std::size_t>(b.right_size()), -1);
  std::vector<int> dist(static_cast<std::size_t>(nl), 0);

  auto bfs = [&]() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int u = 0; u < nl; ++u) {
      if (m.left_match[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : b.adjacency(u)) {
        const int w = m.right_match[v];
        if (w == -1)
          reachable_free = true;
        else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  };

  std::function<bool(int)> dfs = [&](int u) -> bool {
    for (int v : b.adjacency(u)) {
      const int w = m.right_match[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.left_match[u] = v;
        m.right_match[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs())
    for (int u = 0; u < nl; ++u)
      if (m.left_match[u] == -1 && dfs(u)) ++m.size;
  return m;
}

namespace detail {

/// Left/right vertices reachable by alternating paths from unmatched left
/// vertices (the Z set of the Koenig construction).
inline std::pair<std::vector<char>, std::vector<char>> alternating_reach(const BipartiteGraph& b,
                                                                         const Matching& m) {
  std::vector<char> vis_l(static_cast<std::size_t>(b.left_size()), 0);
  std::vector<char> vis_r(static_cast<std::size_t>(b.right_size()), 0);
  std::queue<int> q;
  for (int u = 0; u < b.left_size(); ++u)
    if (m.left_match[u] == -1) {
      vis_l[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : b.adjacency(u)) {
      if (vis_r[v]) continue;
      vis_r[v] = 1;
      const int w = m.right_match[v];
      if (w != -1 && !vis_l[w]) {
        vis_l[w] = 1;
        q.push(w);
      }
    }
  }
  return {std::move(vis_l), std::move(vis_r)};
}

}  // namespace detail

/// Koenig: minimum vertex cover as (left positions, right positions).
/// Its size always equals the maximum matching size.
inline std::pair<std::vector<int>, std::vector<int>> bipartite_min_vertex_cover(
    const BipartiteGraph& b) {
  const Matching m = max_matching(b);
  auto [vis_l, vis_r] = detail::alternating_reach(b, m);
  std::pair<std::vector<int>, std::vector<int>> cover;
  for (int u = 0; u < b.left_size(); ++u)
    if (!vis_l[u]) cover.first.push_back(u);
  for (int v = 0; v < b.right_size(); ++v)
    if (vis_r[v]) cover.second.push_back(v);
  return cover;
}

/// Maximum independent set of a bipartite graph as sorted labels; the size is
/// always |V| minus the maximum matching size.  The result is re-verified
/// independent before returning.
inline std::vector<std::int64_t> bipartite_max_independent_set(const BipartiteGraph& b) {
  const Matching m = max_matching(b);
  auto [vis_l, vis_r] = detail::alternating_reach(b, m);
  std::vector<std::int64_t> out;
  std::vector<char> take_l(static_cast<std::size_t>(b.left_size()), 0);
  std::vector<char> take_r(static_cast<std::size_t>(b.right_size()), 0);
  for (int u = 0; u < b.left_size(); ++u)
    if (vis_l[u]) {
      take_l[u] = 1;
      out.push_back(b.left_label(u));
    }
  for (int v = 0; v < b.right_size(); ++v)
    if (!vis_r[v]) {
      take_r[v] = 1;
      out.push_back(b.right_label(v));
    }
  for (int u = 0; u < b.left_size(); ++u) {
    if (!take_l[u]) continue;
    for (int v : b.adjacency(u))
      if (take_r[v]) throw std::logic_error("bipartite independent set has an internal edge");
  }
  const std::int64_t expect =
      static_cast<std::int64_t>(b.left_size()) + b.right_size() - m.size;
  if (static_cast<std::int64_t>(out.size()) != expect)
    throw std::logic_error("bipartite independent set misses the Koenig size");
  std::sort(out.begin(), out.end());
  return out;
}

/// Fractional perfect matching decision through the bipartite double cover:
/// each vertex v splits into v+ (left) and v- (right), each edge uv becomes
/// u+v- and v+u-.  Half-integrality makes G fractionally perfectly matchable
/// exactly when the cover has a perfect matching.
inline bool has_fractional_perfect_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> left, right;
  left.reserve(static_cast<std::size_t>(n));
  right.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    left.push_back(v);
    right.push_back(static_cast<std::int64_t>(n) + v);
  }
  BipartiteGraph b(std::move(left), std::move(right));
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(v, u);
  }
  return max_matching(b).size == n;
}

}  // namespace capri
