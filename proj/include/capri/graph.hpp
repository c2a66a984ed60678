#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace capri {

/// Finite simple undirected graph on vertices 0..n-1.  Neighbor lists are
/// kept sorted; edge membership goes through a hash set, so has_edge is O(1)
/// expected.  Instances are immutable once built and can be shared freely.
class Graph {
public:
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertex_count);
    for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return edge_keys_.count(edge_key(u, v)) > 0;
  }

  /// Edges as (u,v) pairs with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Vertex-exact equality: same vertex count, same adjacency.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  explicit Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
  }

  void add_edge_checked(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!edge_keys_.insert(edge_key(u, v)).second) return;  // duplicate, keep one copy
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 0.." +
                                  std::to_string(n_ - 1));
  }

  static std::uint64_t edge_key(int u, int v) {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (lo << 32) | hi;
  }

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/// A product vertex (g,h) together with its flat index g*right_count + h.
struct VertexPair {
  int g = 0;
  int h = 0;
  std::int64_t flat = 0;
};

inline std::int64_t flat_index(int g, int h, int right_count) {
  return static_cast<std::int64_t>(g) * right_count + h;
}

inline VertexPair vertex_pair_from_flat(std::int64_t flat, int right_count) {
  if (right_count < 1 || flat < 0) throw std::invalid_argument("bad flat product index");
  return VertexPair{static_cast<int>(flat / right_count), static_cast<int>(flat % right_count),
                    flat};
}

/// Categorical (tensor) product: (g1,h1) ~ (g2,h2) iff g1~g2 in G and h1~h2
/// in H.  Product vertex (g,h) lives at flat index g*|V(H)|+h.
inline Graph categorical_product(const Graph& g, const Graph& h) {
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count()) * h.vertex_count();
  const std::int64_t m = 2 * g.edge_count() * h.edge_count();
  if (n > 100'000'000 || m > 200'000'000)
    throw std::invalid_argument("categorical product too large to materialize");
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (const auto& [g1, g2] : g.edges())
    for (const auto& [h1, h2] : h.edges()) {
      edges.emplace_back(static_cast<int>(flat_index(g1, h1, nh)),
                         static_cast<int>(flat_index(g2, h2, nh)));
      edges.emplace_back(static_cast<int>(flat_index(g1, h2, nh)),
                         static_cast<int>(flat_index(g2, h1, nh)));
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Disjoint union; vertices of b are shifted up by |V(a)|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int off = a.vertex_count();
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph::from_edges(off + b.vertex_count(), edges);
}

/// Join: disjoint union plus every cross edge.
inline Graph join(const Graph& a, const Graph& b) {
  const int off = a.vertex_count();
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  for (int u = 0; u < off; ++u)
    for (int v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, off + v);
  return Graph::from_edges(off + b.vertex_count(), edges);
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Proper 2-coloring (0/1 per vertex) when G is bipartite, nullopt otherwise.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// First induced P4 a-b-c-d (edges ab, bc, cd only), if any.
inline std::optional<std::array<int, 4>> find_induced_path4(const Graph& g) {
  for (int b = 0; b < g.vertex_count(); ++b)
    for (int c : g.neighbors(b))
      for (int a : g.neighbors(b)) {
        if (a == c || g.has_edge(a, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d == a || d == b) continue;
          if (g.has_edge(d, b) || g.has_edge(d, a)) continue;
          return std::array<int, 4>{a, b, c, d};
        }
      }
  return std::nullopt;
}

/// First induced 5-cycle v0-v1-v2-v3-v4, if any.  v0 is the smallest vertex
/// of the cycle and v1 < v4, which fixes one orientation.
inline std::optional<std::array<int, 5>> find_induced_cycle5(const Graph& g) {
  const int n = g.vertex_count();
  for (int v0 = 0; v0 < n; ++v0)
    for (int v1 : g.neighbors(v0)) {
      if (v1 < v0) continue;
      for (int v2 : g.neighbors(v1)) {
        if (v2 <= v0 || g.has_edge(v2, v0)) continue;
        for (int v3 : g.neighbors(v2)) {
          if (v3 <= v0 || v3 == v1) continue;
          if (g.has_edge(v3, v1) || g.has_edge(v3, v0)) continue;
          for (int v4 : g.neighbors(v3)) {
            if (v4 < v1 || v4 == v2) continue;
            if (!g.has_edge(v4, v0) || g.has_edge(v4, v1) || g.has_edge(v4, v2)) continue;
            return std::array<int, 5>{v0, v1, v2, v3, v4};
          }
        }
      }
    }
  return std::nullopt;
}

/// Subgraph induced on `vertices` (ascending, no duplicates); result vertex i
/// corresponds to vertices[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.vertex_count() || pos[v] != -1)
      throw std::invalid_argument("induced_subgraph needs distinct in-range vertices");
    pos[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : vertices)
    for (int v : g.neighbors(u))
      if (u < v && pos[v] != -1) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace capri
