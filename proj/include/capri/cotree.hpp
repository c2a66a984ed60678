#pragma once

#include <array>
#include <cassert>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace capri {

/// Rooted cotree: leaves carry vertex indices, internal nodes combine their
/// children by disjoint union or join.  Kept canonical at all times: every
/// internal node has at least two children and no child with its own label.
/// Node ids are topological (children precede parents; the root is last).
class Cotree {
public:
  enum class Label { Leaf, Union, Join };

  struct Node {
    Label label = Label::Leaf;
    int vertex = -1;            // leaf payload
    std::vector<int> children;  // internal nodes only
    int subtree_size = 1;       // leaves under this node
  };

  static Cotree leaf(int vertex) {
    if (vertex < 0) throw std::invalid_argument("leaf vertex must be >= 0");
    Cotree t;
    t.nodes_.push_back(Node{Label::Leaf, vertex, {}, 1});
    t.root_ = 0;
    return t;
  }

  /// Combine subtrees under a union or join node.  A child whose root carries
  /// the same label is flattened into its grandchildren, preserving the
  /// canonical form.
  static Cotree compose(Label label, const std::vector<Cotree>& children) {
    if (label == Label::Leaf) throw std::invalid_argument("compose needs union or join");
    if (children.size() < 2) throw std::invalid_argument("compose needs at least two children");
    Cotree t;
    std::vector<int> child_ids;
    int size = 0;
    for (const Cotree& c : children) {
      assert(c.root_ == static_cast<int>(c.nodes_.size()) - 1);
      const int off = static_cast<int>(t.nodes_.size());
      const bool flatten = c.nodes_[c.root_].label == label;
      const int limit = flatten ? c.root_ : c.root_ + 1;
      for (int i = 0; i < limit; ++i) {
        Node copy = c.nodes_[i];
        for (int& id : copy.children) id += off;
        t.nodes_.push_back(std::move(copy));
      }
      if (flatten)
        for (int id : c.nodes_[c.root_].children) child_ids.push_back(id + off);
      else
        child_ids.push_back(c.root_ + off);
      size += c.nodes_[c.root_].subtree_size;
    }
    t.nodes_.push_back(Node{label, -1, std::move(child_ids), size});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
  }

  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  int vertex_count() const { return nodes_[static_cast<std::size_t>(root_)].subtree_size; }

  /// Leaf vertices under `id`, ascending.
  std::vector<int> leaves_under(int id) const {
    std::vector<int> out;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const Node& nd = node(cur);
      if (nd.label == Label::Leaf)
        out.push_back(nd.vertex);
      else
        for (int ch : nd.children) stack.push_back(ch);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  Cotree() = default;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Graph encoded by a cotree.  Leaves must carry exactly the vertices
/// 0..n-1; join nodes contribute all cross edges between their children.
inline Graph realize(const Cotree& t) {
  const int nn = t.node_count();
  std::vector<std::vector<int>> leaves(static_cast<std::size_t>(nn));
  for (int id = 0; id < nn; ++id) {
    const auto& nd = t.node(id);
    if (nd.label == Cotree::Label::Leaf) {
      leaves[id] = {nd.vertex};
    } else {
      for (int ch : nd.children)
        leaves[id].insert(leaves[id].end(), leaves[ch].begin(), leaves[ch].end());
    }
  }
  const int n = t.vertex_count();
  {
    std::vector<int> all = leaves[static_cast<std::size_t>(t.root())];
    std::sort(all.begin(), all.end());
    for (int i = 0; i < n; ++i)
      if (i >= static_cast<int>(all.size()) || all[static_cast<std::size_t>(i)] != i)
        throw std::invalid_argument("cotree leaves must biject with 0..n-1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int id = 0; id < nn; ++id) {
    const auto& nd = t.node(id);
    if (nd.label != Cotree::Label::Join) continue;
    for (std::size_t i = 0; i < nd.children.size(); ++i)
      for (std::size_t j = i + 1; j < nd.children.size(); ++j)
        for (int u : leaves[nd.children[i]])
          for (int v : leaves[nd.children[j]]) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

/// Parenthesized term form: `x` marks a join, `+` a union, integers are
/// leaves.  Children print in ascending order of their smallest leaf, so the
/// output is deterministic.
inline std::string to_term(const Cotree& t) {
  struct Walker {
    const Cotree& t;
    std::pair<int, std::string> walk(int id) const {
      const auto& nd = t.node(id);
      if (nd.label == Cotree::Label::Leaf) return {nd.vertex, std::to_string(nd.vertex)};
      std::vector<std::pair<int, std::string>> parts;
      parts.reserve(nd.children.size());
      for (int ch : nd.children) parts.push_back(walk(ch));
      std::sort(parts.begin(), parts.end());
      std::string s = nd.label == Cotree::Label::Join ? "(x" : "(+";
      for (const auto& [mn, sub] : parts) {
        s += ' ';
        s += sub;
      }
      s += ')';
      return {parts.front().first, s};
    }
  };
  return Walker{t}.walk(t.root()).second;
}

/// Refutation: an induced P4, in path order.
struct NotCograph {
  std::array<int, 4> witness;
};

namespace detail {

/// Connected components of the subgraph induced on `verts`, or of its
/// complement when `in_complement`.  Sorted lists, ordered by smallest member.
inline std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& verts,
                                                       bool in_complement) {
  std::vector<char> in_set(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : verts) in_set[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s : verts) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      if (in_complement) {
        for (int w : verts)
          if (!seen[w] && w != u && !g.has_edge(u, w)) {
            seen[w] = 1;
            stack.push_back(w);
          }
      } else {
        for (int w : g.neighbors(u))
          if (in_set[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::variant<Cotree, NotCograph> build_cotree_on(const Graph& g,
                                                        const std::vector<int>& verts) {
  if (verts.size() == 1) return Cotree::leaf(verts[0]);

  auto comps = components_within(g, verts, false);
  if (comps.size() > 1) {
    std::vector<Cotree> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) {
      auto sub = build_cotree_on(g, c);
      if (std::holds_alternative<NotCograph>(sub)) return sub;
      parts.push_back(std::get<Cotree>(std::move(sub)));
    }
    return Cotree::compose(Cotree::Label::Union, parts);
  }

  auto cocomps = components_within(g, verts, true);
  if (cocomps.size() > 1) {
    std::vector<Cotree> parts;
    parts.reserve(cocomps.size());
    for (const auto& c : cocomps) {
      auto sub = build_cotree_on(g, c);
      if (std::holds_alternative<NotCograph>(sub)) return sub;
      parts.push_back(std::get<Cotree>(std::move(sub)));
    }
    return Cotree::compose(Cotree::Label::Join, parts);
  }

  // Both the induced graph and its complement are connected on >= 2 vertices,
  // so an induced P4 must exist here.
  const Graph sub = induced_subgraph(g, verts);
  auto p4 = find_induced_path4(sub);
  if (!p4) throw std::logic_error("connected graph with connected complement lacks a P4");
  return NotCograph{{verts[(*p4)[0]], verts[(*p4)[1]], verts[(*p4)[2]], verts[(*p4)[3]]}};
}

}  // namespace detail

/// Cotree of G when G is P4-free, otherwise an induced-P4 refutation.
/// Recursive connectivity splitting: disconnected -> union node over
/// components, co-disconnected -> join node over co-components.
inline std::variant<Cotree, NotCograph> build_cotree(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return detail::build_cotree_on(g, all);
}

}  // namespace capri
