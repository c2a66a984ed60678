#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cotree.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "split.hpp"

namespace capri {

enum class SplitCase { None, A, B, C };

inline const char* split_case_name(SplitCase c) {
  switch (c) {
    case SplitCase::A: return "A";
    case SplitCase::B: return "B";
    case SplitCase::C: return "C";
    default: return "";
  }
}

/// Result of a product independence computation.  The certificate lists the
/// members of one maximum independent set as flat indices g*|V(H)|+h,
/// ascending.  case_tag is set for the splitgraph algorithm only.
struct AlphaResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> certificate;
  SplitCase case_tag = SplitCase::None;
};

/// Certificates are re-verified against factor adjacency whenever the product
/// has at most this many vertices.
inline constexpr std::int64_t kCertificateCheckBound = 1'000'000;

/// Independence check in G x H without materializing the product.  Rejects
/// out-of-range or duplicate members.
inline bool is_independent_in_product(const Graph& g, const Graph& h,
                                      const std::vector<std::int64_t>& set) {
  const int nh = h.vertex_count();
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count()) * nh;
  for (const std::int64_t v : set)
    if (v < 0 || v >= n) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) return false;
      const auto a = vertex_pair_from_flat(set[i], nh);
      const auto b = vertex_pair_from_flat(set[j], nh);
      if (g.has_edge(a.g, b.g) && h.has_edge(a.h, b.h)) return false;
    }
  }
  return true;
}

namespace detail {

inline void verify_alpha_certificate(const Graph& g, const Graph& h, const AlphaResult& r) {
  if (static_cast<std::int64_t>(r.certificate.size()) != r.value)
    throw std::logic_error("certificate length disagrees with reported alpha");
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count()) * h.vertex_count();
  if (n <= kCertificateCheckBound && !is_independent_in_product(g, h, r.certificate))
    throw std::logic_error("certificate is not independent in the product");
}

}  // namespace detail

/// Maximum independent set of the categorical product of two cographs, by
/// memoized recursion over cotree node pairs:
///   - a leaf factor contributes the other side's whole vertex set,
///   - union nodes split the product into disjoint layers and add up,
///   - for two join nodes every independent set lives inside one child's
///     layer, so the best child substitution wins.
inline AlphaResult alpha_product_cographs(const Cotree& tg, const Cotree& th) {
  using Label = Cotree::Label;
  const int nh = th.vertex_count();
  std::vector<std::vector<std::int64_t>> memo(
      static_cast<std::size_t>(tg.node_count()),
      std::vector<std::int64_t>(static_cast<std::size_t>(th.node_count()), -1));

  std::function<std::int64_t(int, int)> value = [&](int a, int b) -> std::int64_t {
    std::int64_t& slot = memo[a][b];
    if (slot >= 0) return slot;
    const auto& na = tg.node(a);
    const auto& nb = th.node(b);
    std::int64_t res = 0;
    if (na.label == Label::Leaf) {
      res = nb.subtree_size;
    } else if (nb.label == Label::Leaf) {
      res = na.subtree_size;
    } else if (na.label == Label::Union) {
      for (int ch : na.children) res += value(ch, b);
    } else if (nb.label == Label::Union) {
      for (int ch : nb.children) res += value(a, ch);
    } else {
      for (int ch : na.children) res = std::max(res, value(ch, b));
      for (int ch : nb.children) res = std::max(res, value(a, ch));
    }
    return slot = res;
  };

  AlphaResult out;
  out.value = value(tg.root(), th.root());

  std::function<void(int, int)> emit = [&](int a, int b) {
    const auto& na = tg.node(a);
    const auto& nb = th.node(b);
    if (na.label == Label::Leaf) {
      for (int v : th.leaves_under(b)) out.certificate.push_back(flat_index(na.vertex, v, nh));
    } else if (nb.label == Label::Leaf) {
      for (int v : tg.leaves_under(a)) out.certificate.push_back(flat_index(v, nb.vertex, nh));
    } else if (na.label == Label::Union) {
      for (int ch : na.children) emit(ch, b);
    } else if (nb.label == Label::Union) {
      for (int ch : nb.children) emit(a, ch);
    } else {
      const std::int64_t target = memo[a][b];
      for (int ch : na.children)
        if (value(ch, b) == target) {
          emit(ch, b);
          return;
        }
      for (int ch : nb.children)
        if (value(a, ch) == target) {
          emit(a, ch);
          return;
        }
      throw std::logic_error("alpha certificate reconstruction lost the optimum");
    }
  };
  emit(tg.root(), th.root());
  std::sort(out.certificate.begin(), out.certificate.end());

  const std::int64_t n = static_cast<std::int64_t>(tg.vertex_count()) * nh;
  if (n <= kCertificateCheckBound)
    detail::verify_alpha_certificate(realize(tg), realize(th), out);
  else if (static_cast<std::int64_t>(out.certificate.size()) != out.value)
    throw std::logic_error("certificate length disagrees with reported alpha");
  return out;
}

namespace detail {

/// Bipartite piece of the splitgraph algorithm.  Both classes are internally
/// independent in G x H (one coordinate always lands in an independent side),
/// so the induced subgraph is bipartite and Koenig applies.
struct ProductBipartiteMis {
  std::int64_t value = 0;
  std::vector<std::int64_t> members;
};

inline ProductBipartiteMis product_bipartite_mis(const Graph& g, const Graph& h,
                                                 const std::vector<std::pair<int, int>>& left,
                                                 const std::vector<std::pair<int, int>>& right) {
  const int nh = h.vertex_count();
  std::vector<std::int64_t> llab, rlab;
  llab.reserve(left.size());
  rlab.reserve(right.size());
  for (const auto& [a, b] : left) llab.push_back(flat_index(a, b, nh));
  for (const auto& [a, b] : right) rlab.push_back(flat_index(a, b, nh));
  BipartiteGraph bip(std::move(llab), std::move(rlab));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (g.has_edge(left[i].first, right[j].first) && h.has_edge(left[i].second, right[j].second))
        bip.add_edge(static_cast<int>(i), static_cast<int>(j));
  ProductBipartiteMis out;
  out.members = bipartite_max_independent_set(bip);
  out.value = static_cast<std::int64_t>(out.members.size());
  return out;
}

}  // namespace detail

/// Maximum independent set of the categorical product of two splitgraphs with
/// partitions (S1,C1) and (S2,C2).  Any independent set of the product holds
/// zero, one, or at least two vertices of C1 x C2; with two or more they
/// share a row or a column.  Each shape reduces to a bipartite maximum
/// independent set:
///   A: the subgraph on (S1xC2) u (C1xS2) u (S1xS2), the S1xS2 block isolated;
///   B: one pair (c1,c2) plus the case-A subgraph minus its neighborhood;
///   C: for a row c1, classes (C1xS2) u (S1xS2) versus W u ({c1}xC2) where
///      W = {(s1,c2) : s1 not adjacent to c1}; columns symmetrically.
/// Ties take the overall max; case_tag prefers A, then B, then C.
inline AlphaResult alpha_product_splitgraphs(const Graph& g, const SplitPartition& pg,
                                             const Graph& h, const SplitPartition& ph) {
  if (!is_valid_split_partition(g, pg))
    throw std::invalid_argument("left factor: invalid split partition");
  if (!is_valid_split_partition(h, ph))
    throw std::invalid_argument("right factor: invalid split partition");

  const auto& s1 = pg.independent;
  const auto& c1 = pg.clique;
  const auto& s2 = ph.independent;
  const auto& c2 = ph.clique;
  const int nh = h.vertex_count();

  std::vector<std::pair<int, int>> a_left, a_right;
  for (int x : s1)
    for (int y : c2) a_left.emplace_back(x, y);
  for (int x : s1)
    for (int y : s2) a_left.emplace_back(x, y);
  for (int x : c1)
    for (int y : s2) a_right.emplace_back(x, y);

  const auto case_a = detail::product_bipartite_mis(g, h, a_left, a_right);

  std::int64_t best_b = -1;
  std::vector<std::int64_t> best_b_members;
  for (int x : c1)
    for (int y : c2) {
      auto banned = [&](const std::pair<int, int>& p) {
        return g.has_edge(p.first, x) && h.has_edge(p.second, y);
      };
      std::vector<std::pair<int, int>> bl, br;
      for (const auto& p : a_left)
        if (!banned(p)) bl.push_back(p);
      for (const auto& p : a_right)
        if (!banned(p)) br.push_back(p);
      auto mis = detail::product_bipartite_mis(g, h, bl, br);
      if (mis.value + 1 > best_b) {
        best_b = mis.value + 1;
        best_b_members = std::move(mis.members);
        best_b_members.push_back(flat_index(x, y, nh));
      }
    }

  std::int64_t best_c = -1;
  std::vector<std::int64_t> best_c_members;
  {
    std::vector<std::pair<int, int>> class1;
    for (int x : c1)
      for (int y : s2) class1.emplace_back(x, y);
    for (int x : s1)
      for (int y : s2) class1.emplace_back(x, y);
    for (int row : c1) {
      std::vector<std::pair<int, int>> class2;
      for (int x : s1)
        if (!g.has_edge(x, row))
          for (int y : c2) class2.emplace_back(x, y);
      for (int y : c2) class2.emplace_back(row, y);
      auto mis = detail::product_bipartite_mis(g, h, class1, class2);
      if (mis.value > best_c) {
        best_c = mis.value;
        best_c_members = std::move(mis.members);
      }
    }
  }
  {
    std::vector<std::pair<int, int>> class1;
    for (int x : s1)
      for (int y : c2) class1.emplace_back(x, y);
    for (int x : s1)
      for (int y : s2) class1.emplace_back(x, y);
    for (int col : c2) {
      std::vector<std::pair<int, int>> class2;
      for (int x : c1)
        for (int y : s2)
          if (!h.has_edge(y, col)) class2.emplace_back(x, y);
      for (int x : c1) class2.emplace_back(x, col);
      auto mis = detail::product_bipartite_mis(g, h, class1, class2);
      if (mis.value > best_c) {
        best_c = mis.value;
        best_c_members = std::move(mis.members);
      }
    }
  }

  AlphaResult out;
  out.value = std::max({case_a.value, best_b, best_c});
  if (case_a.value == out.value) {
    out.case_tag = SplitCase::A;
    out.certificate = case_a.members;
  } else if (best_b == out.value) {
    out.case_tag = SplitCase::B;
    out.certificate = best_b_members;
  } else {
    out.case_tag = SplitCase::C;
    out.certificate = best_c_members;
  }
  std::sort(out.certificate.begin(), out.certificate.end());
  detail::verify_alpha_certificate(g, h, out);
  return out;
}

}  // namespace capri
