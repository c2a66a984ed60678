#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "ratio.hpp"

namespace capri {

struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kBruteAlphaMaxVertices = 40;
inline constexpr int kBruteAMaxVertices = 26;
inline constexpr std::int64_t kGraphPowerMaxVertices = 1'000'000;

struct BruteAlphaResult {
  int value = 0;
  std::vector<int> certificate;
};

namespace detail {

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) nbr[v] |= 1ull << w;
  return nbr;
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    const int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

/// Exact maximum independent set by branch and bound over bitmasks: greedy
/// clique covers bound the remainder, branching picks the densest vertex.
inline BruteAlphaResult brute_alpha(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteAlphaMaxVertices)
    throw TooLargeError("brute_alpha handles at most " +
                        std::to_string(kBruteAlphaMaxVertices) + " vertices");
  const auto nbr = detail::neighbor_masks(g);

  int best = 0;
  std::uint64_t best_set = 0;

  auto cover_bound = [&](std::uint64_t p) {
    int cliques = 0;
    while (p) {
      const int v = std::countr_zero(p);
      std::uint64_t clique = 1ull << v;
      std::uint64_t cand = p & nbr[v];
      while (cand) {
        const int u = std::countr_zero(cand);
        clique |= 1ull << u;
        cand &= nbr[u];
      }
      p &= ~clique;
      ++cliques;
    }
    return cliques;
  };

  std::function<void(std::uint64_t, std::uint64_t, int)> rec = [&](std::uint64_t p,
                                                                   std::uint64_t cur, int size) {
    if (!p) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    if (size + cover_bound(p) <= best) return;
    int v = -1, vd = -1;
    for (std::uint64_t scan = p; scan;) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      const int d = std::popcount(nbr[u] & p);
      if (d > vd) {
        vd = d;
        v = u;
      }
    }
    rec(p & ~(nbr[v] | (1ull << v)), cur | (1ull << v), size + 1);
    if (vd > 0) rec(p & ~(1ull << v), cur, size);
  };
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  rec(full, 0, 0);

  return BruteAlphaResult{best, detail::mask_to_vertices(best_set)};
}

namespace detail {

struct IndependentSetScan {
  std::vector<std::int64_t> min_neighbors;  // per size; kNoSet when absent
  std::vector<std::uint64_t> first_set;     // first set attaining the minimum
};

inline constexpr std::int64_t kScanNoSet = std::numeric_limits<std::int64_t>::max() / 4;

/// Enumerate every independent set once (members in ascending order) and keep
/// the minimum neighborhood size per cardinality.
inline IndependentSetScan scan_independent_sets(const Graph& g, int cap, const char* who) {
  const int n = g.vertex_count();
  if (n > cap)
    throw TooLargeError(std::string(who) + " handles at most " + std::to_string(cap) +
                        " vertices");
  const auto nbr = neighbor_masks(g);
  IndependentSetScan scan;
  scan.min_neighbors.assign(static_cast<std::size_t>(n) + 1, kScanNoSet);
  scan.first_set.assign(static_cast<std::size_t>(n) + 1, 0);
  scan.min_neighbors[0] = 0;

  std::function<void(int, std::uint64_t, std::uint64_t, int)> rec =
      [&](int start, std::uint64_t iset, std::uint64_t nset, int size) {
        for (int v = start; v < n; ++v) {
          if ((nset >> v) & 1) continue;
          const std::uint64_t iset2 = iset | (1ull << v);
          const std::uint64_t nset2 = nset | nbr[v];
          const auto cnt = static_cast<std::int64_t>(std::popcount(nset2));
          if (cnt < scan.min_neighbors[size + 1]) {
            scan.min_neighbors[size + 1] = cnt;
            scan.first_set[size + 1] = iset2;
          }
          rec(v + 1, iset2, nset2, size + 1);
        }
      };
  rec(0, 0, 0, 0);
  while (scan.min_neighbors.back() == kScanNoSet) scan.min_neighbors.pop_back();
  scan.first_set.resize(scan.min_neighbors.size());
  return scan;
}

}  // namespace detail

struct BruteAResult {
  Ratio value;
  std::vector<int> witness;  // first argmax independent set
};

/// a(G) by exhaustive independent-set enumeration.
inline BruteAResult brute_a(const Graph& g) {
  const auto scan = detail::scan_independent_sets(g, kBruteAMaxVertices, "brute_a");
  BruteAResult best{Ratio(1, 1 + scan.min_neighbors[1]), detail::mask_to_vertices(scan.first_set[1])};
  for (std::size_t k = 2; k < scan.min_neighbors.size(); ++k) {
    const Ratio r(static_cast<std::int64_t>(k),
                  static_cast<std::int64_t>(k) + scan.min_neighbors[k]);
    if (r > best.value) best = {r, detail::mask_to_vertices(scan.first_set[k])};
  }
  return best;
}

/// Exhaustive l(k) table for 0 <= k <= alpha(G); the oracle counterpart of
/// the cotree profile.
inline std::vector<std::int64_t> brute_neighborhood_profile(const Graph& g) {
  return detail::scan_independent_sets(g, kBruteAMaxVertices, "brute_neighborhood_profile")
      .min_neighbors;
}

/// Left-associated categorical power G^k, k >= 1.
inline Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph power needs k >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= g.vertex_count();
    if (size > kGraphPowerMaxVertices)
      throw TooLargeError("graph power exceeds " + std::to_string(kGraphPowerMaxVertices) +
                          " vertices");
  }
  Graph p = g;
  for (int i = 1; i < k; ++i) p = categorical_product(p, g);
  return p;
}

/// i(G) = alpha(G)/|V(G)| as an exact ratio.
inline Ratio independence_ratio(const Graph& g) {
  return Ratio(brute_alpha(g).value, g.vertex_count());
}

}  // namespace capri
