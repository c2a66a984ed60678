#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include <capri/capri.hpp>

namespace testutil {

// Brute-force isomorphism check, only intended for n <= 8.
inline bool isomorphic(const capri::Graph& a, const capri::Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) { ok = false; break; }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool all_distinct(const std::vector<int>& vs) {
    std::vector<int> s = vs;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// The four vertices induce a chordless path in the listed order.
inline bool induces_path4(const capri::Graph& g, const std::array<int, 4>& p) {
    if (!all_distinct({p[0], p[1], p[2], p[3]})) return false;
    return g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) && g.has_edge(p[2], p[3]) &&
           !g.has_edge(p[0], p[2]) && !g.has_edge(p[0], p[3]) && !g.has_edge(p[1], p[3]);
}

// The five vertices induce a chordless cycle in the listed order.
inline bool induces_cycle5(const capri::Graph& g, const std::array<int, 5>& c) {
    if (!all_distinct({c[0], c[1], c[2], c[3], c[4]})) return false;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const bool ring = (j == i + 1) || (i == 0 && j == 4);
            if (g.has_edge(c[i], c[j]) != ring) return false;
        }
    }
    return true;
}

inline bool is_independent(const capri::Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

inline capri::Graph random_graph(int n, capri::SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bit()) edges.push_back({u, v});
    return capri::Graph::from_edges(n, edges);
}

inline capri::Graph random_connected_graph(int n, capri::SplitMix64& rng) {
    for (;;) {
        capri::Graph g = random_graph(n, rng);
        if (capri::connected_components(g).size() == 1) return g;
    }
}

}  // namespace testutil
