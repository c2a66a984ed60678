// Acceptance gate: every numbered check prints one PASS/FAIL line and the
// process exits nonzero if any fail.  All randomness is seeded here.

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include <capri/capri.hpp>
#include "test_util.hpp"

using capri::CapacityValue;
using capri::Cotree;
using capri::Graph;
using capri::Ratio;
using capri::SplitMix64;

namespace {

int failures = 0;
std::string detail;

void report(int idx, const char* name, bool ok) {
    std::printf("criterion %2d  %-44s %s\n", idx, name, ok ? "PASS" : "FAIL");
    if (!ok) {
        if (!detail.empty()) std::fprintf(stderr, "  criterion %d detail: %s\n", idx, detail.c_str());
        ++failures;
    }
    detail.clear();
}

Cotree tree_of(const Graph& g) {
    auto r = capri::build_cotree(g);
    if (std::holds_alternative<capri::NotCograph>(r))
        throw std::logic_error("expected a cograph");
    return std::get<Cotree>(r);
}

std::int64_t cograph_product_alpha(const Graph& g, const Graph& h) {
    return capri::alpha_product_cographs(tree_of(g), tree_of(h)).value;
}

std::int64_t brute_product_alpha(const Graph& g, const Graph& h) {
    return capri::brute_alpha(capri::categorical_product(g, h)).value;
}

// all graphs on n labeled vertices, as edge subsets
template <typename F>
void for_each_graph(int n, F&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i)) edges.push_back(slots[i]);
        fn(Graph::from_edges(n, edges));
    }
}

std::vector<std::vector<int>> partitions_up_to(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int next = std::min(left, cap); next >= 1; --next) {
            cur.push_back(next);
            self(self, left - next, next);
            cur.pop_back();
        }
    };
    rec(rec, max_total, max_total);
    return out;
}

bool crit1_rook() {
    for (int m = 2; m <= 8; ++m) {
        for (int n = 2; n <= 8; ++n) {
            Graph km = capri::complete_graph(m);
            Graph kn = capri::complete_graph(n);
            if (cograph_product_alpha(km, kn) != std::max(m, n)) {
                detail = "alpha mismatch at " + std::to_string(m) + "," + std::to_string(n);
                return false;
            }
            if (!(capri::categorical_product(km, kn) ==
                  capri::complement(capri::rook_graph(m, n)))) {
                detail = "board mismatch at " + std::to_string(m) + "," + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool crit2_multipartite() {
    SplitMix64 rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        auto draw_parts = [&] {
            std::vector<int> parts(1 + rng.next_below(4));
            for (auto& p : parts) p = 1 + static_cast<int>(rng.next_below(4));
            return parts;
        };
        Graph g = capri::complete_multipartite(draw_parts());
        Graph h = capri::complete_multipartite(draw_parts());
        const std::int64_t ag = capri::brute_alpha(g).value;
        const std::int64_t ah = capri::brute_alpha(h).value;
        const std::int64_t expect =
            std::max(ag * h.vertex_count(), ah * g.vertex_count());
        const std::int64_t got = cograph_product_alpha(g, h);
        if (got != expect) {
            detail = "formula mismatch: got " + std::to_string(got);
            return false;
        }
        if (g.vertex_count() * h.vertex_count() <= 30 && got != brute_product_alpha(g, h)) {
            detail = "brute mismatch";
            return false;
        }
    }
    return true;
}

bool crit3_cograph_oracle() {
    SplitMix64 rng(1002);
    int done = 0;
    while (done < 200) {
        const int ng = 1 + static_cast<int>(rng.next_below(8));
        const int nh = 1 + static_cast<int>(rng.next_below(8));
        if (ng * nh > 30) continue;
        ++done;
        Graph g = capri::random_cograph(ng, rng);
        Graph h = capri::random_cograph(nh, rng);
        if (cograph_product_alpha(g, h) != brute_product_alpha(g, h)) {
            detail = "pair " + std::to_string(done);
            return false;
        }
    }
    return true;
}

bool crit4_split_oracle() {
    SplitMix64 rng(1003);
    int done = 0;
    while (done < 200) {
        const int ng = 1 + static_cast<int>(rng.next_below(8));
        const int nh = 1 + static_cast<int>(rng.next_below(8));
        if (ng * nh > 30) continue;
        Graph g = capri::random_splitgraph(ng, rng);
        Graph h = capri::random_splitgraph(nh, rng);
        auto pg = capri::split_partition(g);
        auto ph = capri::split_partition(h);
        if (!pg || !ph) {
            detail = "generator left its class";
            return false;
        }
        ++done;
        const std::int64_t expect = brute_product_alpha(g, h);
        if (capri::alpha_product_splitgraphs(g, *pg, h, *ph).value != expect) {
            detail = "value mismatch at pair " + std::to_string(done);
            return false;
        }
        if (g.vertex_count() <= 10 && h.vertex_count() <= 10) {
            auto partitions_of = [](const Graph& x) {
                std::vector<capri::SplitPartition> out;
                const int n = x.vertex_count();
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    capri::SplitPartition p;
                    for (int v = 0; v < n; ++v) {
                        if (mask & (1u << v)) p.clique.push_back(v);
                        else p.independent.push_back(v);
                    }
                    if (capri::is_valid_split_partition(x, p)) out.push_back(p);
                }
                return out;
            };
            for (const auto& qa : partitions_of(g)) {
                for (const auto& qb : partitions_of(h)) {
                    if (capri::alpha_product_splitgraphs(g, qa, h, qb).value != expect) {
                        detail = "partition dependence at pair " + std::to_string(done);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool crit5_profile_oracle() {
    SplitMix64 rng(1004);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(15));
        Graph g = capri::random_cograph(n, rng);
        const auto profile = capri::neighborhood_profile(tree_of(g));
        if (profile.table != capri::brute_neighborhood_profile(g)) {
            detail = "profile mismatch at trial " + std::to_string(trial);
            return false;
        }
        if (capri::a_ratio(profile).value != capri::brute_a(g).value) {
            detail = "ratio mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool crit6_square_stability() {
    SplitMix64 rng(1005);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(5));
        Graph g = capri::random_cograph(n, rng);
        const CapacityValue direct = capri::tensor_capacity_cograph(tree_of(g));
        const CapacityValue squared =
            capri::a_star(capri::brute_a(capri::graph_power(g, 2)).value);
        if (!(direct == squared)) {
            detail = "trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool crit7_matching_criterion() {
    auto coherent = [&](const Graph& g) {
        const bool fpm = capri::has_fractional_perfect_matching(g);
        const bool low = !(capri::brute_a(g).value > Ratio(1, 2));
        if (fpm != low) return false;
        auto t = capri::build_cotree(g);
        if (std::holds_alternative<Cotree>(t)) {
            const bool is_one =
                capri::tensor_capacity_cograph(std::get<Cotree>(t)) == CapacityValue::one();
            if ((capri::capacity_trichotomy(g) == capri::CapacityClass::One) != is_one)
                return false;
        }
        return true;
    };

    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_graph(n, [&](const Graph& g) { ok = ok && coherent(g); });
        if (!ok) {
            detail = "exhaustive sweep failed at n=" + std::to_string(n);
            return false;
        }
    }

    SplitMix64 rng(1006);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(7));
        Graph g = testutil::random_connected_graph(n, rng);
        if (!coherent(g)) {
            detail = "sampled graph at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool crit8_union_product_capacity() {
    SplitMix64 rng(1007);
    int done = 0;
    while (done < 30) {
        const int ng = 1 + static_cast<int>(rng.next_below(4));
        const int nh = 1 + static_cast<int>(rng.next_below(4));
        if (ng * nh > 16) continue;
        ++done;
        Graph g = capri::random_cograph(ng, rng);
        Graph h = capri::random_cograph(nh, rng);
        const CapacityValue cg = capri::tensor_capacity_cograph(tree_of(g));
        const CapacityValue ch = capri::tensor_capacity_cograph(tree_of(h));
        const CapacityValue biggest = std::max(cg, ch);
        const CapacityValue via_union =
            capri::tensor_capacity_cograph(tree_of(capri::disjoint_union(g, h)));
        const CapacityValue via_product =
            capri::a_star(capri::brute_a(capri::categorical_product(g, h)).value);
        if (!(via_union == biggest) || !(via_product == biggest)) {
            detail = "pair " + std::to_string(done);
            return false;
        }
    }
    return true;
}

bool crit9_power_monotonic() {
    for (int n = 1; n <= 3; ++n) {
        bool ok = true;
        for_each_graph(n, [&](const Graph& g) {
            const Ratio i1 = capri::independence_ratio(g);
            const Ratio i2 = capri::independence_ratio(capri::graph_power(g, 2));
            const Ratio i3 = capri::independence_ratio(capri::graph_power(g, 3));
            ok = ok && !(i2 < i1) && !(i3 < i2);
        });
        if (!ok) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool crit10_paw_cycle() {
    Graph prod = capri::categorical_product(capri::paw_graph(), capri::complete_graph(3));
    auto c5 = capri::find_induced_cycle5(prod);
    if (!c5) {
        detail = "no cycle found";
        return false;
    }
    if (!testutil::induces_cycle5(prod, *c5)) {
        detail = "returned cycle is not induced";
        return false;
    }
    return true;
}

bool crit11_connectivity() {
    SplitMix64 rng(1008);
    for (int trial = 0; trial < 100; ++trial) {
        const int ng = 2 + static_cast<int>(rng.next_below(5));
        const int nh = 2 + static_cast<int>(rng.next_below(5));
        Graph g = testutil::random_connected_graph(ng, rng);
        Graph h = testutil::random_connected_graph(nh, rng);
        const std::size_t parts =
            capri::connected_components(capri::categorical_product(g, h)).size();
        const std::size_t expect =
            (capri::is_bipartite(g) && capri::is_bipartite(h)) ? 2 : 1;
        if (parts != expect) {
            detail = "trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool crit12_multipartite_capacity() {
    for (const auto& parts : partitions_up_to(8)) {
        Graph g = capri::complete_multipartite(parts);
        const int n = g.vertex_count();
        const int biggest = parts[0];
        const Cotree t = tree_of(g);
        const CapacityValue cap = capri::tensor_capacity_cograph(t);
        if (2 * biggest <= n) {
            if (!(cap == CapacityValue::from_ratio(Ratio(biggest, n)))) {
                detail = "capacity off for n=" + std::to_string(n);
                return false;
            }
            const std::int64_t alpha_sq = capri::alpha_product_cographs(t, t).value;
            if (alpha_sq != static_cast<std::int64_t>(biggest) * n) {
                detail = "square ratio drifts for n=" + std::to_string(n);
                return false;
            }
            if (n <= 6 && alpha_sq != brute_product_alpha(g, g)) {
                detail = "square brute check failed for n=" + std::to_string(n);
                return false;
            }
        } else if (!(cap == CapacityValue::one())) {
            detail = "expected saturation for n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        int idx;
        const char* name;
        bool (*fn)();
    };
    const Entry entries[] = {
        {1, "clique products and rook boards", crit1_rook},
        {2, "complete multipartite product formula", crit2_multipartite},
        {3, "cograph solver vs exhaustive oracle", crit3_cograph_oracle},
        {4, "split solver vs oracle and partitions", crit4_split_oracle},
        {5, "profiles and ratios vs enumeration", crit5_profile_oracle},
        {6, "capacity is stable under squaring", crit6_square_stability},
        {7, "fractional matchings gate the low regime", crit7_matching_criterion},
        {8, "union and product capacity agree", crit8_union_product_capacity},
        {9, "power ratios never decrease", crit9_power_monotonic},
        {10, "paw times triangle holds a five cycle", crit10_paw_cycle},
        {11, "product connectivity and bipartiteness", crit11_connectivity},
        {12, "multipartite capacity formula", crit12_multipartite_capacity},
    };
    for (const auto& e : entries) {
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        report(e.idx, e.name, ok);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
