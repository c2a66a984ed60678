#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <capri/capri.hpp>
#include "test_util.hpp"

using capri::Graph;
using capri::Ratio;
using capri::SplitMix64;

TEST_CASE("maximum independent sets of fixed graphs") {
    auto check = [](const Graph& g, int expect) {
        const capri::BruteAlphaResult r = capri::brute_alpha(g);
        REQUIRE(r.value == expect);
        REQUIRE(static_cast<int>(r.certificate.size()) == expect);
        REQUIRE(testutil::is_independent(g, r.certificate));
    };
    check(capri::complete_graph(5), 1);
    check(capri::cycle_graph(5), 2);
    check(capri::cycle_graph(6), 3);
    check(capri::path_graph(6), 3);
    check(capri::star_graph(4), 4);
    check(capri::rook_complement(3, 4), 4);
    check(Graph::from_edges(4, {}), 4);
}

TEST_CASE("size caps fail loudly") {
    Graph big = capri::path_graph(41);
    REQUIRE_THROWS_AS(capri::brute_alpha(big), capri::TooLargeError);
    Graph mid = capri::path_graph(27);
    REQUIRE_THROWS_AS(capri::brute_a(mid), capri::TooLargeError);
    REQUIRE_THROWS_AS(capri::brute_neighborhood_profile(mid), capri::TooLargeError);
    REQUIRE_THROWS_AS(capri::graph_power(capri::complete_graph(2), 21), capri::TooLargeError);
    REQUIRE_THROWS(capri::graph_power(capri::complete_graph(2), 0));
}

TEST_CASE("neighborhood expansion ratio of fixed graphs") {
    const capri::BruteAResult star = capri::brute_a(capri::star_graph(3));
    REQUIRE(star.value == Ratio(3, 4));

    const capri::BruteAResult k2 = capri::brute_a(capri::complete_graph(2));
    REQUIRE(k2.value == Ratio(1, 2));

    const capri::BruteAResult c5 = capri::brute_a(capri::cycle_graph(5));
    REQUIRE(c5.value == Ratio(2, 5));

    REQUIRE(capri::brute_a(capri::complete_graph(1)).value == Ratio(1, 1));
}

TEST_CASE("ratio witnesses actually attain the value") {
    SplitMix64 rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(9));
        Graph g = testutil::random_graph(n, rng);
        const capri::BruteAResult r = capri::brute_a(g);
        REQUIRE_FALSE(r.witness.empty());
        REQUIRE(testutil::is_independent(g, r.witness));
        std::vector<char> closed(static_cast<std::size_t>(n), 0);
        for (int v : r.witness) {
            closed[static_cast<std::size_t>(v)] = 1;
            for (int w : g.neighbors(v)) closed[static_cast<std::size_t>(w)] = 1;
        }
        int reach = 0;
        for (char c : closed) reach += c;
        REQUIRE(Ratio(static_cast<std::int64_t>(r.witness.size()), reach) == r.value);
    }
}

TEST_CASE("profile enumeration on fixed graphs") {
    REQUIRE(capri::brute_neighborhood_profile(capri::star_graph(3)) ==
            std::vector<std::int64_t>{0, 1, 1, 1});
    REQUIRE(capri::brute_neighborhood_profile(capri::complete_graph(4)) ==
            std::vector<std::int64_t>{0, 3});
    REQUIRE(capri::brute_neighborhood_profile(capri::cycle_graph(5)) ==
            std::vector<std::int64_t>{0, 2, 3});
}

TEST_CASE("powers compose from the left") {
    Graph k2 = capri::complete_graph(2);
    REQUIRE(capri::graph_power(k2, 1) == k2);
    REQUIRE(capri::graph_power(k2, 2) == capri::categorical_product(k2, k2));
    Graph k3 = capri::complete_graph(3);
    REQUIRE(capri::graph_power(k3, 2) == capri::rook_complement(3, 3));

    Graph cube = capri::graph_power(k2, 3);
    REQUIRE(cube.vertex_count() == 8);
    REQUIRE(cube.edge_count() == 4);
}

TEST_CASE("independence ratios") {
    REQUIRE(capri::independence_ratio(capri::complete_graph(2)) == Ratio(1, 2));
    REQUIRE(capri::independence_ratio(capri::cycle_graph(5)) == Ratio(2, 5));
    REQUIRE(capri::independence_ratio(capri::star_graph(3)) == Ratio(3, 4));
    REQUIRE(capri::independence_ratio(capri::complete_graph(1)) == Ratio(1, 1));
}

TEST_CASE("independence ratio never drops under squaring at tiny scale") {
    SplitMix64 rng(82);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(5));
        Graph g = testutil::random_graph(n, rng);
        REQUIRE(capri::independence_ratio(capri::graph_power(g, 2)) >=
                capri::independence_ratio(g));
    }
}
