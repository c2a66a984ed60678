// Capacity survey over a few named families: the value is either exactly one
// or at most one half, and the cograph algorithm pins it down exactly.

#include <cstdio>
#include <variant>

#include <capri/capri.hpp>

namespace {

void row(const char* name, const capri::Graph& g) {
    auto built = capri::build_cotree(g);
    const char* klass =
        capri::capacity_class_name(capri::capacity_trichotomy(g));
    if (std::holds_alternative<capri::NotCograph>(built)) {
        std::printf("%-14s n=%-3d dichotomy=%-12s (not a cograph)\n", name,
                    g.vertex_count(), klass);
        return;
    }
    const auto& t = std::get<capri::Cotree>(built);
    const capri::ARatioResult a = capri::a_ratio(capri::neighborhood_profile(t));
    std::printf("%-14s n=%-3d dichotomy=%-12s a=%-5s capacity=%s\n", name,
                g.vertex_count(), klass, a.value.str().c_str(),
                capri::tensor_capacity_cograph(t).str().c_str());
}

}  // namespace

int main() {
    row("K1", capri::complete_graph(1));
    row("K2", capri::complete_graph(2));
    row("K5", capri::complete_graph(5));
    row("star:3", capri::star_graph(3));
    row("paw", capri::paw_graph());
    row("K222", capri::complete_multipartite({2, 2, 2}));
    row("K331", capri::complete_multipartite({3, 3, 1}));
    row("C4", capri::cycle_graph(4));
    row("C5", capri::cycle_graph(5));
    return 0;
}
