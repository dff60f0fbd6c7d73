#include "doctest.h"

#include <numeric>

#include "eulersym/families.hpp"
#include "eulersym/multigraph.hpp"

using namespace eulersym;

namespace {

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph k23() {
    Multigraph g(5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) g.add_edge(i, 2 + j);
    return g;
}

} // namespace

TEST_CASE("construction rejects loops and bad endpoints") {
    Multigraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(2, 0);
    CHECK(g.ends(0)[0] == 0); // canonical (min,max) order
    CHECK(g.ends(0)[1] == 2);
}

TEST_CASE("edge_induced_subgraph") {
    SUBCASE("alternate edges of C4 give 2K2") {
        Multigraph g = cycle(4);
        SubgraphView view = edge_induced_subgraph(g, {true, false, true, false});
        CHECK(view.graph.vertex_count() == 4);
        CHECK(view.graph.edge_count() == 2);
        for (int v = 0; v < 4; ++v) CHECK(view.graph.degree(v) == 1);
        CHECK(view.edge_to_host == std::vector<EdgeId>{0, 2});
    }
    SUBCASE("full subset of K23 is K23 (vertices renumbered by first touch)") {
        Multigraph g = k23();
        SubgraphView view = edge_induced_subgraph(g, EdgeSubset(6, true));
        CHECK(view.graph.vertex_count() == 5);
        CHECK(view.graph.edge_count() == 6);
        for (EdgeId e = 0; e < 6; ++e) {
            CHECK(view.edge_to_host[e] == e);
            auto mapped = std::array<VertexId, 2>{view.vertex_to_host[view.graph.ends(e)[0]],
                                                  view.vertex_to_host[view.graph.ends(e)[1]]};
            if (mapped[0] > mapped[1]) std::swap(mapped[0], mapped[1]);
            CHECK(mapped == g.ends(e));
        }
    }
    SUBCASE("alternate edges of C6 give 3K2") {
        Multigraph g = cycle(6);
        EdgeSubset s(6, false);
        s[0] = s[2] = s[4] = true;
        SubgraphView view = edge_induced_subgraph(g, s);
        CHECK(view.graph.vertex_count() == 6);
        CHECK(view.graph.edge_count() == 3);
        CHECK(components(view.graph).size() == 3);
    }
    SUBCASE("no isolated vertices in edge-induced subgraphs") {
        Multigraph g = cycle(5);
        EdgeSubset s(5, false);
        s[1] = true;
        SubgraphView view = edge_induced_subgraph(g, s);
        for (int v = 0; v < view.graph.vertex_count(); ++v) CHECK(view.graph.degree(v) > 0);
    }
    SUBCASE("empty subset yields the empty graph") {
        Multigraph g = cycle(3);
        SubgraphView view = edge_induced_subgraph(g, EdgeSubset(3, false));
        CHECK(view.graph.vertex_count() == 0);
        CHECK(view.graph.edge_count() == 0);
    }
}

TEST_CASE("components") {
    SUBCASE("2C3 has two C3 components") {
        Multigraph g(6);
        for (int base : {0, 3})
            for (int i = 0; i < 3; ++i) g.add_edge(base + i, base + (i + 1) % 3);
        auto comps = components(g);
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) {
            CHECK(c.graph.vertex_count() == 3);
            CHECK(c.graph.edge_count() == 3);
        }
    }
    SUBCASE("K23 is connected") { CHECK(components(k23()).size() == 1); }
    SUBCASE("CK2(1,1,1,2) is connected") {
        FamilyInstance inst = build(FamilySpec::ck2(1, 1, 1, 2));
        CHECK(components(*inst.graph).size() == 1);
    }
    SUBCASE("isolated vertices form one-vertex components") {
        Multigraph g(3);
        g.add_edge(0, 1);
        auto comps = components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[1].graph.vertex_count() == 1);
        CHECK(comps[1].graph.edge_count() == 0);
    }
    SUBCASE("partition: every vertex and edge in exactly one component") {
        FamilyInstance inst = build(FamilySpec::ck(2, 3, 1));
        auto comps = components(*inst.graph);
        std::vector<int> vseen(inst.graph->vertex_count(), 0), eseen(inst.graph->edge_count(), 0);
        int degsum_comps = 0;
        for (const auto& c : comps) {
            for (VertexId v : c.vertex_to_host) ++vseen[v];
            for (EdgeId e : c.edge_to_host) ++eseen[e];
            for (int v = 0; v < c.graph.vertex_count(); ++v) degsum_comps += c.graph.degree(v);
        }
        for (int x : vseen) CHECK(x == 1);
        for (int x : eseen) CHECK(x == 1);
        int degsum = 0;
        for (int v = 0; v < inst.graph->vertex_count(); ++v) degsum += inst.graph->degree(v);
        CHECK(degsum_comps == degsum);
    }
}

TEST_CASE("edge_disjoint_union") {
    SUBCASE("C4 + 2K2^(2) on the shared vertex set Z4 has all degrees 4") {
        Multigraph c4 = cycle(4);
        Multigraph matching(4);
        for (int copy = 0; copy < 2; ++copy)
            for (int i = 0; i < 2; ++i) matching.add_edge(i, i + 2);
        std::vector<std::optional<VertexId>> identify{0, 1, 2, 3};
        auto [g, map] = edge_disjoint_union(c4, matching, identify);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 8);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 4);
    }
    SUBCASE("union with the empty graph is the graph itself") {
        Multigraph g = cycle(3);
        auto [u, map] = edge_disjoint_union(g, Multigraph(0), {});
        CHECK(u == g);
    }
    SUBCASE("2C3 as a disjoint union") {
        Multigraph c3 = cycle(3);
        std::vector<std::optional<VertexId>> none(3, std::nullopt);
        auto [g, map] = edge_disjoint_union(c3, c3, none);
        CHECK(g.vertex_count() == 6);
        CHECK(g.edge_count() == 6);
        CHECK(components(g).size() == 2);
    }
    SUBCASE("non-injective identification is rejected") {
        Multigraph c3 = cycle(3);
        std::vector<std::optional<VertexId>> bad{0, 0, std::nullopt};
        CHECK_THROWS_AS(edge_disjoint_union(c3, c3, bad), std::invalid_argument);
    }
}

TEST_CASE("extender") {
    SUBCASE("K2 tripled") {
        Multigraph k2(2);
        k2.add_edge(0, 1);
        Multigraph g = extender(k2, 3);
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 3);
        CHECK(g.multiplicity(0, 1) == 3);
    }
    SUBCASE("K23 doubled has 12 edges and 5 vertices") {
        Multigraph g = extender(k23(), 2);
        CHECK(g.edge_count() == 12);
        CHECK(g.vertex_count() == 5);
    }
    SUBCASE("lambda = 1 copies the graph") {
        Multigraph g = cycle(4);
        Multigraph e = extender(g, 1);
        CHECK(e.vertex_count() == g.vertex_count());
        for (EdgeId i = 0; i < 4; ++i) CHECK(e.ends(i) == g.ends(i));
    }
    SUBCASE("lambda = 0 is rejected") {
        CHECK_THROWS_AS(extender(cycle(3), 0), std::invalid_argument);
    }
    SUBCASE("|E| multiplies and V is unchanged") {
        for (int lambda : {1, 2, 3, 5}) {
            Multigraph g = extender(k23(), lambda);
            CHECK(g.edge_count() == 6 * lambda);
            CHECK(g.vertex_count() == 5);
        }
    }
}

TEST_CASE("base_graph_and_multiplicity") {
    SUBCASE("C3^(2)") {
        auto result = base_graph_and_multiplicity(extender(cycle(3), 2));
        REQUIRE(result.has_value());
        CHECK(result->second == 2);
        CHECK(result->first.edge_count() == 3);
    }
    SUBCASE("simple K23") {
        auto result = base_graph_and_multiplicity(k23());
        REQUIRE(result.has_value());
        CHECK(result->second == 1);
        CHECK(result->first == k23());
    }
    SUBCASE("Gamma(4,1,2) has non-constant multiplicity") {
        FamilyInstance inst = build(FamilySpec::gamma_2r_1r(2));
        // direct count: cycle pairs carry 1 edge, antipodal pairs 2
        CHECK(inst.graph->multiplicity(0, 1) == 1);
        CHECK(inst.graph->multiplicity(0, 2) == 2);
        CHECK(base_graph_and_multiplicity(*inst.graph) == std::nullopt);
    }
    SUBCASE("edgeless input is an error") {
        CHECK_THROWS_AS(base_graph_and_multiplicity(Multigraph(2)), std::invalid_argument);
    }
    SUBCASE("round trip through extender recovers lambda") {
        for (int lambda : {2, 4}) {
            auto result = base_graph_and_multiplicity(extender(k23(), lambda));
            REQUIRE(result.has_value());
            CHECK(result->second == lambda);
            CHECK(result->first.edge_count() == 6);
        }
    }
}

TEST_CASE("degree") {
    Multigraph k2(2);
    k2.add_edge(0, 1);
    CHECK(extender(k2, 3).degree(0) == 3);
    CHECK(extender(k2, 3).degree(1) == 3);
    Multigraph g = extender(k23(), 2);
    CHECK(g.degree(0) == 6); // size-2 part of K_{2,3}^(2)
    FamilyInstance circ = build(FamilySpec::gamma_nab(5, 1, 2));
    for (int v = 0; v < 5; ++v) CHECK(circ.graph->degree(v) == 4);
}
