#include "doctest.h"

#include "eulersym/json_io.hpp"

using namespace eulersym;

TEST_CASE("graph JSON round trip") {
    FamilyInstance inst = build(FamilySpec::ck(1, 2, 1));
    Multigraph back = graph_from_json(graph_to_json(*inst.graph));
    CHECK(back == *inst.graph);
    CHECK(graph_to_json(back) == graph_to_json(*inst.graph));
}

TEST_CASE("graph JSON validates dense ids") {
    nlohmann::json j{{"vertex_count", 2},
                     {"edges", {{{"id", 1}, {"ends", {0, 1}}, {"label", nullptr}}}}};
    CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);
}

TEST_CASE("automorphism JSON round trip") {
    FamilyInstance inst = build(FamilySpec::kst(2, 3));
    GraphMap m = graph_map_from_json(automorphism_to_json(inst.g));
    CHECK(m.vertex_image == inst.g.vertex_image());
    CHECK(m.edge_image == inst.g.edge_image());
}

TEST_CASE("spec JSON round trip over the enumeration") {
    for (const FamilySpec& spec : enumerate_specs({6, 8, true, {}}))
        CHECK(spec_from_json(spec_to_json(spec)) == spec);
    FamilySpec circ = FamilySpec::circulant(8, {{1, 1}, {7, 1}, {4, 2}}, 2);
    CHECK(spec_from_json(spec_to_json(circ)) == circ);
}

TEST_CASE("cycle JSON round trip") {
    FamilyInstance inst = build(FamilySpec::cycle_n(4));
    std::vector<EdgeId> edges{0, 1, 2, 3};
    EdgeCycle c = make_cycle(*inst.graph, edges, 0);
    EdgeCycle back = cycle_from_json(cycle_to_json(c));
    CHECK(back.edges == c.edges);
    CHECK(back.vertex_chain == c.vertex_chain);
}

TEST_CASE("group JSON round trip") {
    FiniteGroup d8 = FiniteGroup::dihedral(8);
    FiniteGroup back = group_from_json(group_to_json(d8));
    CHECK(back.table() == d8.table());
}

TEST_CASE("DOT export has one line per parallel edge") {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    std::string dot = graph_to_dot(g);
    CHECK(dot == "graph {\n  0 -- 1 [label=\"0\"]\n  0 -- 1 [label=\"1\"]\n}\n");
}
