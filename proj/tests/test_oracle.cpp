#include "doctest.h"

#include <set>

#include "eulersym/oracle.hpp"

using namespace eulersym;

TEST_CASE("enumerate_connected_multigraphs") {
    SUBCASE("small counts are right") {
        // connected multigraphs on exactly 2 vertices with <= 4 edges:
        // K2^(1..4)
        auto graphs = enumerate_connected_multigraphs(2, 4, 2);
        CHECK(graphs.size() == 4);
        // connected simple-skeleton sanity: 3 vertices, <= 3 edges:
        // P3, C3, P3 with one doubled edge (two ways -> one up to iso),
        // P3 with the other edge doubled is isomorphic to it
        auto small = enumerate_connected_multigraphs(3, 3, 3);
        // P3, P3+double(1), C3
        CHECK(small.size() == 3);
    }
    SUBCASE("no isomorphic duplicates") {
        auto graphs = enumerate_connected_multigraphs(4, 5, 3);
        std::set<std::string> canons;
        for (const Multigraph& g : graphs) {
            CHECK(g.is_connected());
            CHECK(canons.insert(canonical_form(g)).second);
        }
    }
    SUBCASE("every graph respects the bounds") {
        for (const Multigraph& g : enumerate_connected_multigraphs(4, 6, 3)) {
            CHECK(g.vertex_count() <= 4);
            CHECK(g.edge_count() <= 6);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) > 0);
        }
    }
    SUBCASE("complete against a direct multiplicity-matrix enumeration") {
        // independent oracle: enumerate every upper-triangle multiplicity
        // vector on exactly v labeled vertices and deduplicate
        for (int v : {2, 3, 4}) {
            const int max_e = 5;
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < v; ++a)
                for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
            std::set<std::string> direct;
            std::vector<int> mu(pairs.size(), 0);
            while (true) {
                int total = 0;
                for (int m : mu) total += m;
                if (total >= 1 && total <= max_e) {
                    Multigraph g(v);
                    for (size_t i = 0; i < pairs.size(); ++i)
                        for (int c = 0; c < mu[i]; ++c)
                            g.add_edge(pairs[i].first, pairs[i].second);
                    bool spanning = true;
                    for (int w = 0; w < v; ++w)
                        if (g.degree(w) == 0) spanning = false;
                    if (spanning && g.is_connected()) direct.insert(canonical_form(g));
                }
                size_t i = 0;
                while (i < mu.size() && mu[i] == max_e) mu[i++] = 0;
                if (i == mu.size()) break;
                ++mu[i];
            }
            std::set<std::string> bfs;
            for (const Multigraph& g : enumerate_connected_multigraphs(v, max_e, v))
                if (g.vertex_count() == v) bfs.insert(canonical_form(g));
            CHECK(bfs == direct);
        }
    }
}

TEST_CASE("sweep_theorem1 small bounds") {
    SweepReport report = sweep_theorem1({5, 6}, 2);
    CHECK(report.ok());
    CHECK(report.graphs_scanned > 10);
    CHECK(report.graphs_with_hits > 3);
    CHECK(report.hits_matched > 0);
    // P3's identity is the only degenerate hit at these bounds
    CHECK(report.degenerate_hits == 1);
    for (const auto& failure : report.failures) CAPTURE(failure);
    CHECK(report.failures.empty());
}

TEST_CASE("sweep_theorem2 small bounds") {
    SweepReport report = sweep_theorem2({5, 8}, 2);
    for (const auto& failure : report.failures) CAPTURE(failure);
    CHECK(report.ok());
    CHECK(report.graphs_with_hits > 0);
    CHECK(report.row_counts.at("converse checked") > 0);
}
