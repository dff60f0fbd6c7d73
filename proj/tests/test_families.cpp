#include "doctest.h"

#include <numeric>
#include <set>

#include "eulersym/aut.hpp"
#include "eulersym/extender_lift.hpp"
#include "eulersym/families.hpp"

using namespace eulersym;

TEST_CASE("build: spot checks from the classification") {
    SUBCASE("CycleN(5)") {
        FamilyInstance inst = build(FamilySpec::cycle_n(5));
        CHECK(inst.graph->vertex_count() == 5);
        CHECK(inst.graph->edge_count() == 5);
        CHECK(inst.expected.order == 5);
        CHECK(inst.expected.kind == ActionClass::Regular);
        CHECK(inst.expected.vertex_orbit_count == 1);
    }
    SUBCASE("KK(1,1,1,1,1,1) degenerates to a 2-edge path with |G| = 1") {
        FamilyInstance inst = build(FamilySpec::kk(1, 1, 1, 1, 1, 1));
        CHECK(inst.graph->vertex_count() == 3);
        CHECK(inst.graph->edge_count() == 2);
        CHECK(inst.expected.order == 1);
        CHECK(inst.g.is_identity());
        CHECK(inst.expected.vertex_orbit_count == 3);
    }
    SUBCASE("CK(1,2,1) = K2^(2) + K_{2,1} with |G| = 2") {
        FamilyInstance inst = build(FamilySpec::ck(1, 2, 1));
        CHECK(inst.graph->vertex_count() == 3);
        CHECK(inst.graph->edge_count() == 4);
        CHECK(inst.graph->multiplicity(0, 1) == 2);
        CHECK(inst.expected.order == 2);
        CyclicAction c = cyclic_action(inst.g);
        CHECK(classify_action(c).kind == ActionClass::BiRegular);
        CHECK(c.edge_orbits.size() == 2);
        CHECK(components(*inst.graph).size() == 1);
    }
    SUBCASE("constraint violations name the constraint") {
        CHECK_THROWS_WITH_AS(build(FamilySpec::gamma_2r_2r(4)),
                             "family constraint violated: Gamma2r2r needs odd r >= 3",
                             std::invalid_argument);
        CHECK_THROWS_AS(build(FamilySpec::kst(2, 4)), std::invalid_argument);
        CHECK_THROWS_AS(build(FamilySpec::ck(1, 2, 2)), std::invalid_argument);
        CHECK_THROWS_AS(build(FamilySpec::cycle_n(2)), std::invalid_argument);
    }
}

TEST_CASE("every in-bounds family instance matches its expected action") {
    // build() itself asserts (order, E-orbits, V-orbits, class); this
    // drives it across the desk-scale parameter space
    auto specs = enumerate_specs({10, 16, true, {}});
    CHECK(specs.size() > 100);
    for (const FamilySpec& spec : specs) {
        CAPTURE(spec.describe());
        FamilyInstance inst = build(spec);
        CHECK(power(inst.g, inst.expected.order).is_identity());
    }
}

TEST_CASE("CstCycle dihedral structure") {
    for (auto [r, s, t] : std::vector<std::array<int, 3>>{{2, 1, 2}, {2, 2, 3}, {3, 1, 2}}) {
        FamilyInstance inst = build(FamilySpec::cst_cycle(r, s, t));
        REQUIRE(inst.extra.size() == 1);
        const Automorphism& y = inst.extra[0].second;
        CHECK(compose(y, y).is_identity());
        CHECK(compose(compose(y, inst.g), compose(y, inst.g)).is_identity());
        // <g,y> is regular on E: the union of the two <g>-orbits forms a
        // single orbit of size 2rst with trivial edge stabiliser
        int target = 2 * r * s * t;
        std::set<std::vector<EdgeId>> group;
        std::vector<Automorphism> frontier{identity_automorphism(*inst.graph)};
        group.insert(frontier[0].edge_image());
        std::vector<Automorphism> elements = frontier;
        std::vector<const Automorphism*> gens{&inst.g, &y};
        while (!frontier.empty()) {
            std::vector<Automorphism> next;
            for (const Automorphism& a : frontier)
                for (const Automorphism* gen : gens) {
                    Automorphism b = compose(a, *gen);
                    if (group.insert(b.edge_image()).second) {
                        next.push_back(b);
                        elements.push_back(b);
                    }
                }
            frontier = std::move(next);
        }
        CHECK(static_cast<int>(group.size()) == target); // |D_{2rst}|
        std::set<EdgeId> orbit;
        for (const Automorphism& a : elements) orbit.insert(a.edge(0));
        CHECK(static_cast<int>(orbit.size()) == target);
    }
}

TEST_CASE("GammaNAB connectivity iff gcd(n,a,b) = 1") {
    // the circulant constructor skips the gcd check, so both directions
    // are observable
    for (int n : {6, 8, 9, 12}) {
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                if (n / std::gcd(n, a) < 3) continue;
                bool half_turn = 2 * b % n == 0;
                if (!half_turn && (a == b || a == (n - b) % n)) continue;
                std::vector<std::pair<int, int>> conn{{a, 1}, {n - a, 1}};
                if (half_turn) conn.emplace_back(b, 2);
                else {
                    conn.emplace_back(b, 1);
                    conn.emplace_back(n - b, 1);
                }
                FamilyInstance inst = build(FamilySpec::circulant(n, conn));
                bool connected = inst.graph->is_connected();
                CHECK(connected == (std::gcd(std::gcd(n, a), b) == 1));
            }
    }
}

TEST_CASE("outer lambda equals extender of the base instance") {
    for (const FamilySpec& base_spec : enumerate_specs({6, 6, false, {}})) {
        for (int lambda : {2, 3}) {
            FamilySpec spec = base_spec;
            spec.lambda = lambda;
            FamilyInstance lifted = build(spec);
            FamilyInstance base = build(base_spec);
            Multigraph expected = extender(*base.graph, lambda);
            CHECK(isomorphic(*lifted.graph, expected).has_value());
        }
    }
}

TEST_CASE("enumerate_specs") {
    SUBCASE("CycleN only, tight bounds") {
        auto specs = enumerate_specs({4, 4, false, {FamilyTag::CycleN}});
        REQUIRE(specs.size() == 2);
        CHECK(specs[0].n == 3);
        CHECK(specs[1].n == 4);
    }
    SUBCASE("Kst with |E| <= 8") {
        auto specs = enumerate_specs({20, 8, false, {FamilyTag::Kst}});
        std::set<std::pair<int, int>> st;
        for (const auto& s : specs) st.insert({s.s, s.t});
        CHECK(st.count({1, 2}) == 1);
        CHECK(st.count({1, 3}) == 1);
        CHECK(st.count({2, 3}) == 1);
        CHECK(st.count({3, 4}) == 0); // 12 edges
    }
    SUBCASE("Gamma2r2r with |E| <= 12 is exactly r = 3") {
        auto specs = enumerate_specs({20, 12, false, {FamilyTag::Gamma2r2r}});
        REQUIRE(specs.size() == 1);
        CHECK(specs[0].r == 3);
    }
}

TEST_CASE("recognize") {
    SUBCASE("C6 with its rotation") {
        FamilyInstance inst = build(FamilySpec::cycle_n(6));
        auto matches = recognize(*inst.graph, cyclic_action(inst.g));
        bool found = false;
        for (const auto& spec : matches)
            if (spec.tag == FamilyTag::CycleN && spec.n == 6 && spec.lambda == 1) found = true;
        CHECK(found);
    }
    SUBCASE("K23^(2) with the lifted generator") {
        FamilyInstance inst = build(FamilySpec::kst(2, 3, 2));
        auto matches = recognize(*inst.graph, cyclic_action(inst.g));
        bool found = false;
        for (const auto& spec : matches)
            if (spec.tag == FamilyTag::Kst && spec.s == 2 && spec.t == 3 && spec.lambda == 2)
                found = true;
        CHECK(found);
    }
    SUBCASE("C6 with g^2 (bi-regular) still recognizes CycleN(6)") {
        FamilyInstance inst = build(FamilySpec::cycle_n(6));
        auto matches = recognize(*inst.graph, cyclic_action(power(inst.g, 2)));
        bool found = false;
        for (const auto& spec : matches)
            if (spec.tag == FamilyTag::CycleN && spec.n == 6) found = true;
        CHECK(found);
    }
    SUBCASE("preconditions") {
        FamilyInstance inst = build(FamilySpec::cycle_n(6));
        CHECK_THROWS_AS(recognize(*inst.graph, cyclic_action(identity_automorphism(*inst.graph))),
                        std::invalid_argument);
    }
    SUBCASE("round trip: every in-bounds spec recognizes itself") {
        for (const FamilySpec& spec : enumerate_specs({5, 6, true, {}})) {
            FamilyInstance inst = build(spec);
            if (inst.graph->vertex_count() < 3) continue;
            CAPTURE(spec.describe());
            auto matches = recognize(*inst.graph, cyclic_action(inst.g));
            CHECK(std::find(matches.begin(), matches.end(), spec) != matches.end());
        }
    }
}
