#include "doctest.h"

#include <numeric>

#include "eulersym/extender_lift.hpp"
#include "eulersym/families.hpp"

using namespace eulersym;

namespace {

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Automorphism rotation_of(const Multigraph& c, int n) {
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    for (int i = 0; i < n; ++i) m.edge_image.push_back((i + 1) % n);
    return validate_automorphism(c, std::move(m));
}

Automorphism reflection_of(const Multigraph& c, int n) {
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((n - i) % n);
    for (int i = 0; i < n; ++i) m.edge_image.push_back((n - 1 - i + n) % n);
    return validate_automorphism(c, std::move(m));
}

EdgeCycle standard_cycle(const Multigraph& g) {
    std::vector<EdgeId> edges(g.edge_count());
    std::iota(edges.begin(), edges.end(), 0);
    return make_cycle(g, edges, 0);
}

} // namespace

TEST_CASE("lift_automorphism") {
    SUBCASE("C3 rotation lifted by 2 is a single orbit of size 6") {
        Multigraph c3 = cycle(3);
        LiftedAutomorphism lift = lift_automorphism(c3, rotation_of(c3, 3), 2, ActionClass::Regular);
        CyclicAction c = cyclic_action(lift.map);
        CHECK(c.order == 6);
        CHECK(c.edge_orbits.size() == 1);
        CHECK(c.edge_orbits[0].size() == 6);
    }
    SUBCASE("lambda = 1 reproduces the automorphism") {
        Multigraph c3 = cycle(3);
        Automorphism g = rotation_of(c3, 3);
        LiftedAutomorphism lift = lift_automorphism(c3, g, 1, ActionClass::Regular);
        CHECK(lift.map.vertex_image() == g.vertex_image());
        CHECK(lift.map.edge_image() == g.edge_image());
    }
    SUBCASE("K23 generator lifted by 2 is Regular of order 12") {
        FamilyInstance inst = build(FamilySpec::kst(2, 3));
        LiftedAutomorphism lift =
            lift_automorphism(*inst.graph, inst.g, 2, ActionClass::Regular);
        CyclicAction c = cyclic_action(lift.map);
        CHECK(c.order == 12);
        CHECK(classify_action(c).kind == ActionClass::Regular);
        CHECK(lift.extended->edge_count() == 12);
    }
    SUBCASE("mode inconsistent with the action errors") {
        Multigraph c3 = cycle(3);
        CHECK_THROWS_AS(lift_automorphism(c3, rotation_of(c3, 3), 2, ActionClass::BiRegular),
                        std::invalid_argument);
    }
    SUBCASE("vertex orbits and class preserved across desk-scale instances") {
        for (const FamilySpec& spec : enumerate_specs({6, 6, false, {}})) {
            FamilyInstance inst = build(spec);
            for (int lambda : {2, 3}) {
                LiftedAutomorphism lift =
                    lift_automorphism(*inst.graph, inst.g, lambda, inst.expected.kind);
                CyclicAction c = cyclic_action(lift.map);
                CHECK(classify_action(c).kind == inst.expected.kind);
                CHECK(static_cast<int>(c.vertex_orbits.size()) ==
                      inst.expected.vertex_orbit_count);
                CHECK(c.order == inst.expected.order * lambda);
            }
        }
    }
}

TEST_CASE("lift_cycle_symmetry") {
    SUBCASE("C3 rotation inducing phi, lambda=2: cycle of length 6, still phi") {
        Multigraph c3 = cycle(3);
        EdgeCycle c = standard_cycle(c3);
        LiftedCycleSymmetry lift =
            lift_cycle_symmetry(c3, c, rotation_of(c3, 3), LiftKind::Phi, 2);
        CHECK(lift.cycle.length() == 6);
        CHECK(is_euler(*lift.extended, lift.cycle));
        auto elts = induced_elements(*lift.extended, lift.cycle, lift.map);
        CHECK(std::find(elts.begin(), elts.end(), DihedralElement::phi(6)) != elts.end());
    }
    SUBCASE("lambda = 1 leaves cycle and map unchanged") {
        Multigraph c4 = cycle(4);
        EdgeCycle c = standard_cycle(c4);
        Automorphism g = rotation_of(c4, 4);
        LiftedCycleSymmetry lift = lift_cycle_symmetry(c4, c, g, LiftKind::Phi, 1);
        CHECK(lift.cycle.edges == c.edges);
        CHECK(lift.map.edge_image() == g.edge_image());
    }
    SUBCASE("K2^(2) tau lift to K2^(4): length-4 cycle, induces tau") {
        Multigraph g(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        EdgeCycle c = make_cycle(g, {0, 1}, 0);
        // the edge swap acts as tau on positions (and also as phi; the
        // action is what the lift consumes)
        Automorphism swap = validate_automorphism(g, GraphMap{{0, 1}, {1, 0}});
        LiftedCycleSymmetry lift = lift_cycle_symmetry(g, c, swap, LiftKind::Tau, 2);
        CHECK(lift.extended->edge_count() == 4);
        auto elts = induced_elements(*lift.extended, lift.cycle, lift.map);
        CHECK(std::find(elts.begin(), elts.end(), DihedralElement::tau(4)) != elts.end());
        // independent re-derivation: the lift's edge action is the
        // expected positional reflection
        auto action = induced_position_action(*lift.extended, lift.cycle, lift.map);
        REQUIRE(action.has_value());
        for (int p = 0; p < 4; ++p) CHECK((*action)[p] == DihedralElement::tau(4).apply(p));
    }
    SUBCASE("all four rows, several bases and lambdas") {
        struct Base {
            std::shared_ptr<Multigraph> g;
            EdgeCycle c;
            std::vector<Automorphism> phi_tau_pair; // [phi-inducer, tau-inducer]
        };
        std::vector<Base> bases;
        for (int n : {3, 4}) {
            auto g = std::make_shared<Multigraph>(cycle(n));
            bases.push_back(
                Base{g, standard_cycle(*g), {rotation_of(*g, n), reflection_of(*g, n)}});
        }
        {
            auto g = std::make_shared<Multigraph>(2);
            g->add_edge(0, 1);
            g->add_edge(0, 1);
            // the edge swap acts as both phi and tau on the length-2 cycle
            Automorphism swap = validate_automorphism(*g, GraphMap{{0, 1}, {1, 0}});
            bases.push_back(Base{g, make_cycle(*g, {0, 1}, 0), {swap, swap}});
        }
        for (const Base& base : bases) {
            int l = base.c.length();
            const Automorphism& phi = base.phi_tau_pair[0];
            const Automorphism& tau = base.phi_tau_pair[1];
            for (int lambda : {2, 3}) {
                std::vector<std::pair<LiftKind, Automorphism>> rows{
                    {LiftKind::Phi, phi},
                    {LiftKind::Phi2, compose(phi, phi)},
                    {LiftKind::Tau, tau},
                    {LiftKind::PhiTau, compose(phi, tau)}};
                for (const auto& [kind, psi] : rows) {
                    LiftedCycleSymmetry lift =
                        lift_cycle_symmetry(*base.g, base.c, psi, kind, lambda);
                    auto elts = induced_elements(*lift.extended, lift.cycle, lift.map);
                    DihedralElement expected = lift_target(kind, l * lambda);
                    CHECK(std::find(elts.begin(), elts.end(), expected) != elts.end());
                }
            }
        }
    }
    SUBCASE("psi not inducing the claimed element is rejected") {
        Multigraph c4 = cycle(4);
        EdgeCycle c = standard_cycle(c4);
        CHECK_THROWS_AS(lift_cycle_symmetry(c4, c, rotation_of(c4, 4), LiftKind::Tau, 2),
                        std::invalid_argument);
    }
    SUBCASE("symmetry corollary: lifted cycles stay symmetrical") {
        Multigraph c5 = cycle(5);
        EdgeCycle c = standard_cycle(c5);
        Automorphism phi2 = power(rotation_of(c5, 5), 2);
        for (int lambda : {2, 3}) {
            LiftedCycleSymmetry lift = lift_cycle_symmetry(c5, c, phi2, LiftKind::Phi2, lambda);
            CHECK(is_symmetrical(*lift.extended, lift.cycle));
        }
    }
}
