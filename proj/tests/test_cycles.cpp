#include "doctest.h"

#include <numeric>

#include "eulersym/aut.hpp"
#include "eulersym/cycles.hpp"
#include "eulersym/families.hpp"

using namespace eulersym;

namespace {

// computed by this file's enumerator and frozen as a regression value
constexpr size_t FROZEN_C32_CLASSES = 16;

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

EdgeCycle standard_cycle(const Multigraph& g) {
    std::vector<EdgeId> edges(g.edge_count());
    std::iota(edges.begin(), edges.end(), 0);
    return make_cycle(g, edges, 0);
}

Automorphism rotation_of(const Multigraph& c, int n) {
    GraphMap m;
    for (int i = 0; i < n; ++i) m.vertex_image.push_back((i + 1) % n);
    for (int i = 0; i < n; ++i) m.edge_image.push_back((i + 1) % n);
    return validate_automorphism(c, std::move(m));
}

} // namespace

TEST_CASE("make_cycle") {
    SUBCASE("C3 standard chain") {
        Multigraph c3 = cycle(3);
        EdgeCycle c = make_cycle(c3, {0, 1, 2}, 0);
        CHECK(c.vertex_chain == std::vector<VertexId>{0, 1, 2, 0});
    }
    SUBCASE("K2^(2) chain alternates the two vertices") {
        Multigraph g(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        EdgeCycle c = make_cycle(g, {0, 1}, 0);
        CHECK(c.vertex_chain == std::vector<VertexId>{0, 1, 0});
        EdgeCycle from_other_end = make_cycle(g, {0, 1}, 1);
        CHECK(from_other_end.vertex_chain == std::vector<VertexId>{1, 0, 1});
    }
    SUBCASE("non-standard 6-cycle of C3^(2)") {
        // copies of e0={0,1}, e1={1,2}, e2={0,2} at ids 0..2 and 3..5
        Multigraph g = extender(cycle(3), 2);
        EdgeCycle c = make_cycle(g, {0, 3, 1, 2, 5, 4}, 1);
        CHECK(c.vertex_chain == std::vector<VertexId>{1, 0, 1, 2, 0, 2, 1});
        CHECK(is_euler(g, c));
    }
    SUBCASE("errors: repeated edge, broken chain") {
        Multigraph c4 = cycle(4);
        CHECK_THROWS_AS(make_cycle(c4, {0, 0, 1}, 0), std::invalid_argument);
        CHECK_THROWS_AS(make_cycle(c4, {0, 2, 1, 3}, 0), std::invalid_argument);
        CHECK_THROWS_AS(make_cycle(c4, {0, 1, 2}, 0), std::invalid_argument); // does not close
    }
}

TEST_CASE("is_euler") {
    Multigraph c3 = cycle(3);
    CHECK(is_euler(c3, standard_cycle(c3)));
    // a 4-cycle inside C4^(2) misses the other copy
    Multigraph g = extender(cycle(4), 2);
    CHECK_FALSE(is_euler(g, make_cycle(g, {0, 1, 2, 3}, 0)));
}

TEST_CASE("sequence_class_equal") {
    Multigraph c3 = cycle(3);
    EdgeCycle c = standard_cycle(c3);
    CHECK(sequence_class_equal(c, make_cycle(c3, {1, 2, 0}, 1)));
    CHECK(sequence_class_equal(c, make_cycle(c3, {2, 1, 0}, 0)));
    Multigraph c4 = cycle(4);
    auto classes = enumerate_euler_cycles(c4, 10);
    REQUIRE(classes.size() == 1); // only one class exists for C4
    CHECK(sequence_class_equal(classes[0], standard_cycle(c4)));
}

TEST_CASE("dihedral elements") {
    SUBCASE("tau * phi * tau = phi^-1") {
        int l = 7;
        auto phi = DihedralElement::phi(l), tau = DihedralElement::tau(l);
        CHECK(compose(compose(tau, phi), tau) == inverse(phi));
    }
    SUBCASE("D(C) has order 2l") {
        for (int l : {3, 4, 6}) {
            auto all = dihedral_closure(l, {DihedralElement::phi(l), DihedralElement::tau(l)});
            CHECK(static_cast<int>(all.size()) == 2 * l);
        }
    }
    SUBCASE("phi tau acts as e_i -> e_{l-i} (0-based p -> l-2-p)") {
        int l = 6;
        auto pt = DihedralElement::phi_tau(l);
        for (int p = 0; p < l; ++p) CHECK(pt.apply(p) == ((l - 2 - p) % l + l) % l);
    }
}

TEST_CASE("induced_element") {
    SUBCASE("C5 rotation induces phi") {
        Multigraph c5 = cycle(5);
        auto elt = induced_element(c5, standard_cycle(c5), rotation_of(c5, 5));
        REQUIRE(elt.has_value());
        CHECK(*elt == DihedralElement::phi(5));
    }
    SUBCASE("identity induces shift 0") {
        Multigraph c4 = cycle(4);
        auto elt = induced_element(c4, standard_cycle(c4), identity_automorphism(c4));
        REQUIRE(elt.has_value());
        CHECK(*elt == DihedralElement::identity(4));
    }
    SUBCASE("homomorphism on the stabiliser") {
        Multigraph c6 = cycle(6);
        EdgeCycle c = standard_cycle(c6);
        Automorphism g = rotation_of(c6, 6);
        for (const Automorphism& a : {g, power(g, 2), power(g, 3)})
            for (const Automorphism& b : {g, power(g, 4)}) {
                auto ia = induced_element(c6, c, a), ib = induced_element(c6, c, b);
                auto iab = induced_element(c6, c, compose(a, b));
                REQUIRE((ia && ib && iab));
                CHECK(*iab == compose(*ia, *ib));
            }
    }
}

TEST_CASE("h_group and is_symmetrical") {
    SUBCASE("C5 standard cycle has H = D(C)") {
        Multigraph c5 = cycle(5);
        HGroup h = h_group(c5, standard_cycle(c5));
        CHECK(h.shape == HShape::DC);
        CHECK(h.elements.size() == 10);
        CHECK(h.exact);
        CHECK(is_symmetrical(c5, standard_cycle(c5)));
    }
    SUBCASE("exact h_group agrees with the full-automorphism variant") {
        Multigraph g = extender(cycle(3), 2);
        for (const EdgeCycle& c : enumerate_euler_cycles(g, 10)) {
            HGroup fast = h_group(g, c);
            HGroup slow = h_group_from(g, c, full_automorphism_group(g), true);
            CHECK(fast.shape == slow.shape);
            CHECK(fast.elements.size() == slow.elements.size());
            CHECK(is_symmetrical(g, c) == is_symmetrical(g, c, full_automorphism_group(g)));
        }
    }
    SUBCASE("K2^(3) has no Euler cycle at all (odd degrees)") {
        Multigraph g(2);
        for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
        CHECK_THROWS_AS(enumerate_euler_cycles(g, 10), std::invalid_argument);
    }
}

TEST_CASE("enumerate_euler_cycles") {
    SUBCASE("C4 has one class") { CHECK(enumerate_euler_cycles(cycle(4), 10).size() == 1); }
    SUBCASE("K2^(2) has one class") {
        Multigraph g(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        CHECK(enumerate_euler_cycles(g, 10).size() == 1);
    }
    SUBCASE("C3^(2) class count: frozen oracle value") {
        auto classes = enumerate_euler_cycles(extender(cycle(3), 2), 10);
        for (const auto& c : classes) CHECK(is_euler(extender(cycle(3), 2), c));
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                CHECK_FALSE(sequence_class_equal(classes[i], classes[j]));
        CHECK(classes.size() == FROZEN_C32_CLASSES);
    }
    SUBCASE("cap guard") {
        CHECK_THROWS_AS(enumerate_euler_cycles(cycle(6), 5), std::runtime_error);
    }
    SUBCASE("odd degree is an error") {
        Multigraph star(4);
        for (int i = 1; i < 4; ++i) star.add_edge(0, i);
        CHECK_THROWS_AS(enumerate_euler_cycles(star, 10), std::invalid_argument);
    }
    SUBCASE("disconnected is an error") {
        Multigraph g(6);
        for (int base : {0, 3})
            for (int i = 0; i < 3; ++i) g.add_edge(base + i, base + (i + 1) % 3);
        CHECK_THROWS_AS(enumerate_euler_cycles(g, 10), std::invalid_argument);
    }
}
