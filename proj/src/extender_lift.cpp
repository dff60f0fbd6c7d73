#include "eulersym/extender_lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulersym {

namespace {

// Positions 0..l-1 labelled so that a shifts by 1 (regular) or 2
// (bi-regular, the two orbits interleaved), as in the lifting proof.
std::vector<EdgeId> orbit_position_labels(const Multigraph& g, const Automorphism& a,
                                          ActionClass mode) {
    int l = g.edge_count();
    std::vector<EdgeId> pos_edge(l, -1);
    if (mode == ActionClass::Regular) {
        EdgeId e = 0;
        for (int i = 0; i < l; ++i) {
            pos_edge[i] = e;
            e = a.edge(e);
        }
    } else {
        std::vector<bool> in_first(l, false);
        EdgeId e = 0;
        do {
            in_first[e] = true;
            e = a.edge(e);
        } while (e != 0);
        EdgeId rep_b = 0;
        while (in_first[rep_b]) ++rep_b;
        EdgeId ea = 0, eb = rep_b;
        for (int k = 0; 2 * k < l; ++k) {
            pos_edge[2 * k] = ea;
            pos_edge[2 * k + 1] = eb;
            ea = a.edge(ea);
            eb = a.edge(eb);
        }
    }
    return pos_edge;
}

int wrap_superscript(int j, int lambda) { return (j - 1 + 2 * lambda) % lambda + 1; }

} // namespace

LiftedAutomorphism lift_automorphism(const Multigraph& g, const Automorphism& a, int lambda,
                                     ActionClass mode) {
    if (lambda < 1) throw std::invalid_argument("lift multiplicity must be positive");
    if (a.host() != &g && !(*a.host() == g))
        throw std::invalid_argument("automorphism does not belong to the given graph");
    ActionClassification cls = classify_action(cyclic_action(a));
    if (cls.kind != mode)
        throw std::invalid_argument(std::string("mode ") + to_string(mode) +
                                    " inconsistent with action classification " +
                                    to_string(cls.kind));
    int l = g.edge_count();
    auto pos_edge = orbit_position_labels(g, a, mode);
    std::vector<int> edge_pos(l);
    for (int i = 0; i < l; ++i) edge_pos[pos_edge[i]] = i;

    auto extended = std::make_shared<Multigraph>(extender(g, lambda));
    std::vector<EdgeId> edge_image(extended->edge_count());
    int step = mode == ActionClass::Regular ? 1 : 2;
    for (int x = 0; x < l; ++x) {
        int i = edge_pos[x] + 1; // 1-based position
        for (int j = 1; j <= lambda; ++j) {
            int i2 = i + step;
            int j2 = j;
            if (i2 > l) {
                i2 -= l;
                j2 = wrap_superscript(j + 1, lambda);
            }
            edge_image[(j - 1) * l + x] = (j2 - 1) * l + pos_edge[i2 - 1];
        }
    }
    Automorphism lifted =
        validate_automorphism(*extended, GraphMap{a.vertex_image(), std::move(edge_image)});
    ActionClassification lifted_cls = classify_action(cyclic_action(lifted));
    if (lifted_cls.kind != mode)
        throw std::logic_error("lifted action lost its class");
    return {std::move(extended), std::move(lifted)};
}

const char* to_string(LiftKind k) {
    switch (k) {
        case LiftKind::Phi: return "phi";
        case LiftKind::Phi2: return "phi^2";
        case LiftKind::Tau: return "tau";
        default: return "phi*tau";
    }
}

DihedralElement lift_target(LiftKind k, int ell) {
    switch (k) {
        case LiftKind::Phi: return DihedralElement::phi(ell);
        case LiftKind::Phi2: return DihedralElement::phi_squared(ell);
        case LiftKind::Tau: return DihedralElement::tau(ell);
        default: return DihedralElement::phi_tau(ell);
    }
}

LiftedCycleSymmetry lift_cycle_symmetry(const Multigraph& g, const EdgeCycle& c,
                                        const Automorphism& psi, LiftKind which, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lift multiplicity must be positive");
    if (!is_euler(g, c))
        throw std::invalid_argument("lift_cycle_symmetry requires an Euler cycle");
    int l = c.length();
    {
        auto action = induced_position_action(g, c, psi);
        DihedralElement target = lift_target(which, l);
        bool matches = action.has_value();
        for (int p = 0; matches && p < l; ++p)
            if ((*action)[p] != target.apply(p)) matches = false;
        if (!matches)
            throw std::invalid_argument(std::string("psi does not induce ") + to_string(which) +
                                        " on the cycle");
    }

    auto extended = std::make_shared<Multigraph>(extender(g, lambda));
    LiftedCycleSymmetry out{extended, {}, identity_automorphism(*extended)};

    out.cycle.edges.reserve(static_cast<size_t>(l) * lambda);
    for (int j = 1; j <= lambda; ++j)
        for (int p = 0; p < l; ++p)
            out.cycle.edges.push_back((j - 1) * l + c.edges[p]);
    for (int q = 0; q < l * lambda; ++q) out.cycle.vertex_chain.push_back(c.vertex_chain[q % l]);
    out.cycle.vertex_chain.push_back(c.vertex_chain[0]);

    // Images in 1-based (position i, copy j) coordinates. The phi and
    // phi^2 rows carry the copy into the next block at the seam; the
    // reflections reverse blocks, so tau has no seam case and phi*tau
    // adjusts only at i = l.
    auto image_of = [&](int i, int j) -> std::pair<int, int> {
        switch (which) {
            case LiftKind::Phi:
                return i <= l - 1 ? std::pair{i + 1, j} : std::pair{1, wrap_superscript(j + 1, lambda)};
            case LiftKind::Phi2:
                return i <= l - 2 ? std::pair{i + 2, j}
                                  : std::pair{i + 2 - l, wrap_superscript(j + 1, lambda)};
            case LiftKind::Tau:
                return {l + 1 - i, wrap_superscript(lambda + 1 - j, lambda)};
            default: // PhiTau
                return i <= l - 1 ? std::pair{l - i, wrap_superscript(lambda + 1 - j, lambda)}
                                  : std::pair{l, wrap_superscript(lambda - j, lambda)};
        }
    };

    std::vector<EdgeId> edge_image(extended->edge_count());
    for (int p = 0; p < l; ++p) {
        for (int j = 1; j <= lambda; ++j) {
            auto [i2, j2] = image_of(p + 1, j);
            edge_image[(j - 1) * l + c.edges[p]] = (j2 - 1) * l + c.edges[i2 - 1];
        }
    }
    out.map = validate_automorphism(*extended, GraphMap{psi.vertex_image(), std::move(edge_image)});

    // Cross-check: the lift must induce the same named element on C^(lambda).
    DihedralElement expected = lift_target(which, l * lambda);
    auto induced = induced_elements(*extended, out.cycle, out.map);
    if (std::find(induced.begin(), induced.end(), expected) == induced.end())
        throw std::logic_error(std::string("lift failed to induce ") + to_string(which));
    return out;
}

} // namespace eulersym
