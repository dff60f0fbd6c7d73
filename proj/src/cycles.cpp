#include "eulersym/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eulersym {

namespace {
int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

EdgeCycle make_cycle(const Multigraph& g, const std::vector<EdgeId>& edges, VertexId start_vertex) {
    if (edges.empty())
        throw std::invalid_argument("a cycle needs at least one edge");
    std::vector<bool> seen(g.edge_count(), false);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("edge id out of range");
        if (seen[e])
            throw std::invalid_argument("edge " + std::to_string(e) + " repeated in cycle");
        seen[e] = true;
    }
    EdgeCycle c{edges, {start_vertex}};
    VertexId at = start_vertex;
    for (EdgeId e : edges) {
        at = g.other_end(e, at); // throws if the chain breaks
        c.vertex_chain.push_back(at);
    }
    if (at != start_vertex)
        throw std::invalid_argument("edge sequence does not close into a cycle");
    return c;
}

bool is_euler(const Multigraph& g, const EdgeCycle& c) {
    if (c.length() != g.edge_count()) return false;
    std::vector<bool> seen(g.edge_count(), false);
    for (EdgeId e : c.edges) {
        if (e < 0 || e >= g.edge_count() || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

bool sequence_class_equal(const EdgeCycle& c1, const EdgeCycle& c2) {
    int l = c1.length();
    if (c2.length() != l) return false;
    for (int r = 0; r < l; ++r) {
        bool fwd = true, rev = true;
        for (int i = 0; i < l && (fwd || rev); ++i) {
            if (c2.edges[i] != c1.edges[(i + r) % l]) fwd = false;
            if (c2.edges[i] != c1.edges[mod(r - i, l)]) rev = false;
        }
        if (fwd || rev) return true;
    }
    return false;
}

int DihedralElement::apply(int p) const {
    return reflected ? mod(shift - p, ell) : mod(shift + p, ell);
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b) {
    if (a.ell != b.ell)
        throw std::invalid_argument("dihedral elements of different cycle lengths");
    // apply a, then b
    if (!a.reflected && !b.reflected) return {a.ell, mod(a.shift + b.shift, a.ell), false};
    if (!a.reflected && b.reflected) return {a.ell, mod(b.shift - a.shift, a.ell), true};
    if (a.reflected && !b.reflected) return {a.ell, mod(a.shift + b.shift, a.ell), true};
    return {a.ell, mod(b.shift - a.shift, a.ell), false};
}

DihedralElement inverse(const DihedralElement& a) {
    if (a.reflected) return a;
    return {a.ell, mod(-a.shift, a.ell), false};
}

std::vector<DihedralElement> dihedral_closure(int ell, std::vector<DihedralElement> generators) {
    std::set<std::pair<int, bool>> seen;
    std::vector<DihedralElement> elements{DihedralElement::identity(ell)};
    seen.insert({0, false});
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const auto& gen : generators) {
            DihedralElement next = compose(elements[i], gen);
            if (seen.insert({next.shift, next.reflected}).second) elements.push_back(next);
        }
    }
    std::sort(elements.begin(), elements.end(), [](const DihedralElement& a, const DihedralElement& b) {
        return std::tie(a.reflected, a.shift) < std::tie(b.reflected, b.shift);
    });
    return elements;
}

std::vector<DihedralElement> full_dihedral(int ell) {
    std::vector<DihedralElement> all;
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < ell; ++s) all.push_back({ell, s, refl == 1});
    return all;
}

const char* to_string(HShape s) {
    switch (s) {
        case HShape::DC: return "D(C)";
        case HShape::PhiOnly: return "<phi>";
        case HShape::Phi2PhiTau: return "<phi^2,phi*tau>";
        case HShape::Phi2Tau: return "<phi^2,tau>";
        case HShape::Phi2Only: return "<phi^2>";
        default: return "other";
    }
}

bool HGroup::contains(const DihedralElement& e) const {
    return std::find(elements.begin(), elements.end(), e) != elements.end();
}

HShape classify_shape(int ell, const std::vector<DihedralElement>& elements) {
    auto as_set = [](const std::vector<DihedralElement>& v) {
        std::set<std::pair<int, bool>> s;
        for (const auto& e : v) s.insert({e.shift, e.reflected});
        return s;
    };
    auto have = as_set(elements);
    auto phi = DihedralElement::phi(ell);
    auto phi2 = DihedralElement::phi_squared(ell);
    auto tau = DihedralElement::tau(ell);
    auto phi_tau = DihedralElement::phi_tau(ell);
    if (have == as_set(dihedral_closure(ell, {phi, tau}))) return HShape::DC;
    if (have == as_set(dihedral_closure(ell, {phi}))) return HShape::PhiOnly;
    if (have == as_set(dihedral_closure(ell, {phi2, phi_tau}))) return HShape::Phi2PhiTau;
    if (have == as_set(dihedral_closure(ell, {phi2, tau}))) return HShape::Phi2Tau;
    if (have == as_set(dihedral_closure(ell, {phi2}))) return HShape::Phi2Only;
    return HShape::Other;
}

std::optional<std::vector<int>> induced_position_action(const Multigraph& g, const EdgeCycle& c,
                                                        const Automorphism& a) {
    int l = c.length();
    std::vector<int> pos_of(g.edge_count(), -1);
    for (int p = 0; p < l; ++p) pos_of[c.edges[p]] = p;
    std::vector<int> action(l);
    for (int p = 0; p < l; ++p) {
        int q = pos_of[a.edge(c.edges[p])];
        if (q < 0) return std::nullopt;
        action[p] = q;
    }
    return action;
}

std::vector<DihedralElement> induced_elements(const Multigraph& g, const EdgeCycle& c,
                                              const Automorphism& a) {
    std::vector<DihedralElement> out;
    auto action = induced_position_action(g, c, a);
    if (!action) return out;
    int l = c.length();
    for (bool reflected : {false, true}) {
        DihedralElement cand{l, (*action)[0], reflected};
        bool ok = true;
        for (int p = 0; p < l; ++p)
            if (cand.apply(p) != (*action)[p]) { ok = false; break; }
        if (ok) out.push_back(cand);
    }
    return out;
}

std::optional<DihedralElement> induced_element(const Multigraph& g, const EdgeCycle& c,
                                               const Automorphism& a) {
    auto all = induced_elements(g, c, a);
    if (all.empty()) return std::nullopt;
    return all.front(); // unreflected preferred by construction order
}

std::vector<EdgeId> edge_action_of(const EdgeCycle& c, const DihedralElement& elt) {
    int l = c.length();
    std::vector<EdgeId> edge_map(l, -1);
    for (int p = 0; p < l; ++p) edge_map[c.edges[p]] = c.edges[elt.apply(p)];
    return edge_map;
}

std::optional<Automorphism> realize_element(const Multigraph& g, const EdgeCycle& c,
                                            const DihedralElement& elt) {
    return automorphism_with_edge_action(g, edge_action_of(c, elt));
}

HGroup h_group(const Multigraph& g, const EdgeCycle& c) {
    if (!is_euler(g, c))
        throw std::invalid_argument("h_group requires an Euler cycle");
    HGroup out;
    out.exact = true;
    int l = c.length();
    // One realizability test per position action; abstract elements
    // sharing an action (l <= 2) stand or fall together.
    std::map<std::vector<EdgeId>, bool> cache;
    for (const auto& elt : full_dihedral(l)) {
        auto action = edge_action_of(c, elt);
        auto [it, fresh] = cache.try_emplace(action, false);
        if (fresh) it->second = automorphism_with_edge_action(g, action).has_value();
        if (it->second) out.elements.push_back(elt);
    }
    out.shape = classify_shape(l, out.elements);
    return out;
}

HGroup h_group_from(const Multigraph& g, const EdgeCycle& c, const std::vector<Automorphism>& auts,
                    bool auts_complete) {
    int l = c.length();
    std::vector<DihedralElement> gens;
    for (const auto& a : auts)
        for (const auto& e : induced_elements(g, c, a)) gens.push_back(e);
    HGroup out;
    out.elements = dihedral_closure(l, std::move(gens));
    out.exact = auts_complete;
    out.shape = classify_shape(l, out.elements);
    return out;
}

bool is_symmetrical(const Multigraph& g, const EdgeCycle& c) {
    return realize_element(g, c, DihedralElement::phi_squared(c.length())).has_value();
}

bool is_symmetrical(const Multigraph& g, const EdgeCycle& c, const std::vector<Automorphism>& auts) {
    auto phi2 = DihedralElement::phi_squared(c.length());
    for (const auto& a : auts) {
        auto action = induced_position_action(g, c, a);
        if (!action) continue;
        bool match = true;
        for (int p = 0; p < c.length(); ++p)
            if ((*action)[p] != phi2.apply(p)) { match = false; break; }
        if (match) return true;
    }
    return false;
}

namespace {

struct EulerSearch {
    const Multigraph& g;
    std::vector<bool> used;
    std::vector<EdgeId> seq;
    std::vector<VertexId> chain;
    std::set<std::vector<EdgeId>> canon_keys;
    std::vector<EdgeCycle> out;
    VertexId home = 0;

    // Canonical key: the sequence starts with edge 0 in both the found
    // orientation and its reversal; take the lexicographic minimum.
    void emit() {
        std::vector<EdgeId> reversed{0};
        for (int i = static_cast<int>(seq.size()) - 1; i >= 1; --i) reversed.push_back(seq[i]);
        const std::vector<EdgeId>& key = std::min(seq, reversed);
        if (canon_keys.insert(key).second)
            out.push_back(EdgeCycle{seq, chain});
    }

    void extend(VertexId at) {
        if (seq.size() == used.size()) {
            if (at == home) emit();
            return;
        }
        for (EdgeId e : g.incident_edges(at)) {
            if (used[e]) continue;
            used[e] = true;
            seq.push_back(e);
            chain.push_back(g.other_end(e, at));
            extend(chain.back());
            chain.pop_back();
            seq.pop_back();
            used[e] = false;
        }
    }
};

} // namespace

std::vector<EdgeCycle> enumerate_euler_cycles(const Multigraph& g, int cap) {
    if (g.edge_count() == 0) return {};
    if (g.edge_count() > cap)
        throw std::runtime_error("euler enumeration cap exceeded: " + std::to_string(g.edge_count()) +
                                 " edges > cap " + std::to_string(cap));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
    if (!g.is_connected())
        throw std::invalid_argument("graph is not connected");
    EulerSearch search{g, std::vector<bool>(g.edge_count(), false), {}, {}, {}, {}, 0};
    for (VertexId start : g.ends(0)) {
        search.home = start;
        search.used[0] = true;
        search.seq = {0};
        search.chain = {start, g.other_end(0, start)};
        search.extend(search.chain.back());
        search.used[0] = false;
        if (g.ends(0)[0] == g.ends(0)[1]) break; // unreachable: no loops
    }
    return search.out;
}

} // namespace eulersym
