#include "eulersym/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eulersym {

namespace {

bool is_bijection(const std::vector<int>& image, int n) {
    if (static_cast<int>(image.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : image) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

std::vector<int> cycle_lengths(const std::vector<int>& image) {
    std::vector<int> lengths;
    std::vector<bool> seen(image.size(), false);
    for (size_t s = 0; s < image.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        size_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = image[x];
        }
        lengths.push_back(len);
    }
    return lengths;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& image) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(image.size(), false);
    for (size_t s = 0; s < image.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit;
        size_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            orbit.push_back(static_cast<int>(x));
            x = image[x];
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace

bool Automorphism::is_identity() const {
    for (int i = 0; i < static_cast<int>(map_.vertex_image.size()); ++i)
        if (map_.vertex_image[i] != i) return false;
    for (int i = 0; i < static_cast<int>(map_.edge_image.size()); ++i)
        if (map_.edge_image[i] != i) return false;
    return true;
}

std::optional<std::string> check_graph_map(const Multigraph& g, const GraphMap& m) {
    if (!is_bijection(m.vertex_image, g.vertex_count()))
        return "vertex_image is not a bijection on 0.." + std::to_string(g.vertex_count() - 1);
    if (!is_bijection(m.edge_image, g.edge_count()))
        return "edge_image is not a bijection on 0.." + std::to_string(g.edge_count() - 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = m.vertex_image[g.ends(e)[0]];
        VertexId v = m.vertex_image[g.ends(e)[1]];
        if (u > v) std::swap(u, v);
        const auto& image_ends = g.ends(m.edge_image[e]);
        if (image_ends[0] != u || image_ends[1] != v)
            return "incidence violated at edge " + std::to_string(e) + ": endpoints map to {" +
                   std::to_string(u) + "," + std::to_string(v) + "} but edge_image " +
                   std::to_string(m.edge_image[e]) + " joins {" + std::to_string(image_ends[0]) +
                   "," + std::to_string(image_ends[1]) + "}";
    }
    return std::nullopt;
}

Automorphism validate_automorphism(const Multigraph& g, GraphMap m) {
    if (auto failure = check_graph_map(g, m))
        throw std::invalid_argument(*failure);
    return Automorphism(&g, std::move(m));
}

Automorphism identity_automorphism(const Multigraph& g) {
    GraphMap m;
    m.vertex_image.resize(g.vertex_count());
    m.edge_image.resize(g.edge_count());
    std::iota(m.vertex_image.begin(), m.vertex_image.end(), 0);
    std::iota(m.edge_image.begin(), m.edge_image.end(), 0);
    return validate_automorphism(g, std::move(m));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (a.host() != b.host())
        throw std::invalid_argument("cannot compose automorphisms of different graphs");
    GraphMap m;
    m.vertex_image.resize(a.vertex_image().size());
    m.edge_image.resize(a.edge_image().size());
    for (size_t v = 0; v < m.vertex_image.size(); ++v)
        m.vertex_image[v] = b.vertex(a.vertex_image()[v]);
    for (size_t e = 0; e < m.edge_image.size(); ++e)
        m.edge_image[e] = b.edge(a.edge_image()[e]);
    return validate_automorphism(*a.host(), std::move(m));
}

Automorphism inverse(const Automorphism& a) {
    GraphMap m;
    m.vertex_image.resize(a.vertex_image().size());
    m.edge_image.resize(a.edge_image().size());
    for (size_t v = 0; v < m.vertex_image.size(); ++v)
        m.vertex_image[a.vertex_image()[v]] = static_cast<VertexId>(v);
    for (size_t e = 0; e < m.edge_image.size(); ++e)
        m.edge_image[a.edge_image()[e]] = static_cast<EdgeId>(e);
    return validate_automorphism(*a.host(), std::move(m));
}

Automorphism power(const Automorphism& a, long long k) {
    long long n = automorphism_order(a);
    k %= n;
    if (k < 0) k += n;
    Automorphism result = identity_automorphism(*a.host());
    Automorphism base = a;
    while (k > 0) {
        if (k & 1) result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

long long automorphism_order(const Automorphism& a) {
    long long order = 1;
    for (int len : cycle_lengths(a.vertex_image())) order = std::lcm(order, (long long)len);
    for (int len : cycle_lengths(a.edge_image())) order = std::lcm(order, (long long)len);
    return order;
}

CyclicAction cyclic_action(const Automorphism& a) {
    CyclicAction c{a, 1, {}, {}};
    c.order = automorphism_order(a);
    c.edge_orbits = cycles_of(a.edge_image());
    c.vertex_orbits = cycles_of(a.vertex_image());
    return c;
}

ActionClassification classify_action(const CyclicAction& c) {
    ActionClassification out;
    long long edge_order = 1;
    for (const auto& orbit : c.edge_orbits)
        edge_order = std::lcm(edge_order, (long long)orbit.size());
    out.edge_group_order = edge_order;
    long long ne = static_cast<long long>(c.generator.edge_image().size());
    if (ne == 0) return out;
    if (c.edge_orbits.size() == 1 && edge_order == ne) {
        out.kind = ActionClass::Regular;
        out.faithful_on_each_orbit = true;
    } else if (c.edge_orbits.size() == 2 && 2 * edge_order == ne) {
        out.kind = ActionClass::BiRegular;
        // Two orbits with lcm = |E|/2 forces equal sizes; the induced
        // group restricts injectively to each, which is the faithfulness
        // required by the definition.
        out.faithful_on_each_orbit =
            c.edge_orbits[0].size() == c.edge_orbits[1].size();
        out.degenerate = (ne == 2);
    }
    return out;
}

const char* to_string(ActionClass c) {
    switch (c) {
        case ActionClass::Regular: return "Regular";
        case ActionClass::BiRegular: return "BiRegular";
        default: return "Neither";
    }
}

std::vector<Automorphism> edge_kernel(const Multigraph& g, const std::vector<Automorphism>& auts) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("edge_kernel requires a graph without isolated vertices");
    std::vector<Automorphism> kernel;
    for (const auto& a : auts) {
        bool trivial_on_edges = true;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (a.edge(e) != e) { trivial_on_edges = false; break; }
        if (trivial_on_edges) kernel.push_back(a);
    }
    for (const auto& a : kernel) {
        if (a.is_identity()) continue;
        // A nontrivial kernel element moves some vertex v; all edges at v
        // must also be incident with v's image, i.e. {v, v^a} spans a
        // K2^(lambda) component.
        bool found_k2 = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            VertexId w = a.vertex(v);
            if (w == v) continue;
            bool all_shared = g.degree(v) > 0;
            for (EdgeId e : g.incident_edges(v))
                if (g.other_end(e, v) != w) { all_shared = false; break; }
            for (EdgeId e : g.incident_edges(w))
                if (g.other_end(e, w) != v) { all_shared = false; break; }
            if (all_shared) { found_k2 = true; break; }
        }
        if (!found_k2)
            throw std::logic_error("edge-kernel element without a K2 component; input maps cannot all be automorphisms");
    }
    return kernel;
}

namespace {

struct EdgeActionSolver {
    const Multigraph& g;
    const std::vector<EdgeId>& edge_map;
    std::vector<std::vector<VertexId>> candidates;
    std::vector<VertexId> order;
    std::vector<VertexId> image;
    std::vector<bool> used;
    std::optional<Automorphism> found;

    bool consistent(VertexId v, VertexId target) const {
        for (EdgeId e : g.incident_edges(v)) {
            VertexId w = g.other_end(e, v);
            if (image[w] < 0) continue;
            const auto& ie = g.ends(edge_map[e]);
            VertexId a = target, b = image[w];
            if (a > b) std::swap(a, b);
            if (ie[0] != a || ie[1] != b) return false;
        }
        return true;
    }

    void search(size_t depth) {
        if (found) return;
        if (depth == order.size()) {
            GraphMap m{image, edge_map};
            if (!check_graph_map(g, m))
                found = validate_automorphism(g, std::move(m));
            return;
        }
        VertexId v = order[depth];
        for (VertexId target : candidates[v]) {
            if (used[target] || !consistent(v, target)) continue;
            used[target] = true;
            image[v] = target;
            search(depth + 1);
            image[v] = -1;
            used[target] = false;
            if (found) return;
        }
    }
};

} // namespace

std::optional<Automorphism> automorphism_with_edge_action(const Multigraph& g,
                                                          const std::vector<EdgeId>& edge_map) {
    if (!is_bijection(edge_map, g.edge_count())) return std::nullopt;
    int n = g.vertex_count();
    EdgeActionSolver solver{g, edge_map, {}, {}, std::vector<VertexId>(n, -1),
                            std::vector<bool>(n, false), std::nullopt};
    solver.candidates.resize(n);
    std::vector<VertexId> isolated;
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            isolated.push_back(v);
            continue;
        }
        std::vector<VertexId> cand;
        bool first = true;
        for (EdgeId e : g.incident_edges(v)) {
            const auto& ie = g.ends(edge_map[e]);
            if (first) {
                cand = {ie[0], ie[1]};
                first = false;
            } else {
                std::erase_if(cand, [&](VertexId c) { return c != ie[0] && c != ie[1]; });
            }
            if (cand.empty()) return std::nullopt;
        }
        solver.candidates[v] = std::move(cand);
        solver.order.push_back(v);
    }
    // Pinned vertices first keeps the backtrack shallow.
    std::stable_sort(solver.order.begin(), solver.order.end(), [&](VertexId a, VertexId b) {
        return solver.candidates[a].size() < solver.candidates[b].size();
    });
    for (VertexId v : isolated) {
        solver.image[v] = v;
        solver.used[v] = true;
    }
    solver.search(0);
    return solver.found;
}

} // namespace eulersym
