#include "eulersym/bicoset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eulersym {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (table[e][a] != a || table[a][e] != a) ok = false;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw std::invalid_argument("no identity element");
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) { inverse[a] = b; break; }
        if (inverse[a] < 0) throw std::invalid_argument("element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("multiplication table is not associative");
    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.identity_ = identity;
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::dihedral(int order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("dihedral group order must be even and >= 2");
    int m = order / 2;
    // elements 0..m-1: rotations r^i; m..2m-1: reflections s r^i
    auto id = [&](bool refl, int i) { return (refl ? m : 0) + i; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            table[id(false, i)][id(false, j)] = id(false, (i + j) % m);
            table[id(false, i)][id(true, j)] = id(true, (j - i + m) % m);
            table[id(true, i)][id(false, j)] = id(true, (i + j) % m);
            table[id(true, i)][id(true, j)] = id(false, (j - i + m) % m);
        }
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return from_table(std::move(table));
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
    if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
    std::set<int> members(h.begin(), h.end());
    if (!members.count(g.identity())) return false;
    for (int a : h) {
        if (a < 0 || a >= g.order() || !members.count(g.inv(a))) return false;
        for (int b : h)
            if (!members.count(g.mul(a, b))) return false;
    }
    return true;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> members{g.identity()};
    std::vector<int> frontier{g.identity()};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int gen : gens) {
            for (int next : {g.mul(x, gen), g.mul(x, g.inv(gen))})
                if (members.insert(next).second) frontier.push_back(next);
        }
    }
    return Subgroup(members.begin(), members.end());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subgroup core(const FiniteGroup& g, const Subgroup& h) {
    std::set<int> members(h.begin(), h.end());
    Subgroup out(h);
    for (int x = 0; x < g.order(); ++x) {
        Subgroup conj;
        for (int a : h) conj.push_back(g.mul(g.mul(g.inv(x), a), x));
        std::sort(conj.begin(), conj.end());
        out = intersect(out, conj);
    }
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<Subgroup> seen;
    std::vector<Subgroup> queue{Subgroup{g.identity()}};
    seen.insert(queue.front());
    for (size_t i = 0; i < queue.size(); ++i) {
        Subgroup h = queue[i];
        for (int x = 0; x < g.order(); ++x) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            std::vector<int> gens(h.begin(), h.end());
            gens.push_back(x);
            Subgroup bigger = subgroup_generated(g, gens);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    std::vector<Subgroup> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

struct CosetSystem {
    std::vector<int> coset_index; // element -> dense coset id (by sorted min rep)
    int count = 0;
};

CosetSystem right_cosets(const FiniteGroup& g, const Subgroup& h) {
    CosetSystem out;
    out.coset_index.assign(g.order(), -1);
    std::vector<int> rep_of;
    for (int x = 0; x < g.order(); ++x) {
        if (out.coset_index[x] >= 0) continue;
        // x is the minimal representative of Hx since we scan upward
        int id = out.count++;
        rep_of.push_back(x);
        for (int a : h) out.coset_index[g.mul(a, x)] = id;
    }
    return out;
}

void validate_spec(const BiCosetSpec& spec) {
    const FiniteGroup& g = spec.group;
    if (!is_subgroup(g, spec.L)) throw std::invalid_argument("L is not a subgroup");
    if (!is_subgroup(g, spec.R)) throw std::invalid_argument("R is not a subgroup");
    if (!is_subgroup(g, spec.J)) throw std::invalid_argument("J is not a subgroup");
    if (static_cast<int>(spec.L.size()) == g.order())
        throw std::invalid_argument("L must be a proper subgroup");
    if (static_cast<int>(spec.R.size()) == g.order())
        throw std::invalid_argument("R must be a proper subgroup");
    if (static_cast<int>(spec.J.size()) == g.order())
        throw std::invalid_argument("J must be a proper subgroup");
    if (spec.L == spec.R) throw std::invalid_argument("L and R must differ");
    Subgroup lr = intersect(spec.L, spec.R);
    if (intersect(lr, spec.J) != spec.J)
        throw std::invalid_argument("J must be contained in L intersect R");
    if (core(spec.group, spec.J).size() != 1)
        throw std::invalid_argument("J must be core-free in G");
}

} // namespace

BicosResult bicos(const BiCosetSpec& spec) {
    validate_spec(spec);
    const FiniteGroup& g = spec.group;
    CosetSystem left = right_cosets(g, spec.L);
    CosetSystem right = right_cosets(g, spec.R);
    CosetSystem edges = right_cosets(g, spec.J);

    BicosResult out;
    out.left_count = left.count;
    out.right_count = right.count;
    Multigraph graph(left.count + right.count);
    // one edge per J-coset, in coset-id (sorted representative) order
    std::vector<int> edge_rep(edges.count, -1);
    for (int x = g.order() - 1; x >= 0; --x) edge_rep[edges.coset_index[x]] = x;
    for (int e = 0; e < edges.count; ++e) {
        int y = edge_rep[e];
        graph.add_edge(left.coset_index[y], left.count + right.coset_index[y],
                       "J*" + std::to_string(y));
    }
    out.graph = std::make_shared<Multigraph>(std::move(graph));

    out.left_vertex_of.resize(g.order());
    out.right_vertex_of.resize(g.order());
    out.edge_of.resize(g.order());
    for (int x = 0; x < g.order(); ++x) {
        out.left_vertex_of[x] = left.coset_index[x];
        out.right_vertex_of[x] = left.count + right.coset_index[x];
        out.edge_of[x] = edges.coset_index[x];
    }

    for (int z = 0; z < g.order(); ++z) {
        GraphMap m;
        m.vertex_image.resize(out.graph->vertex_count());
        m.edge_image.resize(out.graph->edge_count());
        for (int x = 0; x < g.order(); ++x) {
            m.vertex_image[left.coset_index[x]] = left.coset_index[g.mul(x, z)];
            m.vertex_image[left.count + right.coset_index[x]] =
                left.count + right.coset_index[g.mul(x, z)];
            m.edge_image[edges.coset_index[x]] = edges.coset_index[g.mul(x, z)];
        }
        out.action.push_back(validate_automorphism(*out.graph, std::move(m)));
    }
    return out;
}

bool BicosProperties::consistent() const {
    return connected_group == connected_graph && complete_group == complete_graph &&
           multiplicity_constant && graph_multiplicity == lambda &&
           left_valency == left_valency_group && right_valency == right_valency_group;
}

BicosProperties bicos_properties(const BiCosetSpec& spec) {
    BicosProperties out;
    const FiniteGroup& g = spec.group;
    Subgroup lr = intersect(spec.L, spec.R);
    out.s = static_cast<int>(spec.L.size() / lr.size());
    out.t = static_cast<int>(spec.R.size() / lr.size());
    out.lambda = static_cast<int>(lr.size() / spec.J.size());
    out.left_valency_group = static_cast<int>(spec.L.size() / spec.J.size());
    out.right_valency_group = static_cast<int>(spec.R.size() / spec.J.size());

    std::vector<int> gens(spec.L.begin(), spec.L.end());
    gens.insert(gens.end(), spec.R.begin(), spec.R.end());
    out.connected_group = static_cast<int>(subgroup_generated(g, gens).size()) == g.order();
    {
        std::set<int> products;
        for (int l : spec.L)
            for (int r : spec.R) products.insert(g.mul(l, r));
        out.complete_group = static_cast<int>(products.size()) == g.order();
    }

    BicosResult built = bicos(spec);
    const Multigraph& graph = *built.graph;
    out.connected_graph = graph.is_connected();
    out.complete_graph = true;
    for (int u = 0; u < built.left_count && out.complete_graph; ++u)
        for (int v = 0; v < built.right_count; ++v)
            if (graph.multiplicity(u, built.left_count + v) == 0) {
                out.complete_graph = false;
                break;
            }
    out.multiplicity_constant = true;
    out.graph_multiplicity = 0;
    for (int u = 0; u < built.left_count; ++u)
        for (int v = 0; v < built.right_count; ++v) {
            int m = graph.multiplicity(u, built.left_count + v);
            if (m == 0) continue;
            if (out.graph_multiplicity == 0) out.graph_multiplicity = m;
            else if (out.graph_multiplicity != m) out.multiplicity_constant = false;
        }
    out.left_valency = graph.degree(0);
    out.right_valency = graph.degree(built.left_count);
    for (int u = 0; u < built.left_count; ++u)
        if (graph.degree(u) != out.left_valency) out.multiplicity_constant = false;
    for (int v = 0; v < built.right_count; ++v)
        if (graph.degree(built.left_count + v) != out.right_valency)
            out.multiplicity_constant = false;
    return out;
}

EdgeTransitiveDecomposition from_edge_transitive(const Multigraph& g,
                                                 const std::vector<Automorphism>& auts) {
    if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("graph has isolated vertices");
    auto base = base_graph_and_multiplicity(g);
    if (!base) throw std::invalid_argument("graph does not have constant edge-multiplicity");

    // index the given group
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    for (size_t i = 0; i < auts.size(); ++i)
        index[{auts[i].vertex_image(), auts[i].edge_image()}] = static_cast<int>(i);
    if (index.size() != auts.size()) throw std::invalid_argument("duplicate automorphisms");
    auto find_index = [&](const Automorphism& a) {
        auto it = index.find({a.vertex_image(), a.edge_image()});
        if (it == index.end())
            throw std::invalid_argument("automorphism list is not closed under composition");
        return it->second;
    };

    // transitivity hypotheses
    {
        std::set<EdgeId> edge_orbit;
        for (const auto& a : auts) edge_orbit.insert(a.edge(0));
        std::set<EdgeId> closure(edge_orbit);
        bool grew = true;
        while (grew) {
            grew = false;
            for (EdgeId e : std::vector<EdgeId>(closure.begin(), closure.end()))
                for (const auto& a : auts)
                    if (closure.insert(a.edge(e)).second) grew = true;
        }
        if (static_cast<int>(closure.size()) != g.edge_count())
            throw std::invalid_argument("group is not transitive on edges");
        std::set<VertexId> v_orbit_reps;
        std::vector<int> orbit_of(g.vertex_count(), -1);
        int orbits = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (orbit_of[v] >= 0) continue;
            std::vector<VertexId> stack{v};
            orbit_of[v] = orbits;
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                for (const auto& a : auts)
                    if (orbit_of[a.vertex(x)] < 0) {
                        orbit_of[a.vertex(x)] = orbits;
                        stack.push_back(a.vertex(x));
                    }
            }
            ++orbits;
        }
        if (orbits != 2) throw std::invalid_argument("group must have exactly two vertex orbits");
    }

    VertexId alpha = g.ends(0)[0], beta = g.ends(0)[1];
    Subgroup L, R, J;
    for (size_t i = 0; i < auts.size(); ++i) {
        if (auts[i].vertex(alpha) == alpha) L.push_back(static_cast<int>(i));
        if (auts[i].vertex(beta) == beta) R.push_back(static_cast<int>(i));
        if (auts[i].edge(0) == 0) J.push_back(static_cast<int>(i));
    }
    if (L == R) {
        EdgeTransitiveDecomposition out;
        out.matching_case = true;
        out.r = g.vertex_count() / 2;
        out.lambda = base->second;
        return out;
    }
    std::vector<std::vector<int>> table(auts.size(), std::vector<int>(auts.size()));
    for (size_t a = 0; a < auts.size(); ++a)
        for (size_t b = 0; b < auts.size(); ++b)
            table[a][b] = find_index(compose(auts[a], auts[b]));
    EdgeTransitiveDecomposition out;
    out.lambda = base->second;
    out.spec = BiCosetSpec{FiniteGroup::from_table(std::move(table)), std::move(L), std::move(R),
                           std::move(J)};
    validate_spec(*out.spec); // includes the core-free check
    return out;
}

namespace {

CyclicEdgeTransitiveRow classify_connected(const Multigraph& g, const CyclicAction& c) {
    CyclicEdgeTransitiveRow row;
    auto base = base_graph_and_multiplicity(g);
    if (!base)
        throw std::invalid_argument("edge-transitive cyclic action on non-constant multiplicity");
    row.lambda = base->second;
    row.group_order = classify_action(c).edge_group_order;
    row.vertex_transitive = c.vertex_orbits.size() == 1;
    row.edge_transitive = c.edge_orbits.size() == 1;
    // arc orbit of (alpha, e0): arcs are (vertex, incident edge) pairs
    {
        std::set<std::pair<VertexId, EdgeId>> orbit;
        VertexId v = g.ends(0)[0];
        EdgeId e = 0;
        for (long long k = 0; k < 2 * row.group_order; ++k) {
            orbit.insert({v, e});
            v = c.generator.vertex(v);
            e = c.generator.edge(e);
        }
        row.arc_transitive = static_cast<long long>(orbit.size()) == 2LL * g.edge_count();
    }
    const Multigraph& b = base->first;
    bool all_two = true;
    for (VertexId v = 0; v < b.vertex_count(); ++v)
        if (b.degree(v) != 2) { all_two = false; break; }
    if (all_two) {
        row.gamma0 = "C_n";
        row.n = b.vertex_count();
        return row;
    }
    // otherwise the classification gives a complete bipartite base
    std::vector<int> side(b.vertex_count(), -1);
    std::vector<VertexId> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : b.incident_edges(v)) {
            VertexId w = b.other_end(e, v);
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                throw std::invalid_argument("base graph is neither a cycle nor bipartite");
            }
        }
    }
    int s = static_cast<int>(std::count(side.begin(), side.end(), 0));
    int t = b.vertex_count() - s;
    for (VertexId v = 0; v < b.vertex_count(); ++v)
        if (b.degree(v) != (side[v] == 0 ? t : s))
            throw std::invalid_argument("base graph is not complete bipartite");
    row.gamma0 = "K_{s,t}";
    row.s = s;
    row.t = t;
    return row;
}

} // namespace

CyclicEdgeTransitiveRow cyclic_edge_transitive_classification(const Multigraph& g,
                                                              const CyclicAction& c) {
    ActionClassification cls = classify_action(c);
    if (cls.kind != ActionClass::Regular)
        throw std::invalid_argument("classification requires a cyclic action regular on E");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("graph has isolated vertices");
    if (g.is_connected()) {
        if (g.vertex_count() < 3)
            throw std::invalid_argument("connected classification requires |V| >= 3");
        return classify_connected(g, c);
    }
    auto comps = components(g);
    int r = static_cast<int>(comps.size());
    CyclicEdgeTransitiveRow row;
    row.disconnected = true;
    row.component_count = r;
    // restrict g^r to the first component
    const SubgraphView& comp = comps.front();
    Automorphism gr = power(c.generator, r);
    std::vector<int> vertex_pos(g.vertex_count(), -1), edge_pos(g.edge_count(), -1);
    for (int i = 0; i < comp.graph.vertex_count(); ++i) vertex_pos[comp.vertex_to_host[i]] = i;
    for (int i = 0; i < comp.graph.edge_count(); ++i) edge_pos[comp.edge_to_host[i]] = i;
    GraphMap m;
    m.vertex_image.resize(comp.graph.vertex_count());
    m.edge_image.resize(comp.graph.edge_count());
    for (int i = 0; i < comp.graph.vertex_count(); ++i) {
        int host_image = gr.vertex(comp.vertex_to_host[i]);
        if (vertex_pos[host_image] < 0)
            throw std::invalid_argument("generator power does not stabilise the component");
        m.vertex_image[i] = vertex_pos[host_image];
    }
    for (int i = 0; i < comp.graph.edge_count(); ++i)
        m.edge_image[i] = edge_pos[gr.edge(comp.edge_to_host[i])];
    Automorphism restricted = validate_automorphism(comp.graph, std::move(m));
    if (comp.graph.vertex_count() == 2) {
        row.gamma0 = "K_2";
        row.lambda = comp.graph.edge_count();
        row.group_order = classify_action(cyclic_action(c.generator)).edge_group_order;
        return row;
    }
    CyclicEdgeTransitiveRow inner = classify_connected(comp.graph, cyclic_action(restricted));
    inner.disconnected = true;
    inner.component_count = r;
    inner.group_order = classify_action(c).edge_group_order;
    return inner;
}

} // namespace eulersym
