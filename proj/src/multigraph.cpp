#include "eulersym/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eulersym {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex_count must be nonnegative");
    incidence_.resize(vertex_count);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, std::string label) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (u > v)
        std::swap(u, v);
    EdgeId id = static_cast<EdgeId>(ends_.size());
    ends_.push_back({u, v});
    labels_.push_back(std::move(label));
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    return id;
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = ends_.at(e);
    if (v == a) return b;
    if (v == b) return a;
    throw std::invalid_argument("vertex not incident with edge");
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    int count = 0;
    for (EdgeId e : incidence_.at(u))
        if (ends_[e][0] == u && ends_[e][1] == v) ++count;
    return count;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ == 0) return true;
    std::vector<bool> seen(vertex_count_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : incidence_[v]) {
            VertexId w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

std::vector<int> Multigraph::degree_sequence() const {
    std::vector<int> degs(vertex_count_);
    for (VertexId v = 0; v < vertex_count_; ++v) degs[v] = degree(v);
    return degs;
}

SubgraphView edge_induced_subgraph(const Multigraph& g, const EdgeSubset& subset) {
    if (static_cast<int>(subset.size()) != g.edge_count())
        throw std::invalid_argument("edge subset size does not match host graph");
    std::vector<VertexId> host_to_sub(g.vertex_count(), -1);
    SubgraphView out{Multigraph(0), {}, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!subset[e]) continue;
        for (VertexId v : g.ends(e)) {
            if (host_to_sub[v] < 0) {
                host_to_sub[v] = static_cast<VertexId>(out.vertex_to_host.size());
                out.vertex_to_host.push_back(v);
            }
        }
    }
    out.graph = Multigraph(static_cast<int>(out.vertex_to_host.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!subset[e]) continue;
        out.graph.add_edge(host_to_sub[g.ends(e)[0]], host_to_sub[g.ends(e)[1]], g.label(e));
        out.edge_to_host.push_back(e);
    }
    return out;
}

std::vector<SubgraphView> components(const Multigraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int ncomp = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<SubgraphView> out;
    out.reserve(ncomp);
    std::vector<std::vector<VertexId>> verts(ncomp);
    for (VertexId v = 0; v < g.vertex_count(); ++v) verts[comp[v]].push_back(v);
    std::vector<VertexId> host_to_sub(g.vertex_count(), -1);
    for (int c = 0; c < ncomp; ++c) {
        SubgraphView view{Multigraph(static_cast<int>(verts[c].size())), verts[c], {}};
        for (int i = 0; i < static_cast<int>(verts[c].size()); ++i)
            host_to_sub[verts[c][i]] = i;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (comp[g.ends(e)[0]] != c) continue;
            view.graph.add_edge(host_to_sub[g.ends(e)[0]], host_to_sub[g.ends(e)[1]], g.label(e));
            view.edge_to_host.push_back(e);
        }
        out.push_back(std::move(view));
    }
    return out;
}

std::pair<Multigraph, std::vector<VertexId>>
edge_disjoint_union(const Multigraph& g1, const Multigraph& g2,
                    const std::vector<std::optional<VertexId>>& identify) {
    if (static_cast<int>(identify.size()) != g2.vertex_count())
        throw std::invalid_argument("identification map size does not match g2");
    std::vector<bool> used(g1.vertex_count(), false);
    for (const auto& target : identify) {
        if (!target) continue;
        if (*target < 0 || *target >= g1.vertex_count())
            throw std::invalid_argument("identification target out of range");
        if (used[*target])
            throw std::invalid_argument("identification map is not injective");
        used[*target] = true;
    }
    int fresh = 0;
    for (const auto& target : identify)
        if (!target) ++fresh;
    Multigraph out(g1.vertex_count() + fresh);
    std::vector<VertexId> g2_map(g2.vertex_count());
    int next = g1.vertex_count();
    for (VertexId v = 0; v < g2.vertex_count(); ++v)
        g2_map[v] = identify[v] ? *identify[v] : next++;
    for (EdgeId e = 0; e < g1.edge_count(); ++e)
        out.add_edge(g1.ends(e)[0], g1.ends(e)[1], g1.label(e));
    for (EdgeId e = 0; e < g2.edge_count(); ++e)
        out.add_edge(g2_map[g2.ends(e)[0]], g2_map[g2.ends(e)[1]], g2.label(e));
    return {std::move(out), std::move(g2_map)};
}

Multigraph extender(const Multigraph& g, int lambda) {
    if (lambda < 1)
        throw std::invalid_argument("extender multiplicity must be positive");
    Multigraph out(g.vertex_count());
    for (int j = 1; j <= lambda; ++j) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            std::string label = g.label(e);
            if (!label.empty()) label += "^" + std::to_string(j);
            out.add_edge(g.ends(e)[0], g.ends(e)[1], std::move(label));
        }
    }
    return out;
}

std::optional<std::pair<Multigraph, int>> base_graph_and_multiplicity(const Multigraph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("base graph of an edgeless graph is undefined");
    std::map<std::array<VertexId, 2>, int> mult;
    std::vector<std::array<VertexId, 2>> first_seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [it, inserted] = mult.try_emplace(g.ends(e), 0);
        if (inserted) first_seen.push_back(g.ends(e));
        ++it->second;
    }
    int lambda = mult.begin()->second;
    for (const auto& [pair, count] : mult)
        if (count != lambda) return std::nullopt;
    Multigraph base(g.vertex_count());
    for (const auto& pair : first_seen) base.add_edge(pair[0], pair[1]);
    return std::make_pair(std::move(base), lambda);
}

} // namespace eulersym
