#ifndef EULERSYM_MULTIGRAPH_HPP
#define EULERSYM_MULTIGRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulersym {

using VertexId = int;
using EdgeId = int;

/// Finite undirected multigraph without loops. Vertices and edges carry
/// dense integer ids. Endpoints are stored in (min,max) order, so
/// [u,e,v] and [v,e,u] denote the same edge. Edges may carry a string
/// label recording family coordinates (see families.hpp for schemas).
///
/// Construct with add_edge, then treat as immutable: every operation in
/// this library takes `const Multigraph&` and returns fresh values.
class Multigraph {
public:
    explicit Multigraph(int vertex_count = 0);

    EdgeId add_edge(VertexId u, VertexId v, std::string label = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(ends_.size()); }

    const std::array<VertexId, 2>& ends(EdgeId e) const { return ends_.at(e); }
    const std::string& label(EdgeId e) const { return labels_.at(e); }
    VertexId other_end(EdgeId e, VertexId v) const;

    /// Edges incident with v, with multiplicity, in id order.
    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

    /// Number of edges joining u and v.
    int multiplicity(VertexId u, VertexId v) const;

    bool is_connected() const;
    std::vector<int> degree_sequence() const;

    bool operator==(const Multigraph&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<std::array<VertexId, 2>> ends_;
    std::vector<std::string> labels_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// A graph cut out of a host graph, plus the maps back to host ids.
struct SubgraphView {
    Multigraph graph;
    std::vector<VertexId> vertex_to_host;
    std::vector<EdgeId> edge_to_host;
};

/// Subset of the host's edges as member flags.
using EdgeSubset = std::vector<bool>;

/// Edge-induced subgraph [E']: vertices are those incident with some
/// edge of the subset, so the result never has isolated vertices.
SubgraphView edge_induced_subgraph(const Multigraph& g, const EdgeSubset& subset);

/// Connected components; isolated vertices yield one-vertex components.
std::vector<SubgraphView> components(const Multigraph& g);

/// Edge-disjoint union. `identify[v2]`, when set, glues vertex v2 of g2
/// onto the given vertex of g1; the partial map must be injective.
/// Unmapped g2 vertices become fresh vertices after g1's.
/// Returns the union plus the map sending g2 vertices into it.
std::pair<Multigraph, std::vector<VertexId>>
edge_disjoint_union(const Multigraph& g1, const Multigraph& g2,
                    const std::vector<std::optional<VertexId>>& identify);

/// The lambda-extender: each edge e is replaced by lambda parallel
/// copies e^1..e^lambda. Copy j of edge x gets id (j-1)*|E| + x, so the
/// copies appear in blocks ordered by superscript.
Multigraph extender(const Multigraph& g, int lambda);

/// If every adjacent vertex pair is joined by exactly lambda edges,
/// returns the simple base graph (same vertex set, one edge per
/// adjacent pair, in first-occurrence order) and lambda. Returns
/// nullopt when the multiplicity is not constant. Edgeless input is an
/// error.
std::optional<std::pair<Multigraph, int>> base_graph_and_multiplicity(const Multigraph& g);

} // namespace eulersym

#endif
