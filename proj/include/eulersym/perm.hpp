#ifndef EULERSYM_PERM_HPP
#define EULERSYM_PERM_HPP

#include <optional>
#include <string>
#include <vector>

#include "eulersym/multigraph.hpp"

namespace eulersym {

/// Paired images on vertices and edges. Not yet tied to a graph.
struct GraphMap {
    std::vector<VertexId> vertex_image;
    std::vector<EdgeId> edge_image;
};

/// A GraphMap validated against a specific multigraph: both arrays are
/// bijections and every edge [u,e,v] maps to an edge with endpoint set
/// {vertex_image[u], vertex_image[v]}. Parallel edges give genuine
/// edge-level freedom, so the edge images are stored explicitly rather
/// than derived from the vertex map.
class Automorphism {
public:
    const std::vector<VertexId>& vertex_image() const { return map_.vertex_image; }
    const std::vector<EdgeId>& edge_image() const { return map_.edge_image; }
    VertexId vertex(VertexId v) const { return map_.vertex_image[v]; }
    EdgeId edge(EdgeId e) const { return map_.edge_image[e]; }
    const Multigraph* host() const { return host_; }

    bool is_identity() const;
    bool operator==(const Automorphism& o) const { return map_.vertex_image == o.map_.vertex_image && map_.edge_image == o.map_.edge_image; }

private:
    friend Automorphism validate_automorphism(const Multigraph&, GraphMap);
    Automorphism(const Multigraph* host, GraphMap map) : host_(host), map_(std::move(map)) {}
    const Multigraph* host_;
    GraphMap map_;
};

/// Returns a failure description naming the first violation (non-bijective
/// array, or the offending edge), or nullopt if the map is a valid
/// automorphism.
std::optional<std::string> check_graph_map(const Multigraph& g, const GraphMap& m);

/// Validates or throws std::invalid_argument with the check_graph_map
/// message.
Automorphism validate_automorphism(const Multigraph& g, GraphMap m);

Automorphism identity_automorphism(const Multigraph& g);

/// compose(a, b) applies a first, then b, matching the right-action
/// convention x^(ab) = (x^a)^b.
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
Automorphism power(const Automorphism& a, long long k);

/// Conjugation-free helper: order of a as a permutation of V and E.
long long automorphism_order(const Automorphism& a);

/// Orbit data of the cyclic group generated by one automorphism.
struct CyclicAction {
    Automorphism generator;
    long long order = 1;
    std::vector<std::vector<EdgeId>> edge_orbits;
    std::vector<std::vector<VertexId>> vertex_orbits;
};

CyclicAction cyclic_action(const Automorphism& a);

enum class ActionClass { Regular, BiRegular, Neither };

struct ActionClassification {
    ActionClass kind = ActionClass::Neither;
    /// Induced group order on E (lcm of edge cycle lengths).
    long long edge_group_order = 1;
    /// Per-orbit faithfulness of the induced E-action; meaningful for
    /// Regular/BiRegular where orbits have equal size.
    bool faithful_on_each_orbit = false;
    /// Two singleton orbits with |G^E| = 1 satisfy the bi-regular
    /// definition vacuously; sweeps flag these for review.
    bool degenerate = false;
};

/// Applies the definition of regular/bi-regular literally to the edge
/// action of <a>: Regular iff one orbit and |G^E| = |E|; BiRegular iff
/// two orbits and |G^E| = |E|/2.
ActionClassification classify_action(const CyclicAction& c);

const char* to_string(ActionClass c);

/// Elements of `auts` acting trivially on E. A kernel element other
/// than the identity forces some connected component to be K2^(lambda)
/// (checked; violation throws, it would mean the input maps are not
/// automorphisms of g).
std::vector<Automorphism> edge_kernel(const Multigraph& g, const std::vector<Automorphism>& auts);

/// Searches for an automorphism whose edge action equals the given full
/// edge bijection. The vertex image of v is pinned to the common
/// endpoint of the images of v's incident edges; only vertices whose
/// incident edges are all mutually parallel leave a binary choice,
/// resolved by a small backtrack. Isolated vertices are matched in id
/// order. Returns nullopt when no automorphism has this edge action.
std::optional<Automorphism> automorphism_with_edge_action(const Multigraph& g,
                                                          const std::vector<EdgeId>& edge_map);

} // namespace eulersym

#endif
