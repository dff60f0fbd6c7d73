#ifndef EULERSYM_BICOSET_HPP
#define EULERSYM_BICOSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eulersym/aut.hpp"
#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

/// Explicit finite group: index-based multiplication table. Desk scale
/// only; the axioms are checked exhaustively on construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table);
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int order); // order = 2m, elements r^i then s*r^i
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// Sorted element-index set.
using Subgroup = std::vector<int>;

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Intersection of all conjugates.
Subgroup core(const FiniteGroup& g, const Subgroup& h);
/// Every subgroup, by closure of one-element extensions; sorted by
/// (size, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct BiCosetSpec {
    FiniteGroup group;
    Subgroup L, R, J;
};

struct BicosResult {
    std::shared_ptr<const Multigraph> graph;
    /// Right-multiplication action, one validated automorphism per
    /// group element (element index order).
    std::vector<Automorphism> action;
    int left_count = 0;       // |G:L| vertices 0..left_count-1
    int right_count = 0;      // |G:R| vertices after them
    std::vector<VertexId> left_vertex_of;  // element -> vertex of Lx
    std::vector<VertexId> right_vertex_of; // element -> vertex of Rx
    std::vector<EdgeId> edge_of;           // element -> edge of Jx
};

/// The bi-coset graph BiCos(G,L,R,J): vertices the right cosets of L
/// and R, edges the cosets of J, edge Jy joining Ly and Ry. Requires
/// L != R proper subgroups, J <= L^R, J core-free. Coset ids follow
/// sorted minimal representatives, so outputs are reproducible.
BicosResult bicos(const BiCosetSpec& spec);

struct BicosProperties {
    int s = 0, t = 0, lambda = 0;
    bool connected_group = false, connected_graph = false;
    bool complete_group = false, complete_graph = false;
    bool multiplicity_constant = false;
    int graph_multiplicity = 0;
    int left_valency = 0, right_valency = 0;   // observed on the graph
    int left_valency_group = 0, right_valency_group = 0; // |L:J|, |R:J|
    bool consistent() const;
};

/// Each flag computed both group-theoretically and on the built graph;
/// consistent() reports whether the two computations agree.
BicosProperties bicos_properties(const BiCosetSpec& spec);

struct EdgeTransitiveDecomposition {
    bool matching_case = false; // Gamma ~ r K_2^(lambda)
    int r = 0;
    int lambda = 0;
    std::optional<BiCosetSpec> spec;
};

/// Recovers a bi-coset representation from an edge-transitive action
/// with two vertex orbits (stabilisers of one edge's flag), or reports
/// the r K_2^(lambda) matching case when the two endpoint stabilisers
/// coincide. `auts` must be closed under composition (a group).
EdgeTransitiveDecomposition from_edge_transitive(const Multigraph& g,
                                                 const std::vector<Automorphism>& auts);

struct CyclicEdgeTransitiveRow {
    bool disconnected = false;
    int component_count = 1;
    std::string gamma0;     // base-graph description: C_n, K_{s,t}, K_2
    int n = 0, s = 0, t = 0;
    int lambda = 1;
    long long group_order = 0;
    bool vertex_transitive = false, edge_transitive = false, arc_transitive = false;
};

/// Places a cyclic edge-regular action in the classification: the
/// connected graph is C_n^(lambda) or K_{s,t}^(lambda) with gcd(s,t)=1;
/// a disconnected graph is r copies of one of those or of K_2^(lambda).
/// Transitivity flags are computed from the action, not assumed.
CyclicEdgeTransitiveRow cyclic_edge_transitive_classification(const Multigraph& g,
                                                              const CyclicAction& c);

} // namespace eulersym

#endif
