#ifndef EULERSYM_CYCLES_HPP
#define EULERSYM_CYCLES_HPP

#include <optional>
#include <vector>

#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

/// A cycle (e_1,...,e_l): pairwise distinct edges with e_i joining
/// chain vertices alpha_{i-1}, alpha_i and the chain closing up.
/// Positions are 0-based internally; the 1-based formulas of the
/// source constructions are shifted at the boundary.
struct EdgeCycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertex_chain; // length edges.size()+1, front()==back()
    int length() const { return static_cast<int>(edges.size()); }
};

/// Walks the chain from start_vertex; each next edge must be incident
/// with the current chain vertex and the chain must close.
EdgeCycle make_cycle(const Multigraph& g, const std::vector<EdgeId>& edges, VertexId start_vertex);

bool is_euler(const Multigraph& g, const EdgeCycle& c);

/// True iff c2's edge sequence is a rotation of c1's, or a rotation of
/// its reversal.
bool sequence_class_equal(const EdgeCycle& c1, const EdgeCycle& c2);

/// Element of D(C) ~ D_{2l}, acting on 0-based positions as
/// p -> shift+p (unreflected) or p -> shift-p (reflected).
/// With 1-based cycle labels: phi = (1,false), tau = (-1,true),
/// phi*tau = (-2,true). For l <= 2 distinct elements can share a
/// position action; they are kept distinct as abstract group elements.
struct DihedralElement {
    int ell = 1;
    int shift = 0;
    bool reflected = false;

    int apply(int p) const;
    bool operator==(const DihedralElement&) const = default;

    static DihedralElement identity(int ell) { return {ell, 0, false}; }
    static DihedralElement phi(int ell) { return {ell, 1 % ell, false}; }
    static DihedralElement phi_squared(int ell) { return {ell, 2 % ell, false}; }
    static DihedralElement tau(int ell) { return {ell, (ell - 1) % ell, true}; }
    static DihedralElement phi_tau(int ell) { return {ell, (2 * ell - 2) % ell, true}; }
};

/// compose(a, b) applies a first, then b (same convention as
/// automorphism composition).
DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& a);
std::vector<DihedralElement> dihedral_closure(int ell, std::vector<DihedralElement> generators);
std::vector<DihedralElement> full_dihedral(int ell);

enum class HShape { DC, PhiOnly, Phi2PhiTau, Phi2Tau, Phi2Only, Other };
const char* to_string(HShape s);

struct HGroup {
    std::vector<DihedralElement> elements; // sorted: unreflected first, then by shift
    HShape shape = HShape::Other;
    bool exact = true;
    bool contains(const DihedralElement& e) const;
};

HShape classify_shape(int ell, const std::vector<DihedralElement>& elements);

/// The position map a's edge action induces on c, or nullopt if a does
/// not preserve E(C).
std::optional<std::vector<int>> induced_position_action(const Multigraph& g, const EdgeCycle& c,
                                                        const Automorphism& a);

/// All abstract dihedral elements whose position action equals a's
/// (one element for l >= 3; possibly several for l <= 2).
std::vector<DihedralElement> induced_elements(const Multigraph& g, const EdgeCycle& c,
                                              const Automorphism& a);

/// Canonical representative (unreflected preferred, then least shift),
/// or nullopt if a does not act on c as a dihedral element.
std::optional<DihedralElement> induced_element(const Multigraph& g, const EdgeCycle& c,
                                               const Automorphism& a);

/// The full edge bijection prescribed on an Euler cycle by a dihedral
/// position action.
std::vector<EdgeId> edge_action_of(const EdgeCycle& c, const DihedralElement& elt);

/// Some automorphism realizing elt's position action on the Euler
/// cycle c, if one exists.
std::optional<Automorphism> realize_element(const Multigraph& g, const EdgeCycle& c,
                                            const DihedralElement& elt);

/// H(C) for an Euler cycle, computed exactly: an abstract element is a
/// member iff some automorphism realizes its position action.
HGroup h_group(const Multigraph& g, const EdgeCycle& c);

/// H(C) generated by the induced elements of a supplied automorphism
/// list. Exact when the list is all of Aut(g); otherwise a lower bound
/// (exact=false).
HGroup h_group_from(const Multigraph& g, const EdgeCycle& c, const std::vector<Automorphism>& auts,
                    bool auts_complete);

/// True iff some automorphism induces phi^2 on the Euler cycle c.
bool is_symmetrical(const Multigraph& g, const EdgeCycle& c);
bool is_symmetrical(const Multigraph& g, const EdgeCycle& c, const std::vector<Automorphism>& auts);

/// Exhaustive backtracking over Euler edge sequences, one
/// representative per sequence class. Requires connectivity and all
/// even degrees; |E| <= cap guards the search.
std::vector<EdgeCycle> enumerate_euler_cycles(const Multigraph& g, int cap);

} // namespace eulersym

#endif
