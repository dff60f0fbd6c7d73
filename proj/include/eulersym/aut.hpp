#ifndef EULERSYM_AUT_HPP
#define EULERSYM_AUT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force size guards. EULERSYM_CAP, when set, overrides both the
/// |V|+|E| guard and the Euler enumeration edge cap with one value.
struct SizeGuards {
    int aut_cap = 64;                      // |V|+|E| bound for Aut/iso backtracking
    int euler_edge_cap = 20;               // |E| bound for Euler cycle enumeration
    long long aut_count_cap = 5'000'000;   // hard stop on enumerated automorphisms
    static SizeGuards from_env();
};

/// Complete automorphism list: backtracking over vertex images pruned
/// by degree/multiplicity profiles, then independent matching of
/// parallel-edge bundles (lambda! edge-level choices per bundle).
/// Deterministic order.
std::vector<Automorphism> full_automorphism_group(const Multigraph& g,
                                                  const SizeGuards& guards = {});

long long automorphism_count(const Multigraph& g, const SizeGuards& guards = {});

/// Exact isomorphism with witness (vertex map g1 -> g2 plus a
/// compatible edge map).
std::optional<GraphMap> isomorphic(const Multigraph& g1, const Multigraph& g2,
                                   const SizeGuards& guards = {});

/// Every automorphism whose cyclic group is Regular or BiRegular on E.
struct CyclicEdgeActionHit {
    Automorphism generator;
    ActionClass kind;
    long long order;
    int vertex_orbits;
    bool degenerate;
};
std::vector<CyclicEdgeActionHit> find_cyclic_edge_actions(const Multigraph& g,
                                                          const SizeGuards& guards = {});

/// Lexicographically minimal weighted-adjacency encoding over all
/// vertex orderings; equal strings iff isomorphic multigraphs.
/// Intended for |V| <= 8.
std::string canonical_form(const Multigraph& g);

bool is_edge_transitive(const Multigraph& g, const SizeGuards& guards = {});

} // namespace eulersym

#endif
