#ifndef EULERSYM_FAMILIES_HPP
#define EULERSYM_FAMILIES_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eulersym/aut.hpp"
#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

enum class FamilyTag {
    CycleN,      // C_n
    CycleNExt2,  // C_n^(2) with the copy-preserving rotation (bi-regular)
    Circulant,   // Circ(n, S) for a self-inverse multiset S
    GammaNAB,    // Gamma(n,a,b) = Circ(n,{a,-a,b,-b}) or Circ(n,{a,-a,(n/2)^(2)})
    Gamma2r1r,   // Gamma(2r,1,r) = C_2r + r K_2^(2)
    Gamma2r2r,   // Gamma(2r,2,r) = 2C_r + r K_2^(2), r odd
    CstCycle,    // C_2r[s K_1, t K_1]
    Kst,         // K_{s,t}
    K2Lambda,    // K_2^(lambda)
    CK,          // CK(r,n,t) = [K_{rn,t}] + [r K_2^(2t) or r C_n^(t)]
    CK2,         // CK_(2)(r,s,t,u) = [u K_{sr,t}] + [r K_2^(2t) or r C_su^(t)]
    KK,          // KK(r,r',s,t,t',u) = r K_{sr',ut'}^(t) + r' K_{sr,ut}^(t')
};

const char* to_string(FamilyTag tag);

/// Tagged parameter record selecting one classified family. The outer
/// `lambda` is an extender multiplier applied on top of the base
/// construction. Unused parameters stay 0.
struct FamilySpec {
    FamilyTag tag = FamilyTag::CycleN;
    int n = 0, a = 0, b = 0, r = 0, rp = 0, s = 0, t = 0, tp = 0, u = 0;
    std::vector<std::pair<int, int>> circulant_s; // (residue, multiplicity)
    int lambda = 1;

    static FamilySpec cycle_n(int n, int lambda = 1);
    static FamilySpec cycle_n_ext2(int n, int lambda = 1);
    static FamilySpec circulant(int n, std::vector<std::pair<int, int>> s, int lambda = 1);
    static FamilySpec gamma_nab(int n, int a, int b, int lambda = 1);
    static FamilySpec gamma_2r_1r(int r, int lambda = 1);
    static FamilySpec gamma_2r_2r(int r, int lambda = 1);
    static FamilySpec cst_cycle(int r, int s, int t, int lambda = 1);
    static FamilySpec kst(int s, int t, int lambda = 1);
    static FamilySpec k2_lambda(int lambda_edges, int lambda = 1);
    static FamilySpec ck(int r, int n, int t, int lambda = 1);
    static FamilySpec ck2(int r, int s, int t, int u, int lambda = 1);
    static FamilySpec kk(int r, int rp, int s, int t, int tp, int u, int lambda = 1);

    std::string describe() const;
    bool operator==(const FamilySpec&) const = default;
};

struct ExpectedAction {
    long long order = 1;
    int edge_orbit_count = 1;
    int vertex_orbit_count = 1;
    ActionClass kind = ActionClass::Regular;
};

struct FamilyInstance {
    FamilySpec spec;
    std::shared_ptr<const Multigraph> graph;
    Automorphism g;
    /// Further named automorphisms where the construction defines them
    /// (y for CstCycle; y, xy for K2Lambda). Populated for lambda = 1.
    std::vector<std::pair<std::string, Automorphism>> extra;
    ExpectedAction expected;
};

/// Builds the family graph with labels matching the family
/// coordinates, the generator g validated, and the expected action
/// data verified against the actual orbits of g. An outer lambda > 1
/// extends the base instance and lifts g.
///
/// Edge-id layout (base lambda = 1), used by the Euler constructions:
///   CycleN:      e_i = {i,i+1} at id i
///   CycleNExt2:  copy j of e_i at id (j-1)n + i
///   Circulant:   per class rep z (then copy, then i): see edge labels
///   GammaNAB:    e_{i,a} at id i, e_{i,b} at id n+i
///   CstCycle:    E_S e^{2k}_{i,j} at k*st + i*t + j; E_T e^{2k+1}_{j,i}
///                at rst + k*st + j*s + i
///   Kst:         e_{i,j} at i*t + j
///   K2Lambda:    e_i at id i
///   CK:          e_{k,j} at k*t + j; e_k^j at rnt + k*t + j
///   CK2:         e_{i,k,j} at (i*sr + k)*t + j;
///                e_{l,k}^j at srut + (l*su + k)*t + j
///   KK:          e^j_{i,l,k} at ((i*ut' + l)*sr' + k)*t + j;
///                E_1 analogously offset by |E_0|
/// An outer lambda multiplies ids per the extender block layout.
FamilyInstance build(const FamilySpec& spec);

struct SpecBounds {
    int max_vertices = 7;
    int max_edges = 10;
    bool include_outer_lambda = true;
    /// Empty means all families.
    std::vector<FamilyTag> families;
};

/// All parameter tuples satisfying the family constraints with |V| and
/// |E| within bounds. Deterministic order; duplicates across families
/// are expected (e.g. C_n arises as CycleN and as a circulant).
std::vector<FamilySpec> enumerate_specs(const SpecBounds& bounds);

/// All family specs whose built instance is isomorphic to g, for a
/// connected g with |V| >= 3 carrying a Regular or BiRegular cyclic
/// action. Structural fingerprints (counts, degree and multiplicity
/// multisets) prune before the brute-force isomorphism confirms.
std::vector<FamilySpec> recognize(const Multigraph& g, const CyclicAction& c,
                                  const SizeGuards& guards = {});

} // namespace eulersym

#endif
