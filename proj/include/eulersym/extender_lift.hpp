#ifndef EULERSYM_EXTENDER_LIFT_HPP
#define EULERSYM_EXTENDER_LIFT_HPP

#include <memory>

#include "eulersym/cycles.hpp"
#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

struct LiftedAutomorphism {
    std::shared_ptr<const Multigraph> extended;
    Automorphism map;
};

/// Lifts a cyclic edge-regular or bi-regular automorphism to the
/// lambda-extender, preserving the action class and the vertex-orbit
/// count. The edge indexing that makes the generator shift positions
/// by 1 (resp. 2) is reconstructed internally from the orbit
/// structure. The result is re-validated and re-classified.
LiftedAutomorphism lift_automorphism(const Multigraph& g, const Automorphism& a, int lambda,
                                     ActionClass mode);

enum class LiftKind { Phi, Phi2, Tau, PhiTau };
const char* to_string(LiftKind k);
DihedralElement lift_target(LiftKind k, int ell);

struct LiftedCycleSymmetry {
    std::shared_ptr<const Multigraph> extended;
    EdgeCycle cycle;      // C^(lambda) = (e_1^1,...,e_l^1,e_1^2,...)
    Automorphism map;     // induces the same named element in H(C^(lambda))
};

/// Lifts an Euler cycle together with an automorphism inducing the
/// named dihedral element. The copy-superscript arithmetic is the main
/// hazard here, so the lift is cross-checked by validating the result
/// and re-deriving its induced element.
LiftedCycleSymmetry lift_cycle_symmetry(const Multigraph& g, const EdgeCycle& c,
                                        const Automorphism& psi, LiftKind which, int lambda);

} // namespace eulersym

#endif
