#ifndef EULERSYM_EULER_CONSTRUCT_HPP
#define EULERSYM_EULER_CONSTRUCT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulersym/aut.hpp"
#include "eulersym/cycles.hpp"
#include "eulersym/families.hpp"

namespace eulersym {

enum class EulerObstruction { LambdaOdd, RMustBeEven, GcdCondition };
enum class UndeterminedReason { EdgeTransitiveGcdOpen, OracleCapExceeded };
const char* to_string(EulerObstruction o);
const char* to_string(UndeterminedReason r);

/// Readable name of a dihedral element: phi^k, or phi^m*tau for the
/// reflection phi^m tau: p -> -1-m-p.
std::string element_name(const DihedralElement& e);

struct EulerCertificate {
    std::shared_ptr<const Multigraph> graph;
    EdgeCycle cycle;
    std::vector<std::pair<DihedralElement, Automorphism>> inducers;
    HShape claimed_shape = HShape::Other;
};

struct EulerSearchResult {
    enum class Kind { Exists, NotExists, Undetermined } kind = Kind::NotExists;
    std::optional<EulerCertificate> certificate;
    std::optional<EulerObstruction> obstruction;
    std::optional<UndeterminedReason> undetermined;

    static EulerSearchResult exists(EulerCertificate cert);
    static EulerSearchResult not_exists(EulerObstruction why);
    static EulerSearchResult open(UndeterminedReason why);
};

/// The constructive side of the Euler-cycle classification: returns
/// the explicit symmetrical Euler cycle with automorphisms inducing
/// phi^2 and a reflection where the construction provides one, or the
/// violated existence condition. Circulant instances failing both gcd
/// conditions are Undetermined when the base graph is edge-transitive
/// (an open case), never asserted nonexistent.
///
/// Families outside the classification (CK, CK2, KK and circulants of
/// other shapes) are an error.
EulerSearchResult construct_symmetrical_euler(const FamilyInstance& instance,
                                              const SizeGuards& guards = {});

} // namespace eulersym

#endif
