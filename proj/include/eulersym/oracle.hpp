#ifndef EULERSYM_ORACLE_HPP
#define EULERSYM_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "eulersym/aut.hpp"
#include "eulersym/cycles.hpp"
#include "eulersym/euler_construct.hpp"
#include "eulersym/families.hpp"
#include "eulersym/multigraph.hpp"

namespace eulersym {

/// Connected multigraphs without isolated vertices, up to isomorphism:
/// simple skeletons by edge augmentation with a canonical-form filter,
/// times multiplicity assignments deduplicated by skeleton symmetry.
std::vector<Multigraph> enumerate_connected_multigraphs(int max_vertices, int max_edges,
                                                        int min_vertices = 1);

struct SweepBounds {
    int max_vertices = 7;
    int max_edges = 10;
};

struct SweepReport {
    long long graphs_scanned = 0;
    long long graphs_with_hits = 0;
    long long hits_matched = 0;
    long long degenerate_hits = 0;
    std::map<std::string, long long> row_counts;
    std::vector<std::string> failures;
    std::vector<std::string> records; // one JSON object per scanned graph with hits
    bool ok() const { return failures.empty(); }
};

/// Every connected multigraph in bounds (|V| >= 3) carrying a cyclic
/// Regular/BiRegular edge action must match a classification row:
/// isomorphic family graph with the same class, group order lambda*N
/// and vertex-orbit count. Degenerate bi-regular hits (two fixed edges)
/// are reported separately, not matched.
SweepReport sweep_theorem1(const SweepBounds& bounds, int jobs = 1);

/// Forward: every symmetrical Euler cycle found by exhaustive
/// enumeration on graphs in bounds must sit on an Euler-classification
/// graph with the expected H(C). Converse: every in-bounds family
/// instance satisfying its existence conditions must yield a verified
/// certificate.
SweepReport sweep_theorem2(const SweepBounds& bounds, int jobs = 1);

} // namespace eulersym

#endif
