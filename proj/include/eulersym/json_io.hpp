#ifndef EULERSYM_JSON_IO_HPP
#define EULERSYM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "eulersym/bicoset.hpp"
#include "eulersym/cycles.hpp"
#include "eulersym/euler_construct.hpp"
#include "eulersym/families.hpp"
#include "eulersym/multigraph.hpp"
#include "eulersym/perm.hpp"

namespace eulersym {

// Graph: {"vertex_count": n, "edges": [{"id": k, "ends": [u,v], "label": str|null}, ...]}
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// DOT: graph { u -- v [label="id"] ... }, one line per parallel edge.
std::string graph_to_dot(const Multigraph& g);

// Automorphism: {"vertex_image": [...], "edge_image": [...]}
nlohmann::json automorphism_to_json(const Automorphism& a);
GraphMap graph_map_from_json(const nlohmann::json& j);

// FamilySpec: {"family": tag, "params": {...}, "lambda": k}
nlohmann::json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);

// Cycle: {"edges": [...], "vertex_chain": [...]}
nlohmann::json cycle_to_json(const EdgeCycle& c);
EdgeCycle cycle_from_json(const nlohmann::json& j);

// Certificate: cycle plus inducing automorphisms keyed by dihedral
// element name, plus the H(C) shape.
nlohmann::json certificate_to_json(const EulerCertificate& cert);

// Group: {"order": n, "table": [[...]]}
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

} // namespace eulersym

#endif
