#include "eulersym/json_io.hpp"

#include <stdexcept>

namespace eulersym {

using nlohmann::json;

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        json ej{{"id", e}, {"ends", {g.ends(e)[0], g.ends(e)[1]}}};
        if (g.label(e).empty()) ej["label"] = nullptr;
        else ej["label"] = g.label(e);
        edges.push_back(std::move(ej));
    }
    return json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const json& j) {
    Multigraph g(j.at("vertex_count").get<int>());
    const json& edges = j.at("edges");
    std::vector<const json*> by_id(edges.size(), nullptr);
    for (const json& e : edges) {
        int id = e.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(edges.size()) || by_id[id])
            throw std::invalid_argument("edge ids must be dense from 0");
        by_id[id] = &e;
    }
    for (const json* e : by_id) {
        std::string label;
        if (e->contains("label") && !e->at("label").is_null())
            label = e->at("label").get<std::string>();
        g.add_edge(e->at("ends").at(0).get<int>(), e->at("ends").at(1).get<int>(), label);
    }
    return g;
}

std::string graph_to_dot(const Multigraph& g) {
    std::string out = "graph {\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out += "  " + std::to_string(g.ends(e)[0]) + " -- " + std::to_string(g.ends(e)[1]) +
               " [label=\"" + std::to_string(e) + "\"]\n";
    out += "}\n";
    return out;
}

json automorphism_to_json(const Automorphism& a) {
    return json{{"vertex_image", a.vertex_image()}, {"edge_image", a.edge_image()}};
}

GraphMap graph_map_from_json(const json& j) {
    GraphMap m;
    m.vertex_image = j.at("vertex_image").get<std::vector<int>>();
    m.edge_image = j.at("edge_image").get<std::vector<int>>();
    return m;
}

json spec_to_json(const FamilySpec& spec) {
    json params = json::object();
    switch (spec.tag) {
        case FamilyTag::CycleN:
        case FamilyTag::CycleNExt2: params["n"] = spec.n; break;
        case FamilyTag::K2Lambda: params["edge_multiplicity"] = spec.n; break;
        case FamilyTag::Circulant: {
            params["n"] = spec.n;
            json s = json::array();
            for (auto [z, m] : spec.circulant_s) s.push_back({z, m});
            params["S"] = std::move(s);
            break;
        }
        case FamilyTag::GammaNAB:
            params["n"] = spec.n;
            params["a"] = spec.a;
            params["b"] = spec.b;
            break;
        case FamilyTag::Gamma2r1r:
        case FamilyTag::Gamma2r2r: params["r"] = spec.r; break;
        case FamilyTag::CstCycle:
            params["r"] = spec.r;
            params["s"] = spec.s;
            params["t"] = spec.t;
            break;
        case FamilyTag::Kst:
            params["s"] = spec.s;
            params["t"] = spec.t;
            break;
        case FamilyTag::CK:
            params["r"] = spec.r;
            params["n"] = spec.n;
            params["t"] = spec.t;
            break;
        case FamilyTag::CK2:
            params["r"] = spec.r;
            params["s"] = spec.s;
            params["t"] = spec.t;
            params["u"] = spec.u;
            break;
        case FamilyTag::KK:
            params["r"] = spec.r;
            params["rp"] = spec.rp;
            params["s"] = spec.s;
            params["t"] = spec.t;
            params["tp"] = spec.tp;
            params["u"] = spec.u;
            break;
    }
    return json{{"family", to_string(spec.tag)}, {"params", std::move(params)},
                {"lambda", spec.lambda}};
}

FamilySpec spec_from_json(const json& j) {
    std::string family = j.at("family").get<std::string>();
    const json& p = j.at("params");
    int lambda = j.value("lambda", 1);
    auto geti = [&](const char* key) { return p.at(key).get<int>(); };
    if (family == "CycleN") return FamilySpec::cycle_n(geti("n"), lambda);
    if (family == "CycleNExt2") return FamilySpec::cycle_n_ext2(geti("n"), lambda);
    if (family == "Circulant") {
        std::vector<std::pair<int, int>> s;
        for (const json& zm : p.at("S")) s.emplace_back(zm.at(0).get<int>(), zm.at(1).get<int>());
        return FamilySpec::circulant(geti("n"), std::move(s), lambda);
    }
    if (family == "GammaNAB") return FamilySpec::gamma_nab(geti("n"), geti("a"), geti("b"), lambda);
    if (family == "Gamma2r1r") return FamilySpec::gamma_2r_1r(geti("r"), lambda);
    if (family == "Gamma2r2r") return FamilySpec::gamma_2r_2r(geti("r"), lambda);
    if (family == "CstCycle") return FamilySpec::cst_cycle(geti("r"), geti("s"), geti("t"), lambda);
    if (family == "Kst") return FamilySpec::kst(geti("s"), geti("t"), lambda);
    if (family == "K2Lambda") return FamilySpec::k2_lambda(geti("edge_multiplicity"), lambda);
    if (family == "CK") return FamilySpec::ck(geti("r"), geti("n"), geti("t"), lambda);
    if (family == "CK2") return FamilySpec::ck2(geti("r"), geti("s"), geti("t"), geti("u"), lambda);
    if (family == "KK")
        return FamilySpec::kk(geti("r"), geti("rp"), geti("s"), geti("t"), geti("tp"), geti("u"),
                              lambda);
    throw std::invalid_argument("unknown family tag: " + family);
}

json cycle_to_json(const EdgeCycle& c) {
    return json{{"edges", c.edges}, {"vertex_chain", c.vertex_chain}};
}

EdgeCycle cycle_from_json(const json& j) {
    EdgeCycle c;
    c.edges = j.at("edges").get<std::vector<int>>();
    c.vertex_chain = j.at("vertex_chain").get<std::vector<int>>();
    return c;
}

json certificate_to_json(const EulerCertificate& cert) {
    json inducers = json::object();
    for (const auto& [elt, aut] : cert.inducers)
        inducers[element_name(elt)] = automorphism_to_json(aut);
    return json{{"cycle", cycle_to_json(cert.cycle)},
                {"h_group", to_string(cert.claimed_shape)},
                {"inducers", std::move(inducers)}};
}

json group_to_json(const FiniteGroup& g) {
    return json{{"order", g.order()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const json& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw std::invalid_argument("order does not match table size");
    return FiniteGroup::from_table(std::move(table));
}

} // namespace eulersym
