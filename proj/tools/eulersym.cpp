// Command-line front end: generation, verification, classification,
// Euler-cycle certification, and the exhaustive sweeps.
//
// Exit codes: 0 verified/matched, 1 counterexample/mismatch, 2 usage
// or constraint error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulersym/aut.hpp"
#include "eulersym/bicoset.hpp"
#include "eulersym/euler_construct.hpp"
#include "eulersym/families.hpp"
#include "eulersym/json_io.hpp"
#include "eulersym/oracle.hpp"

using namespace eulersym;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

struct SpecFlags {
    std::string family;
    std::string spec_file;
    int n = 0, a = 0, b = 0, r = 0, rp = 0, s = 0, t = 0, tp = 0, u = 0, lambda = 1;
    std::string circ_s;

    void attach(CLI::App* cmd) {
        cmd->add_option("--spec", spec_file, "FamilySpec JSON file");
        cmd->add_option("--family", family, "family tag (CycleN, Kst, CK, KK, ...)");
        cmd->add_option("--n", n);
        cmd->add_option("--a", a);
        cmd->add_option("--b", b);
        cmd->add_option("--r", r);
        cmd->add_option("--rp", rp);
        cmd->add_option("--s", s);
        cmd->add_option("--t", t);
        cmd->add_option("--tp", tp);
        cmd->add_option("--u", u);
        cmd->add_option("--lambda", lambda, "outer extender multiplier");
        cmd->add_option("--S", circ_s, "circulant connection multiset, e.g. 1,-1,2,-2");
    }

    bool provided() const { return !family.empty() || !spec_file.empty(); }

    FamilySpec resolve() const {
        if (!spec_file.empty()) return spec_from_json(read_json_file(spec_file));
        json params = json::object();
        if (family == "CycleN" || family == "CycleNExt2") params["n"] = n;
        else if (family == "K2Lambda") params["edge_multiplicity"] = n;
        else if (family == "Circulant") {
            params["n"] = n;
            json s_json = json::array();
            std::string token;
            std::istringstream stream(circ_s);
            while (std::getline(stream, token, ','))
                s_json.push_back({std::stoi(token), 1});
            params["S"] = std::move(s_json);
        } else if (family == "GammaNAB") {
            params["n"] = n;
            params["a"] = a;
            params["b"] = b;
        } else if (family == "Gamma2r1r" || family == "Gamma2r2r") {
            params["r"] = r;
        } else if (family == "CstCycle") {
            params["r"] = r;
            params["s"] = s;
            params["t"] = t;
        } else if (family == "Kst") {
            params["s"] = s;
            params["t"] = t;
        } else if (family == "CK") {
            params["r"] = r;
            params["n"] = n;
            params["t"] = t;
        } else if (family == "CK2") {
            params["r"] = r;
            params["s"] = s;
            params["t"] = t;
            params["u"] = u;
        } else if (family == "KK") {
            params["r"] = r;
            params["rp"] = rp;
            params["s"] = s;
            params["t"] = t;
            params["tp"] = tp;
            params["u"] = u;
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
        return spec_from_json(json{{"family", family}, {"params", params}, {"lambda", lambda}});
    }
};

int cmd_generate(const SpecFlags& flags, const std::string& out_graph,
                 const std::string& out_aut, const std::string& out_dot) {
    FamilyInstance inst = build(flags.resolve());
    json graph_json = graph_to_json(*inst.graph);
    json aut_json = automorphism_to_json(inst.g);
    if (!out_graph.empty()) write_file(out_graph, graph_json.dump(2) + "\n");
    if (!out_aut.empty()) write_file(out_aut, aut_json.dump(2) + "\n");
    if (!out_dot.empty()) write_file(out_dot, graph_to_dot(*inst.graph));
    json summary{{"spec", spec_to_json(inst.spec)},
                 {"vertices", inst.graph->vertex_count()},
                 {"edges", inst.graph->edge_count()},
                 {"expected_order", inst.expected.order},
                 {"expected_class", to_string(inst.expected.kind)},
                 {"vertex_orbits", inst.expected.vertex_orbit_count}};
    if (out_graph.empty()) summary["graph"] = std::move(graph_json);
    if (out_aut.empty()) summary["automorphism"] = std::move(aut_json);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_euler(const SpecFlags& flags, const std::string& graph_file, const std::string& out_cert,
              const SizeGuards& guards) {
    if (flags.provided()) {
        FamilyInstance inst = build(flags.resolve());
        EulerSearchResult result = construct_symmetrical_euler(inst, guards);
        json out;
        switch (result.kind) {
            case EulerSearchResult::Kind::Exists: {
                out = json{{"exists", true},
                           {"certificate", certificate_to_json(*result.certificate)}};
                HGroup h = h_group(*result.certificate->graph, result.certificate->cycle);
                out["h_group_computed"] = to_string(h.shape);
                break;
            }
            case EulerSearchResult::Kind::NotExists:
                out = json{{"exists", false}, {"reason", to_string(*result.obstruction)}};
                break;
            default:
                out = json{{"exists", nullptr},
                           {"undetermined", to_string(*result.undetermined)}};
                break;
        }
        if (!out_cert.empty()) write_file(out_cert, out.dump(2) + "\n");
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (graph_file.empty()) throw std::invalid_argument("euler needs --spec/--family or --graph");
    Multigraph g = graph_from_json(read_json_file(graph_file));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) {
            std::cout << json{{"exists", false}, {"reason", "odd-degree vertex"}}.dump(2) << "\n";
            return 0;
        }
    if (!g.is_connected()) {
        std::cout << json{{"exists", false}, {"reason", "graph is not connected"}}.dump(2) << "\n";
        return 0;
    }
    auto classes = enumerate_euler_cycles(g, guards.euler_edge_cap);
    for (const EdgeCycle& c : classes) {
        if (!is_symmetrical(g, c)) continue;
        HGroup h = h_group(g, c);
        json out{{"exists", true},
                 {"cycle", cycle_to_json(c)},
                 {"h_group", to_string(h.shape)}};
        auto phi2 = realize_element(g, c, DihedralElement::phi_squared(c.length()));
        out["inducers"] = json{{"phi^2", automorphism_to_json(*phi2)}};
        if (!out_cert.empty()) write_file(out_cert, out.dump(2) + "\n");
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << json{{"exists", false}, {"reason", "exhaustive search found none"}}.dump(2)
              << "\n";
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& aut_file) {
    Multigraph g = graph_from_json(read_json_file(graph_file));
    GraphMap m = graph_map_from_json(read_json_file(aut_file));
    if (auto failure = check_graph_map(g, m)) {
        std::cout << json{{"valid", false}, {"error", *failure}}.dump(2) << "\n";
        return 1;
    }
    Automorphism a = validate_automorphism(g, std::move(m));
    CyclicAction c = cyclic_action(a);
    ActionClassification cls = classify_action(c);
    json out{{"valid", true},
             {"order", c.order},
             {"edge_orbits", c.edge_orbits.size()},
             {"vertex_orbits", c.vertex_orbits.size()},
             {"class", to_string(cls.kind)},
             {"edge_group_order", cls.edge_group_order},
             {"degenerate", cls.degenerate}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classify(const std::string& graph_file, const std::string& aut_file,
                 const SizeGuards& guards) {
    Multigraph g = graph_from_json(read_json_file(graph_file));
    Automorphism a = validate_automorphism(g, graph_map_from_json(read_json_file(aut_file)));
    CyclicAction c = cyclic_action(a);
    ActionClassification cls = classify_action(c);
    json out{{"class", to_string(cls.kind)},
             {"order", c.order},
             {"vertex_orbits", c.vertex_orbits.size()}};
    if (cls.kind == ActionClass::Neither) {
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    std::vector<FamilySpec> matches = recognize(g, c, guards);
    out["rows"] = json::array();
    for (const FamilySpec& spec : matches) {
        FamilyInstance inst = build(spec);
        json row{{"spec", spec_to_json(spec)}, {"describe", spec.describe()}};
        row["action_matches_expected"] =
            inst.expected.kind == cls.kind && inst.expected.order == c.order &&
            inst.expected.vertex_orbit_count == static_cast<int>(c.vertex_orbits.size());
        out["rows"].push_back(std::move(row));
    }
    if (cls.kind == ActionClass::Regular) {
        CyclicEdgeTransitiveRow row = cyclic_edge_transitive_classification(g, c);
        out["edge_transitive_row"] = json{{"gamma0", row.gamma0},
                                          {"n", row.n},
                                          {"s", row.s},
                                          {"t", row.t},
                                          {"lambda", row.lambda},
                                          {"components", row.component_count},
                                          {"vertex_transitive", row.vertex_transitive},
                                          {"arc_transitive", row.arc_transitive}};
    }
    std::cout << out.dump(2) << "\n";
    return matches.empty() ? 1 : 0;
}

int cmd_sweep(int theorem, int max_v, int max_e, int jobs, const std::string& out_records) {
    SweepBounds bounds{max_v, max_e};
    SweepReport report = theorem == 1 ? sweep_theorem1(bounds, jobs) : sweep_theorem2(bounds, jobs);
    if (!out_records.empty()) {
        std::string lines;
        for (const std::string& record : report.records) lines += record + "\n";
        write_file(out_records, lines);
    }
    json summary{{"theorem", theorem},
                 {"graphs_scanned", report.graphs_scanned},
                 {"graphs_with_hits", report.graphs_with_hits},
                 {"hits_matched", report.hits_matched},
                 {"degenerate_hits", report.degenerate_hits},
                 {"row_counts", report.row_counts},
                 {"failures", report.failures}};
    std::cout << summary.dump(2) << "\n";
    return report.ok() ? 0 : 1;
}

Subgroup parse_elements(const std::string& csv, const FiniteGroup& g) {
    Subgroup out;
    if (csv.empty()) {
        out.push_back(g.identity());
        return out;
    }
    std::istringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) out.push_back(std::stoi(token));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int cmd_bicos(const std::string& group_file, int cyclic_order, int dihedral_order,
              const std::string& product, const std::string& l_csv, const std::string& r_csv,
              const std::string& j_csv, const std::string& out_graph,
              const std::string& out_group) {
    FiniteGroup group = [&] {
        if (!group_file.empty()) return group_from_json(read_json_file(group_file));
        if (cyclic_order > 0) return FiniteGroup::cyclic(cyclic_order);
        if (dihedral_order > 0) return FiniteGroup::dihedral(dihedral_order);
        if (!product.empty()) {
            auto comma = product.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--product needs m,n");
            return FiniteGroup::direct_product(
                FiniteGroup::cyclic(std::stoi(product.substr(0, comma))),
                FiniteGroup::cyclic(std::stoi(product.substr(comma + 1))));
        }
        throw std::invalid_argument("bicos needs --group, --cyclic, --dihedral or --product");
    }();
    if (!out_group.empty()) write_file(out_group, group_to_json(group).dump(2) + "\n");
    BiCosetSpec spec{group, parse_elements(l_csv, group), parse_elements(r_csv, group),
                     parse_elements(j_csv, group)};
    BicosResult result = bicos(spec);
    BicosProperties props = bicos_properties(spec);
    if (!out_graph.empty()) write_file(out_graph, graph_to_json(*result.graph).dump(2) + "\n");
    json out{{"vertices", result.graph->vertex_count()},
             {"edges", result.graph->edge_count()},
             {"s", props.s},
             {"t", props.t},
             {"lambda", props.lambda},
             {"connected", json{{"group_side", props.connected_group},
                                {"graph_side", props.connected_graph}}},
             {"complete_bipartite", json{{"group_side", props.complete_group},
                                         {"graph_side", props.complete_graph}}},
             {"consistent", props.consistent()}};
    if (out_graph.empty()) out["graph"] = graph_to_json(*result.graph);
    std::cout << out.dump(2) << "\n";
    return props.consistent() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructors, verifiers and sweeps for multigraphs with cyclic edge"
                 " symmetry and symmetrical Euler cycles"};
    app.require_subcommand(1);
    SizeGuards guards = SizeGuards::from_env();

    SpecFlags gen_flags, euler_flags;
    std::string out_graph, out_aut, out_dot, graph_file, aut_file, out_cert, out_records;
    std::string group_file, l_csv, r_csv, j_csv, product, out_group;
    int theorem = 1, max_v = 7, max_e = 10, jobs = 1, cyclic_order = 0, dihedral_order = 0;

    CLI::App* generate = app.add_subcommand("generate", "build a family instance");
    gen_flags.attach(generate);
    generate->add_option("--out", out_graph, "graph JSON output path");
    generate->add_option("--aut", out_aut, "automorphism JSON output path");
    generate->add_option("--dot", out_dot, "DOT output path");

    CLI::App* euler = app.add_subcommand("euler", "symmetrical Euler cycle certificate");
    euler_flags.attach(euler);
    euler->add_option("--graph", graph_file, "raw graph JSON (exhaustive search)");
    euler->add_option("--out", out_cert, "certificate output path");

    CLI::App* verify = app.add_subcommand("verify", "validate an automorphism");
    verify->add_option("--graph", graph_file)->required();
    verify->add_option("--aut", aut_file)->required();

    CLI::App* classify = app.add_subcommand("classify", "match a cyclic action to its table row");
    classify->add_option("--graph", graph_file)->required();
    classify->add_option("--aut", aut_file)->required();

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive verification sweep");
    sweep->add_option("--theorem", theorem)->check(CLI::Range(1, 2));
    sweep->add_option("--max-v", max_v);
    sweep->add_option("--max-e", max_e);
    sweep->add_option("--jobs", jobs);
    sweep->add_option("--out", out_records, "JSON-lines records path");

    CLI::App* bicos_cmd = app.add_subcommand("bicos", "bi-coset graph construction");
    bicos_cmd->add_option("--group", group_file, "group JSON (order + table)");
    bicos_cmd->add_option("--cyclic", cyclic_order, "use the cyclic group Z_n");
    bicos_cmd->add_option("--dihedral", dihedral_order, "use the dihedral group of this order");
    bicos_cmd->add_option("--product", product, "use Z_m x Z_n, given as m,n");
    bicos_cmd->add_option("--out-group", out_group, "write the group table JSON");
    bicos_cmd->add_option("--L", l_csv, "subgroup elements, comma-separated");
    bicos_cmd->add_option("--R", r_csv, "subgroup elements, comma-separated");
    bicos_cmd->add_option("--J", j_csv, "subgroup elements (empty = trivial)");
    bicos_cmd->add_option("--out", out_graph, "graph JSON output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen_flags, out_graph, out_aut, out_dot);
        if (euler->parsed()) return cmd_euler(euler_flags, graph_file, out_cert, guards);
        if (verify->parsed()) return cmd_verify(graph_file, aut_file);
        if (classify->parsed()) return cmd_classify(graph_file, aut_file, guards);
        if (sweep->parsed()) return cmd_sweep(theorem, max_v, max_e, jobs, out_records);
        if (bicos_cmd->parsed())
            return cmd_bicos(group_file, cyclic_order, dihedral_order, product, l_csv, r_csv,
                             j_csv, out_graph, out_group);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
