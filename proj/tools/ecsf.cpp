// Command-line surface over the library: exact chromatic symmetric function
// computations with JSON input/output.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ecsf/bases.hpp"
#include "ecsf/chromatic.hpp"
#include "ecsf/compositions.hpp"
#include "ecsf/graphs.hpp"
#include "ecsf/json_io.hpp"
#include "ecsf/symfunc.hpp"

namespace {

using namespace ecsf;

enum ExitCode {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_domain = 3,
    exit_resource = 4,
};

void emit_error(const std::string& kind, const std::string& message) {
    json err = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    // "0-1,1-2" style
    std::vector<Edge> edges;
    if (text.empty()) return edges;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t dash = tok.find('-');
        if (dash == std::string::npos) throw parse_error("bad edge: " + tok);
        try {
            edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            throw parse_error("bad edge: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return edges;
}

GraphFamily family_by_name(const std::string& name) {
    if (name == "paths") return GraphFamily::paths();
    if (name == "stars") return GraphFamily::stars();
    if (name == "wpath") return GraphFamily::weighted_path_table();
    if (name.rfind("table:", 0) == 0) {
        json j = load_json_file(name.substr(6));
        if (!j.is_object() || !j.contains("entries"))
            throw parse_error("table file must be {\"entries\":[{\"partition\":[...],\"edges\":[[i,j],...]},...]}");
        std::map<Partition, WeightedGraph> table;
        for (const auto& entry : j.at("entries")) {
            Partition l = underlying_partition(composition_from_json(entry.at("partition")));
            std::vector<Edge> edges;
            for (const auto& e : entry.at("edges"))
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            table.emplace(l, WeightedGraph(l.parts(), std::move(edges)));
        }
        return GraphFamily::from_table(std::move(table));
    }
    throw parse_error("unknown family: " + name);
}

void print_symfunc(const SymFunc& f, const std::string& output) {
    if (output == "pretty")
        std::cout << f.str() << "\n";
    else
        std::cout << to_json(f).dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact chromatic symmetric functions of vertex-weighted graphs"};
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    // xfn
    auto* xfn = app.add_subcommand("xfn", "X of a weighted graph");
    std::string xfn_file, xfn_algo = "delcon";
    xfn->add_option("graph", xfn_file, "graph JSON file")->required();
    xfn->add_option("--algo", xfn_algo, "subsets|delcon|mobius")
        ->check(CLI::IsMember({"subsets", "delcon", "mobius"}));

    // equal
    auto* equal = app.add_subcommand("equal", "compare X of two graphs");
    std::string eq_a, eq_b;
    equal->add_option("graph1", eq_a)->required();
    equal->add_option("graph2", eq_b)->required();

    // path-x
    auto* pathx = app.add_subcommand("path-x", "X of the path weighted by a composition");
    std::string pathx_comp;
    pathx->add_option("composition", pathx_comp, "comma-separated parts")->required();

    // ribbon
    auto* ribbon = app.add_subcommand("ribbon", "ribbon Schur function expansion");
    std::string ribbon_comp, ribbon_basis = "p";
    ribbon->add_option("composition", ribbon_comp)->required();
    ribbon->add_option("--basis", ribbon_basis, "h|p")->check(CLI::IsMember({"h", "p"}));

    // compose / factorize / class / equiv
    auto* comp = app.add_subcommand("compose", "composition of compositions");
    std::string comp_a, comp_b;
    comp->add_option("alpha", comp_a)->required();
    comp->add_option("beta", comp_b)->required();

    auto* fact = app.add_subcommand("factorize", "irreducible factorization");
    std::string fact_a;
    fact->add_option("alpha", fact_a)->required();

    auto* cls = app.add_subcommand("class", "ribbon equivalence class");
    std::string cls_a;
    cls->add_option("alpha", cls_a)->required();

    auto* equiv = app.add_subcommand("equiv", "ribbon equivalence test");
    std::string equiv_a, equiv_b;
    equiv->add_option("alpha", equiv_a)->required();
    equiv->add_option("beta", equiv_b)->required();

    // compose-graph
    auto* cg = app.add_subcommand("compose-graph", "composition applied to a graph");
    std::string cg_comp, cg_file;
    int cg_a = 0, cg_z = 0;
    cg->add_option("alpha", cg_comp)->required();
    cg->add_option("graph", cg_file)->required();
    cg->add_option("--a", cg_a, "first distinguished vertex")->required();
    cg->add_option("--z", cg_z, "second distinguished vertex")->required();

    // basis-matrix
    auto* bm = app.add_subcommand("basis-matrix", "change of basis matrix vs power sums");
    std::string bm_family;
    int bm_degree = 0;
    bm->add_option("--family", bm_family, "paths|stars|wpath|table:FILE")->required();
    bm->add_option("--degree", bm_degree)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "structural identity checks");
    verify->require_subcommand(1);
    auto* vkdel = verify->add_subcommand("kdeletion", "cycle alternating sum is zero");
    std::string vk_file, vk_cycle, vk_edge;
    vkdel->add_option("graph", vk_file)->required();
    vkdel->add_option("--cycle", vk_cycle, "edges, e.g. 0-1,1-2,0-2")->required();
    vkdel->add_option("--edge", vk_edge, "fixed edge, e.g. 0-1")->required();

    auto* vinc = verify->add_subcommand("incexc", "inclusion-exclusion identity");
    std::string vi_coarse, vi_fine, vi_extra;
    vinc->add_option("coarse", vi_coarse)->required();
    vinc->add_option("fine", vi_fine)->required();
    vinc->add_option("--extra", vi_extra, "reconnecting edges, e.g. 1-2,1-2")->required();

    auto* vrec = verify->add_subcommand("reciprocity", "p <-> X involution");
    std::string vr_family;
    int vr_degree = 0;
    vrec->add_option("--family", vr_family, "paths|stars")->required();
    vrec->add_option("--degree", vr_degree)->required();

    auto* vneat = verify->add_subcommand("neat", "edge-deletion closure of a family");
    std::string vn_family;
    int vn_degree = 0;
    vneat->add_option("--family", vn_family, "paths|stars")->required();
    vneat->add_option("--degree", vn_degree)->required();

    // chromatic
    auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial value");
    std::string ch_file, ch_k;
    chrom->add_option("graph", ch_file)->required();
    chrom->add_option("--k", ch_k, "number of colours")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    auto x_by_algo = [](const WeightedGraph& g, const std::string& algo) {
        if (algo == "subsets") return x_edge_subsets(g);
        if (algo == "mobius") return x_mobius(g);
        return x_deletion_contraction(g);
    };

    if (xfn->parsed()) {
        print_symfunc(x_by_algo(graph_from_json(load_json_file(xfn_file)), xfn_algo), output);
    } else if (equal->parsed()) {
        SymFunc xa = x_deletion_contraction(graph_from_json(load_json_file(eq_a)));
        SymFunc xb = x_deletion_contraction(graph_from_json(load_json_file(eq_b)));
        std::cout << json{{"equal", xa == xb}}.dump() << "\n";
    } else if (pathx->parsed()) {
        print_symfunc(weighted_path_to_p(Composition::parse(pathx_comp)), output);
    } else if (ribbon->parsed()) {
        Composition a = Composition::parse(ribbon_comp);
        if (ribbon_basis == "h") {
            json terms = json::array();
            for (const auto& [part, c] : ribbon_to_h(a))
                terms.push_back({{"coeff", c.str()}, {"partition", part.parts()}});
            std::cout << json{{"basis", "h"}, {"terms", terms}}.dump() << "\n";
        } else {
            print_symfunc(ribbon_to_p(a), output);
        }
    } else if (comp->parsed()) {
        std::cout << to_json(compose(Composition::parse(comp_a), Composition::parse(comp_b))).dump()
                  << "\n";
    } else if (fact->parsed()) {
        json out = json::array();
        for (const Composition& f : irreducible_factorization(Composition::parse(fact_a)))
            out.push_back(to_json(f));
        std::cout << out.dump() << "\n";
    } else if (cls->parsed()) {
        json out = json::array();
        for (const Composition& c : equivalence_class(Composition::parse(cls_a)))
            out.push_back(to_json(c));
        std::cout << out.dump() << "\n";
    } else if (equiv->parsed()) {
        bool eq = equivalent(Composition::parse(equiv_a), Composition::parse(equiv_b));
        std::cout << json{{"equivalent", eq}}.dump() << "\n";
    } else if (cg->parsed()) {
        WeightedGraph g = graph_from_json(load_json_file(cg_file));
        std::cout << to_json(compose_graph(Composition::parse(cg_comp), g, cg_a, cg_z)).dump()
                  << "\n";
    } else if (bm->parsed()) {
        std::cout << to_json(family_matrix(family_by_name(bm_family), bm_degree)).dump() << "\n";
    } else if (vkdel->parsed()) {
        WeightedGraph g = graph_from_json(load_json_file(vk_file));
        auto cyc = parse_edge_list(vk_cycle);
        auto fixed = parse_edge_list(vk_edge);
        if (fixed.size() != 1) throw parse_error("--edge expects a single edge");
        VerifyResult r = verify_k_deletion(g, cyc, fixed[0]);
        std::cout << json{{"ok", r.ok}, {"detail", r.detail}}.dump() << "\n";
        return r.ok ? exit_ok : exit_domain;
    } else if (vinc->parsed()) {
        WeightedGraph coarse = graph_from_json(load_json_file(vi_coarse));
        WeightedGraph fine = graph_from_json(load_json_file(vi_fine));
        VerifyResult r = verify_inclusion_exclusion(coarse, fine, parse_edge_list(vi_extra));
        std::cout << json{{"ok", r.ok}, {"detail", r.detail}}.dump() << "\n";
        return r.ok ? exit_ok : exit_domain;
    } else if (vrec->parsed()) {
        bool ok = reciprocity_check(family_by_name(vr_family), vr_degree);
        std::cout << json{{"ok", ok}}.dump() << "\n";
        return ok ? exit_ok : exit_domain;
    } else if (vneat->parsed()) {
        NeatResult r = is_neat(family_by_name(vn_family), vn_degree);
        json detail;
        if (!r.ok) {
            json edges = json::array();
            for (const Edge& e : r.failing_subset) edges.push_back({e.first, e.second});
            detail = {{"degree", r.failing_degree}, {"deleted_edges", edges},
                      {"message", r.detail}};
        }
        std::cout << json{{"ok", r.ok}, {"detail", detail}}.dump() << "\n";
        return r.ok ? exit_ok : exit_domain;
    } else if (chrom->parsed()) {
        WeightedGraph g = graph_from_json(load_json_file(ch_file));
        Integer k;
        try {
            k = Integer(ch_k);
        } catch (const std::exception&) {
            throw parse_error("bad integer: " + ch_k);
        }
        std::cout << chromatic_polynomial(g, k).str() << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ecsf::parse_error& e) {
        emit_error("parse", e.what());
        return exit_parse;
    } catch (const ecsf::resource_error& e) {
        emit_error("resource", e.what());
        return exit_resource;
    } catch (const ecsf::invariant_error& e) {
        emit_error("invariant", e.what());
        return exit_domain;
    } catch (const std::domain_error& e) {
        emit_error("domain", e.what());
        return exit_domain;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return exit_domain;
    }
}
