#include "ecsf/json_io.hpp"

#include <fstream>

namespace ecsf {

json to_json(const Composition& a) { return json(a.parts()); }
json to_json(const Partition& a) { return json(a.parts()); }

Composition composition_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("composition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<int>() < 1)
            throw parse_error("composition parts must be positive integers");
        parts.push_back(v.get<int>());
    }
    return Composition(std::move(parts));
}

json to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [part, c] : f.terms())
        terms.push_back({{"coeff", to_string(c)}, {"partition", part.parts()}});
    return {{"basis", "p"}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
    if (!j.is_object() || j.value("basis", "") != "p" || !j.contains("terms"))
        throw parse_error("symmetric function must be {\"basis\":\"p\",\"terms\":[...]}");
    SymFunc f;
    for (const auto& t : j.at("terms")) {
        Composition parts = composition_from_json(t.at("partition"));
        f.add_term(underlying_partition(parts), parse_rational(t.at("coeff").get<std::string>()));
    }
    return f;
}

json to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    return {{"weights", g.weights()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("edges"))
        throw parse_error("graph must be {\"weights\":[...],\"edges\":[[i,j],...]}");
    std::vector<int> weights;
    for (const auto& w : j.at("weights")) {
        if (!w.is_number_integer() || w.get<int>() < 1)
            throw parse_error("vertex weights must be positive integers");
        weights.push_back(w.get<int>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("edges must be pairs [i,j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return WeightedGraph(std::move(weights), std::move(edges));
    } catch (const domain_error& err) {
        throw parse_error(err.what());
    }
}

json to_json(const BasisMatrix& m) {
    json order = json::array(), rows = json::array();
    for (const Partition& p : m.order) order.push_back(p.parts());
    for (const auto& row : m.rows) {
        json r = json::array();
        for (const Rational& c : row) r.push_back(to_string(c));
        rows.push_back(r);
    }
    return {{"degree", m.degree}, {"order", order}, {"rows", rows}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("bad JSON in " + path + ": " + e.what());
    }
}

} // namespace ecsf
