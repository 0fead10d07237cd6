#include "perco/json_io.hpp"

#include <cstdio>

namespace perco {

using nlohmann::json;

json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return json{{"n", g.n()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const json& j) {
    require(j.contains("n") && j.contains("edges"), Err::io_error, "graph JSON needs n and edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        require(e.is_array() && e.size() == 2, Err::io_error, "edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return LabeledGraph(j.at("n").get<int>(), std::move(edges), /*sort_lexicographic=*/false);
}

json measure_to_json(const Measure& mu) {
    json out;
    out["graph"] = graph_to_json(mu.graph());
    json weights = json::array();
    if (mu.mode() == Mode::exact) {
        for (const Rat& w : mu.weights_exact())
            weights.push_back({w.get_num().get_str(), w.get_den().get_str()});
    } else {
        out["mode"] = "float";
        out["tolerance"] = mu.tolerance();
        char buf[64];
        for (double w : mu.weights_floating()) {
            std::snprintf(buf, sizeof buf, "%.32e", w);
            weights.push_back(std::string(buf));
        }
    }
    out["weights"] = std::move(weights);
    return out;
}

Measure measure_from_json(const json& j) {
    require(j.contains("graph") && j.contains("weights"), Err::io_error,
            "measure JSON needs graph and weights");
    LabeledGraph g = graph_from_json(j.at("graph"));
    const auto& ws = j.at("weights");
    bool floating = j.value("mode", std::string("exact")) == "float";
    if (floating) {
        std::vector<double> w;
        for (const auto& e : ws) w.push_back(std::stod(e.get<std::string>()));
        return Measure::floating(std::move(g), std::move(w), j.value("tolerance", 1e-9));
    }
    std::vector<Rat> w;
    for (const auto& e : ws) {
        require(e.is_array() && e.size() == 2, Err::io_error, "rational weight must be [num, den]");
        Rat r(Int(e[0].get<std::string>()), Int(e[1].get<std::string>()));
        r.canonicalize();
        w.push_back(std::move(r));
    }
    return Measure::exact(std::move(g), std::move(w));
}

namespace {

json rat_pair(const Rat& r) { return json{r.get_num().get_str(), r.get_den().get_str()}; }

Rat rat_from_pair(const json& j) {
    Rat r(Int(j[0].get<std::string>()), Int(j[1].get<std::string>()));
    r.canonicalize();
    return r;
}

} // namespace

json vbm_to_json(const VertexBasedMeasure& vbm) {
    json dists = json::array();
    for (const auto& d : vbm.state_dists) {
        json row = json::array();
        for (const Rat& p : d) row.push_back(rat_pair(p));
        dists.push_back(std::move(row));
    }
    json tables = json::array();
    for (const auto& t : vbm.edge_open) {
        json row = json::array();
        for (char b : t) row.push_back(static_cast<int>(b));
        tables.push_back(std::move(row));
    }
    return json{{"graph", graph_to_json(vbm.graph)},
                {"state_dists", std::move(dists)},
                {"edge_open", std::move(tables)}};
}

VertexBasedMeasure vbm_from_json(const json& j) {
    VertexBasedMeasure vbm;
    vbm.graph = graph_from_json(j.at("graph"));
    for (const auto& row : j.at("state_dists")) {
        std::vector<Rat> d;
        for (const auto& e : row) d.push_back(rat_from_pair(e));
        vbm.state_dists.push_back(std::move(d));
    }
    for (const auto& row : j.at("edge_open")) {
        std::vector<char> t;
        for (const auto& e : row) t.push_back(static_cast<char>(e.get<int>()));
        vbm.edge_open.push_back(std::move(t));
    }
    vbm.check_shape();
    return vbm;
}

} // namespace perco
