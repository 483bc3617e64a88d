#pragma once

#include <json.hpp>

#include "graph.hpp"
#include "hypergraph.hpp"
#include "zetarat.hpp"

namespace zetagraph {

using nlohmann::json;

/// {"num":[{"x":..,"t":..,"c":"p/q"},...] sorted by (t,x),
///  "den":[{"a":..,"b":..,"m":..},...] sorted by (b,a)}
inline json zetarat_to_json(const ZetaRat& f) {
    json num = json::array();
    for (const auto& [k, c] : f.num().terms()) {
        num.push_back({{"x", k.second}, {"t", k.first}, {"c", rat_to_string(c)}});
    }
    json den = json::array();
    for (const auto& g : f.den()) den.push_back({{"a", g.a}, {"b", g.b}, {"m", g.mult}});
    return json{{"num", num}, {"den", den}};
}

inline ZetaRat zetarat_from_json(const json& j) {
    BiPoly num;
    for (const auto& t : j.at("num"))
        num.add_term(t.at("x").get<long long>(), t.at("t").get<long long>(),
                     rat_from_string(t.at("c").get<std::string>()));
    std::vector<GeoFactor> den;
    for (const auto& g : j.at("den"))
        den.push_back(GeoFactor{g.at("a").get<long long>(), g.at("b").get<long long>(),
                                g.at("m").get<long long>()});
    return ZetaRat(std::move(num), std::move(den));
}

/// {"vertices": n, "edges": [[i,j],...]} with 0 <= i < j < n.
inline SimpleGraph graph_from_json(const json& j) {
    SimpleGraph g(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (!(0 <= a && a < b && b < g.n()))
            throw std::invalid_argument("edge endpoints must satisfy 0 <= i < j < n");
        g.add_edge(a, b);
    }
    return g;
}

inline json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return json{{"vertices", g.n()}, {"edges", edges}};
}

/// {"vertices": n, "hyperedges": [[v,...],...]} or {"matrix": [[0/1,...],...]}.
inline Hypergraph hypergraph_from_json(const json& j) {
    if (j.contains("matrix")) {
        const auto& m = j.at("matrix");
        IncidenceMatrix inc;
        inc.rows = static_cast<int>(m.size());
        inc.cols = inc.rows == 0 ? 0 : static_cast<int>(m.at(0).size());
        for (const auto& row : m) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            if (static_cast<int>(r.size()) != inc.cols) throw MalformedMatrix("ragged matrix");
            inc.entries.push_back(std::move(r));
        }
        return Hypergraph::from_incidence(inc);
    }
    Hypergraph h(j.at("vertices").get<int>());
    for (const auto& edge : j.at("hyperedges")) {
        Mask support = 0;
        for (const auto& v : edge) {
            int vi = v.get<int>();
            if (vi < 0 || vi >= h.n()) throw std::invalid_argument("hyperedge vertex out of range");
            support |= Mask(1) << vi;
        }
        h.add_edge(support);
    }
    return h;
}

inline json incidence_to_json(const IncidenceMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.entries) rows.push_back(r);
    return json{{"matrix", rows}};
}

}  // namespace zetagraph
