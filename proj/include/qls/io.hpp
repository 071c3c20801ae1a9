// Text formats for Hamiltonians and graphs.
//
// Hamiltonian documents carry `n_qubits` and `terms`, each term an object
// with a `qubits` array and a decimal `coeff`; a term with an empty qubits
// array is the identity offset. Graph documents carry `n_nodes` and `edges`
// as [i, j, weight] triples.

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qls/errors.hpp"
#include "qls/hamiltonian.hpp"

namespace qls {

inline IsingHamiltonian hamiltonian_from_json(const nlohmann::json& j) {
    if (!j.contains("n_qubits") || !j.contains("terms"))
        throw ConfigError("hamiltonian document needs n_qubits and terms");
    std::vector<RawTerm> raw;
    for (const auto& term : j.at("terms")) {
        if (!term.contains("qubits") || !term.contains("coeff"))
            throw ConfigError("each term needs qubits and coeff");
        raw.push_back({term.at("qubits").get<std::vector<int>>(), term.at("coeff").get<double>()});
    }
    return IsingHamiltonian::build(j.at("n_qubits").get<int>(), raw);
}

inline nlohmann::json hamiltonian_to_json(const IsingHamiltonian& h) {
    nlohmann::json terms = nlohmann::json::array();
    if (h.offset() != 0.0)
        terms.push_back({{"qubits", nlohmann::json::array()}, {"coeff", h.offset()}});
    for (const auto& t : h.terms())
        terms.push_back({{"qubits", t.qubits}, {"coeff", t.coeff}});
    return {{"n_qubits", h.n_qubits()}, {"terms", terms}};
}

inline IsingHamiltonian read_hamiltonian_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed hamiltonian file " + path + ": " + e.what());
    }
    return hamiltonian_from_json(j);
}

inline void write_hamiltonian_file(const std::string& path, const IsingHamiltonian& h) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    os << hamiltonian_to_json(h).dump(2) << "\n";
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n_nodes") || !j.contains("edges"))
        throw ConfigError("graph document needs n_nodes and edges");
    std::vector<WeightedEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw ConfigError("each edge must be an [i, j, weight] triple");
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    }
    return make_graph(j.at("n_nodes").get<int>(), std::move(edges));
}

inline nlohmann::json graph_to_json(const WeightedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.i, e.j, e.weight});
    return {{"n_nodes", g.n_nodes}, {"edges", edges}};
}

inline WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed graph file " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

inline void write_graph_file(const std::string& path, const WeightedGraph& g) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    os << graph_to_json(g).dump(2) << "\n";
}

}  // namespace qls
