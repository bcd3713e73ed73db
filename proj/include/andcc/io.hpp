#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "andcc/boolfun.hpp"
#include "andcc/cohomology.hpp"
#include "andcc/freecat.hpp"
#include "andcc/scalars.hpp"
#include "andcc/setcover.hpp"
#include "andcc/sheaves.hpp"

namespace andcc::io {

using nlohmann::json;

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

// --- instances: {"ground": [names], "target": "0101", "family": ["0111", ...]}

inline json instance_to_json(const AndInstance& inst) {
    json j;
    j["ground"] = inst.target.ground()->names();
    j["target"] = inst.target.bitstring();
    json fam = json::array();
    for (const auto& f : inst.family) fam.push_back(f.bitstring());
    j["family"] = std::move(fam);
    return j;
}

inline AndInstance instance_from_json(const json& j) {
    GroundSetPtr ground = make_ground(j.at("ground").get<std::vector<std::string>>());
    BoolFun target = BoolFun::from_bitstring(ground, j.at("target").get<std::string>());
    std::vector<BoolFun> family;
    for (const auto& bits : j.at("family"))
        family.push_back(BoolFun::from_bitstring(ground, bits.get<std::string>()));
    return AndInstance(std::move(target), std::move(family));
}

inline AndInstance load_instance(const std::string& path) {
    return instance_from_json(load_file(path));
}

// --- graphs: {"vertices": n, "edges": [[u, v], ...]}

inline json graph_to_json(const Dag& dag) {
    json j;
    j["vertices"] = dag.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : dag.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline DagPtr graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_dag(j.at("vertices").get<int>(), std::move(edges));
}

// Vertex sets as ascending index arrays.
inline json bits_to_json(const VertexBits& bits) {
    json j = json::array();
    for (std::size_t v = 0; v < bits.size(); ++v)
        if (bits.test(v)) j.push_back(v);
    return j;
}

inline VertexBits bits_from_json(const json& j, int vertex_count) {
    VertexBits bits(vertex_count);
    for (const auto& v : j) {
        const int idx = v.get<int>();
        if (idx < 0 || idx >= vertex_count) throw std::invalid_argument("vertex index out of range");
        bits.set(idx);
    }
    return bits;
}

// --- presheaves: {"graph": {...}, "dims": [...], "maps": [[["1","1/2"],...],...]}

inline json presheaf_to_json(const Presheaf<Rational>& F) {
    json j;
    j["graph"] = graph_to_json(*F.dag());
    j["dims"] = F.dims();
    json maps = json::array();
    for (int e = 0; e < F.dag()->edge_count(); ++e) {
        const auto& m = F.map(e);
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(fraction_str(m(i, k)));
            rows.push_back(std::move(row));
        }
        maps.push_back(std::move(rows));
    }
    j["maps"] = std::move(maps);
    return j;
}

template <class Scalar = Rational>
Presheaf<Scalar> presheaf_from_json(const json& j) {
    DagPtr dag = graph_from_json(j.at("graph"));
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    if (static_cast<int>(dims.size()) != dag->vertex_count())
        throw std::invalid_argument("dims length does not match vertex count");
    const json& maps_j = j.at("maps");
    if (static_cast<int>(maps_j.size()) != dag->edge_count())
        throw std::invalid_argument("maps length does not match edge count");
    std::vector<Mat<Scalar>> maps(dag->edge_count());
    for (int e = 0; e < dag->edge_count(); ++e) {
        const int rows = dims[dag->source(e)], cols = dims[dag->target(e)];
        Mat<Scalar> m(rows, cols);
        const json& rows_j = maps_j[e];
        if (static_cast<int>(rows_j.size()) != rows) throw std::invalid_argument("bad matrix shape");
        for (int i = 0; i < rows; ++i) {
            const json& row = rows_j[i];
            if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("bad matrix shape");
            for (int k = 0; k < cols; ++k)
                m(i, k) = scalar_from_rational<Scalar>(parse_fraction(row[k].get<std::string>()));
        }
        maps[e] = std::move(m);
    }
    return Presheaf<Scalar>(dag, std::move(dims), std::move(maps));
}

// --- cube models: ground + base vertex + superskyscraper dims + target,
//     with an optional family for the induced size bound.
// {"ground": [...], "base": "00", "dims": {"01": 1}, "target": "10",
//  "family": ["10", "01"]}

struct ModelSpec {
    GroundSetPtr ground;
    BoolFun base;
    std::vector<std::pair<std::uint64_t, int>> dims;  // (cube vertex, dimension)
    BoolFun target;
    std::vector<BoolFun> family;  // may be empty
};

inline ModelSpec model_from_json(const json& j) {
    GroundSetPtr ground = make_ground(j.at("ground").get<std::vector<std::string>>());
    BoolFun base = BoolFun::from_bitstring(ground, j.at("base").get<std::string>());
    BoolFun target = BoolFun::from_bitstring(ground, j.at("target").get<std::string>());
    std::vector<std::pair<std::uint64_t, int>> dims;
    for (const auto& [key, value] : j.at("dims").items()) {
        const BoolFun vertex = BoolFun::from_bitstring(ground, key);
        const int d = value.get<int>();
        if (d < 0) throw std::invalid_argument("negative dimension in model");
        dims.emplace_back(vertex.canonical_index(), d);
    }
    std::vector<BoolFun> family;
    if (j.contains("family"))
        for (const auto& bits : j.at("family"))
            family.push_back(BoolFun::from_bitstring(ground, bits.get<std::string>()));
    return ModelSpec{std::move(ground), std::move(base), std::move(dims), std::move(target),
                     std::move(family)};
}

// --- report serialization

inline json edge_report_to_json(const EdgeDecompositionReport& rep) {
    json j;
    j["instance"] = {{"f", rep.f_bits}, {"Q", rep.q}};
    j["lhs"] = rep.lhs.str();
    j["rhs"] = rep.rhs.str();
    j["difference"] = rep.difference().str();
    json terms = json::array();
    for (const auto& t : rep.terms)
        terms.push_back({{"edge", json::array({t.a, t.b})},
                         {"paths_through", t.n_pq.str()},
                         {"cc", t.cc_ab.str()}});
    j["terms"] = std::move(terms);
    return j;
}

inline json beta_report_to_json(const BetaReport& rep) {
    json j;
    j["instance"] = {{"f", rep.f_bits}};
    j["lhs"] = rep.direct_cc ? json(*rep.direct_cc) : json();
    j["rhs"] = {{"loose", rep.h_loose.str()}, {"strict", rep.h_strict.str()}};
    if (rep.direct_cc) {
        j["difference"] = {{"loose", (rep.h_loose - BigInt(*rep.direct_cc)).str()},
                           {"strict", (rep.h_strict - BigInt(*rep.direct_cc)).str()}};
    }
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"Q", r.q},
                        {"dimF", r.dim_f},
                        {"multiplicity", r.homz_pq.str()},
                        {"loose", {{"dimV", r.v_dim_loose}, {"rank", r.rank_loose}, {"beta", r.beta_loose}}},
                        {"strict", {{"dimV", r.v_dim_strict}, {"rank", r.rank_strict}, {"beta", r.beta_strict}}}});
    j["rows"] = std::move(rows);
    return j;
}

inline json measure_table_json(const Measure& h, const GroundSetPtr& ground, int limit = 20) {
    json j = json::array();
    for (const auto& v : tabulate(h, ground, limit)) j.push_back(fraction_str(v));
    return j;
}

}  // namespace andcc::io
