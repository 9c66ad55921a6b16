#pragma once

// JSON documents for branching results, characters and audit reports.

#include <json.hpp>

#include "branching.hpp"
#include "characters.hpp"

namespace branchkit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json multiplicities_json(const Decomposition& d) {
    auto arr = ordered_json::array();
    for (const auto& [nu, k] : d) arr.push_back({{"nu", to_string(nu)}, {"mult", k}});
    return arr;
}

// { "n", "lambda", "method", "multiplicities": [ {"nu","mult"} ] }, nu in graded-lex order
inline ordered_json to_json(const BranchResult& r) {
    ordered_json j;
    j["n"] = r.n.get();
    j["lambda"] = to_string(r.lambda);
    j["method"] = method_name(r.method);
    j["multiplicities"] = multiplicities_json(r.multiplicities);
    return j;
}

inline Decomposition decomposition_from_json(const ordered_json& arr) {
    Decomposition d;
    for (const auto& e : arr) d[parse_partition(e.at("nu").get<std::string>())] = e.at("mult").get<std::int64_t>();
    return d;
}

inline BranchResult branch_result_from_json(const ordered_json& j) {
    return BranchResult{Rank(j.at("n").get<int>()), parse_partition(j.at("lambda").get<std::string>()),
                        parse_method(j.at("method").get<std::string>()),
                        decomposition_from_json(j.at("multiplicities"))};
}

// Sorted [coords, mult] pairs.
inline ordered_json to_json(const Character& c) {
    ordered_json j;
    j["type"] = std::string(1, type_char(c.type));
    j["n"] = c.rank.get();
    auto arr = ordered_json::array();
    for (const auto& [w, k] : c.weights) arr.push_back(ordered_json::array({w, k}));
    j["weights"] = std::move(arr);
    return j;
}

inline ordered_json to_json(const ConjectureReport& r) {
    ordered_json j;
    j["n"] = r.n.get();
    j["lambda"] = to_string(r.lambda);
    j["agree"] = r.agree;
    j["paths"] = multiplicities_json(r.paths.multiplicities);
    j["sundaram"] = multiplicities_json(r.sundaram.multiplicities);
    j["character"] = multiplicities_json(r.character.multiplicities);
    auto d = ordered_json::array();
    for (const auto& x : r.discrepancies)
        d.push_back({{"nu", to_string(x.nu)}, {"paths", x.paths}, {"sundaram", x.sundaram}, {"character", x.character}});
    j["discrepancies"] = std::move(d);
    return j;
}

inline ordered_json to_json(const BijectionReport& r) {
    ordered_json j;
    j["n"] = r.n.get();
    j["lambda"] = to_string(r.lambda);
    j["in_scope"] = r.in_scope;
    auto rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"nu", to_string(row.nu)},
                        {"domres", row.domres_count},
                        {"lr_union", row.lr_union_count},
                        {"lrs_union", row.lrs_union_count}});
    j["rows"] = std::move(rows);
    j["counts_equal"] = r.counts_equal;
    j["lrs_counts_equal"] = r.lrs_counts_equal;
    if (r.in_scope) {
        j["phi_injective"] = r.phi_injective;
        j["phi_into_union"] = r.phi_into_union;
        j["phi_surjective"] = r.phi_surjective;
        j["inverse_left"] = r.inverse_left;
        j["inverse_right"] = r.inverse_right;
        j["bijective"] = r.bijective();
    }
    j["problems"] = r.problems;
    return j;
}

} // namespace branchkit
