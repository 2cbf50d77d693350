#pragma once

#include <json.hpp>

#include <string>

#include "sgr/classify.hpp"
#include "sgr/enumerate.hpp"
#include "sgr/kocheck.hpp"

namespace sgr {

using nlohmann::json;

inline json factored_to_json(const FactoredInteger& f) {
    json obj = json::object();
    for (const auto& [p, e] : f.factors()) obj[std::to_string(p)] = e;
    return obj;
}

/**
 * Stable verdict schema:
 *   { reducible, case: "A".."F" | null, m, d, modulus (factored object),
 *     homs: [ { kind, summands: [ { label, dim } ] } ], trace | null }
 * Field names are fixed; golden files in the tests pin the exact bytes.
 */
inline json verdict_to_json(const ReductionVerdict& v) {
    json obj;
    obj["reducible"] = v.reducible;
    obj["case"] = v.reduction_case ? json(std::string(1, case_letter(*v.reduction_case))) : json(nullptr);
    if (v.trace) {
        obj["m"] = v.trace->m;
        obj["d"] = v.trace->d;
        obj["modulus"] = factored_to_json(v.trace->modulus);
        obj["trace"] = {{"m", v.trace->m},
                        {"d", v.trace->d},
                        {"modulus", factored_to_json(v.trace->modulus)},
                        {"remainder", v.trace->remainder.str()}};
    } else {
        obj["m"] = nullptr;
        obj["d"] = nullptr;
        obj["modulus"] = nullptr;
        obj["trace"] = nullptr;
    }
    json homs = json::array();
    for (const auto& hom : v.homs) {
        json summands = json::array();
        for (const auto& s : hom.decomposition) summands.push_back({{"label", s.label}, {"dim", s.dim}});
        homs.push_back({{"kind", hom_kind_name(hom.kind)}, {"summands", summands}});
    }
    obj["homs"] = homs;
    return obj;
}

inline std::string verdict_to_json_string(const ReductionVerdict& v) { return verdict_to_json(v).dump(); }

inline json ko_info_to_json(const KOGroupInfo& info, bool fixed_generator) {
    json obj;
    obj["n"] = info.n;
    obj["k"] = info.k;
    obj["status"] = ko_status_name(info.status);
    obj["order"] = info.order.str();
    obj["psi3_multiplier"] = info.psi3_multiplier.str();
    obj["fixed_generator"] = fixed_generator;
    return obj;
}

inline json weight_dims_to_json(const std::vector<WeightDim>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json coeffs = json::array();
        for (int c : row.weight.coeffs) coeffs.push_back(c);
        arr.push_back({{"coeffs", coeffs}, {"dim", row.dim.str()}});
    }
    return arr;
}

} // namespace sgr
