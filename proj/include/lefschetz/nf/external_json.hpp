#pragma once

#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/nf/field.hpp"

namespace lefschetz::nf {

// Descriptor layout:
//   { "degree": 3, "abs_discriminant": 49, "num_real_places": 3,
//     "zeta_neg": ["-1/21", ...],             // zeta_F(1-2j), j = 1, 2, ...
//     "splitting": { "2": [[3, 1]], "7": [[1, 3]], ... } }
inline ExternalFieldData external_field_from_json(const nlohmann::json& doc, std::string name = "descriptor") {
    static const std::set<std::string> allowed = {"name", "degree", "abs_discriminant", "num_real_places",
                                                  "zeta_neg", "splitting"};
    if (!doc.is_object()) throw ValidationError("external field descriptor must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) throw ValidationError("external field descriptor: unknown key '" + key + "'");
    }
    for (const char* key : {"degree", "abs_discriminant", "num_real_places", "splitting"}) {
        if (!doc.contains(key)) throw ValidationError(std::string("external field descriptor: missing key '") + key + "'");
    }
    ExternalFieldData data;
    try {
        data.name = doc.value("name", name);
        data.degree = doc.at("degree").get<int>();
        data.abs_discriminant = doc.at("abs_discriminant").get<std::int64_t>();
        data.num_real_places = doc.at("num_real_places").get<int>();
        if (doc.contains("zeta_neg")) {
            for (const auto& entry : doc.at("zeta_neg")) data.zeta_neg.push_back(exact::parse_rational(entry.get<std::string>()));
        }
        for (const auto& [p_text, primes] : doc.at("splitting").items()) {
            const std::int64_t p = std::stoll(p_text);
            auto& slot = data.splitting[p];
            for (const auto& fe : primes) {
                if (!fe.is_array() || fe.size() != 2) {
                    throw ValidationError("external field descriptor: splitting entries must be [f, e] pairs");
                }
                slot.emplace_back(fe[0].get<int>(), fe[1].get<int>());
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("external field descriptor: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ValidationError("external field descriptor: splitting keys must be integers");
    }
    return data;
}

inline TotallyRealField load_external_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open external field descriptor '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("external field descriptor '" + path + "': " + e.what());
    }
    return TotallyRealField::external(external_field_from_json(doc, path));
}

}  // namespace lefschetz::nf
