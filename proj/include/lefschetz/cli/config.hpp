#pragma once

// Request configuration shared by the command-line flags and the JSON config
// file. Strings are kept raw until resolve_* turns them into engine objects,
// so a config file and the equivalent flags go through the same validation.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/formula/types.hpp"
#include "lefschetz/nf/external_json.hpp"
#include "lefschetz/nf/field.hpp"
#include "lefschetz/quat/algebra.hpp"

namespace lefschetz::cli {

struct RequestConfig {
    std::string field = "q";
    std::optional<std::string> ram;
    bool split = false;
    std::optional<std::string> hilbert;
    std::optional<int> ram_real;
    int n = 1;
    std::optional<std::string> level;
    std::string trace_w = "1";
    bool assume_torsion_free = false;
    std::string format = "json";
    std::optional<std::string> out;
    int jmax = 1;
    std::optional<std::string> signature;
    std::optional<std::string> weights;
    std::int64_t level_min = 2;
    std::int64_t level_max = 10;
    std::string suite;
};

inline std::vector<std::string> split_list(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string current;
    for (const char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current.push_back(c);
        }
    }
    out.push_back(current);
    for (const auto& item : out) {
        if (item.empty()) throw ValidationError("empty entry in list '" + text + "'");
    }
    return out;
}

inline std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw ValidationError(what + ": '" + text + "' is not an integer");
    }
    if (used != text.size()) throw ValidationError(what + ": '" + text + "' is not an integer");
    return value;
}

/// Overlays the keys of a JSON config onto `cfg`. Keys mirror the long flag
/// names; anything else is rejected.
inline void apply_config_json(const nlohmann::json& doc, RequestConfig& cfg) {
    static const std::set<std::string> allowed = {
        "field", "ram", "split", "hilbert", "ram-real", "n", "level", "trace-w", "assume-torsion-free", "format",
        "out", "jmax", "signature", "weights", "level-min", "level-max", "suite"};
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) throw ValidationError("config: unknown key '" + key + "'");
    }
    // Lists and levels may be given as JSON arrays / numbers as well as strings.
    auto text = [&](const char* key) -> std::string {
        const auto& v = doc.at(key);
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
        if (v.is_array()) {
            std::string s;
            for (const auto& item : v) {
                if (!s.empty()) s += ",";
                s += item.is_string() ? item.get<std::string>() : std::to_string(item.get<std::int64_t>());
            }
            return s;
        }
        throw ValidationError(std::string("config: key '") + key + "' has an unsupported type");
    };
    try {
        if (doc.contains("field")) cfg.field = text("field");
        if (doc.contains("ram")) cfg.ram = text("ram");
        if (doc.contains("split")) cfg.split = doc.at("split").get<bool>();
        if (doc.contains("hilbert")) cfg.hilbert = text("hilbert");
        if (doc.contains("ram-real")) cfg.ram_real = doc.at("ram-real").get<int>();
        if (doc.contains("n")) cfg.n = doc.at("n").get<int>();
        if (doc.contains("level")) cfg.level = text("level");
        if (doc.contains("trace-w")) cfg.trace_w = text("trace-w");
        if (doc.contains("assume-torsion-free")) cfg.assume_torsion_free = doc.at("assume-torsion-free").get<bool>();
        if (doc.contains("format")) cfg.format = doc.at("format").get<std::string>();
        if (doc.contains("out")) cfg.out = doc.at("out").get<std::string>();
        if (doc.contains("jmax")) cfg.jmax = doc.at("jmax").get<int>();
        if (doc.contains("signature")) cfg.signature = text("signature");
        if (doc.contains("weights")) cfg.weights = text("weights");
        if (doc.contains("level-min")) cfg.level_min = doc.at("level-min").get<std::int64_t>();
        if (doc.contains("level-max")) cfg.level_max = doc.at("level-max").get<std::int64_t>();
        if (doc.contains("suite")) cfg.suite = doc.at("suite").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("config '" + path + "': " + e.what());
    }
}

inline nf::TotallyRealField resolve_field(const std::string& spec) {
    if (spec == "q") return nf::TotallyRealField::rationals();
    if (spec.rfind("quad:", 0) == 0) return nf::TotallyRealField::real_quadratic(parse_int(spec.substr(5), "--field quad"));
    if (spec.rfind("external:", 0) == 0) return nf::load_external_field(spec.substr(9));
    throw ValidationError("--field must be q, quad:<d> or external:<path>, got '" + spec + "'");
}

/// "p" names the unique prime above p; "p<label>" (e.g. "11a") picks one of
/// several.
inline nf::PrimeIdeal resolve_prime_token(const nf::TotallyRealField& field, const std::string& token) {
    std::size_t digits = 0;
    while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) ++digits;
    if (digits == 0) throw ValidationError("prime '" + token + "' must start with a rational prime");
    const std::int64_t p = parse_int(token.substr(0, digits), "prime");
    const std::string label = token.substr(digits);
    const auto primes = nf::split_prime(field, p);
    if (label.empty()) {
        if (primes.size() != 1) {
            throw ValidationError(std::to_string(p) + " splits in " + field.id() + "; name a prime above it, e.g. " +
                                  std::to_string(p) + primes.front().label);
        }
        return primes.front();
    }
    for (const auto& prime : primes) {
        if (prime.label == label) return prime;
    }
    throw ValidationError("no prime labelled '" + label + "' above " + std::to_string(p) + " in " + field.id());
}

/// Without --ram-real, the number of ramified real places is the smallest
/// value making the ramification set even.
inline quat::QuaternionAlgebra resolve_algebra(const nf::TotallyRealField& field, const RequestConfig& cfg) {
    const int chosen = (cfg.ram ? 1 : 0) + (cfg.split ? 1 : 0) + (cfg.hilbert ? 1 : 0);
    if (chosen > 1) throw ValidationError("--ram, --split and --hilbert are mutually exclusive");
    if (cfg.hilbert) {
        if (field.kind() != nf::TotallyRealField::Kind::Rationals) {
            throw ValidationError("--hilbert is only supported over q");
        }
        const auto parts = split_list(*cfg.hilbert);
        if (parts.size() != 2) throw ValidationError("--hilbert expects a,b");
        const auto algebra = quat::hilbert_ramification_q(parse_int(parts[0], "--hilbert"), parse_int(parts[1], "--hilbert"));
        if (cfg.ram_real && *cfg.ram_real != algebra.ram_real_count()) {
            throw ValidationError("--ram-real contradicts the Hilbert symbol at infinity");
        }
        return algebra;
    }
    std::set<nf::PrimeIdeal> ram;
    if (cfg.ram) {
        for (const auto& token : split_list(*cfg.ram)) {
            if (!ram.insert(resolve_prime_token(field, token)).second) {
                throw ValidationError("prime '" + token + "' listed twice in --ram");
            }
        }
    }
    const int r = cfg.ram_real ? *cfg.ram_real : static_cast<int>(ram.size() % 2);
    return quat::QuaternionAlgebra(field, ram, r);
}

/// Either a rational integer N, or a list "p:f:e:label^k,..." of prime powers.
inline nf::Ideal resolve_level(const nf::TotallyRealField& field, const std::string& spec) {
    if (spec.find(':') == std::string::npos) return nf::ideal_from_integer(field, parse_int(spec, "--level"));
    nf::Ideal level(field.id());
    for (const auto& token : split_list(spec)) {
        std::string body = token;
        int k = 1;
        if (const auto caret = token.find('^'); caret != std::string::npos) {
            body = token.substr(0, caret);
            k = static_cast<int>(parse_int(token.substr(caret + 1), "--level exponent"));
        }
        std::vector<std::string> parts(1);
        for (const char c : body) {
            if (c == ':') {
                parts.emplace_back();
            } else {
                parts.back().push_back(c);
            }
        }
        if (parts.size() != 4) throw ValidationError("--level prime '" + token + "' must look like p:f:e:label^k");
        const std::int64_t p = parse_int(parts[0], "--level");
        const int f = static_cast<int>(parse_int(parts[1], "--level"));
        const int e = static_cast<int>(parse_int(parts[2], "--level"));
        const nf::PrimeIdeal wanted{p, f, e, parts[3]};
        bool found = false;
        for (const auto& prime : nf::split_prime(field, p)) found = found || prime == wanted;
        if (!found) throw ValidationError("'" + token + "' is not a prime ideal of " + field.id());
        level.multiply_by(wanted, k);
    }
    return level;
}

/// "p:q,p:q,..." with one signature per ramified real place.
inline formula::SignatureClass resolve_signature(int n, const std::string& spec) {
    std::vector<formula::Signature> sigs;
    for (const auto& token : split_list(spec)) {
        const auto parts = split_list(token, ':');
        if (parts.size() != 2) throw ValidationError("--signature entry '" + token + "' must look like p:q");
        sigs.push_back({static_cast<int>(parse_int(parts[0], "--signature")), static_cast<int>(parse_int(parts[1], "--signature"))});
    }
    return formula::SignatureClass(n, sigs);
}

inline formula::LefschetzInput resolve_input(const RequestConfig& cfg) {
    const auto field = resolve_field(cfg.field);
    auto algebra = resolve_algebra(field, cfg);
    if (!cfg.level) throw ValidationError("--level is required");
    auto level = resolve_level(field, *cfg.level);
    return formula::LefschetzInput{field, std::move(algebra), cfg.n, std::move(level), exact::parse_rational(cfg.trace_w),
                                   cfg.assume_torsion_free};
}

}  // namespace lefschetz::cli
