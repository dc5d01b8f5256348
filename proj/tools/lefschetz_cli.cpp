#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lefschetz/cli/config.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;
using exact::Integer;
using exact::Rational;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTorsion = 3;
constexpr std::int64_t kMaxTableRows = 10000;

std::string str(const Rational& x) { return exact::to_string(x); }
std::string str(const Integer& x) { return x.str(); }

Json string_list(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(str(x));
    return out;
}

Json describe_input(const formula::LefschetzInput& in) {
    Json j;
    j["field"] = in.field.id();
    j["algebra"] = in.algebra.to_string();
    j["n"] = in.n;
    j["level"] = in.level.to_string();
    j["level_norm"] = str(in.level.norm());
    j["trace_w"] = str(in.trace_w);
    return j;
}

Json euler_json(const formula::EulerCharReport& r) {
    Json j;
    j["signature"] = r.signature_class.to_string();
    j["value"] = str(r.value);
    j["binomial_factor"] = str(r.binomial_factor);
    j["m_factors"] = string_list(r.m_factors);
    j["warnings"] = r.warnings;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class Output {
public:
    explicit Output(const cli::RequestConfig& cfg) : cfg_(cfg) {
        if (cfg.format != "json" && cfg.format != "csv") throw ValidationError("--format must be json or csv");
    }
    bool csv() const { return cfg_.format == "csv"; }

    void emit(const std::string& text) const {
        if (cfg_.out) {
            std::ofstream f(*cfg_.out, std::ios::binary);
            if (!f) throw ValidationError("cannot write '" + *cfg_.out + "'");
            f << text;
        } else {
            std::cout << text;
        }
    }
    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

private:
    const cli::RequestConfig& cfg_;
};

int cmd_zeta(const cli::RequestConfig& cfg) {
    if (cfg.jmax < 1) throw ValidationError("--jmax must be positive");
    const auto field = cli::resolve_field(cfg.field);
    const Output out(cfg);
    std::vector<Rational> values;
    for (int j = 1; j <= cfg.jmax; ++j) values.push_back(nf::dedekind_zeta_neg(field, j));
    if (out.csv()) {
        std::string text = "j,s,value\n";
        for (int j = 1; j <= cfg.jmax; ++j) {
            text += std::to_string(j) + "," + std::to_string(1 - 2 * j) + "," + str(values[static_cast<std::size_t>(j - 1)]) + "\n";
        }
        out.emit(text);
        return kExitOk;
    }
    Json rows = Json::array();
    for (int j = 1; j <= cfg.jmax; ++j) {
        rows.push_back(Json{{"j", j}, {"s", 1 - 2 * j}, {"value", str(values[static_cast<std::size_t>(j - 1)])}});
    }
    out.emit(Json{{"field", field.id()}, {"rows", rows}});
    return kExitOk;
}

int cmd_lefschetz(const cli::RequestConfig& cfg) {
    const auto in = cli::resolve_input(cfg);
    const Output out(cfg);
    const auto r = formula::lefschetz_number(in);
    if (out.csv()) {
        out.emit("field,algebra,n,level,value\n" + csv_escape(in.field.id()) + "," + csv_escape(in.algebra.to_string()) + "," +
                 std::to_string(in.n) + "," + csv_escape(in.level.to_string()) + "," + str(r.value) + "\n");
        return kExitOk;
    }
    Json j = describe_input(in);
    j["value"] = str(r.value);
    j["m_factors"] = string_list(r.m_factors);
    j["two_power"] = str(r.two_power);
    j["level_norm_power"] = str(r.level_norm_power);
    j["discriminant_power"] = str(r.discriminant_power);
    j["warnings"] = r.warnings;
    out.emit(j);
    return kExitOk;
}

int cmd_euler(const cli::RequestConfig& cfg) {
    const auto in = cli::resolve_input(cfg);
    const Output out(cfg);
    std::vector<formula::SignatureClass> classes;
    if (cfg.signature) {
        classes.push_back(cli::resolve_signature(in.n, *cfg.signature));
    } else {
        classes = formula::h1_signature_classes(in.algebra.ram_real_count(), in.n);
    }
    std::vector<formula::EulerCharReport> reports;
    for (const auto& cls : classes) reports.push_back(formula::euler_char_fixed_component(in, cls));
    if (out.csv()) {
        std::string text = "signature,value,binomial_factor\n";
        for (const auto& r : reports) {
            text += csv_escape(r.signature_class.to_string()) + "," + str(r.value) + "," + str(r.binomial_factor) + "\n";
        }
        out.emit(text);
        return kExitOk;
    }
    Json j = describe_input(in);
    Json components = Json::array();
    for (const auto& r : reports) components.push_back(euler_json(r));
    j["components"] = components;
    out.emit(j);
    return kExitOk;
}

int cmd_index(const cli::RequestConfig& cfg) {
    const auto in = cli::resolve_input(cfg);
    const Output out(cfg);
    const Integer idx = formula::congruence_index(in.field, in.algebra, in.n, in.level);
    if (out.csv()) {
        out.emit("index\n" + str(idx) + "\n");
        return kExitOk;
    }
    Json j = describe_input(in);
    j.erase("trace_w");
    j["index"] = str(idx);
    out.emit(j);
    return kExitOk;
}

int cmd_genus(const cli::RequestConfig& cfg) {
    auto local = cfg;
    local.n = 1;
    const auto in = cli::resolve_input(local);
    const Output out(cfg);
    std::vector<int> weights;
    if (cfg.weights) {
        for (const auto& w : cli::split_list(*cfg.weights)) weights.push_back(static_cast<int>(cli::parse_int(w, "--weights")));
    }
    const auto g = formula::genus_fuchsian(in.field, in.algebra, in.level, in.assume_torsion_free);
    std::vector<Integer> dims;
    for (const int k : weights) dims.push_back(formula::modular_form_dim(g.genus, k));
    if (out.csv()) {
        std::string text = "genus,b1,chi";
        for (const int k : weights) text += ",dim_S" + std::to_string(k);
        text += "\n" + str(g.genus) + "," + str(g.b1) + "," + str(g.chi);
        for (const auto& d : dims) text += "," + str(d);
        out.emit(text + "\n");
        return kExitOk;
    }
    Json j = describe_input(in);
    j.erase("n");
    j.erase("trace_w");
    j["genus"] = str(g.genus);
    j["b1"] = str(g.b1);
    j["chi"] = str(g.chi);
    Json dj = Json::object();
    for (std::size_t i = 0; i < weights.size(); ++i) dj[std::to_string(weights[i])] = str(dims[i]);
    j["dims"] = dj;
    j["warnings"] = g.warnings;
    out.emit(j);
    return kExitOk;
}

int cmd_table(const cli::RequestConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json") throw ValidationError("--format must be json or csv");
    if (cfg.level_min < 2) throw ValidationError("--level-min must be >= 2");
    const std::int64_t rows = cfg.level_max >= cfg.level_min ? cfg.level_max - cfg.level_min + 1 : 0;
    if (rows > kMaxTableRows) {
        throw ValidationError("table has " + std::to_string(rows) + " rows, more than the cap of " + std::to_string(kMaxTableRows));
    }
    const auto field = cli::resolve_field(cfg.field);
    const auto algebra = cli::resolve_algebra(field, cfg);
    const Rational trace = exact::parse_rational(cfg.trace_w);
    const bool fuchsian = cfg.n == 1 && quat::is_fuchsian(algebra);

    std::ostringstream text;
    text << "level,norm,index,lefschetz,chi_components,genus,status\n";
    for (std::int64_t N = cfg.level_min; N <= cfg.level_max; ++N) {
        const auto level = nf::ideal_from_integer(field, N);
        text << N << "," << level.norm() << ",";
        if (!formula::check_torsion_necessary(field, level) && !cfg.assume_torsion_free) {
            text << ",,,,torsion check failed\n";
            continue;
        }
        const formula::LefschetzInput in{field, algebra, cfg.n, level, trace, cfg.assume_torsion_free};
        const auto L = formula::lefschetz_number(in);
        std::string chis;
        for (const auto& cls : formula::h1_signature_classes(algebra.ram_real_count(), cfg.n)) {
            if (!chis.empty()) chis += ";";
            chis += (cls.size() == 0 ? std::string("()") : cls.to_string()) + "=" +
                    str(formula::euler_char_fixed_component(in, cls).value);
        }
        text << formula::congruence_index(field, algebra, cfg.n, level) << "," << str(L.value) << "," << csv_escape(chis)
             << ",";
        if (fuchsian) text << formula::genus_fuchsian(field, algebra, level, cfg.assume_torsion_free).genus;
        text << ",ok\n";
    }
    Output(cfg).emit(text.str());
    return kExitOk;
}

int cmd_verify(const cli::RequestConfig& cfg) {
    std::ostringstream report;
    const bool ok = verify::run_suites(cfg.suite, report);
    report << (ok ? "verify: all selected suites passed\n" : "verify: FAILED\n");
    Output(cfg).emit(report.str());
    return ok ? kExitOk : 1;
}

struct Flags {
    std::string config;
    std::string field, ram, hilbert, level, trace_w, format, out, signature, weights, suite;
    int ram_real = 0, n = 1, jmax = 1;
    std::int64_t level_min = 2, level_max = 10;
    bool split = false, assume = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config mirroring the flags");
    sub->add_option("--field", f.field, "q | quad:<d> | external:<path>");
    sub->add_option("--format", f.format, "json | csv");
    sub->add_option("--out", f.out, "write output to this file");
}

void add_algebra(CLI::App* sub, Flags& f) {
    sub->add_option("--ram", f.ram, "finite ramified primes, e.g. 2,3 or 11a");
    sub->add_flag("--split", f.split, "split algebra M_2(F)");
    sub->add_option("--hilbert", f.hilbert, "Hilbert symbol (a,b) over Q");
    sub->add_option("--ram-real", f.ram_real, "number of ramified real places");
    sub->add_option("--trace-w", f.trace_w, "Tr(tau* | W) as p/q");
    sub->add_flag("--assume-torsion-free", f.assume, "proceed when the level divides (2)");
}

/// Flags given on the command line win over the config file.
cli::RequestConfig build_config(const CLI::App* sub, const Flags& f) {
    cli::RequestConfig cfg;
    if (!f.config.empty()) cli::apply_config_json(cli::load_json_file(f.config), cfg);
    auto given = [&](const char* name) {
        try {
            return sub->get_option(name)->count() > 0;
        } catch (const CLI::OptionNotFound&) {
            return false;
        }
    };
    if (given("--field")) cfg.field = f.field;
    if (given("--ram")) cfg.ram = f.ram;
    if (given("--split")) cfg.split = f.split;
    if (given("--hilbert")) cfg.hilbert = f.hilbert;
    if (given("--ram-real")) cfg.ram_real = f.ram_real;
    if (given("--n")) cfg.n = f.n;
    if (given("--level")) cfg.level = f.level;
    if (given("--trace-w")) cfg.trace_w = f.trace_w;
    if (given("--assume-torsion-free")) cfg.assume_torsion_free = f.assume;
    if (given("--format")) cfg.format = f.format;
    if (given("--out")) cfg.out = f.out;
    if (given("--jmax")) cfg.jmax = f.jmax;
    if (given("--signature")) cfg.signature = f.signature;
    if (given("--weights")) cfg.weights = f.weights;
    if (given("--level-min")) cfg.level_min = f.level_min;
    if (given("--level-max")) cfg.level_max = f.level_max;
    if (given("--suite")) cfg.suite = f.suite;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lefschetz numbers, Euler characteristics, indices and genera for congruence subgroups"};
    app.require_subcommand(1);
    Flags f;

    auto* zeta = app.add_subcommand("zeta", "zeta_F(1-2j) for j = 1..jmax");
    add_common(zeta, f);
    zeta->add_option("--jmax", f.jmax, "largest j");

    auto* lef = app.add_subcommand("lefschetz", "Lefschetz number of the symplectic-type involution");
    auto* euler = app.add_subcommand("euler-char", "Euler characteristics of the fixed-point components");
    auto* index = app.add_subcommand("index", "index of Gamma(A) in the unit group");
    for (auto* sub : {lef, euler, index}) {
        add_common(sub, f);
        add_algebra(sub, f);
        sub->add_option("--n", f.n, "rank n of M_n(D)");
        sub->add_option("--level", f.level, "N or p:f:e:label^k,...");
    }
    euler->add_option("--signature", f.signature, "p:q,... one per ramified real place");

    auto* genus = app.add_subcommand("genus", "genus of the compact Shimura curve");
    add_common(genus, f);
    add_algebra(genus, f);
    genus->add_option("--level", f.level, "N or p:f:e:label^k,...");
    genus->add_option("--weights", f.weights, "even weights k for dim S_k");

    auto* table = app.add_subcommand("table", "CSV table (whatever --format says) over the integer levels level-min..level-max");
    add_common(table, f);
    add_algebra(table, f);
    table->add_option("--n", f.n, "rank n of M_n(D)");
    table->add_option("--level-min", f.level_min, "first level");
    table->add_option("--level-max", f.level_max, "last level");

    auto* ver = app.add_subcommand("verify", "run the oracle and invariant suites");
    ver->add_option("--suite", f.suite, "suite name or prefix, e.g. zeta");
    ver->add_option("--out", f.out, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        auto* sub = app.get_subcommands().front();
        auto cfg = build_config(sub, f);
        const std::string name = sub->get_name();
        if (name == "zeta") return cmd_zeta(cfg);
        if (name == "lefschetz") return cmd_lefschetz(cfg);
        if (name == "euler-char") return cmd_euler(cfg);
        if (name == "index") return cmd_index(cfg);
        if (name == "genus") return cmd_genus(cfg);
        if (name == "table") return cmd_table(cfg);
        return cmd_verify(cfg);
    } catch (const TorsionUnverified& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTorsion;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
