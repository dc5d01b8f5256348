// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/grid.hpp"
#include "lefschetz/lefschetz.hpp"

using namespace lefschetz;
using exact::Integer;
using exact::Rational;
using formula::LefschetzInput;
using formula::SignatureClass;
using nf::PrimeIdeal;
using nf::TotallyRealField;
using quat::QuaternionAlgebra;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << what;
            ok = false;
        }
    }
};

const auto kQ = TotallyRealField::rationals();
const auto kQ5 = TotallyRealField::real_quadratic(5);
const QuaternionAlgebra kSplit = QuaternionAlgebra::split(kQ);
const QuaternionAlgebra kD6(kQ, {PrimeIdeal{2, 1, 1, ""}, PrimeIdeal{3, 1, 1, ""}}, 0);
const QuaternionAlgebra kHamilton5(kQ5, {}, 2);

LefschetzInput input(const TotallyRealField& F, const QuaternionAlgebra& D, int n, const nf::Ideal& A) {
    return LefschetzInput{F, D, n, A, Rational(1), false};
}

LefschetzInput input(const TotallyRealField& F, const QuaternionAlgebra& D, int n, std::int64_t N) {
    return input(F, D, n, nf::ideal_from_integer(F, N));
}

void criterion1(Check& c) {
    for (const std::int64_t N : {3, 4, 5, 6, 7}) {
        const Rational L = formula::lefschetz_number(input(kQ, kSplit, 1, N)).value;
        const Rational expected = -Rational(static_cast<long long>(finite::brute_force_sl(2, N)), 12);
        c.expect(L == expected, "N=" + std::to_string(N) + ": " + L.str() + " != " + expected.str());
    }
}

void criterion2(Check& c) {
    const auto g5 = formula::genus_fuchsian(kQ, kD6, nf::ideal_from_integer(kQ, 5));
    const Rational L5 = formula::lefschetz_number(input(kQ, kD6, 1, 5)).value;
    c.expect(L5 == -20, "L(5) = " + L5.str());
    c.expect(g5.genus == 11 && g5.b1 == 22, "genus(5) = " + g5.genus.str());
    c.expect(Rational(2) - Rational(2 * g5.genus) == L5, "2 - 2g != L at level 5");
    const auto g7 = formula::genus_fuchsian(kQ, kD6, nf::ideal_from_integer(kQ, 7));
    const Rational L7 = formula::lefschetz_number(input(kQ, kD6, 1, 7)).value;
    c.expect(L7 == -56 && g7.genus == 29, "level 7: L = " + L7.str() + ", g = " + g7.genus.str());
}

void criterion3(Check& c) {
    c.expect(nf::dedekind_zeta_neg(kQ5, 1) == Rational(1, 30), "zeta(-1)");
    c.expect(nf::dedekind_zeta_neg(kQ5, 2) == Rational(1, 60), "zeta(-3)");
    const auto in = input(kQ5, kHamilton5, 2, 3);
    const Rational chi = formula::euler_char_fixed_component(in, SignatureClass(2, {{2, 0}, {2, 0}})).value;
    c.expect(chi == 119556, "chi = " + chi.str());
    const Rational dec = formula::lefschetz_via_decomposition(in);
    const Rational L = formula::lefschetz_number(in).value;
    c.expect(dec == 478224 && L == 478224, "decomposition " + dec.str() + ", L " + L.str());
}

void criterion4(Check& c) {
    const auto grid = standard_grid(3, 50);
    c.expect(grid.size() >= 50, "grid has only " + std::to_string(grid.size()) + " inputs");
    for (const auto& in : grid) {
        if (formula::lefschetz_via_decomposition(in) != formula::lefschetz_number(in).value) {
            c.expect(false, "mismatch at " + in.field.id() + " " + in.algebra.to_string() + " n=" + std::to_string(in.n) +
                                " A=" + in.level.to_string());
        }
    }
    c.detail << (c.ok ? std::to_string(grid.size()) + " inputs" : "");
}

void criterion5(Check& c) {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= 4; ++r) {
            Integer sum = 0;
            for (const auto& cls : formula::h1_signature_classes(r, n)) {
                Integer prod = 1;
                for (const auto& s : cls.signatures()) prod *= exact::binomial(n, s.q);
                sum += prod;
            }
            c.expect(sum == exact::ipow(Integer(2), static_cast<std::uint64_t>(r) * (n - 1)),
                     "n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    }
}

void criterion6(Check& c) {
    using P = std::pair<int, std::int64_t>;
    for (const auto& [m, q] : std::vector<P>{{2, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 2}}) {
        c.expect(finite::sl_order(m, q) == finite::brute_force_sl(m, q), "SL " + std::to_string(m) + "," + std::to_string(q));
    }
    for (const auto& [n, q] : std::vector<P>{{1, 2}, {1, 3}, {1, 5}, {2, 2}}) {
        c.expect(finite::sp_order(n, q) == finite::brute_force_sp(n, q), "Sp " + std::to_string(n) + "," + std::to_string(q));
    }
    c.expect(finite::brute_force_sp(2, 2) == 720, "|Sp_2(F_2)| != 720");
    for (const std::int64_t q : {2, 3, 5}) {
        c.expect(finite::ramified_local_order(1, q) == finite::brute_force_ramified_sl1(q), "ramified " + std::to_string(q));
    }
    for (const auto& [n, q] : std::vector<P>{{1, 2}, {1, 3}, {2, 2}}) {
        c.expect(finite::unitary_order(n, q) == finite::brute_force_unitary(n, q), "U " + std::to_string(n) + "," + std::to_string(q));
    }
}

void criterion7(Check& c) {
    for (const std::int64_t N : {2, 3, 4, 5, 6}) {
        c.expect(formula::congruence_index(kQ, kSplit, 1, nf::ideal_from_integer(kQ, N)) == finite::brute_force_sl(2, N),
                 "N=" + std::to_string(N));
    }
    const QuaternionAlgebra hamilton(kQ, {PrimeIdeal{2, 1, 1, ""}}, 1);
    c.expect(formula::congruence_index(kQ, hamilton, 1, nf::ideal_from_integer(kQ, 2)) == 12, "ramified level (2)");
}

void criterion8(Check& c) {
    c.expect(formula::vol_sp_compact(1) == exact::SymbolicScalar(Rational(2), 2), "vol Sp(1)");
    c.expect(formula::vol_sp_compact(2) == exact::SymbolicScalar(Rational(8, 3), 6), "vol Sp(2)");
    struct Case {
        LefschetzInput in;
        SignatureClass cls;
    };
    std::vector<Case> cases;
    for (const std::int64_t N : {3, 4, 5, 6, 7}) cases.push_back({input(kQ, kSplit, 1, N), {}});
    cases.push_back({input(kQ, kD6, 1, 5), {}});
    cases.push_back({input(kQ, kD6, 1, 7), {}});
    for (const auto& cls : formula::h1_signature_classes(2, 2)) cases.push_back({input(kQ5, kHamilton5, 2, 3), cls});
    double worst = 0;
    for (const auto& cs : cases) {
        const double exact_value =
            exact::to_double(formula::euler_char_fixed_component(cs.in, cs.cls).value);
        const double numeric =
            formula::euler_char_adelic_numeric(cs.in.field, cs.in.algebra, cs.in.n, cs.in.level, cs.cls, 1000000);
        const double rel = std::abs(numeric - exact_value) / std::abs(exact_value);
        worst = std::max(worst, rel);
        c.expect(rel <= 1e-5, cs.in.field.id() + " A=" + cs.in.level.to_string() + ": relative error " + std::to_string(rel));
    }
    if (c.ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst relative error %.2e", worst);
        c.detail << buf;
    }
}

void criterion9(Check& c) {
    for (const auto& in : standard_grid(3, 50, {Rational(1), Rational(-3)})) {
        const Rational L = formula::lefschetz_number(in).value;
        c.expect(exact::is_integer(L), "non-integral L " + L.str());
        const int s = in.algebra.split_real_count();
        const int expected = (static_cast<long long>(s) * in.n * (in.n + 1) / 2) % 2 == 0 ? 1 : -1;
        for (const auto& cls : formula::h1_signature_classes(in.algebra.ram_real_count(), in.n)) {
            const Rational chi = formula::euler_char_fixed_component(in, cls).value;
            c.expect(chi == 0 || exact::sign(chi) == expected, "sign of chi " + chi.str());
        }
    }
    for (const auto& F : grid_fields()) {
        for (int j = 1; j <= 8; ++j) {
            const Rational z = nf::dedekind_zeta_neg(F, j);
            c.expect(z != 0 && exact::sign(z) == ((j * F.degree()) % 2 == 0 ? 1 : -1), "zeta sign " + F.id());
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "classical SL2 check", 1, criterion1},
        {2, "Shimura-curve coherence", 1, criterion2},
        {3, "quadratic-field pipeline", 1, criterion3},
        {4, "decomposition identity on grid", 10, criterion4},
        {5, "binomial identity", 1, criterion5},
        {6, "finite-group oracles", 20, criterion6},
        {7, "index formula", 5, criterion7},
        {8, "adelic cross-check", 10, criterion8},
        {9, "sign and integrality laws", 5, criterion9},
    };
    bool all_ok = true;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds) c.expect(false, "took longer than the time budget");
        all_ok = all_ok && c.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << "criterion " << cr.id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << cr.name << " (" << timing << ")";
        if (!c.detail.str().empty()) std::cout << "  " << c.detail.str();
        std::cout << "\n";
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << total << "s; " << (all_ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_ok ? 0 : 1;
}
