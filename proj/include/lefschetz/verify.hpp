#pragma once

// Oracle-equivalence and invariant suites behind `lefschetz verify`.

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "lefschetz/grid.hpp"
#include "lefschetz/lefschetz.hpp"

namespace lefschetz::verify {

using exact::Integer;
using exact::Rational;

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            failures.push_back(what);
        }
    }
};

struct Suite {
    std::string name;
    std::function<void(SuiteResult&)> run;
};

namespace detail {

inline void bernoulli_recurrence(SuiteResult& r) {
    for (int m = 1; m <= 40; ++m) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j) sum += Rational(exact::binomial(m + 1, j)) * exact::bernoulli(static_cast<std::size_t>(j));
        r.check(sum == 0, "recurrence fails at m = " + std::to_string(m));
    }
    for (int k = 3; k <= 41; k += 2) r.check(exact::bernoulli(static_cast<std::size_t>(k)) == 0, "B_" + std::to_string(k) + " != 0");
    r.check(exact::bernoulli(12) == Rational(-691, 2730), "B_12 != -691/2730");
}

inline void zeta_signs(SuiteResult& r) {
    for (const auto& field : grid_fields()) {
        for (int j = 1; j <= 8; ++j) {
            const Rational z = nf::dedekind_zeta_neg(field, j);
            const int expected = ((j * field.degree()) % 2 == 0) ? 1 : -1;
            r.check(z != 0 && exact::sign(z) == expected,
                    "zeta_" + field.id() + "(" + std::to_string(1 - 2 * j) + ") = " + z.str() + " has the wrong sign");
        }
    }
    const nf::QuadraticCharacter chi5(5);
    r.check(nf::gen_bernoulli(2, chi5) == Rational(4, 5), "B_{2,chi_5} != 4/5");
    r.check(nf::gen_bernoulli(4, chi5) == Rational(-8), "B_{4,chi_5} != -8");
    const auto q5 = nf::TotallyRealField::real_quadratic(5);
    r.check(nf::dedekind_zeta_neg(q5, 1) == Rational(1, 30), "zeta_Q(sqrt5)(-1) != 1/30");
    r.check(nf::dedekind_zeta_neg(q5, 2) == Rational(1, 60), "zeta_Q(sqrt5)(-3) != 1/60");
}

inline void zeta_functional_equation(SuiteResult& r) {
    for (const auto& field : grid_fields()) {
        for (int j = 1; j <= 2; ++j) {
            const double lhs_zeta = nf::zeta_f_positive_even_numeric(field, j, 1000000).value;
            const double unit = 2.0 * exact::factorial(2 * j - 1).convert_to<double>() / std::pow(2.0 * M_PI, 2 * j);
            const double lhs = lhs_zeta * std::pow(static_cast<double>(field.abs_discriminant()), (4.0 * j - 1.0) / 2.0) *
                               std::pow(unit, field.degree());
            const double sign = ((j * field.degree()) % 2 == 0) ? 1.0 : -1.0;
            const double rhs = sign * exact::to_double(nf::dedekind_zeta_neg(field, j));
            r.check(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs),
                    "functional equation off for " + field.id() + ", j = " + std::to_string(j));
        }
    }
}

inline void hilbert_parity(SuiteResult& r) {
    for (std::int64_t a = -20; a <= 20; ++a) {
        for (std::int64_t b = -20; b <= 20; ++b) {
            if (a == 0 || b == 0) continue;
            try {
                const auto D = quat::hilbert_ramification_q(a, b);
                r.check((D.ram_finite().size() + static_cast<std::size_t>(D.ram_real_count())) % 2 == 0,
                        "odd ramification for (" + std::to_string(a) + "," + std::to_string(b) + ")");
            } catch (const Error& e) {
                r.check(false, "(" + std::to_string(a) + "," + std::to_string(b) + "): " + e.what());
            }
        }
    }
}

inline void finite_orders(SuiteResult& r) {
    auto eq = [&](const Integer& closed, std::uint64_t brute, const std::string& what) {
        r.check(closed == brute, what + ": closed form " + closed.str() + ", enumeration " + std::to_string(brute));
    };
    for (const auto& [m, q] : std::vector<std::pair<int, std::int64_t>>{{2, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 2}}) {
        eq(finite::sl_order(m, q), finite::brute_force_sl(m, q), "SL_" + std::to_string(m) + "(" + std::to_string(q) + ")");
    }
    for (const auto& [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 3}, {1, 5}, {2, 2}}) {
        eq(finite::sp_order(n, q), finite::brute_force_sp(n, q), "Sp_" + std::to_string(n) + "(" + std::to_string(q) + ")");
    }
    for (const std::int64_t q : {2, 3, 5}) {
        eq(finite::ramified_local_order(1, q), finite::brute_force_ramified_sl1(q), "ramified SL_1(" + std::to_string(q) + ")");
    }
    for (const auto& [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 3}, {2, 2}}) {
        eq(finite::unitary_order(n, q), finite::brute_force_unitary(n, q), "U_" + std::to_string(n) + "(" + std::to_string(q) + ")");
    }
    for (int n = 1; n <= 5; ++n) {
        for (const std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            r.check(finite::ramified_local_order(n, q) == finite::unitary_order(n, q) * exact::ipow(Integer(q), static_cast<std::uint64_t>(n) * (n + 1)),
                    "ramified/unitary relation fails at n = " + std::to_string(n) + ", q = " + std::to_string(q));
        }
    }
    r.check(finite::brute_force_sl(2, 6) == finite::brute_force_sl(2, 2) * finite::brute_force_sl(2, 3), "CRT multiplicativity for SL_2(Z/6)");
}

inline void index_vs_enumeration(SuiteResult& r) {
    const auto Q = nf::TotallyRealField::rationals();
    const auto split = quat::QuaternionAlgebra::split(Q);
    for (const std::int64_t N : {2, 3, 4, 5, 6}) {
        const Integer idx = formula::congruence_index(Q, split, 1, nf::ideal_from_integer(Q, N));
        r.check(idx == finite::brute_force_sl(2, N), "index of Gamma(" + std::to_string(N) + ") != |SL_2(Z/N)|");
    }
    const quat::QuaternionAlgebra hamilton(Q, {nf::PrimeIdeal{2, 1, 1, ""}}, 1);
    r.check(formula::congruence_index(Q, hamilton, 1, nf::ideal_from_integer(Q, 2)) == 12, "ramified level-2 index != 12");
}

inline void binomial_identity(SuiteResult& r) {
    for (int n = 1; n <= 6; ++n) {
        for (int rr = 0; rr <= 4; ++rr) {
            const auto classes = formula::h1_signature_classes(rr, n);
            Integer sum = 0;
            for (const auto& cls : classes) {
                Integer prod = 1;
                for (const auto& sig : cls.signatures()) prod *= exact::binomial(n, sig.q);
                sum += prod;
            }
            const std::string at = " at n = " + std::to_string(n) + ", r = " + std::to_string(rr);
            r.check(sum == exact::ipow(Integer(2), static_cast<std::uint64_t>(rr) * (n - 1)), "binomial identity" + at);
            r.check(classes.size() == static_cast<std::size_t>(std::pow(n / 2 + 1, rr)), "class count" + at);
        }
    }
}

inline void decomposition_and_laws(SuiteResult& r) {
    for (const auto& in : standard_grid(3, 50, {Rational(1), Rational(-2)})) {
        const auto report = formula::lefschetz_number(in);
        const std::string tag = in.field.id() + " " + in.algebra.to_string() + " n=" + std::to_string(in.n) +
                                " A=" + in.level.to_string();
        r.check(formula::lefschetz_via_decomposition(in) == report.value, "decomposition mismatch: " + tag);
        r.check(exact::is_integer(report.value), "non-integral Lefschetz number " + report.value.str() + ": " + tag);
        r.check(report.value != 0, "zero Lefschetz number with nonzero trace: " + tag);
        const int s = in.algebra.split_real_count();
        const int expected = ((static_cast<std::int64_t>(s) * in.n * (in.n + 1) / 2) % 2 == 0) ? 1 : -1;
        for (const auto& cls : formula::h1_signature_classes(in.algebra.ram_real_count(), in.n)) {
            const Rational chi = formula::euler_char_fixed_component(in, cls).value;
            r.check(chi != 0 && exact::sign(chi) == expected, "sign law fails: " + tag + " class " + cls.to_string());
            r.check(formula::dim_symmetric_space(in.n, s, cls) % 2 == 0, "odd symmetric-space dimension: " + tag);
        }
    }
}

inline void genus_coherence(SuiteResult& r) {
    const auto Q = nf::TotallyRealField::rationals();
    const quat::QuaternionAlgebra D6(Q, {nf::PrimeIdeal{2, 1, 1, ""}, nf::PrimeIdeal{3, 1, 1, ""}}, 0);
    const auto g5 = formula::genus_fuchsian(Q, D6, nf::ideal_from_integer(Q, 5));
    r.check(g5.genus == 11 && g5.b1 == 22 && g5.chi == -20, "genus at level 5");
    const auto g7 = formula::genus_fuchsian(Q, D6, nf::ideal_from_integer(Q, 7));
    r.check(g7.genus == 29 && g7.chi == -56, "genus at level 7");
    for (const auto& in : standard_grid(1, 50)) {
        if (!quat::is_fuchsian(in.algebra)) continue;
        const auto g = formula::genus_fuchsian(in.field, in.algebra, in.level);
        r.check(g.chi == formula::lefschetz_number(in).value, "2 - 2g != L for " + in.field.id() + " A=" + in.level.to_string());
    }
}

inline void adelic_cross_check(SuiteResult& r) {
    const auto Q = nf::TotallyRealField::rationals();
    const auto Q5 = nf::TotallyRealField::real_quadratic(5);
    const quat::QuaternionAlgebra D6(Q, {nf::PrimeIdeal{2, 1, 1, ""}, nf::PrimeIdeal{3, 1, 1, ""}}, 0);
    const quat::QuaternionAlgebra hamilton5(Q5, {}, 2);
    struct Case {
        nf::TotallyRealField field;
        quat::QuaternionAlgebra algebra;
        int n;
        nf::Ideal level;
        formula::SignatureClass cls;
    };
    const std::vector<Case> cases = {
        {Q, D6, 1, nf::ideal_from_integer(Q, 5), {}},
        {Q, D6, 1, nf::ideal_from_integer(Q, 7), {}},
        {Q, quat::QuaternionAlgebra::split(Q), 1, nf::ideal_from_integer(Q, 5), {}},
        {Q, quat::QuaternionAlgebra::split(Q), 2, nf::ideal_from_integer(Q, 3), {}},
        {Q5, hamilton5, 2, nf::ideal_from_integer(Q5, 3), formula::SignatureClass(2, {{2, 0}, {2, 0}})},
        {Q5, hamilton5, 2, nf::ideal_from_integer(Q5, 3), formula::SignatureClass(2, {{0, 2}, {2, 0}})},
    };
    for (const auto& c : cases) {
        const double exact_value =
            exact::to_double(formula::euler_char_fixed_component(c.field, c.algebra, c.n, c.level, c.cls).value);
        const double numeric = formula::euler_char_adelic_numeric(c.field, c.algebra, c.n, c.level, c.cls, 1000000);
        r.check(std::abs(numeric - exact_value) <= 1e-5 * std::abs(exact_value),
                "adelic " + std::to_string(numeric) + " vs exact " + std::to_string(exact_value) + " for " +
                    c.field.id() + " n=" + std::to_string(c.n));
    }
}

}  // namespace detail

inline std::vector<Suite> all_suites() {
    return {
        {"exact.bernoulli", detail::bernoulli_recurrence},
        {"zeta.signs", detail::zeta_signs},
        {"zeta.functional-equation", detail::zeta_functional_equation},
        {"quaternion.hilbert-parity", detail::hilbert_parity},
        {"finite.orders", detail::finite_orders},
        {"finite.index", detail::index_vs_enumeration},
        {"lefschetz.binomial", detail::binomial_identity},
        {"lefschetz.decomposition", detail::decomposition_and_laws},
        {"lefschetz.genus", detail::genus_coherence},
        {"lefschetz.adelic", detail::adelic_cross_check},
    };
}

/// Runs every suite whose name equals `filter` or starts with `filter.`; an
/// empty filter runs everything. Returns true when no check failed.
inline bool run_suites(const std::string& filter, std::ostream& out, std::vector<SuiteResult>* results = nullptr) {
    bool ok = true;
    int selected = 0;
    for (const auto& suite : all_suites()) {
        if (!filter.empty() && suite.name != filter && suite.name.rfind(filter + ".", 0) != 0) continue;
        ++selected;
        SuiteResult result;
        result.name = suite.name;
        try {
            suite.run(result);
        } catch (const std::exception& e) {
            result.check(false, std::string("exception: ") + e.what());
        }
        out << (result.failed == 0 ? "PASS " : "FAIL ") << result.name << ": " << result.passed << " passed, "
            << result.failed << " failed\n";
        for (const auto& f : result.failures) out << "    " << f << "\n";
        ok = ok && result.failed == 0;
        if (results) results->push_back(result);
    }
    if (selected == 0) {
        out << "no suite matches '" << filter << "'\n";
        return false;
    }
    return ok;
}

}  // namespace lefschetz::verify
