#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/formula/types.hpp"
#include "lefschetz/nf/field.hpp"
#include "lefschetz/nf/zeta.hpp"
#include "lefschetz/quat/algebra.hpp"

namespace lefschetz::formula {

inline constexpr const char* kTorsionAssumedWarning =
    "torsion-freeness of Gamma(A) is assumed; only the necessary condition A does not divide (2) was checked";
inline constexpr const char* kTorsionOverrideWarning =
    "level divides (2), so -1 lies in Gamma(A); result computed under the assume_torsion_free override";

/// Necessary condition for Gamma(A) to be torsion-free: -1 is not 1 mod A,
/// i.e. A does not divide (2). Not sufficient.
inline bool check_torsion_necessary(const TotallyRealField& field, const Ideal& level) {
    if (level.is_unit()) throw ValidationError("level must be a proper ideal");
    return !nf::ideal_divides(level, nf::ideal_from_integer(field, 2));
}

/// M(j, A, D) = zeta_F(1-2j) prod_{P|A} (1 - N(P)^-2j) prod_{P in Ram_f(D), P !| A} (1 + (-1/N(P))^j).
inline Rational m_factor(const TotallyRealField& field, int j, const Ideal& level, const QuaternionAlgebra& algebra) {
    if (j < 1) throw ValidationError("m_factor: j must be positive");
    if (level.is_unit()) throw ValidationError("m_factor: level must be a proper ideal");
    Rational m = nf::dedekind_zeta_neg(field, j);
    for (const auto& [prime, e] : level.factors()) {
        m *= Rational(1) - exact::pow(Rational(prime.norm()), -2 * j);
    }
    for (const auto& prime : algebra.ram_finite()) {
        if (level.contains_prime(prime)) continue;
        m *= Rational(1) + exact::pow(Rational(-1, prime.norm()), j);
    }
    return m;
}

namespace detail {

/// Shared precondition checks; returns the warnings every report carries.
inline std::vector<std::string> validate(const LefschetzInput& in) {
    if (in.n < 1) throw ValidationError("n must be positive");
    if (!(in.algebra.field() == in.field)) throw ValidationError("quaternion algebra is defined over a different field");
    if (in.level.field_id() != in.field.id()) throw ValidationError("level ideal belongs to a different field");
    if (in.level.is_unit()) throw ValidationError("level must be a proper ideal");
    if (quat::is_totally_definite(in.algebra) && in.n < 2) {
        throw ValidationError("totally definite algebra requires n >= 2 (strong approximation fails for n = 1)");
    }
    std::vector<std::string> warnings;
    if (check_torsion_necessary(in.field, in.level)) {
        warnings.emplace_back(kTorsionAssumedWarning);
    } else if (in.assume_torsion_free) {
        warnings.emplace_back(kTorsionOverrideWarning);
    } else {
        throw TorsionUnverified("level " + in.level.to_string() +
                                " divides (2): Gamma(A) is not torsion-free (pass assume_torsion_free to override)");
    }
    return warnings;
}

inline std::vector<Rational> m_factors(const LefschetzInput& in) {
    std::vector<Rational> out;
    for (int j = 1; j <= in.n; ++j) out.push_back(m_factor(in.field, j, in.level, in.algebra));
    return out;
}

inline Integer discriminant_power(const QuaternionAlgebra& algebra, int n) {
    return exact::ipow(Integer(quat::signed_reduced_discriminant(algebra)), static_cast<std::uint64_t>(n) * (n + 1) / 2);
}

inline Integer level_norm_power(const Ideal& level, int n) {
    return exact::ipow(level.norm(), static_cast<std::uint64_t>(n) * (2 * n + 1));
}

inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// L(tau*, Gamma(A), W) = 2^-r N(A)^(n(2n+1)) d(D)^(n(n+1)/2) Tr(tau*|W) prod_j M(j, A, D),
/// and zero when F has a complex place.
inline LefschetzReport lefschetz_number(const LefschetzInput& in) {
    LefschetzReport report;
    report.warnings = detail::validate(in);
    report.trace_w = in.trace_w;
    report.two_power = exact::pow(Rational(2), -in.algebra.ram_real_count());
    report.level_norm_power = detail::level_norm_power(in.level, in.n);
    report.discriminant_power = detail::discriminant_power(in.algebra, in.n);
    if (in.field.has_complex_place()) {
        report.m_factors.assign(static_cast<std::size_t>(in.n), Rational(0));
        report.value = 0;
        report.warnings.emplace_back("field has a complex place; the Lefschetz number vanishes");
        return report;
    }
    report.m_factors = detail::m_factors(in);
    Rational value = report.two_power * Rational(report.level_norm_power) * Rational(report.discriminant_power) *
                     report.trace_w;
    for (const auto& m : report.m_factors) value *= m;
    report.value = value;
    return report;
}

/// Every tuple ((p_v, q_v))_{v=1..r} with p_v + q_v = n and q_v even; there are (floor(n/2)+1)^r.
inline std::vector<SignatureClass> h1_signature_classes(int r, int n) {
    if (r < 0) throw ValidationError("h1_signature_classes: r must be non-negative");
    if (n < 1) throw ValidationError("h1_signature_classes: n must be positive");
    const int choices = n / 2 + 1;
    std::vector<int> u(static_cast<std::size_t>(r), 0);
    std::vector<SignatureClass> out;
    while (true) {
        std::vector<Signature> sigs;
        sigs.reserve(u.size());
        for (const int k : u) sigs.push_back({n - 2 * k, 2 * k});
        out.emplace_back(n, std::move(sigs));
        std::size_t i = 0;
        while (i < u.size() && ++u[i] == choices) u[i++] = 0;
        if (i == u.size()) break;
    }
    return out;
}

/// |W(g_C)| / |W(k_C)| = 2^(n s) prod_v C(n, p_v).
inline Integer weyl_quotient(int n, int s, const SignatureClass& cls) {
    if (cls.n() != n && cls.size() > 0) throw ValidationError("weyl_quotient: signature class built for a different n");
    Integer w = exact::ipow(Integer(2), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(s));
    for (const auto& sig : cls.signatures()) w *= exact::binomial(n, sig.p);
    return w;
}

/// Euler characteristic of the fixed-point component with the given local signatures:
/// 2^(-n r) N(A)^(n(2n+1)) d(D)^(n(n+1)/2) prod_v C(n, p_v) prod_j M(j, A, D).
inline EulerCharReport euler_char_fixed_component(const LefschetzInput& in, const SignatureClass& cls) {
    EulerCharReport report;
    report.warnings = detail::validate(in);
    if (cls.size() != static_cast<std::size_t>(in.algebra.ram_real_count())) {
        throw ValidationError("signature class has " + std::to_string(cls.size()) + " entries, algebra ramifies at " +
                              std::to_string(in.algebra.ram_real_count()) + " real places");
    }
    if (cls.size() > 0 && cls.n() != in.n) throw ValidationError("signature class built for a different n");
    report.signature_class = cls;
    report.binomial_factor = 1;
    for (const auto& sig : cls.signatures()) report.binomial_factor *= exact::binomial(in.n, sig.p);
    if (in.field.has_complex_place()) {
        report.m_factors.assign(static_cast<std::size_t>(in.n), Rational(0));
        report.value = 0;
        return report;
    }
    report.m_factors = detail::m_factors(in);
    Rational value = exact::pow(Rational(2), -static_cast<std::int64_t>(in.n) * in.algebra.ram_real_count()) *
                     Rational(detail::level_norm_power(in.level, in.n)) *
                     Rational(detail::discriminant_power(in.algebra, in.n)) * Rational(report.binomial_factor);
    for (const auto& m : report.m_factors) value *= m;
    report.value = value;

    const int s = in.algebra.split_real_count();
    const int expected = detail::sign_power(static_cast<std::int64_t>(s) * in.n * (in.n + 1) / 2);
    if (value != 0 && exact::sign(value) != expected) {
        throw Error("euler characteristic " + value.str() + " violates the sign law (-1)^(s n(n+1)/2)");
    }
    return report;
}

inline EulerCharReport euler_char_fixed_component(const TotallyRealField& field, const QuaternionAlgebra& algebra,
                                                  int n, const Ideal& level, const SignatureClass& cls,
                                                  bool assume_torsion_free = false) {
    return euler_char_fixed_component(LefschetzInput{field, algebra, n, level, Rational(1), assume_torsion_free}, cls);
}

/// Sum over the fixed-point components: sum_eta chi(eta) Tr(tau*|W).
inline Rational lefschetz_via_decomposition(const LefschetzInput& in) {
    Rational total = 0;
    for (const auto& cls : h1_signature_classes(in.algebra.ram_real_count(), in.n)) {
        total += euler_char_fixed_component(in, cls).value * in.trace_w;
    }
    return total;
}

}  // namespace lefschetz::formula
