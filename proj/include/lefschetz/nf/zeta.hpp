#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/bernoulli.hpp"
#include "lefschetz/nf/field.hpp"

namespace lefschetz::nf {

/// The quadratic Dirichlet character a -> (D/a).
struct QuadraticCharacter {
    std::int64_t fundamental_discriminant;

    explicit QuadraticCharacter(std::int64_t D) : fundamental_discriminant(D) {
        if (!is_fundamental_discriminant(D)) {
            throw ValidationError(std::to_string(D) + " is not a fundamental discriminant");
        }
    }

    std::int64_t conductor() const { return fundamental_discriminant < 0 ? -fundamental_discriminant : fundamental_discriminant; }
    int operator()(std::int64_t a) const { return kronecker(fundamental_discriminant, a); }
};

/// B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f), f the conductor.
inline Rational gen_bernoulli(int k, const QuadraticCharacter& chi) {
    if (k < 1) throw ValidationError("gen_bernoulli: k must be positive");
    const std::int64_t f = chi.conductor();
    Rational sum = 0;
    for (std::int64_t a = 1; a <= f; ++a) {
        const int c = chi(a);
        if (c == 0) continue;
        const Rational term = exact::bernoulli_poly_eval(static_cast<std::size_t>(k), Rational(a, f));
        if (c > 0) sum += term;
        else sum -= term;
    }
    return Rational(exact::ipow(Integer(f), static_cast<std::uint64_t>(k - 1))) * sum;
}

/// zeta_F(1 - 2j). Vanishes exactly when F has a complex place.
inline Rational dedekind_zeta_neg(const TotallyRealField& field, int j) {
    if (j < 1) throw ValidationError("dedekind_zeta_neg: j must be positive");
    switch (field.kind()) {
        case TotallyRealField::Kind::Rationals:
            return exact::riemann_zeta_neg(j);
        case TotallyRealField::Kind::RealQuadratic: {
            const QuadraticCharacter chi(field.fundamental_discriminant());
            const Rational l_value = -gen_bernoulli(2 * j, chi) / Rational(2 * j);
            return exact::riemann_zeta_neg(j) * l_value;
        }
        case TotallyRealField::Kind::External: {
            if (field.has_complex_place()) return 0;
            const auto& table = field.external_data().zeta_neg;
            if (static_cast<std::size_t>(j) > table.size()) {
                throw UnsupportedField("external field has no zeta value for j = " + std::to_string(j));
            }
            return table[static_cast<std::size_t>(j - 1)];
        }
    }
    return 0;
}

struct NumericValue {
    double value;
    /// Bound on the absolute truncation error.
    double error_bound;
};

/// zeta_F(2j) from truncated Dirichlet series; for quadratic F the product
/// zeta(2j) * L(2j, chi_D).
inline NumericValue zeta_f_positive_even_numeric(const TotallyRealField& field, int j, std::int64_t terms) {
    if (j < 1) throw ValidationError("zeta_f_positive_even_numeric: j must be positive");
    if (terms < 100) throw ValidationError("zeta_f_positive_even_numeric: need at least 100 terms");
    if (field.kind() == TotallyRealField::Kind::External) {
        throw UnsupportedField("numeric zeta needs a natively supported field");
    }
    const bool quadratic = field.kind() == TotallyRealField::Kind::RealQuadratic;
    const std::int64_t D = quadratic ? field.fundamental_discriminant() : 1;
    const double s = 2.0 * j;
    // chi_D has period |D|.
    const std::int64_t period = D < 0 ? -D : D;
    std::vector<int> chi(static_cast<std::size_t>(period));
    for (std::int64_t a = 0; a < period; ++a) chi[static_cast<std::size_t>(a)] = quadratic ? kronecker(D, a) : 1;
    // Summed from the small end of the terms upward in magnitude.
    double zeta = 0.0;
    double l_value = 0.0;
    for (std::int64_t m = terms; m >= 1; --m) {
        const double t = std::pow(static_cast<double>(m), -s);
        zeta += t;
        l_value += chi[static_cast<std::size_t>(m % period)] * t;
    }
    const double value = quadratic ? zeta * l_value : zeta;
    const double bound = field.degree() * std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
    return {value, bound};
}

}  // namespace lefschetz::nf
