#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/formula/lefschetz.hpp"
#include "lefschetz/formula/types.hpp"
#include "lefschetz/nf/zeta.hpp"

namespace lefschetz::formula {

struct GenusReport {
    Integer genus;
    Integer b1;
    /// 2 - 2g, equal to the n = 1 Lefschetz number with trivial coefficients.
    Rational chi;
    std::vector<std::string> warnings;
};

/// Genus of the compact Riemann surface H / Gamma(A) for a Fuchsian algebra:
/// g = 1 + 2^-[F:Q] N(A)^3 |d(D) zeta_F(-1)| prod_{P|A} (1 - N(P)^-2) prod_{P in Ram_f, P !| A} (1 - N(P)^-1).
inline GenusReport genus_fuchsian(const TotallyRealField& field, const QuaternionAlgebra& algebra, const Ideal& level,
                                  bool assume_torsion_free = false) {
    if (!quat::is_fuchsian(algebra)) {
        throw NotFuchsian("algebra " + algebra.to_string() + " is not a division algebra split at exactly one real place");
    }
    const LefschetzInput in{field, algebra, 1, level, Rational(1), assume_torsion_free};
    GenusReport report;
    report.warnings = detail::validate(in);

    Rational excess = exact::pow(Rational(2), -field.degree()) * Rational(exact::ipow(level.norm(), 3)) *
                      Rational(quat::signed_reduced_discriminant(algebra)) * nf::dedekind_zeta_neg(field, 1);
    if (excess < 0) excess = -excess;
    for (const auto& [prime, e] : level.factors()) excess *= Rational(1) - exact::pow(Rational(prime.norm()), -2);
    for (const auto& prime : algebra.ram_finite()) {
        if (!level.contains_prime(prime)) excess *= Rational(1) - Rational(1, prime.norm());
    }
    const Rational g = Rational(1) + excess;
    if (!exact::is_integer(g)) throw Error("genus formula produced non-integer " + g.str());
    report.genus = exact::numerator(g);
    report.b1 = 2 * report.genus;
    report.chi = Rational(2) - Rational(2) * g;

    const Rational lefschetz = lefschetz_number(in).value;
    if (lefschetz != report.chi) {
        throw Error("genus coherence violated: 2 - 2g = " + report.chi.str() + " but L = " + lefschetz.str());
    }
    if (report.genus < 2) {
        report.warnings.push_back("genus " + report.genus.str() + " < 2 although the torsion check passed");
    }
    return report;
}

/// dim S_k(Gamma) for a torsion-free cocompact Fuchsian group of genus g.
inline Integer modular_form_dim(const Integer& genus, int k) {
    if (k < 2 || k % 2 != 0) throw ValidationError("modular_form_dim: weight must be even and >= 2, got " + std::to_string(k));
    if (k == 2) return genus;
    return Integer(k - 1) * (genus - 1);
}

}  // namespace lefschetz::formula
