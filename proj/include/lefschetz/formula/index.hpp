#pragma once

#include <cstdint>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/formula/lefschetz.hpp"
#include "lefschetz/formula/types.hpp"

namespace lefschetz::formula {

/// [G(O) : Gamma(A)] =
///   N(A)^(4n^2-1) prod_{P|A, P unramified} prod_{j=2}^{2n} (1 - N(P)^-j)
///                 prod_{P|A, P ramified} (1 + N(P)^-1) prod_{j=2}^{n} (1 - N(P)^-2j)
inline Integer congruence_index(const TotallyRealField& field, const QuaternionAlgebra& algebra, int n,
                                const Ideal& level) {
    if (n < 1) throw ValidationError("congruence_index: n must be positive");
    if (level.is_unit()) throw ValidationError("congruence_index: level must be a proper ideal");
    if (level.field_id() != field.id() || !(algebra.field() == field)) {
        throw ValidationError("congruence_index: level, algebra and field disagree");
    }
    Rational index(exact::ipow(level.norm(), 4ULL * n * n - 1));
    for (const auto& [prime, e] : level.factors()) {
        const Rational q(prime.norm());
        if (algebra.is_ramified_at(prime)) {
            index *= Rational(1) + exact::pow(q, -1);
            for (int j = 2; j <= n; ++j) index *= Rational(1) - exact::pow(q, -2 * j);
        } else {
            for (int j = 2; j <= 2 * n; ++j) index *= Rational(1) - exact::pow(q, -j);
        }
    }
    if (!exact::is_integer(index)) throw Error("congruence_index: formula produced non-integer " + index.str());
    return exact::numerator(index);
}

/// Exponent n(2n+1) / (4n^2 - 1) in the lower bound B(Gamma_0(A)) >= kappa [Gamma_0 : Gamma_0(A)]^exponent.
inline Rational betti_growth_exponent(int n) {
    if (n < 1) throw ValidationError("betti_growth_exponent: n must be positive");
    return Rational(static_cast<long long>(n) * (2 * n + 1), 4LL * n * n - 1);
}

/// |L(tau*, Gamma(A), C)|, a lower bound for the total Betti number B(Gamma(A)).
inline Rational betti_lower_bound(LefschetzInput in) {
    in.trace_w = 1;
    const Rational value = lefschetz_number(in).value;
    return value < 0 ? Rational(-value) : value;
}

}  // namespace lefschetz::formula
