#pragma once

// Floating-point evaluation of the Euler characteristic straight from the
// adelic Gauss-Bonnet formula. It shares no algebra with the exact path: the
// zeta_F(2j) values come from Dirichlet series and the finite places from the
// closed-form group orders, so agreement with euler_char_fixed_component is a
// genuine check of the functional-equation step.

#include <cmath>
#include <cstdint>
#include <set>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/exact/symbolic.hpp"
#include "lefschetz/finite/orders.hpp"
#include "lefschetz/formula/lefschetz.hpp"
#include "lefschetz/formula/types.hpp"
#include "lefschetz/nf/zeta.hpp"

namespace lefschetz::formula {

/// vol_B(Sp(n)) = prod_{j=1}^{n} (2 pi)^(2j) / (2 (2j-1)!) for B(x, y) = -1/2 trd(xy).
inline exact::SymbolicScalar vol_sp_compact(int n) {
    if (n < 1) throw ValidationError("vol_sp_compact: n must be positive");
    exact::SymbolicScalar vol(Rational(1));
    for (int j = 1; j <= n; ++j) {
        const Rational c(exact::ipow(Integer(2), 2ULL * j), 2 * exact::factorial(2 * j - 1));
        vol *= exact::SymbolicScalar(c, 2 * j);
    }
    return vol;
}

/// mf(B) = 2^(n[F:Q]) (-1)^(r n(n+1)/2) d(D)^(-n(n+1)/2).
inline Rational global_modulus_factor(const TotallyRealField& field, const QuaternionAlgebra& algebra, int n) {
    if (n < 1) throw ValidationError("global_modulus_factor: n must be positive");
    const std::int64_t half = static_cast<std::int64_t>(n) * (n + 1) / 2;
    const int sign = detail::sign_power(algebra.ram_real_count() * half);
    return exact::pow(Rational(2), static_cast<std::int64_t>(n) * field.degree()) * Rational(sign) *
           exact::pow(Rational(quat::signed_reduced_discriminant(algebra)), -half);
}

/// dim X(gamma) = s n(n+1) + sum_v 4 p_v q_v.
inline std::int64_t dim_symmetric_space(int n, int s, const SignatureClass& cls) {
    std::int64_t dim = static_cast<std::int64_t>(s) * n * (n + 1);
    for (const auto& sig : cls.signatures()) dim += 4LL * sig.p * sig.q;
    return dim;
}

inline double euler_char_adelic_numeric(const TotallyRealField& field, const QuaternionAlgebra& algebra, int n,
                                        const Ideal& level, const SignatureClass& cls, std::int64_t terms) {
    if (field.kind() == TotallyRealField::Kind::External) {
        throw UnsupportedField("adelic cross-check needs Q or a real quadratic field");
    }
    if (terms < 10000) throw ValidationError("euler_char_adelic_numeric: need at least 10^4 terms");
    if (n < 1) throw ValidationError("euler_char_adelic_numeric: n must be positive");
    if (level.is_unit()) throw ValidationError("euler_char_adelic_numeric: level must be a proper ideal");
    if (cls.size() != static_cast<std::size_t>(algebra.ram_real_count()) || (cls.size() > 0 && cls.n() != n)) {
        throw ValidationError("euler_char_adelic_numeric: signature class does not match the algebra");
    }
    const int degree = field.degree();
    const int s = algebra.split_real_count();
    const std::int64_t d = static_cast<std::int64_t>(n) * (2 * n + 1);

    const std::int64_t dim_x = dim_symmetric_space(n, s, cls);
    if (dim_x % 2 != 0) throw Error("symmetric space has odd dimension " + std::to_string(dim_x));
    const long double sign = (dim_x / 2) % 2 == 0 ? 1.0L : -1.0L;

    const long double disc = std::pow(static_cast<long double>(field.abs_discriminant()), static_cast<long double>(d) / 2.0L);
    const long double weyl = weyl_quotient(n, s, cls).convert_to<long double>();
    const long double vol = exact::symbolic_pow(vol_sp_compact(n), degree).to_double();
    const long double modulus = exact::to_double(global_modulus_factor(field, algebra, n));

    // Finite places. Away from A and Ram_f(D) the local factor is
    // N^d / |Sp_n(k)| = prod_j (1 - N^-2j)^-1, so those places assemble into
    // prod_j zeta_F(2j) once the exceptional Euler factors are divided out.
    std::set<PrimeIdeal> exceptional(algebra.ram_finite().begin(), algebra.ram_finite().end());
    for (const auto& [prime, e] : level.factors()) exceptional.insert(prime);

    long double local = 1.0L;
    for (int j = 1; j <= n; ++j) local *= nf::zeta_f_positive_even_numeric(field, j, terms).value;
    for (const auto& prime : exceptional) {
        const std::int64_t q = prime.norm();
        const long double q_d = std::pow(static_cast<long double>(q), static_cast<long double>(d));
        // Remove the generic factor prod_j (1 - q^-2j)^-1 = q^d / |Sp_n(F_q)|.
        local *= finite::sp_order(n, q).convert_to<long double>() / q_d;
        const int e = level.valuation(prime);
        if (e > 0) {
            local *= std::pow(q_d, static_cast<long double>(e));
        } else {
            local *= q_d / finite::ramified_local_order(n, q).convert_to<long double>();
        }
    }
    return static_cast<double>(sign * disc * weyl / vol / modulus * local);
}

}  // namespace lefschetz::formula
