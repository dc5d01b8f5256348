#pragma once

#include <cstdint>
#include <string>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/nf/arith.hpp"

namespace lefschetz::finite {

using exact::Integer;
using exact::Rational;

namespace detail {

inline void require_prime_power(std::int64_t q, const char* who) {
    if (nf::prime_power(q).first == 0) {
        throw ValidationError(std::string(who) + ": q = " + std::to_string(q) + " is not a prime power");
    }
}

inline Integer require_integral(const Rational& x, const char* who) {
    if (!exact::is_integer(x)) throw Error(std::string(who) + ": order formula produced non-integer " + x.str());
    return exact::numerator(x);
}

}  // namespace detail

/// |SL_m(F_q)| = q^(m(m-1)/2) prod_{j=2}^{m} (q^j - 1).
inline Integer sl_order(int m, std::int64_t q) {
    if (m < 2) throw ValidationError("sl_order: m must be >= 2");
    detail::require_prime_power(q, "sl_order");
    const Integer Q = q;
    Integer order = exact::ipow(Q, static_cast<std::uint64_t>(m) * (m - 1) / 2);
    for (int j = 2; j <= m; ++j) order *= exact::ipow(Q, j) - 1;
    return order;
}

/// |Sp_n(F_q)| (matrices of size 2n) = q^(n^2) prod_{j=1}^{n} (q^(2j) - 1).
inline Integer sp_order(int n, std::int64_t q) {
    if (n < 1) throw ValidationError("sp_order: n must be >= 1");
    detail::require_prime_power(q, "sp_order");
    const Integer Q = q;
    Integer order = exact::ipow(Q, static_cast<std::uint64_t>(n) * n);
    for (int j = 1; j <= n; ++j) order *= exact::ipow(Q, 2 * j) - 1;
    return order;
}

/// |U_n(F_q^2 / F_q)| = q^(n(n-1)/2) prod_{j=1}^{n} (q^j - (-1)^j).
inline Integer unitary_order(int n, std::int64_t q) {
    if (n < 1) throw ValidationError("unitary_order: n must be >= 1");
    detail::require_prime_power(q, "unitary_order");
    const Integer Q = q;
    Integer order = exact::ipow(Q, static_cast<std::uint64_t>(n) * (n - 1) / 2);
    for (int j = 1; j <= n; ++j) order *= exact::ipow(Q, j) - ((j % 2 == 0) ? 1 : -1);
    return order;
}

/// Order of the symplectic fixed-point group mod a prime where the quaternion
/// algebra ramifies: q^(n(2n+1)) prod_{j=1}^{n} (1 - (-1)^j q^-j).
inline Integer ramified_local_order(int n, std::int64_t q) {
    if (n < 1) throw ValidationError("ramified_local_order: n must be >= 1");
    detail::require_prime_power(q, "ramified_local_order");
    Rational order(exact::ipow(Integer(q), static_cast<std::uint64_t>(n) * (2 * n + 1)));
    for (int j = 1; j <= n; ++j) {
        const Rational t = exact::pow(Rational(q), -j);
        order *= (j % 2 == 0) ? Rational(1) - t : Rational(1) + t;
    }
    return detail::require_integral(order, "ramified_local_order");
}

enum class PrimeKind { Split, Ramified };

/// |SL_n(Lambda_D / P^e)| for the reduced-norm-one group of M_n(Lambda_D):
/// q^((e-1)(4n^2-1)) times the order of the reduction mod P.
inline Integer local_index_factor(std::int64_t q, PrimeKind kind, int n, int e) {
    if (n < 1) throw ValidationError("local_index_factor: n must be >= 1");
    if (e < 1) throw ValidationError("local_index_factor: e must be >= 1");
    detail::require_prime_power(q, "local_index_factor");
    const std::uint64_t dim = 4ULL * n * n - 1;
    const Integer lift = exact::ipow(Integer(q), (static_cast<std::uint64_t>(e) - 1) * dim);
    if (kind == PrimeKind::Split) return lift * sl_order(2 * n, q);
    Rational residue(exact::ipow(Integer(q), dim));
    residue *= Rational(1) + Rational(1, q);
    for (int j = 2; j <= n; ++j) residue *= Rational(1) - exact::pow(Rational(q), -2 * j);
    return lift * detail::require_integral(residue, "local_index_factor");
}

}  // namespace lefschetz::finite
