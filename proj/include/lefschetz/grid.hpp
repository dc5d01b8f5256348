#pragma once

// Sample inputs shared by the verification suites: every torsion-passing
// combination of a few fields, algebras, ranks and small levels.

#include <cstdint>
#include <functional>
#include <vector>

#include "lefschetz/formula/types.hpp"
#include "lefschetz/formula/lefschetz.hpp"
#include "lefschetz/nf/field.hpp"
#include "lefschetz/quat/algebra.hpp"

namespace lefschetz {

/// All integral ideals of norm <= bound, excluding the unit ideal.
inline std::vector<nf::Ideal> ideals_up_to(const nf::TotallyRealField& field, std::int64_t bound) {
    std::vector<nf::PrimeIdeal> primes;
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (!nf::is_prime(p)) continue;
        for (const auto& P : nf::split_prime(field, p)) {
            if (P.norm() <= bound) primes.push_back(P);
        }
    }
    std::vector<nf::Ideal> out;
    std::function<void(std::size_t, nf::Ideal, std::int64_t)> extend = [&](std::size_t start, nf::Ideal current,
                                                                           std::int64_t norm) {
        for (std::size_t i = start; i < primes.size(); ++i) {
            const std::int64_t next = norm * primes[i].norm();
            if (next > bound) continue;
            nf::Ideal grown = current;
            grown.multiply_by(primes[i]);
            out.push_back(grown);
            extend(i, grown, next);
        }
    };
    extend(0, nf::Ideal(field.id()), 1);
    return out;
}

/// Algebras used on the grid: split, ramified at the primes above 2 and 3,
/// a Hamilton-type algebra ramified at every real place, and for quadratic
/// fields a Fuchsian one.
inline std::vector<quat::QuaternionAlgebra> grid_algebras(const nf::TotallyRealField& field) {
    std::vector<quat::QuaternionAlgebra> out;
    out.push_back(quat::QuaternionAlgebra::split(field));
    const auto above2 = nf::split_prime(field, 2);
    const auto above3 = nf::split_prime(field, 3);
    out.emplace_back(field, std::set<nf::PrimeIdeal>{above2.front(), above3.front()}, 0);
    if (field.degree() == 1) {
        out.emplace_back(field, std::set<nf::PrimeIdeal>{above2.front()}, 1);
    } else {
        out.emplace_back(field, std::set<nf::PrimeIdeal>{}, field.num_real_places());
        out.emplace_back(field, std::set<nf::PrimeIdeal>{above2.front()}, 1);
    }
    return out;
}

inline std::vector<nf::TotallyRealField> grid_fields() {
    return {nf::TotallyRealField::rationals(), nf::TotallyRealField::real_quadratic(5),
            nf::TotallyRealField::real_quadratic(2)};
}

/// Every valid input with n <= max_n and level norm <= max_norm that passes
/// the necessary torsion check, for each trace in `traces`.
inline std::vector<formula::LefschetzInput> standard_grid(int max_n = 3, std::int64_t max_norm = 50,
                                                          const std::vector<exact::Rational>& traces = {1}) {
    std::vector<formula::LefschetzInput> out;
    for (const auto& field : grid_fields()) {
        const auto levels = ideals_up_to(field, max_norm);
        for (const auto& algebra : grid_algebras(field)) {
            for (int n = 1; n <= max_n; ++n) {
                if (quat::is_totally_definite(algebra) && n < 2) continue;
                for (const auto& level : levels) {
                    if (!formula::check_torsion_necessary(field, level)) continue;
                    for (const auto& tr : traces) out.push_back(formula::LefschetzInput{field, algebra, n, level, tr, false});
                }
            }
        }
    }
    return out;
}

}  // namespace lefschetz
