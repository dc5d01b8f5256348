#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"

namespace lefschetz::exact {

namespace detail {

// Process-wide memo of B_0..B_k. Guarded by its own mutex; entries are
// append-only so a returned copy never aliases the cache.
struct BernoulliCache {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};

    static BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }

    Rational get(std::size_t k) {
        std::lock_guard<std::mutex> lock(mutex);
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
        for (std::size_t m = values.size(); m <= k; ++m) {
            if (m >= 3 && (m % 2) == 1) {
                values.emplace_back(0);
                continue;
            }
            Rational acc = 0;
            for (std::size_t j = 0; j < m; ++j) {
                acc += Rational(binomial(static_cast<std::int64_t>(m + 1), static_cast<std::int64_t>(j))) *
                       values[j];
            }
            values.push_back(-acc / Rational(static_cast<long long>(m + 1)));
        }
        return values[k];
    }
};

}  // namespace detail

/// Bernoulli number B_k with B_1 = -1/2.
inline Rational bernoulli(std::size_t k) { return detail::BernoulliCache::instance().get(k); }

/// B_k(x) = sum_i C(k, i) B_i x^(k-i).
inline Rational bernoulli_poly_eval(std::size_t k, const Rational& x) {
    // Horner over descending powers of x.
    Rational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
        acc = acc * x + Rational(binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i))) * bernoulli(i);
    }
    return acc;
}

/// zeta(1 - 2j) = -B_{2j} / (2j).
inline Rational riemann_zeta_neg(int j) {
    if (j < 1) throw ValidationError("riemann_zeta_neg: j must be positive");
    return -bernoulli(static_cast<std::size_t>(2 * j)) / Rational(2 * j);
}

}  // namespace lefschetz::exact
