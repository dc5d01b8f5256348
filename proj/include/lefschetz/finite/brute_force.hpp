#pragma once

// Exhaustive enumeration oracles for the finite group orders. Each one walks
// every candidate matrix, so the search space is capped up front.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/nf/arith.hpp"

namespace lefschetz::finite {

inline constexpr std::uint64_t kSearchSpaceCap = 1ULL << 24;

namespace detail {

inline std::uint64_t search_space(std::uint64_t base, std::uint64_t digits, const char* who) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < digits; ++i) {
        if (__builtin_mul_overflow(total, base, &total) || total > kSearchSpaceCap) {
            throw SearchSpaceExceeded(std::string(who) + ": search space exceeds 2^24 candidates");
        }
    }
    return total;
}

inline void require_prime(std::int64_t q, const char* who) {
    if (!nf::is_prime(q)) throw ValidationError(std::string(who) + ": " + std::to_string(q) + " is not prime");
}

/// Determinant mod N by cofactor expansion along the first row.
inline std::int64_t det_mod(const std::vector<std::int64_t>& a, int m, std::int64_t N) {
    if (m == 1) return nf::mod(a[0], N);
    std::int64_t det = 0;
    std::vector<std::int64_t> minor(static_cast<std::size_t>((m - 1) * (m - 1)));
    for (int col = 0; col < m; ++col) {
        std::size_t k = 0;
        for (int r = 1; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
                if (c != col) minor[k++] = a[static_cast<std::size_t>(r * m + c)];
            }
        }
        const std::int64_t term = a[static_cast<std::size_t>(col)] * det_mod(minor, m - 1, N) % N;
        det = (col % 2 == 0) ? det + term : det - term;
        det = nf::mod(det, N);
    }
    return det;
}

/// Advances a base-`base` odometer; false once it wraps around.
inline bool next_digits(std::vector<std::int64_t>& digits, std::int64_t base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

/// F_{q^2} = F_q[x] / (x^2 + c1 x + c0), using the first irreducible pair
/// (c1, c0) in lexicographic order. Elements are a + b x.
class QuadraticExtension {
public:
    struct Elem {
        std::int64_t a = 0;
        std::int64_t b = 0;
        friend bool operator==(const Elem&, const Elem&) = default;
    };

    explicit QuadraticExtension(std::int64_t q) : q_(q) {
        for (std::int64_t c1 = 0; c1 < q; ++c1) {
            for (std::int64_t c0 = 0; c0 < q; ++c0) {
                bool has_root = false;
                for (std::int64_t x = 0; x < q && !has_root; ++x) has_root = (x * x + c1 * x + c0) % q == 0;
                if (!has_root) {
                    c1_ = c1;
                    c0_ = c0;
                    return;
                }
            }
        }
    }

    std::int64_t q() const { return q_; }
    std::int64_t size() const { return q_ * q_; }

    Elem from_index(std::int64_t i) const { return {i % q_, i / q_}; }

    Elem add(Elem u, Elem v) const { return {(u.a + v.a) % q_, (u.b + v.b) % q_}; }

    Elem mul(Elem u, Elem v) const {
        // (a + b x)(c + d x) with x^2 = -c1 x - c0
        const std::int64_t bd = u.b * v.b % q_;
        const std::int64_t a = u.a * v.a - bd * c0_;
        const std::int64_t b = u.a * v.b + u.b * v.a - bd * c1_;
        return {nf::mod(a, q_), nf::mod(b, q_)};
    }

    /// Frobenius z -> z^q.
    Elem conj(Elem u) const {
        Elem result{1, 0};
        Elem base = u;
        for (std::int64_t e = q_; e > 0; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }

    Elem one() const { return {1, 0}; }
    Elem zero() const { return {0, 0}; }

private:
    std::int64_t q_;
    std::int64_t c1_ = 0;
    std::int64_t c0_ = 0;
};

}  // namespace detail

/// #{ g in M_m(Z/N) : det g = 1 }.
inline std::uint64_t brute_force_sl(int m, std::int64_t N) {
    if (m < 1 || N < 2) throw ValidationError("brute_force_sl: need m >= 1 and N >= 2");
    detail::search_space(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(m) * m, "brute_force_sl");
    std::vector<std::int64_t> g(static_cast<std::size_t>(m * m), 0);
    std::uint64_t count = 0;
    do {
        if (detail::det_mod(g, m, N) == 1 % N) ++count;
    } while (detail::next_digits(g, N));
    return count;
}

/// #{ g in M_2n(F_q) : g^T J g = J }, J = [[0, 1], [-1, 0]] in n x n blocks.
inline std::uint64_t brute_force_sp(int n, std::int64_t q) {
    if (n < 1) throw ValidationError("brute_force_sp: n must be >= 1");
    detail::require_prime(q, "brute_force_sp");
    const int m = 2 * n;
    detail::search_space(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m) * m, "brute_force_sp");
    std::vector<std::int64_t> J(static_cast<std::size_t>(m * m), 0);
    for (int i = 0; i < n; ++i) {
        J[static_cast<std::size_t>(i * m + i + n)] = 1;
        J[static_cast<std::size_t>((i + n) * m + i)] = q - 1;
    }
    std::vector<std::int64_t> g(static_cast<std::size_t>(m * m), 0);
    std::uint64_t count = 0;
    do {
        // (g^T J g)_{ij} = sum_{k,l} g_{ki} J_{kl} g_{lj}; J has one nonzero per row.
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            for (int j = 0; j < m && ok; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < m; ++k) {
                    const int l = k < n ? k + n : k - n;
                    s += g[static_cast<std::size_t>(k * m + i)] * J[static_cast<std::size_t>(k * m + l)] *
                         g[static_cast<std::size_t>(l * m + j)];
                }
                ok = nf::mod(s, q) == J[static_cast<std::size_t>(i * m + j)];
            }
        }
        if (ok) ++count;
    } while (detail::next_digits(g, q));
    return count;
}

/// #{ g in M_n(F_q^2) : conj(g)^T g = 1 }.
inline std::uint64_t brute_force_unitary(int n, std::int64_t q) {
    if (n < 1) throw ValidationError("brute_force_unitary: n must be >= 1");
    detail::require_prime(q, "brute_force_unitary");
    const detail::QuadraticExtension ext(q);
    detail::search_space(static_cast<std::uint64_t>(ext.size()), static_cast<std::uint64_t>(n) * n,
                         "brute_force_unitary");
    std::vector<std::int64_t> idx(static_cast<std::size_t>(n * n), 0);
    std::vector<detail::QuadraticExtension::Elem> g(idx.size());
    std::vector<detail::QuadraticExtension::Elem> gbar(idx.size());
    std::uint64_t count = 0;
    do {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            g[k] = ext.from_index(idx[k]);
            gbar[k] = ext.conj(g[k]);
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j < n && ok; ++j) {
                auto s = ext.zero();
                for (int k = 0; k < n; ++k) {
                    s = ext.add(s, ext.mul(gbar[static_cast<std::size_t>(k * n + i)], g[static_cast<std::size_t>(k * n + j)]));
                }
                ok = s == (i == j ? ext.one() : ext.zero());
            }
        }
        if (ok) ++count;
    } while (detail::next_digits(idx, ext.size()));
    return count;
}

/// Local model of the n = 1 ramified group: elements x + y u with
/// x, y in F_q^2, counted when N(x) = x^(q+1) = 1. Expected (q+1) q^2.
inline std::uint64_t brute_force_ramified_sl1(std::int64_t q) {
    detail::require_prime(q, "brute_force_ramified_sl1");
    const detail::QuadraticExtension ext(q);
    detail::search_space(static_cast<std::uint64_t>(ext.size()), 2, "brute_force_ramified_sl1");
    std::uint64_t count = 0;
    for (std::int64_t xi = 0; xi < ext.size(); ++xi) {
        const auto x = ext.from_index(xi);
        const bool norm_one = ext.mul(x, ext.conj(x)) == ext.one();
        for (std::int64_t yi = 0; yi < ext.size(); ++yi) {
            if (norm_one) ++count;
        }
    }
    return count;
}

}  // namespace lefschetz::finite
