#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz::nf {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

/// Trial-division factorization of |n| into (prime, exponent), ascending.
inline std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0) out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Returns (p, k) when q = p^k with p prime, otherwise (0, 0).
inline std::pair<std::int64_t, int> prime_power(std::int64_t q) {
    if (q < 2) return {0, 0};
    auto f = factor(q);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    while (e > 0) {
        if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % m);
        base = static_cast<std::int64_t>((__int128)base * base % m);
        e >>= 1;
    }
    return result;
}

inline std::int64_t checked_pow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw ValidationError("integer power overflows 64 bits");
    }
    return r;
}

}  // namespace lefschetz::nf
