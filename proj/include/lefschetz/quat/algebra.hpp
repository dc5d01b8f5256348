#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/nf/arith.hpp"
#include "lefschetz/nf/field.hpp"

namespace lefschetz::quat {

using nf::Ideal;
using nf::PrimeIdeal;
using nf::TotallyRealField;

/// A quaternion algebra over F, described by where it ramifies.
///
/// The maximal order is left implicit: every invariant computed here depends
/// only on the ramification set.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(TotallyRealField field, std::set<PrimeIdeal> ram_finite, int ram_real_count)
        : field_(std::move(field)), ram_finite_(std::move(ram_finite)), ram_real_count_(ram_real_count) {
        if (ram_real_count_ < 0 || ram_real_count_ > field_.num_real_places()) {
            throw ValidationError("quaternion algebra: ramified real place count " + std::to_string(ram_real_count_) +
                                  " outside [0, " + std::to_string(field_.num_real_places()) + "]");
        }
        for (const auto& p : ram_finite_) {
            const auto above = nf::split_prime(field_, p.residue_char);
            if (std::find(above.begin(), above.end(), p) == above.end()) {
                throw ValidationError("quaternion algebra: " + p.to_string() + " is not a prime of " + field_.id());
            }
        }
        if ((ram_finite_.size() + static_cast<std::size_t>(ram_real_count_)) % 2 != 0) {
            throw ValidationError("quaternion algebra: number of ramified places must be even");
        }
    }

    /// M_2(F).
    static QuaternionAlgebra split(const TotallyRealField& field) { return QuaternionAlgebra(field, {}, 0); }

    const TotallyRealField& field() const { return field_; }
    const std::set<PrimeIdeal>& ram_finite() const { return ram_finite_; }
    int ram_real_count() const { return ram_real_count_; }

    /// Number of real places where the algebra splits.
    int split_real_count() const { return field_.num_real_places() - ram_real_count_; }

    bool is_ramified_at(const PrimeIdeal& p) const { return ram_finite_.count(p) > 0; }

    friend bool operator==(const QuaternionAlgebra& a, const QuaternionAlgebra& b) {
        return a.field_ == b.field_ && a.ram_finite_ == b.ram_finite_ && a.ram_real_count_ == b.ram_real_count_;
    }

    std::string to_string() const {
        std::string s = "ram_finite={";
        bool first = true;
        for (const auto& p : ram_finite_) {
            if (!first) s += ",";
            s += p.to_string();
            first = false;
        }
        return s + "}, ram_real=" + std::to_string(ram_real_count_);
    }

private:
    TotallyRealField field_;
    std::set<PrimeIdeal> ram_finite_;
    int ram_real_count_;
};

/// (-1)^r * prod N(P) over finite ramified primes.
inline std::int64_t signed_reduced_discriminant(const QuaternionAlgebra& D) {
    std::int64_t d = 1;
    for (const auto& p : D.ram_finite()) {
        if (__builtin_mul_overflow(d, p.norm(), &d)) throw ValidationError("reduced discriminant overflows 64 bits");
    }
    return (D.ram_real_count() % 2 == 0) ? d : -d;
}

inline bool is_totally_definite(const QuaternionAlgebra& D) {
    return D.field().is_totally_real() && D.ram_real_count() == D.field().num_real_places();
}

inline bool is_division(const QuaternionAlgebra& D) { return !D.ram_finite().empty() || D.ram_real_count() > 0; }

/// Division algebra split at exactly one real place.
inline bool is_fuchsian(const QuaternionAlgebra& D) { return is_division(D) && D.split_real_count() == 1; }

/// Local Hilbert symbol (a, b)_p over Q; p = 0 denotes the real place.
inline int hilbert_symbol_q(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (a == 0 || b == 0) throw ValidationError("hilbert symbol: arguments must be nonzero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    if (!nf::is_prime(p)) throw ValidationError("hilbert symbol: " + std::to_string(p) + " is not prime");
    int alpha = 0;
    int beta = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    while (b % p == 0) {
        b /= p;
        ++beta;
    }
    if (p == 2) {
        auto eps = [](std::int64_t u) { return nf::mod(u, 4) == 3 ? 1 : 0; };
        auto omega = [](std::int64_t u) {
            const std::int64_t r = nf::mod(u, 8);
            return (r == 3 || r == 5) ? 1 : 0;
        };
        const int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
        return (e % 2 == 0) ? 1 : -1;
    }
    auto legendre = [p](std::int64_t u) { return nf::powmod(u, (p - 1) / 2, p) == 1 ? 1 : -1; };
    int result = 1;
    if ((static_cast<std::int64_t>(alpha) * beta * ((p - 1) / 2)) % 2 != 0) result = -result;
    if (beta % 2 != 0) result *= legendre(a);
    if (alpha % 2 != 0) result *= legendre(b);
    return result;
}

/// The algebra (a, b | Q), ramified where the local Hilbert symbol is -1.
inline QuaternionAlgebra hilbert_ramification_q(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) throw ValidationError("hilbert_ramification_q: arguments must be nonzero");
    std::set<std::int64_t> places{2};
    for (const auto& [p, k] : nf::factor(a)) places.insert(p);
    for (const auto& [p, k] : nf::factor(b)) places.insert(p);
    std::set<PrimeIdeal> ram;
    for (const std::int64_t p : places) {
        if (hilbert_symbol_q(a, b, p) == -1) ram.insert(PrimeIdeal{p, 1, 1, ""});
    }
    const int r = hilbert_symbol_q(a, b, 0) == -1 ? 1 : 0;
    return QuaternionAlgebra(TotallyRealField::rationals(), std::move(ram), r);
}

}  // namespace lefschetz::quat
