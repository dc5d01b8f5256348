#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/integer/common_factor.hpp>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"

namespace lefschetz::exact {

/// coeff * pi^pi_exp * sqrt(radicand), radicand squarefree.
///
/// Closed under multiplication and integer powers. Two radicals combine by
/// pulling their gcd out as a rational factor, so at most one radical is ever
/// carried.
class SymbolicScalar {
public:
    SymbolicScalar() = default;

    explicit SymbolicScalar(Rational coeff, std::int64_t pi_exp = 0, Integer radicand = 1)
        : coeff_(std::move(coeff)), pi_exp_(pi_exp), radicand_(std::move(radicand)) {
        if (radicand_ < 1) throw ValidationError("symbolic scalar: radicand must be positive");
        normalize();
    }

    static SymbolicScalar pi_power(std::int64_t k) { return SymbolicScalar(Rational(1), k, 1); }
    static SymbolicScalar sqrt_of(const Integer& m) { return SymbolicScalar(Rational(1), 0, m); }

    const Rational& coeff() const { return coeff_; }
    std::int64_t pi_exp() const { return pi_exp_; }
    const Integer& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return pi_exp_ == 0 && radicand_ == 1; }

    friend SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b) {
        if (a.is_zero() || b.is_zero()) return SymbolicScalar();
        const Integer g = boost::integer::gcd(a.radicand_, b.radicand_);
        SymbolicScalar out;
        out.coeff_ = a.coeff_ * b.coeff_ * Rational(g);
        out.pi_exp_ = a.pi_exp_ + b.pi_exp_;
        out.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
        return out;
    }

    SymbolicScalar& operator*=(const SymbolicScalar& other) { return *this = *this * other; }

    SymbolicScalar inverse() const {
        if (is_zero()) throw DivisionByZero("symbolic scalar: inverse of zero");
        // 1/(c pi^k sqrt m) = 1/(c m) pi^-k sqrt m
        SymbolicScalar out;
        out.coeff_ = Rational(1) / (coeff_ * Rational(radicand_));
        out.pi_exp_ = -pi_exp_;
        out.radicand_ = radicand_;
        return out;
    }

    double to_double() const {
        return exact::to_double(coeff_) * std::pow(std::numbers::pi, static_cast<double>(pi_exp_)) *
               std::sqrt(radicand_.convert_to<double>());
    }

    std::string to_string() const {
        std::string s = exact::to_string(coeff_);
        if (pi_exp_ != 0) s += "*pi^" + std::to_string(pi_exp_);
        if (radicand_ != 1) s += "*sqrt(" + radicand_.str() + ")";
        return s;
    }

    friend bool operator==(const SymbolicScalar& a, const SymbolicScalar& b) {
        return a.coeff_ == b.coeff_ && a.pi_exp_ == b.pi_exp_ && a.radicand_ == b.radicand_;
    }

private:
    void normalize() {
        if (coeff_ == 0) {
            pi_exp_ = 0;
            radicand_ = 1;
            return;
        }
        // Pull square factors of the radicand into the coefficient.
        Integer square_part = 1;
        Integer rest = radicand_;
        for (Integer p = 2; p * p <= rest; ++p) {
            while (rest % (p * p) == 0) {
                rest /= p * p;
                square_part *= p;
            }
        }
        coeff_ *= Rational(square_part);
        radicand_ = rest;
    }

    Rational coeff_ = 0;
    std::int64_t pi_exp_ = 0;
    Integer radicand_ = 1;
};

inline SymbolicScalar symbolic_mul(const SymbolicScalar& a, const SymbolicScalar& b) { return a * b; }

inline SymbolicScalar symbolic_pow(const SymbolicScalar& a, std::int64_t e) {
    SymbolicScalar base = e < 0 ? a.inverse() : a;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    SymbolicScalar result(Rational(1));
    while (k > 0) {
        if (k & 1U) result *= base;
        base *= base;
        k >>= 1U;
    }
    return result;
}

inline bool symbolic_is_rational(const SymbolicScalar& a) { return a.is_rational(); }

}  // namespace lefschetz::exact
