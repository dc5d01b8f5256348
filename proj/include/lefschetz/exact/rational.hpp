#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefschetz/error.hpp"

namespace lefschetz::exact {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational; boost keeps it reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline int sign(const Rational& x) { return x.sign(); }

inline Integer ipow(Integer base, std::uint64_t e) {
    Integer result = 1;
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

/// x^e for signed e; raises DivisionByZero for 0^(negative).
inline Rational pow(const Rational& x, std::int64_t e) {
    if (e < 0) {
        if (x == 0) throw DivisionByZero("rational power: zero raised to a negative exponent");
        const auto k = static_cast<std::uint64_t>(-e);
        Integer num = ipow(denominator(x), k);
        Integer den = ipow(numerator(x), k);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    const auto k = static_cast<std::uint64_t>(e);
    return Rational(ipow(numerator(x), k), ipow(denominator(x), k));
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer factorial(std::int64_t n) {
    Integer result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_string(const Integer& x) { return x.str(); }

/// Parses "p/q" or "p"; rejects a zero denominator and anything non-numeric.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Integer {
        if (s.empty()) throw ValidationError("malformed rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ValidationError("malformed rational '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw ValidationError("malformed rational '" + std::string(text) + "'");
            }
        }
        Integer v(std::string(s.substr(i)));
        return s[0] == '-' ? Integer(-v) : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(num, den);
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace lefschetz::exact
