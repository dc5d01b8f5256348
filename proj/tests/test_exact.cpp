#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/bernoulli.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/exact/symbolic.hpp"

using namespace lefschetz;
using namespace lefschetz::exact;

TEST(Bernoulli, SmallValues) {
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, OddIndicesVanish) {
    for (std::size_t k = 3; k <= 61; k += 2) EXPECT_EQ(bernoulli(k), 0) << k;
}

TEST(Bernoulli, RecurrenceHolds) {
    for (int m = 1; m <= 60; ++m) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j) sum += Rational(binomial(m + 1, j)) * bernoulli(static_cast<std::size_t>(j));
        EXPECT_EQ(sum, 0) << m;
    }
}

// Independent oracle: Akiyama-Tanigawa produces B_n with B_1 = +1/2.
TEST(Bernoulli, AgreesWithAkiyamaTanigawa) {
    const int N = 30;
    std::vector<Rational> a(N + 1);
    for (int n = 0; n <= N; ++n) {
        a[n] = Rational(1, n + 1);
        for (int j = n; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        const Rational expected = (n == 1) ? -a[0] : a[0];
        EXPECT_EQ(bernoulli(static_cast<std::size_t>(n)), expected) << n;
    }
}

TEST(Bernoulli, ConcurrentAccessIsConsistent) {
    std::vector<Rational> results(8);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&results, t] { results[t] = bernoulli(static_cast<std::size_t>(40 + 2 * (t % 2))); });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) EXPECT_EQ(results[t], bernoulli(static_cast<std::size_t>(40 + 2 * (t % 2))));
}

TEST(BernoulliPolynomial, Examples) {
    EXPECT_EQ(bernoulli_poly_eval(2, Rational(0)), Rational(1, 6));
    EXPECT_EQ(bernoulli_poly_eval(2, Rational(1, 5)), Rational(1, 150));
    EXPECT_EQ(bernoulli_poly_eval(4, Rational(2, 5)), Rational(91, 3750));
}

TEST(BernoulliPolynomial, DifferenceIdentity) {
    // B_k(x + 1) - B_k(x) = k x^(k-1)
    for (std::size_t k = 1; k <= 10; ++k) {
        for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-7, 4)}) {
            EXPECT_EQ(bernoulli_poly_eval(k, x + 1) - bernoulli_poly_eval(k, x),
                      Rational(static_cast<long long>(k)) * pow(x, static_cast<std::int64_t>(k) - 1));
        }
    }
}

TEST(RiemannZeta, NegativeOddValues) {
    EXPECT_EQ(riemann_zeta_neg(1), Rational(-1, 12));
    EXPECT_EQ(riemann_zeta_neg(2), Rational(1, 120));
    EXPECT_EQ(riemann_zeta_neg(3), Rational(-1, 252));
}

TEST(RiemannZeta, SignAlternates) {
    for (int j = 1; j <= 20; ++j) {
        const Rational z = riemann_zeta_neg(j);
        ASSERT_NE(z, 0);
        EXPECT_EQ(sign(z), j % 2 == 0 ? 1 : -1) << j;
    }
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("17"), Rational(17));
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), ValidationError);
    EXPECT_THROW(parse_rational("abc"), ValidationError);
    EXPECT_THROW(parse_rational(""), ValidationError);
}

TEST(Rational, PowerOfZeroWithNegativeExponent) {
    EXPECT_THROW(pow(Rational(0), -1), DivisionByZero);
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Symbolic, Examples) {
    const SymbolicScalar two_pi_sq(Rational(2), 2);
    EXPECT_EQ(two_pi_sq * two_pi_sq, SymbolicScalar(Rational(4), 4));
    EXPECT_EQ(SymbolicScalar::sqrt_of(5) * SymbolicScalar::sqrt_of(5), SymbolicScalar(Rational(5)));
    EXPECT_EQ(SymbolicScalar(Rational(3), 0, 2) * SymbolicScalar::sqrt_of(6), SymbolicScalar(Rational(6), 0, 3));
    EXPECT_TRUE((SymbolicScalar::sqrt_of(5) * SymbolicScalar::sqrt_of(5)).is_rational());
}

TEST(Symbolic, CanonicalForm) {
    const SymbolicScalar s(Rational(1), 0, 12);
    EXPECT_EQ(s.coeff(), Rational(2));
    EXPECT_EQ(s.radicand(), 3);
    EXPECT_EQ(SymbolicScalar(Rational(0), 5, 7), SymbolicScalar(Rational(0)));
    EXPECT_THROW(SymbolicScalar(Rational(0)).inverse(), DivisionByZero);
}

TEST(Symbolic, InverseAndPow) {
    const SymbolicScalar x(Rational(3, 7), 4, 10);
    EXPECT_EQ(x * x.inverse(), SymbolicScalar(Rational(1)));
    EXPECT_EQ(symbolic_pow(x, 3), x * x * x);
    EXPECT_EQ(symbolic_pow(x, -2), (x * x).inverse());
    EXPECT_NEAR(x.to_double(), 3.0 / 7.0 * std::pow(M_PI, 4) * std::sqrt(10.0), 1e-9);
}

TEST(Symbolic, RandomAssociativityAndCommutativity) {
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> coeff(-30, 30), den(1, 12), pe(-4, 4), rad(1, 40);
    auto sample = [&] {
        int c = coeff(rng);
        if (c == 0) c = 1;
        return SymbolicScalar(Rational(c, den(rng)), pe(rng), rad(rng));
    };
    for (int i = 0; i < 500; ++i) {
        const auto a = sample(), b = sample(), c = sample();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        // Canonicalisation is idempotent.
        EXPECT_EQ(SymbolicScalar(a.coeff(), a.pi_exp(), a.radicand()), a);
        EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-9 * std::abs(a.to_double() * b.to_double()));
    }
}

TEST(Rational, NegativeBaseWithNegativeExponent) {
    EXPECT_EQ(pow(Rational(-2), -3), Rational(-1, 8));
    EXPECT_EQ(pow(Rational(-2, 3), -2), Rational(9, 4));
}
