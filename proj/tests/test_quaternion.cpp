#include <gtest/gtest.h>

#include <random>

#include "lefschetz/error.hpp"
#include "lefschetz/nf/arith.hpp"
#include "lefschetz/quat/algebra.hpp"

using namespace lefschetz;
using namespace lefschetz::quat;
using nf::PrimeIdeal;
using nf::TotallyRealField;

namespace {

const auto kQ = TotallyRealField::rationals();
const auto kQ5 = TotallyRealField::real_quadratic(5);

PrimeIdeal P(std::int64_t p) { return PrimeIdeal{p, 1, 1, ""}; }

// Brute-force local solubility of a x^2 + b y^2 = z^2 in Z/p^k for odd p, with
// a primitive solution. Independent of the closed-form symbol.
int hilbert_odd_search(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t m = p * p * p;
    for (std::int64_t x = 0; x < m; ++x) {
        for (std::int64_t y = 0; y < m; ++y) {
            const std::int64_t lhs = nf::mod(a * ((x * x) % m) + b * ((y * y) % m), m);
            for (std::int64_t z = 0; z < m; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                if ((z * z) % m == lhs) return 1;
            }
        }
    }
    return -1;
}

}  // namespace

TEST(QuaternionAlgebra, SignedDiscriminant) {
    EXPECT_EQ(signed_reduced_discriminant(QuaternionAlgebra(kQ, {P(2), P(3)}, 0)), 6);
    EXPECT_EQ(signed_reduced_discriminant(QuaternionAlgebra(kQ, {P(2)}, 1)), -2);
    EXPECT_EQ(signed_reduced_discriminant(QuaternionAlgebra(kQ5, {}, 2)), 1);
}

TEST(QuaternionAlgebra, Predicates) {
    const QuaternionAlgebra d6(kQ, {P(2), P(3)}, 0);
    EXPECT_FALSE(is_totally_definite(d6));
    EXPECT_TRUE(is_division(d6));
    EXPECT_TRUE(is_fuchsian(d6));
    EXPECT_FALSE(is_division(QuaternionAlgebra::split(kQ)));
    EXPECT_FALSE(is_fuchsian(QuaternionAlgebra::split(kQ)));
    const QuaternionAlgebra hamilton5(kQ5, {}, 2);
    EXPECT_TRUE(is_totally_definite(hamilton5));
    EXPECT_FALSE(is_fuchsian(hamilton5));
    const QuaternionAlgebra one_real(kQ5, {nf::split_prime(kQ5, 2).front()}, 1);
    EXPECT_TRUE(is_fuchsian(one_real));
}

TEST(QuaternionAlgebra, RejectsOddRamification) {
    std::mt19937 rng(99);
    const std::vector<std::int64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19};
    for (int i = 0; i < 200; ++i) {
        std::set<PrimeIdeal> ram;
        for (const auto p : primes) {
            if (rng() % 2) ram.insert(P(p));
        }
        const int r = static_cast<int>(rng() % 2);
        if ((ram.size() + r) % 2 == 1) {
            EXPECT_THROW(QuaternionAlgebra(kQ, ram, r), ValidationError);
        } else {
            EXPECT_NO_THROW(QuaternionAlgebra(kQ, ram, r));
        }
    }
}

TEST(QuaternionAlgebra, RejectsForeignPrimesAndBadRealCounts) {
    EXPECT_THROW(QuaternionAlgebra(kQ, {}, 2), ValidationError);
    EXPECT_THROW(QuaternionAlgebra(kQ, {}, -1), ValidationError);
    // 2 is inert in Q(sqrt 5): a degree-one prime above 2 does not exist.
    EXPECT_THROW(QuaternionAlgebra(kQ5, {P(2), nf::split_prime(kQ5, 3).front()}, 0), ValidationError);
}

TEST(QuaternionAlgebra, DiscriminantLaws) {
    const auto F = TotallyRealField::real_quadratic(2);
    const auto p7 = nf::split_prime(F, 7);
    const auto p2 = nf::split_prime(F, 2).front();
    const QuaternionAlgebra D(F, {p7[0], p7[1], p2}, 1);
    EXPECT_EQ(signed_reduced_discriminant(D), -7 * 7 * 2);
    const QuaternionAlgebra E(F, {p7[0], p2}, 2);
    EXPECT_EQ(signed_reduced_discriminant(E), 14);
}

TEST(Hilbert, Examples) {
    const auto hamilton = hilbert_ramification_q(-1, -1);
    EXPECT_EQ(hamilton.ram_finite(), std::set<PrimeIdeal>{P(2)});
    EXPECT_EQ(hamilton.ram_real_count(), 1);
    const auto split = hilbert_ramification_q(1, 7);
    EXPECT_TRUE(split.ram_finite().empty());
    EXPECT_EQ(split.ram_real_count(), 0);
    const auto d3 = hilbert_ramification_q(-1, -3);
    EXPECT_EQ(d3.ram_finite(), std::set<PrimeIdeal>{P(3)});
    EXPECT_EQ(d3.ram_real_count(), 1);
    EXPECT_THROW(hilbert_ramification_q(0, 3), ValidationError);
}

TEST(Hilbert, ParityOverSmallRange) {
    for (std::int64_t a = -20; a <= 20; ++a) {
        for (std::int64_t b = -20; b <= 20; ++b) {
            if (a == 0 || b == 0) continue;
            const auto D = hilbert_ramification_q(a, b);
            EXPECT_EQ((D.ram_finite().size() + D.ram_real_count()) % 2, 0u) << a << " " << b;
        }
    }
}

TEST(Hilbert, SymmetricAndBilinear) {
    const std::vector<std::int64_t> vals = {-15, -6, -3, -2, -1, 2, 3, 5, 6, 7, 10, 12};
    for (const std::int64_t p : {0, 2, 3, 5, 7}) {
        for (const auto a : vals) {
            for (const auto b : vals) {
                EXPECT_EQ(hilbert_symbol_q(a, b, p), hilbert_symbol_q(b, a, p));
                for (const auto c : {-1, 3, 10}) {
                    EXPECT_EQ(hilbert_symbol_q(a, b * c, p), hilbert_symbol_q(a, b, p) * hilbert_symbol_q(a, c, p));
                }
            }
            EXPECT_EQ(hilbert_symbol_q(a, -a, p), 1);
        }
    }
}

TEST(Hilbert, OddPrimesMatchSearch) {
    for (const std::int64_t p : {3, 5}) {
        for (const std::int64_t a : {-3, -2, -1, 2, 3, 5, 6, 10}) {
            for (const std::int64_t b : {-5, -1, 2, 3, 15}) {
                EXPECT_EQ(hilbert_symbol_q(a, b, p), hilbert_odd_search(a, b, p)) << a << " " << b << " " << p;
            }
        }
    }
}
