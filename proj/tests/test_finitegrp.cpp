#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/finite/brute_force.hpp"
#include "lefschetz/finite/orders.hpp"

using namespace lefschetz;
using namespace lefschetz::finite;
using exact::Integer;

TEST(ClosedForms, Examples) {
    EXPECT_EQ(sl_order(2, 2), 6);
    EXPECT_EQ(sl_order(2, 3), 24);
    EXPECT_EQ(sl_order(3, 2), 168);
    EXPECT_EQ(sp_order(1, 2), 6);
    EXPECT_EQ(sp_order(2, 2), 720);
    EXPECT_EQ(sp_order(1, 5), 120);
    EXPECT_EQ(ramified_local_order(1, 2), 12);
    EXPECT_EQ(ramified_local_order(2, 3), 69984);
    EXPECT_EQ(unitary_order(1, 2), 3);
    EXPECT_EQ(unitary_order(2, 2), 18);
    EXPECT_EQ(unitary_order(1, 3), 4);
}

TEST(ClosedForms, RejectNonPrimePowers) {
    EXPECT_THROW(sl_order(2, 6), ValidationError);
    EXPECT_THROW(sp_order(1, 1), ValidationError);
    EXPECT_THROW(unitary_order(1, 12), ValidationError);
    EXPECT_THROW(ramified_local_order(1, 0), ValidationError);
}

TEST(ClosedForms, RamifiedAtRankOne) {
    for (const std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        EXPECT_EQ(ramified_local_order(1, q), Integer(q) * q * q + Integer(q) * q);
        EXPECT_EQ(sp_order(1, q), sl_order(2, q));
    }
}

TEST(ClosedForms, RamifiedEqualsUnitaryTimesUnipotent) {
    for (int n = 1; n <= 5; ++n) {
        for (const std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            EXPECT_EQ(ramified_local_order(n, q), unitary_order(n, q) * exact::ipow(Integer(q), static_cast<std::uint64_t>(n) * (n + 1)));
        }
    }
}

TEST(LocalIndexFactor, Examples) {
    EXPECT_EQ(local_index_factor(2, PrimeKind::Split, 1, 2), 48);
    EXPECT_EQ(local_index_factor(2, PrimeKind::Ramified, 1, 1), 12);
    EXPECT_EQ(local_index_factor(3, PrimeKind::Split, 1, 1), 24);
}

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_sl(2, 5), 120u);
    EXPECT_EQ(brute_force_sp(2, 2), 720u);
    EXPECT_EQ(brute_force_ramified_sl1(3), 36u);
    EXPECT_EQ(brute_force_sl(2, 4), 48u);
}

TEST(BruteForce, MatchesClosedForms) {
    for (const auto& [m, q] : std::vector<std::pair<int, std::int64_t>>{{2, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 2}}) {
        EXPECT_EQ(sl_order(m, q), brute_force_sl(m, q)) << m << " " << q;
    }
    for (const auto& [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 3}, {1, 5}, {2, 2}}) {
        EXPECT_EQ(sp_order(n, q), brute_force_sp(n, q)) << n << " " << q;
    }
    for (const std::int64_t q : {2, 3, 5}) EXPECT_EQ(ramified_local_order(1, q), brute_force_ramified_sl1(q));
    for (const auto& [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 3}, {2, 2}}) {
        EXPECT_EQ(unitary_order(n, q), brute_force_unitary(n, q)) << n << " " << q;
    }
}

TEST(BruteForce, ChineseRemainder) {
    EXPECT_EQ(brute_force_sl(2, 6), brute_force_sl(2, 2) * brute_force_sl(2, 3));
}

TEST(BruteForce, SearchSpaceCap) {
    EXPECT_THROW(brute_force_sl(3, 7), SearchSpaceExceeded);
    EXPECT_THROW(brute_force_sl(2, 100), SearchSpaceExceeded);
    EXPECT_THROW(brute_force_sp(2, 3), SearchSpaceExceeded);
    EXPECT_THROW(brute_force_unitary(3, 3), SearchSpaceExceeded);
    EXPECT_THROW(brute_force_sp(1, 4), ValidationError);
}
