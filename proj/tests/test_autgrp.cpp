// test_autgrp.cpp

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eab/autgrp.hpp"
#include "oracles.hpp"

using namespace eab;

TEST(Order, Examples) {
    EXPECT_EQ(sp_order(1), 6);
    EXPECT_EQ(sp_metric_order(0, 0, 1), 2);
    EXPECT_EQ(sp_metric_order(0, 1, 0), 6);
    EXPECT_EQ(sp_order(3), 1451520);
    EXPECT_EQ(sp_metric_order(0, 0, 3), 40320);
    EXPECT_EQ(sp_metric_order(0, 0, 0), 1);
}

TEST(Order, SymplecticAgreesWithPairCounting) {
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(sp_order(s), BigInt(oracle::sp_recursive(s))) << s;
}

TEST(Order, GlAgreesWithBruteForce) {
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(gl_order(n), BigInt(oracle::gl_count(n)));
}

TEST(Order, CompositeFormulas) {
    // |Sp(r,s;eps,delta)| = 2^{r(2s+2delta+eps)} |GL(r)| |Sp(s;eps,delta)|
    EXPECT_EQ(order(AutGroupSpec::metric(0, 0, 2, 1)), BigInt(16) * 6 * 2);
    EXPECT_EQ(order(AutGroupSpec::metric(1, 0, 1, 1)), BigInt(8) * 1 * 6);
    // |Sp(s;t)| = 2^{2st} |GL(t)| |Sp(s)|
    EXPECT_EQ(order(AutGroupSpec::plain(1, 2)), BigInt(16) * 6 * 6);
    EXPECT_THROW(AutGroupSpec::metric(1, 1, 0, 0), std::invalid_argument);
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_automorphisms(canonical({1, 0, 0, 0})).size(), 1u);
    EXPECT_EQ(enumerate_automorphisms(canonical({0, 0, 0, 1})).size(), 2u);
    EXPECT_EQ(enumerate_automorphisms(canonical({0, 1, 0, 0})).size(), 6u);
}

TEST(Enumerate, RefusesAboveBound) { EXPECT_THROW(enumerate_automorphisms(canonical({0, 0, 9, 0})), std::invalid_argument); }

TEST(Enumerate, MatchesBruteForceUpToRankFour) {
    for (const auto& t : admissible_tuples(4)) {
        const auto v = canonical(t);
        const auto brute = oracle::automorphisms(v.mu_table(), v.rank());
        EXPECT_EQ(enumerate_automorphisms(v).size(), brute) << t.label();
        EXPECT_EQ(count_by_enumeration(v), brute) << t.label();
        EXPECT_EQ(count_automorphisms(v), BigInt(brute)) << t.label();
        EXPECT_EQ(order(AutGroupSpec::metric(t)), BigInt(brute)) << t.label();
    }
}

TEST(Enumerate, ElementsPreserveMuAndAreDistinct) {
    const auto v = canonical({0, 0, 1, 2});
    const auto all = enumerate_automorphisms(v);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& m : all) {
        for (std::uint64_t x = 0; x < v.size(); ++x) ASSERT_EQ(v.mu(m.apply_bits(x)), v.mu(x));
        std::vector<std::uint64_t> rows;
        for (const auto& r : m.row_data()) rows.push_back(r.bits());
        EXPECT_TRUE(seen.insert(rows).second);
    }
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Enumerate, ClosedUnderProductAndInverse) {
    const auto v = canonical({0, 1, 1, 1});
    const auto all = enumerate_automorphisms(v);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), a * b));
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), *inverse(a)));
    }
}

TEST(Enumerate, LeafCountMatchesVisitorCount) {
    for (const auto& t : admissible_tuples(5)) {
        const auto v = canonical(t);
        std::uint64_t visited = 0;
        for_each_automorphism(v, [&](const F2Matrix&) { ++visited; });
        EXPECT_EQ(count_by_enumeration(v), visited) << t.label();
    }
}

TEST(Enumerate, SymplecticRankSeven) {
    EXPECT_EQ(BigInt(count_by_enumeration(canonical({1, 0, 0, 3}))), sp_order(3));
}

TEST(Comparisons, Examples) {
    const auto r1 = verify_comparisons(1);
    EXPECT_EQ(r1.index00, 3);
    EXPECT_EQ(r1.index00, r1.expect00);
    const auto r2 = verify_comparisons(2);
    EXPECT_EQ(r2.index00, 10);
    const auto r3 = verify_comparisons(3);
    EXPECT_EQ(r3.index00, 36);
    for (const auto& r : {r1, r2, r3}) EXPECT_TRUE(r.ok()) << r.s;
    EXPECT_THROW(verify_comparisons(4), std::invalid_argument);
}

TEST(Comparisons, StabilizerCount) {
    // nonzero x with mu(x) = +1 (table bit 0) in V_{0,s;0,0}: (2^s - 1)(2^{s-1} + 1)
    for (int s = 1; s <= 3; ++s) {
        const auto v = canonical({0, 0, 0, s});
        long long trivial = -1;
        for (auto b : v.mu_table()) trivial += b == 0;
        EXPECT_EQ(trivial, ((1LL << s) - 1) * ((1LL << (s - 1)) + 1)) << s;
    }
}
