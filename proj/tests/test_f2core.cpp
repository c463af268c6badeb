// test_f2core.cpp

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eab/f2core.hpp"
#include "oracles.hpp"

using namespace eab;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::vector<std::uint64_t> r(rows);
    for (auto& x : r) x = rng() & width_mask(cols);
    return F2Matrix::from_row_bits(cols, r);
}

}  // namespace

TEST(F2Vector, BasicOperations) {
    const F2Vector v(3, 0b101);
    EXPECT_EQ(v.weight(), 2);
    EXPECT_EQ(v.lowest(), 0);
    EXPECT_TRUE(v.get(2));
    EXPECT_EQ((v + F2Vector(3, 0b110)).bits(), 0b011u);
    EXPECT_EQ(v.dot(F2Vector(3, 0b111)), 0);
    EXPECT_EQ(F2Vector::zero(5).lowest(), -1);
    EXPECT_THROW(F2Vector(2, 0b100), std::invalid_argument);
}

TEST(Rank, ZeroMatrixIsZero) { EXPECT_EQ(rank(F2Matrix::zero(3, 3)), 0); }

TEST(Rank, IdentityIsFull) { EXPECT_EQ(rank(F2Matrix::identity(4)), 4); }

TEST(Rank, HyperbolicGram) { EXPECT_EQ(rank(F2Matrix::from_row_bits(2, {0b10, 0b01})), 2); }

TEST(Nullspace, IdentityHasZeroKernel) { EXPECT_EQ(nullspace(F2Matrix::identity(3)).dim(), 0); }

TEST(Nullspace, ZeroMatrixHasFullKernel) {
    const Subspace k = nullspace(F2Matrix::zero(2, 2));
    EXPECT_EQ(k.dim(), 2);
    EXPECT_EQ(k, Subspace::full(2));
}

TEST(Nullspace, InvertibleGramHasZeroKernel) {
    EXPECT_EQ(nullspace(F2Matrix::from_row_bits(2, {0b10, 0b01})).dim(), 0);
}

TEST(Solve, IdentityReturnsRightHandSide) {
    const F2Vector b(4, 0b1011);
    EXPECT_EQ(solve(F2Matrix::identity(4), b), b);
}

TEST(Solve, ZeroMatrixInconsistent) { EXPECT_FALSE(solve(F2Matrix::zero(2, 2), F2Vector(2, 0b01)).has_value()); }

TEST(Solve, BackSubstitution) {
    // [[1,1],[0,1]] x = (1,1)  ->  x = (0,1)
    const F2Matrix m = F2Matrix::from_row_bits(2, {0b11, 0b10});
    const auto x = solve(m, F2Vector(2, 0b11));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, F2Vector(2, 0b10));
}

TEST(EnumerateGl, CountsMatchBruteForce) {
    for (int n = 0; n <= 4; ++n) {
        std::uint64_t count = 0;
        enumerate_gl(n, [&](const F2Matrix&) { ++count; });
        EXPECT_EQ(count, oracle::gl_count(n)) << "n=" << n;
    }
}

TEST(EnumerateGl, SmallCounts) {
    EXPECT_EQ(enumerate_gl(1).size(), 1u);
    EXPECT_EQ(enumerate_gl(2).size(), 6u);
    EXPECT_EQ(enumerate_gl(3).size(), 168u);
}

TEST(EnumerateGl, DistinctAndInvertible) {
    const auto all = enumerate_gl(3);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& m : all) {
        EXPECT_EQ(rank(m), 3);
        std::vector<std::uint64_t> rows;
        for (const auto& r : m.row_data()) rows.push_back(r.bits());
        EXPECT_TRUE(seen.insert(rows).second);
    }
}

TEST(EnumerateGl, RefusesAboveBound) { EXPECT_THROW(enumerate_gl(6), std::invalid_argument); }

TEST(F2Property, RankNullity) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 10), cols = 1 + static_cast<int>(rng() % 10);
        const F2Matrix m = random_matrix(rng, rows, cols);
        EXPECT_EQ(rank(m) + nullspace(m).dim(), cols);
        std::vector<std::uint64_t> r;
        for (const auto& row : m.row_data()) r.push_back(row.bits());
        EXPECT_EQ(rank(m), oracle::rank_rows(r));
        const Subspace k = nullspace(m);
        for (const auto& v : k.basis()) EXPECT_TRUE(m.apply(v).is_zero());
    }
}

TEST(F2Property, SolveIsSoundAndComplete) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        const F2Matrix m = random_matrix(rng, rows, cols);
        const F2Vector b(rows, rng() & width_mask(rows));
        const auto x = solve(m, b);
        std::vector<F2Vector> aug_cols;
        for (int j = 0; j < cols; ++j) aug_cols.push_back(m.column(j));
        aug_cols.push_back(b);
        const bool in_column_space = rank(F2Matrix::from_columns(rows, aug_cols)) == rank(m);
        EXPECT_EQ(x.has_value(), in_column_space);
        if (x) EXPECT_EQ(m.apply(*x), b);
    }
}

TEST(F2Property, InverseRoundTrip) {
    for (const auto& m : enumerate_gl(3)) {
        const auto inv = inverse(m);
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(m * *inv, F2Matrix::identity(3));
    }
    EXPECT_FALSE(inverse(F2Matrix::zero(2, 2)).has_value());
}

TEST(Subspace, EchelonFormIsCanonical) {
    const Subspace a = Subspace::span(4, {F2Vector(4, 0b0011), F2Vector(4, 0b0110)});
    const Subspace b = Subspace::span(4, {F2Vector(4, 0b0101), F2Vector(4, 0b0011), F2Vector(4, 0b0110)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 2);
    EXPECT_TRUE(a.contains(F2Vector(4, 0b0101)));
    EXPECT_FALSE(a.contains(F2Vector(4, 0b1000)));
    EXPECT_EQ(a.elements().size(), 4u);
}
