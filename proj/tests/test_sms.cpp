// test_sms.cpp

#include <gtest/gtest.h>

#include <random>

#include "eab/sms.hpp"
#include "oracles.hpp"

using namespace eab;

namespace {

SymplecticMetricSpace table(int rank, std::vector<std::uint8_t> mu) { return SymplecticMetricSpace(rank, std::move(mu)); }

const InvariantTuple kHyp{0, 0, 0, 1};

oracle::Tuple as_oracle(const InvariantTuple& t) { return {t.eps, t.delta, t.r, t.s}; }

}  // namespace

TEST(Validate, HyperbolicPlaneIsValid) { EXPECT_TRUE(validate(table(2, {0, 0, 0, 1})).valid); }

TEST(Validate, RankThreeSingleOneIsInvalid) {
    const auto v = validate(table(3, {0, 1, 0, 0, 0, 0, 0, 0}));
    EXPECT_FALSE(v.valid);
    EXPECT_NE(v.diagnostic.find("parity"), std::string::npos);
}

TEST(Validate, RankThreeEvenExample) {
    // nonzero exactly on 100, 010, 110, 001 (first coordinate = bit 0)
    std::vector<std::uint8_t> mu(8, 0);
    mu[0b001] = mu[0b010] = mu[0b011] = mu[0b100] = 1;
    EXPECT_TRUE(validate(table(3, mu)).valid);
    EXPECT_TRUE(oracle::bilinear(mu));
}

TEST(Validate, NonzeroAtOriginIsInvalid) { EXPECT_FALSE(validate(table(1, {1, 0})).valid); }

TEST(Validate, LengthMismatchIsStructuralError) {
    EXPECT_THROW(table(2, {0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(table(1, {0, 2}), std::invalid_argument);
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel(table(2, {0, 0, 0, 1})).dim(), 0);
    EXPECT_EQ(kernel(table(3, std::vector<std::uint8_t>(8, 0))).dim(), 3);
    const auto v = canonical({0, 0, 1, 1});
    const Subspace k = kernel(v);
    ASSERT_EQ(k.dim(), 1);
    EXPECT_EQ(k.basis()[0], F2Vector(3, 0b001));  // the A-generator comes first
}

TEST(TranslationSubgroup, Examples) {
    EXPECT_EQ(translation_subgroup(table(3, std::vector<std::uint8_t>(8, 0))).dim(), 3);
    EXPECT_EQ(translation_subgroup(canonical({1, 0, 0, 0})).dim(), 0);
    EXPECT_EQ(translation_subgroup(canonical({0, 0, 2, 1})).dim(), 2);
}

TEST(Invariants, Examples) {
    EXPECT_EQ(invariants(table(2, {0, 0, 0, 1})), kHyp);
    EXPECT_EQ(invariants(table(2, {0, 1, 1, 1})), (InvariantTuple{0, 1, 0, 0}));
    EXPECT_EQ(invariants(table(1, {0, 1})), (InvariantTuple{1, 0, 0, 0}));
}

TEST(Defect, Examples) {
    EXPECT_EQ(defect(table(2, {0, 0, 0, 1})), 2);
    EXPECT_EQ(defect(table(2, {0, 1, 1, 1})), -2);
    EXPECT_EQ(defect(table(1, {0, 1})), 0);
    EXPECT_EQ(defect(table(0, {0})), 1);
}

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical(kHyp).mu_table(), (std::vector<std::uint8_t>{0, 0, 0, 1}));
    EXPECT_EQ(canonical({0, 1, 0, 0}).mu_table(), (std::vector<std::uint8_t>{0, 1, 1, 1}));
    // (eps, delta, r, s) = (1, 0, 2, 0): layout A A z, so mu is 1 exactly on cosets containing z
    const auto v = canonical({1, 0, 2, 0});
    EXPECT_EQ(v.rank(), 3);
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(v.mu(x), (x >> 2) & 1) << x;
    EXPECT_THROW(canonical({1, 1, 0, 0}), std::invalid_argument);
}

TEST(Canonical, RankZeroIsEmptySpace) {
    const auto v = canonical({0, 0, 0, 0});
    EXPECT_EQ(v.rank(), 0);
    EXPECT_EQ(invariants(v), (InvariantTuple{0, 0, 0, 0}));
}

TEST(IsIsomorphic, Examples) {
    const auto hyp = table(2, {0, 0, 0, 1});
    EXPECT_TRUE(is_isomorphic(hyp, hyp));
    EXPECT_FALSE(is_isomorphic(hyp, table(2, {0, 1, 1, 1})));
    const F2Matrix change = F2Matrix::from_row_bits(2, {0b11, 0b10});
    EXPECT_TRUE(is_isomorphic(hyp, transport(hyp, change)));
}

TEST(IsomorphismToCanonical, Examples) {
    EXPECT_EQ(isomorphism_to_canonical(canonical({0, 0, 1, 1})), F2Matrix::identity(3));
    // swapped basis of the hyperbolic plane with mu = 1 on e+f only stays put;
    // a plane with mu(e)=1 must be moved
    const auto v = table(2, {0, 1, 0, 0});
    const F2Matrix p = isomorphism_to_canonical(v);
    EXPECT_EQ(transport(v, p), canonical(invariants(v)));
}

TEST(SmsProperty, RoundTripUpToRankTen) {
    for (const auto& t : admissible_tuples(10)) {
        const auto v = canonical(t);
        ASSERT_TRUE(validate(v).valid) << t.label();
        EXPECT_EQ(invariants(v), t) << t.label();
        EXPECT_EQ(defect(v), oracle::defect(v.mu_table())) << t.label();
        EXPECT_EQ(defect(v), t.defect_closed_form()) << t.label();
    }
}

TEST(SmsProperty, ExhaustiveRankFourAgainstOracle) {
    for (int k = 0; k <= 4; ++k) {
        const std::uint64_t n = std::uint64_t(1) << k;
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
            std::vector<std::uint8_t> mu(n, 0);
            for (std::uint64_t v = 1; v < n; ++v) mu[v] = (code >> (v - 1)) & 1;
            const auto space = table(k, mu);
            const bool ok = validate(space).valid;
            ASSERT_EQ(ok, oracle::bilinear(mu)) << "k=" << k << " code=" << code;
            if (!ok) continue;
            const auto t = invariants(space);
            EXPECT_EQ(as_oracle(t), oracle::invariants(mu, k));
            EXPECT_TRUE(translation_subgroup(space).dim() <= kernel(space).dim());
            EXPECT_EQ(transport(space, isomorphism_to_canonical(space)), canonical(t));
        }
    }
}

TEST(SmsProperty, RankThreeParityRule) {
    for (std::uint64_t code = 0; code < 128; ++code) {
        std::vector<std::uint8_t> mu(8, 0);
        int ones = 0;
        for (std::uint64_t v = 1; v < 8; ++v) ones += mu[v] = (code >> (v - 1)) & 1;
        EXPECT_EQ(validate(table(3, mu)).valid, ones % 2 == 0) << code;
    }
}

TEST(SmsProperty, TransportPreservesInvariants) {
    std::mt19937_64 rng(3);
    for (const auto& t : admissible_tuples(6)) {
        const auto v = canonical(t);
        const int k = v.rank();
        if (k == 0) continue;
        for (int trial = 0; trial < 5; ++trial) {
            F2Matrix m;
            do {
                std::vector<std::uint64_t> rows(k);
                for (auto& r : rows) r = rng() & width_mask(k);
                m = F2Matrix::from_row_bits(k, rows);
            } while (rank(m) != k);
            EXPECT_EQ(invariants(transport(v, m)), t);
        }
    }
}
