// test_catalog.cpp

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "eab/catalog.hpp"
#include "oracles.hpp"

using namespace eab;

namespace {

FamilyEntry find(Family f, std::vector<int> params) {
    for (const auto& e : catalog(lie_type_of(f)))
        if (e.family == f && e.params == params) return e;
    throw std::runtime_error("no entry " + family_tag(f));
}

std::vector<Label> labels(Family f, std::vector<int> params) {
    const auto m = build_label_model(find(f, std::move(params))).model;
    if (!m) return {};
    return m->labels;
}

long long count_lines(const std::string& s) {
    long long n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST(Enumerate, CountsPerType) {
    const std::vector<std::pair<LieType, std::size_t>> expected{
        {LieType::G2, 4}, {LieType::F4, 12}, {LieType::E6, 51}, {LieType::E7, 78}, {LieType::E8, 66}};
    for (const auto& [t, n] : expected) EXPECT_EQ(enumerate(t).size(), n) << to_string(t);
    EXPECT_EQ(catalog_all().size(), 211u);
}

TEST(Enumerate, ParametersDistinctWithinFamily) {
    for (LieType t : all_lie_types()) {
        std::set<std::pair<int, std::vector<int>>> seen;
        for (const auto& e : enumerate(t)) {
            EXPECT_TRUE(seen.insert({static_cast<int>(e.family), e.params}).second) << e.name();
            EXPECT_EQ(e.params.size(), family_param_names(e.family).size());
        }
    }
}

TEST(Enumerate, Deterministic) { EXPECT_EQ(to_csv(catalog_all()), to_csv(catalog_all())); }

TEST(Invariants, Examples) {
    EXPECT_EQ(find(Family::E7_F, {0, 0}).defe, 3);
    EXPECT_EQ(find(Family::E8_Fpeds, {0, 0, 0, 1}).defe, -4);
    const auto e6 = find(Family::E6_F, {2, 3});
    EXPECT_EQ(e6.rank_A, 2);
    EXPECT_EQ(e6.defe, -24);
}

TEST(Invariants, RankBounds) {
    for (const auto& e : catalog_all()) {
        EXPECT_LE(e.rank_A, e.rank) << e.name();
        EXPECT_GE(e.rank_A, 0) << e.name();
    }
}

TEST(Automizer, Examples) {
    EXPECT_EQ(find(Family::F4_F, {2, 3}).automizer_order, 64512);
    EXPECT_EQ(find(Family::E8_Fp_r, {5}).automizer_order, 9999360);
    const std::vector<BigInt> g2{1, 1, 6, 168};
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(find(Family::G2_F, {r}).automizer_order, g2[r]);
}

TEST(Automizer, OrderIsLeafProduct) {
    for (const auto& e : catalog_all()) {
        EXPECT_EQ(order(e.automizer), e.automizer_order) << e.name();
        EXPECT_EQ(leaf_product(e.automizer), e.automizer_order) << e.name();
        EXPECT_GT(e.automizer_order, 0) << e.name();
    }
}

TEST(Automizer, GroupExprComponents) {
    EXPECT_EQ(order(GroupExpr::hom(2, 3)), 64);
    EXPECT_EQ(order(GroupExpr::p(2, 3)), BigInt(6) * 168 * 64);
    EXPECT_EQ(order(GroupExpr::gl(4)), BigInt(oracle::gl_count(4)));
    EXPECT_EQ(order(GroupExpr::semi(GroupExpr::vec(3), GroupExpr::sp(2))), BigInt(8) * 720);
}

TEST(LabelModel, Examples) {
    EXPECT_EQ(labels(Family::E8_Fp_r, {2}), (std::vector<Label>{Label::Identity, Label::S2, Label::S2, Label::S2}));
    // F''_{r,s} is stored with s shifted down by one
    EXPECT_EQ(labels(Family::E8_Fpp_rs, {0, 0}), (std::vector<Label>{Label::Identity, Label::S1}));
    EXPECT_EQ(labels(Family::F4_F, {1, 1}), (std::vector<Label>{Label::Identity, Label::S2, Label::S1, Label::S1}));
}

TEST(LabelModel, IdentityAtZero) {
    for (const auto& e : catalog_all()) {
        const auto r = build_label_model(e);
        if (!r.model) {
            EXPECT_FALSE(r.note.empty()) << e.name();
            continue;
        }
        EXPECT_EQ(r.model->rank, e.rank) << e.name();
        ASSERT_EQ(r.model->labels.size(), std::size_t(1) << e.rank) << e.name();
        EXPECT_EQ(r.model->labels[0], Label::Identity) << e.name();
    }
}

TEST(LabelModel, NoModelForE7) {
    for (const auto& e : catalog(LieType::E7)) EXPECT_FALSE(build_label_model(e).model.has_value()) << e.name();
}

TEST(CrossCheck, G2DefectConvention) {
    const auto c = cross_check(find(Family::G2_F, {2}));
    EXPECT_TRUE(c.has_model);
    EXPECT_EQ(c.defe_counted, -2);
    EXPECT_TRUE(c.ok());
}

TEST(CrossCheck, E8Examples) {
    EXPECT_EQ(cross_check(find(Family::E8_Fpeds, {0, 0, 0, 1})).defe_counted, -4);
    const auto c = cross_check(find(Family::E8_F, {0, 3}));
    EXPECT_TRUE(c.has_model);
    EXPECT_FALSE(c.bilinear);
}

TEST(CrossCheck, AllModelsAgreeWithFormulas) {
    for (const auto& e : catalog_all()) {
        const auto c = cross_check(e, e.type != LieType::E8);
        if (!c.has_model) continue;
        EXPECT_TRUE(c.ok()) << e.name() << ": " << (c.problems.empty() ? "" : c.problems[0]);
        EXPECT_TRUE(c.defe_match) << e.name();
        EXPECT_TRUE(c.rank_A_match) << e.name();
    }
}

TEST(CrossCheck, E8BilinearityFailsExactlyOnExcludedFamilies) {
    for (const auto& e : catalog(LieType::E8)) {
        const auto c = cross_check(e, false);
        if (!c.has_model) continue;
        const bool excluded = e.family == Family::E8_F || e.family == Family::E8_Feds ||
                              (e.family == Family::E8_Fpp_rs && e.param("s") == 2);
        EXPECT_EQ(c.bilinear, !excluded) << e.name();
    }
}

TEST(Graph, Shapes) {
    const auto empty = graph_of(find(Family::E8_Fp_r, {3}));
    ASSERT_TRUE(empty.has_value());
    EXPECT_EQ(empty->vertices, 0);
    const auto single = graph_of(find(Family::E8_Fpp_rs, {1, 1}));
    ASSERT_TRUE(single.has_value());
    EXPECT_EQ(single->vertices, 1);
    EXPECT_TRUE(single->edges.empty());
    for (int s = 1; s <= 3; ++s) {
        const auto g = graph_of(find(Family::E8_F, {0, s}));
        ASSERT_TRUE(g.has_value());
        ASSERT_TRUE(g->bipartite.has_value());
        const std::pair<int, int> parts{std::min((1 << s) - 1, 7), std::max((1 << s) - 1, 7)};
        EXPECT_EQ(*g->bipartite, parts) << s;
        EXPECT_TRUE(g->well_defined);
    }
    EXPECT_FALSE(graph_of(find(Family::E7_F, {0, 0})).has_value());
}

TEST(Graph, ModelWithSingleSigmaOne) {
    LabelModel m{1, {Label::Identity, Label::S1}};
    const auto g = graph_of_model(m);
    EXPECT_EQ(g.vertices, 1);
}

TEST(LiftConsistency, ThirteenOnBothSides) {
    EXPECT_EQ(e8_lift_entries().size(), 13u);
    EXPECT_EQ(e7_pure_sigma1_entries().size(), 13u);
}

TEST(Distinctness, AllTypes) {
    for (LieType t : all_lie_types()) {
        const auto rep = distinctness_audit(t);
        EXPECT_TRUE(rep.ok()) << to_string(t);
        EXPECT_TRUE(rep.within_family.empty()) << to_string(t);
        for (const auto& c : rep.cross_family) EXPECT_TRUE(c.resolved) << c.a.name() << " vs " << c.b.name();
    }
    EXPECT_TRUE(distinctness_audit(LieType::E8).parity_pattern_seen);
    EXPECT_TRUE(distinctness_audit(LieType::G2).cross_family.empty());
}

TEST(Export, CsvShape) {
    const std::string csv = to_csv(catalog(LieType::F4));
    EXPECT_EQ(csv.rfind(csv_header() + "\n", 0), 0u);
    EXPECT_EQ(count_lines(csv), 13);
    EXPECT_EQ(count_lines(to_csv(catalog_all())), 212);
}

TEST(Export, JsonShape) {
    const std::string js = to_json(catalog(LieType::G2));
    EXPECT_NE(js.find("\"automizer_order\""), std::string::npos);
    EXPECT_EQ(js.front(), '[');
}
