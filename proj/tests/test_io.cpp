// test_io.cpp

#include <gtest/gtest.h>

#include "eab/io.hpp"

using namespace eab;

TEST(ParseMuTable, Valid) {
    const auto v = parse_mu_table(R"({"rank": 2, "mu": [0, 0, 0, 1]})");
    EXPECT_EQ(v.rank(), 2);
    EXPECT_EQ(v.mu_table(), (std::vector<std::uint8_t>{0, 0, 0, 1}));
}

TEST(ParseMuTable, SyntaxErrorCarriesPosition) {
    try {
        parse_mu_table("{\n  \"rank\": 1,\n  \"mu\": [0 1]\n}");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_GT(e.col(), 0);
        EXPECT_NE(std::string(e.what()).find("line 3, column"), std::string::npos) << e.what();
    }
}

TEST(ParseMuTable, StructuralErrors) {
    EXPECT_THROW(parse_mu_table(R"({"rank": 2, "mu": [0, 0, 1]})"), InputError);
    EXPECT_THROW(parse_mu_table(R"({"rank": 1, "mu": [0, 2]})"), InputError);
    EXPECT_THROW(parse_mu_table(R"({"rank": -1, "mu": []})"), InputError);
    EXPECT_THROW(parse_mu_table(R"({"rank": 1, "mu": [0, 1], "extra": 0})"), InputError);
    EXPECT_THROW(parse_mu_table(R"({"mu": [0]})"), InputError);
    EXPECT_THROW(parse_mu_table(R"([0, 1])"), InputError);
    try {
        parse_mu_table(R"({"rank": 1, "mu": [0, "x"]})");
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("/mu/1"), std::string::npos) << e.what();
    }
}

TEST(ParseMuTable, InvalidButWellFormedParses) {
    // bilinearity is not the parser's business
    EXPECT_NO_THROW(parse_mu_table(R"({"rank": 3, "mu": [0, 1, 0, 0, 0, 0, 0, 0]})"));
}

TEST(ParseGenerators, Valid) {
    const auto in = parse_generators(R"({"field_mode": "quaternion", "n": 2,
        "generators": [{"perm": [1, 0], "entries": ["i", "-k"]}, {"perm": [0, 1], "entries": ["1", "1"], "conj": false}]})");
    EXPECT_EQ(in.mode, FieldMode::Quaternion);
    EXPECT_EQ(in.n, 2);
    ASSERT_EQ(in.generators.size(), 2u);
    EXPECT_EQ(in.generators[0].matrix().perm(), (std::vector<int>{1, 0}));
    EXPECT_FALSE(in.generators[1].conj());
}

TEST(ParseGenerators, Errors) {
    EXPECT_THROW(parse_generators(R"({"field_mode": "octonion", "n": 1, "generators": []})"), InputError);
    EXPECT_THROW(parse_generators(R"({"field_mode": "real", "n": 1, "generators": [{"perm": [0], "entries": ["i"]}]})"),
                 InputError);
    EXPECT_THROW(parse_generators(R"({"field_mode": "real", "n": 2, "generators": [{"perm": [0], "entries": ["1"]}]})"),
                 InputError);
    EXPECT_THROW(parse_generators(R"({"field_mode": "real", "n": 2, "generators": [{"perm": [0, 0], "entries": ["1", "1"]}]})"),
                 InputError);
    EXPECT_THROW(parse_generators(R"({"field_mode": "real", "n": 1, "generators": [{"perm": [0], "entries": ["1"], "conj": 1}]})"),
                 InputError);
}

TEST(ReadFile, MissingFile) { EXPECT_THROW(read_file("/nonexistent/eab.json"), InputError); }
