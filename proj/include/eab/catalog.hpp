// catalog.hpp
// Conjugacy classes of elementary abelian 2-subgroups of the exceptional
// groups, driven by closed-form invariants, plus involution-label models
// where an orthogonal decomposition is available.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eab/autgrp.hpp"

namespace eab {

enum class LieType { G2, F4, E6, E7, E8 };

std::string to_string(LieType t);
LieType parse_lie_type(const std::string& s);
const std::vector<LieType>& all_lie_types();

enum class Family {
    G2_F,         // F_r
    F4_F,         // F_{r,s}
    E6_F,         // F_{r,s}
    E6_Fp,        // F'_{r,s}
    E6_Feds,      // F_{eps,delta,r,s}
    E6_Fpeds,     // F'_{eps,delta,r,s}
    E7_F,
    E7_Fp,
    E7_Feds,
    E7_Fpeds,
    E7_Fpp_rs,    // F''_{r,s}
    E7_Fp_r,      // F'_r
    E7_Fppp_rs,   // F'''_{r,s}
    E7_Fpp_r,     // F''_r
    E8_F,
    E8_Fp,
    E8_Feds,
    E8_Fpeds,
    E8_Fpp_rs,    // F''_{r,s}, r <= 3, s <= 2
    E8_Fp_r,      // F'_r, r <= 5
};

LieType lie_type_of(Family f);
std::string family_tag(Family f);                    // e.g. "F'_{eps,delta,r,s}"
std::vector<std::string> family_param_names(Family f);
std::vector<Family> families_of(LieType t);

// Symbolic group built from the component groups used in the Automizer
// descriptions.
struct GroupExpr {
    enum class Kind { Trivial, Vec, Hom, GL, P, Sp, SpMetric, SpPlain, S2, Direct, Semi };
    Kind kind = Kind::Trivial;
    std::vector<int> args;
    std::vector<GroupExpr> kids;

    static GroupExpr trivial();
    static GroupExpr vec(int a);                       // F2^a
    static GroupExpr hom(int a, int b);                // Hom(F2^a, F2^b)
    static GroupExpr gl(int n);
    static GroupExpr p(int r, int s);                  // P(r,s,F2)
    static GroupExpr sp(int s);                        // Sp(s)
    static GroupExpr sp_metric(int r, int s, int eps, int delta);  // Sp(r,s;eps,delta)
    static GroupExpr sp_metric(int s, int eps, int delta);         // Sp(s;eps,delta)
    static GroupExpr sp_plain(int s, int t);           // Sp(s;t)
    static GroupExpr s2();
    static GroupExpr direct(std::vector<GroupExpr> parts);
    static GroupExpr semi(GroupExpr normal, GroupExpr top);  // normal : top
};

BigInt order(const GroupExpr& g);
std::string str(const GroupExpr& g);
// product over the leaves, ignoring the tree shape
BigInt leaf_product(const GroupExpr& g);

enum class DefeSource {
    Absent,      // no published value
    Published,   // closed form as published
    Convention,  // not defined in the source; same counting convention as E8
    Corrected,   // published closed form contradicts its own construction
};

struct FamilyEntry {
    LieType type = LieType::G2;
    Family family = Family::G2_F;
    std::vector<int> params;  // in the order of family_param_names
    int rank = 0;
    int rank_A = 0;
    std::optional<long long> defe;
    DefeSource defe_source = DefeSource::Absent;
    std::optional<long long> defe_printed;  // set when defe_source == Corrected
    std::optional<int> res, res2;           // published residual ranks (E8)
    GroupExpr automizer;
    BigInt automizer_order = 0;
    std::string automizer_desc;

    int param(const std::string& name) const;
    std::string name() const;       // e.g. "F'_{0,1,1,1}"
    std::string params_str() const; // e.g. "eps=0;delta=1;r=1;s=1"
};

// Bare entries (type, family, params, rank) in deterministic order.
std::vector<FamilyEntry> enumerate(LieType t);
// Fills rank_A, defe, res/res2 and the Automizer data.
FamilyEntry invariants_of(FamilyEntry e);
BigInt automizer_order(const FamilyEntry& e);
// enumerate + invariants_of
std::vector<FamilyEntry> catalog(LieType t);
std::vector<FamilyEntry> catalog_all();

enum class Label : std::uint8_t { Identity, S1, S2, S3, S4 };
std::string to_string(Label l);

struct LabelModel {
    int rank = 0;
    std::vector<Label> labels;  // index = coordinates in the model basis
};

struct ModelResult {
    std::optional<LabelModel> model;
    std::string note;  // how it was built, or why there is none
};

ModelResult build_label_model(const FamilyEntry& e);

struct GraphInvariant {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    bool well_defined = true;
    // complete bipartite parts when the graph has that shape (sorted ascending)
    std::optional<std::pair<int, int>> bipartite;
    std::string summary() const;
};

// graph of sigma_1-labelled elements modulo the translation subgroup
std::optional<GraphInvariant> graph_of(const FamilyEntry& e);
GraphInvariant graph_of_model(const LabelModel& m);

struct CrossCheck {
    bool has_model = false;
    std::string note;
    long long defe_counted = 0;
    int rank_A_counted = 0;
    bool translation_is_subgroup = true;
    bool defe_match = true;
    bool rank_A_match = true;
    bool bilinear = false;
    std::optional<bool> bilinear_expected;  // E8 only
    std::optional<int> res_counted, res2_counted;
    bool res_match = true;
    bool h_x_subgroups = true;
    bool lift_element = false;  // some sigma_1 x with H_x = F
    std::optional<GraphInvariant> graph;
    std::optional<BigInt> aut_count;  // label-preserving automorphisms
    bool aut_match = true;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

CrossCheck cross_check(const FamilyEntry& e, bool count_automorphisms = true);

// label-preserving automorphisms of a model (stabilizer chain, rank <= 8)
BigInt count_label_automorphisms(const LabelModel& m);

// E8 entries with a sigma_1 element x and H_x = F, in catalog order
std::vector<FamilyEntry> e8_lift_entries();
// E7 classes without sigma_2/sigma_3 elements (F'''_{r,s} and F''_r)
std::vector<FamilyEntry> e7_pure_sigma1_entries();

struct Collision {
    FamilyEntry a, b;
    std::string key;           // shared (rank, rank_A, defe)
    bool resolved = false;
    std::string discriminator;
};

struct DistinctnessReport {
    LieType type = LieType::G2;
    int entries = 0;
    std::vector<Collision> within_family;  // must be empty
    std::vector<Collision> cross_family;   // each must be resolved
    bool parity_pattern_seen = false;      // E8 (F'_{r,s}, F'_{eps,delta,r,s}) pattern
    bool ok() const;
};

DistinctnessReport distinctness_audit(LieType t);

// E8 parity argument: a pair (F'_{r',s'}, F'_{eps,delta,r,s}) cannot share
// rank A_F, sign of defe and rank F/A_F. Returns the failing condition.
std::optional<std::string> e8_parity_argument(const FamilyEntry& fp, const FamilyEntry& fpeds);

// CSV and JSON export
std::string csv_header();
std::string to_csv_row(const FamilyEntry& e);
std::string to_csv(const std::vector<FamilyEntry>& entries);
std::string to_json(const std::vector<FamilyEntry>& entries);
std::string graph_summary(const FamilyEntry& e);

}  // namespace eab
