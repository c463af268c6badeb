// catalog.cpp

#include "eab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "eab/matgrp.hpp"
#include "eab/sms.hpp"

namespace eab {

namespace {

long long p2(int e) { return 1LL << e; }

int sign_of(long long v) { return (v > 0) - (v < 0); }

}  // namespace

std::string to_string(LieType t) {
    switch (t) {
        case LieType::G2: return "G2";
        case LieType::F4: return "F4";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
        case LieType::E8: return "E8";
    }
    return "?";
}

LieType parse_lie_type(const std::string& s) {
    for (auto t : all_lie_types())
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown Lie type '" + s + "' (expected G2, F4, E6, E7, E8 or all)");
}

const std::vector<LieType>& all_lie_types() {
    static const std::vector<LieType> v{LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8};
    return v;
}

LieType lie_type_of(Family f) {
    switch (f) {
        case Family::G2_F: return LieType::G2;
        case Family::F4_F: return LieType::F4;
        case Family::E6_F:
        case Family::E6_Fp:
        case Family::E6_Feds:
        case Family::E6_Fpeds: return LieType::E6;
        case Family::E7_F:
        case Family::E7_Fp:
        case Family::E7_Feds:
        case Family::E7_Fpeds:
        case Family::E7_Fpp_rs:
        case Family::E7_Fp_r:
        case Family::E7_Fppp_rs:
        case Family::E7_Fpp_r: return LieType::E7;
        default: return LieType::E8;
    }
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::G2_F: return "F_r";
        case Family::F4_F:
        case Family::E6_F:
        case Family::E7_F:
        case Family::E8_F: return "F_{r,s}";
        case Family::E6_Fp:
        case Family::E7_Fp:
        case Family::E8_Fp: return "F'_{r,s}";
        case Family::E6_Feds:
        case Family::E7_Feds:
        case Family::E8_Feds: return "F_{eps,delta,r,s}";
        case Family::E6_Fpeds:
        case Family::E7_Fpeds:
        case Family::E8_Fpeds: return "F'_{eps,delta,r,s}";
        case Family::E7_Fpp_rs:
        case Family::E8_Fpp_rs: return "F''_{r,s}";
        case Family::E7_Fp_r:
        case Family::E8_Fp_r: return "F'_r";
        case Family::E7_Fppp_rs: return "F'''_{r,s}";
        case Family::E7_Fpp_r: return "F''_r";
    }
    return "?";
}

std::vector<std::string> family_param_names(Family f) {
    switch (f) {
        case Family::G2_F:
        case Family::E7_Fp_r:
        case Family::E7_Fpp_r:
        case Family::E8_Fp_r: return {"r"};
        case Family::E6_Feds:
        case Family::E6_Fpeds:
        case Family::E7_Feds:
        case Family::E7_Fpeds:
        case Family::E8_Feds:
        case Family::E8_Fpeds: return {"eps", "delta", "r", "s"};
        default: return {"r", "s"};
    }
}

std::vector<Family> families_of(LieType t) {
    switch (t) {
        case LieType::G2: return {Family::G2_F};
        case LieType::F4: return {Family::F4_F};
        case LieType::E6: return {Family::E6_F, Family::E6_Fp, Family::E6_Feds, Family::E6_Fpeds};
        case LieType::E7:
            return {Family::E7_F,      Family::E7_Fp,   Family::E7_Feds,    Family::E7_Fpeds,
                    Family::E7_Fpp_rs, Family::E7_Fp_r, Family::E7_Fppp_rs, Family::E7_Fpp_r};
        case LieType::E8:
            return {Family::E8_F,    Family::E8_Fp,     Family::E8_Feds,
                    Family::E8_Fpeds, Family::E8_Fpp_rs, Family::E8_Fp_r};
    }
    return {};
}

// ---------------------------------------------------------------- GroupExpr

GroupExpr GroupExpr::trivial() { return GroupExpr{}; }

namespace {
GroupExpr leaf(GroupExpr::Kind k, std::vector<int> args) {
    GroupExpr g;
    g.kind = k;
    g.args = std::move(args);
    return g;
}
}  // namespace

GroupExpr GroupExpr::vec(int a) { return leaf(Kind::Vec, {a}); }
GroupExpr GroupExpr::hom(int a, int b) { return leaf(Kind::Hom, {a, b}); }
GroupExpr GroupExpr::gl(int n) { return leaf(Kind::GL, {n}); }
GroupExpr GroupExpr::p(int r, int s) { return leaf(Kind::P, {r, s}); }
GroupExpr GroupExpr::sp(int s) { return leaf(Kind::Sp, {s}); }
GroupExpr GroupExpr::sp_metric(int r, int s, int eps, int delta) {
    return leaf(Kind::SpMetric, {r, s, eps, delta});
}
GroupExpr GroupExpr::sp_metric(int s, int eps, int delta) { return leaf(Kind::SpMetric, {s, eps, delta}); }
GroupExpr GroupExpr::sp_plain(int s, int t) { return leaf(Kind::SpPlain, {s, t}); }
GroupExpr GroupExpr::s2() { return leaf(Kind::S2, {}); }

GroupExpr GroupExpr::direct(std::vector<GroupExpr> parts) {
    GroupExpr g;
    g.kind = Kind::Direct;
    g.kids = std::move(parts);
    return g;
}

GroupExpr GroupExpr::semi(GroupExpr normal, GroupExpr top) {
    GroupExpr g;
    g.kind = Kind::Semi;
    g.kids = {std::move(normal), std::move(top)};
    return g;
}

namespace {

BigInt leaf_order(const GroupExpr& g) {
    using K = GroupExpr::Kind;
    const auto& a = g.args;
    switch (g.kind) {
        case K::Trivial: return 1;
        case K::Vec: return pow2(a[0]);
        case K::Hom: return pow2(static_cast<long long>(a[0]) * a[1]);
        case K::GL: return gl_order(a[0]);
        case K::P: return gl_order(a[0]) * gl_order(a[1]) * pow2(static_cast<long long>(a[0]) * a[1]);
        case K::Sp: return sp_order(a[0]);
        case K::SpMetric:
            if (a.size() == 3) return sp_metric_order(a[1], a[2], a[0]);
            return order(AutGroupSpec::metric(a[2], a[3], a[0], a[1]));
        case K::SpPlain: return order(AutGroupSpec::plain(a[0], a[1]));
        case K::S2: return 2;
        default: throw std::logic_error("leaf_order on composite group");
    }
}

}  // namespace

BigInt order(const GroupExpr& g) {
    if (g.kind == GroupExpr::Kind::Direct || g.kind == GroupExpr::Kind::Semi) {
        BigInt out = 1;
        for (const auto& k : g.kids) out *= order(k);
        return out;
    }
    return leaf_order(g);
}

BigInt leaf_product(const GroupExpr& g) {
    std::vector<const GroupExpr*> stack{&g};
    BigInt out = 1;
    while (!stack.empty()) {
        const GroupExpr* cur = stack.back();
        stack.pop_back();
        if (cur->kind == GroupExpr::Kind::Direct || cur->kind == GroupExpr::Kind::Semi)
            for (const auto& k : cur->kids) stack.push_back(&k);
        else
            out *= leaf_order(*cur);
    }
    return out;
}

std::string str(const GroupExpr& g) {
    using K = GroupExpr::Kind;
    const auto& a = g.args;
    std::ostringstream os;
    auto sub = [](const GroupExpr& k) {
        const bool composite = k.kind == K::Direct || k.kind == K::Semi;
        return composite ? "(" + str(k) + ")" : str(k);
    };
    switch (g.kind) {
        case K::Trivial: os << "1"; break;
        case K::Vec: os << "F2^" << a[0]; break;
        case K::Hom: os << "Hom(F2^" << a[0] << ",F2^" << a[1] << ")"; break;
        case K::GL: os << "GL(" << a[0] << ")"; break;
        case K::P: os << "P(" << a[0] << ',' << a[1] << ")"; break;
        case K::Sp: os << "Sp(" << a[0] << ")"; break;
        case K::SpMetric:
            if (a.size() == 3)
                os << "Sp(" << a[0] << ';' << a[1] << ',' << a[2] << ")";
            else
                os << "Sp(" << a[0] << ',' << a[1] << ';' << a[2] << ',' << a[3] << ")";
            break;
        case K::SpPlain: os << "Sp(" << a[0] << ';' << a[1] << ")"; break;
        case K::S2: os << "S2"; break;
        case K::Direct:
            for (std::size_t i = 0; i < g.kids.size(); ++i) os << (i ? " x " : "") << sub(g.kids[i]);
            break;
        case K::Semi: os << sub(g.kids[0]) << " : " << sub(g.kids[1]); break;
    }
    return os.str();
}

// ---------------------------------------------------------------- entries

int FamilyEntry::param(const std::string& name) const {
    const auto names = family_param_names(family);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return params.at(i);
    throw std::invalid_argument("family " + family_tag(family) + " has no parameter " + name);
}

std::string FamilyEntry::name() const {
    std::string tag = family_tag(family);
    const auto brace = tag.find('{');
    std::string head = brace == std::string::npos ? tag.substr(0, tag.find('_') + 1) : tag.substr(0, brace);
    std::ostringstream os;
    os << head;
    if (params.size() == 1 && brace == std::string::npos) {
        os << params[0];
    } else {
        os << '{';
        for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
        os << '}';
    }
    return os.str();
}

std::string FamilyEntry::params_str() const {
    const auto names = family_param_names(family);
    std::ostringstream os;
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ";" : "") << names[i] << '=' << params[i];
    return os.str();
}

namespace {

void push(std::vector<FamilyEntry>& out, Family f, std::vector<int> params, int rank) {
    FamilyEntry e;
    e.type = lie_type_of(f);
    e.family = f;
    e.params = std::move(params);
    e.rank = rank;
    out.push_back(std::move(e));
}

void push_rs(std::vector<FamilyEntry>& out, Family f, int rmax, int smax, int offset) {
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= smax; ++s) push(out, f, {r, s}, r + s + offset);
}

// eps + delta <= 1, r + s <= 2; rank = r + 2s + eps + 2 delta + offset
void push_eds(std::vector<FamilyEntry>& out, Family f, int offset, bool need_s) {
    for (int eps = 0; eps <= 1; ++eps)
        for (int delta = 0; delta + eps <= 1; ++delta)
            for (int r = 0; r <= 2; ++r)
                for (int s = need_s ? 1 : 0; r + s <= 2; ++s)
                    push(out, f, {eps, delta, r, s}, r + 2 * s + eps + 2 * delta + offset);
}

}  // namespace

std::vector<FamilyEntry> enumerate(LieType t) {
    std::vector<FamilyEntry> out;
    for (Family f : families_of(t)) {
        switch (f) {
            case Family::G2_F:
                for (int r = 0; r <= 3; ++r) push(out, f, {r}, r);
                break;
            case Family::F4_F: push_rs(out, f, 2, 3, 0); break;
            case Family::E6_F: push_rs(out, f, 2, 3, 1); break;
            case Family::E6_Fp: push_rs(out, f, 2, 3, 0); break;
            case Family::E6_Feds: push_eds(out, f, 1, false); break;
            case Family::E6_Fpeds: push_eds(out, f, 0, true); break;
            case Family::E7_F: push_rs(out, f, 2, 3, 2); break;
            case Family::E7_Fp: push_rs(out, f, 2, 3, 1); break;
            case Family::E7_Feds: push_eds(out, f, 2, false); break;
            case Family::E7_Fpeds: push_eds(out, f, 1, true); break;
            case Family::E7_Fpp_rs:
                for (int r = 0; r <= 3; ++r)
                    for (int s = 0; r + s <= 3; ++s) push(out, f, {r, s}, 1 + r + 2 * s);
                break;
            case Family::E7_Fp_r:
                for (int r = 0; r <= 3; ++r) push(out, f, {r}, r + 2);
                break;
            case Family::E7_Fppp_rs:
                for (int r = 0; r <= 3; ++r)
                    for (int s = 0; r + s <= 3; ++s) push(out, f, {r, s}, r + 2 * s);
                break;
            case Family::E7_Fpp_r:
                for (int r = 0; r <= 2; ++r) push(out, f, {r}, r + 3);
                break;
            case Family::E8_F: push_rs(out, f, 2, 3, 3); break;
            case Family::E8_Fp: push_rs(out, f, 2, 2, 2); break;
            case Family::E8_Feds: push_eds(out, f, 3, false); break;
            case Family::E8_Fpeds: push_eds(out, f, 2, true); break;
            case Family::E8_Fpp_rs: push_rs(out, f, 3, 2, 1); break;
            case Family::E8_Fp_r:
                for (int r = 0; r <= 5; ++r) push(out, f, {r}, r);
                break;
        }
    }
    return out;
}

namespace {

using G = GroupExpr;

GroupExpr automizer_expr(const FamilyEntry& e) {
    const auto& p = e.params;
    const bool eds = p.size() == 4;
    const int r = eds ? p[2] : p[0];
    const int s = eds ? p[3] : (p.size() > 1 ? p[1] : 0);
    const int eps = eds ? p[0] : 0;
    const int delta = eds ? p[1] : 0;
    switch (e.family) {
        case Family::G2_F: return G::gl(r);
        case Family::F4_F: return G::p(r, s);
        case Family::E6_F: return G::semi(G::vec(r), G::p(r, s));
        case Family::E6_Fp: return G::p(r, s);
        case Family::E6_Feds:
            return G::semi(G::vec(r + 2 * s + eps + 2 * delta),
                           G::semi(G::hom(eps + 2 * delta + 2 * s, r),
                                   G::direct({G::gl(r), G::sp_metric(s, eps, delta)})));
        case Family::E6_Fpeds:
            return G::semi(G::hom(eps + 2 * delta + 2 * s, r),
                           G::direct({G::gl(r), G::sp_metric(s, eps, delta)}));
        case Family::E7_F: return G::semi(G::hom(2, r), G::direct({G::gl(2), G::p(r, s)}));
        case Family::E7_Fp: return G::semi(G::vec(r), G::p(r, s));
        case Family::E7_Feds:
            return G::semi(G::semi(G::vec(r + 2 * s + eps + 2 * delta + 1),
                                   G::hom(eps + 2 * delta + 2 * s + 1, r)),
                           G::direct({G::gl(r), G::sp_plain(delta + s, eps)}));
        case Family::E7_Fpeds:
            return G::semi(G::hom(eps + 2 * delta + 2 * s + 1, r),
                           G::direct({G::gl(r), G::sp_plain(delta + s, eps)}));
        case Family::E7_Fpp_rs:
            return G::semi(G::semi(G::vec(r + 2 * s), G::hom(2 * s, r)), G::direct({G::gl(r), G::sp(s)}));
        case Family::E7_Fp_r: return G::semi(G::hom(2, r), G::direct({G::gl(r), G::gl(2)}));
        case Family::E7_Fppp_rs: return G::semi(G::hom(2 * s, r), G::direct({G::gl(r), G::sp(s)}));
        case Family::E7_Fpp_r: return G::p(r, 3);
        case Family::E8_F:
            if (s <= 2) return G::semi(G::hom(3 + s, r), G::direct({G::gl(r), G::direct({G::gl(s), G::gl(3)})}));
            return G::semi(G::hom(6, r),
                           G::direct({G::gl(r), G::semi(G::direct({G::gl(3), G::gl(3)}), G::s2())}));
        case Family::E8_Fp: return G::sp_metric(r, s, 2 * s - s * s, (s - 1) * (s - 2) / 2);
        case Family::E8_Feds:
            return G::semi(G::vec(r + 2 * s + eps + 2 * delta + 2),
                           G::sp_metric(r, s + eps + 2 * delta, eps, (1 - eps) * (1 - delta)));
        case Family::E8_Fpeds: return G::sp_metric(r, s + eps + 2 * delta, eps, (1 - eps) * (1 - delta));
        case Family::E8_Fpp_rs:
            return G::semi(G::hom(s, r + 1), G::direct({G::semi(G::vec(r), G::gl(r)), G::gl(s)}));
        case Family::E8_Fp_r: return G::gl(r);
    }
    throw std::logic_error("automizer_expr: unknown family");
}

}  // namespace

FamilyEntry invariants_of(FamilyEntry e) {
    const auto& p = e.params;
    const bool eds = p.size() == 4;
    const int r = eds ? p[2] : p[0];
    const int s = eds ? p[3] : (p.size() > 1 ? p[1] : 0);
    const int eps = eds ? p[0] : 0;
    const int delta = eds ? p[1] : 0;
    const long long sms_defe = (1 - eps) * (delta ? -1 : 1) * p2(r + s + delta);

    e.rank_A = e.family == Family::G2_F ? 0 : r;
    e.defe.reset();
    e.defe_printed.reset();
    e.defe_source = DefeSource::Published;
    switch (e.family) {
        case Family::G2_F:
            e.defe = 2 - p2(r);
            e.defe_source = DefeSource::Convention;
            break;
        case Family::F4_F:
            e.defe = p2(r) * (2 - p2(s));
            e.defe_source = DefeSource::Convention;
            break;
        case Family::E6_F:
        case Family::E6_Fp:
        case Family::E7_Fp: e.defe = p2(r) * (2 - p2(s)); break;
        case Family::E6_Feds:
        case Family::E6_Fpeds:
        case Family::E7_Fpeds: e.defe = sms_defe; break;
        case Family::E7_F: e.defe = 3 * p2(r) * (2 - p2(s)); break;
        case Family::E7_Feds: e.defe = sms_defe - p2(1 + r + eps + 2 * s + 2 * delta); break;
        case Family::E8_F: e.defe = 3 * p2(r + 1) * (p2(s) - 2); break;
        case Family::E8_Fp: e.defe = p2(r + 1) * (p2(s) - 2); break;
        case Family::E8_Feds: {
            const long long inner = -sms_defe * 2;  // (1-eps)(-1)^{delta+1} 2^{r+s+delta+1}
            // every element outside the index-2 subgroup F' is sigma_2, so the
            // second term is 2^{rank F'}
            e.defe = inner + p2(eps + r + 2 * delta + 2 * s + 2);
            e.defe_printed = inner + p2(eps + r + 2 * delta + 2 * s);
            e.defe_source = DefeSource::Corrected;
            break;
        }
        case Family::E8_Fpeds: e.defe = -sms_defe * 2; break;
        default: e.defe_source = DefeSource::Absent; break;
    }

    e.res.reset();
    e.res2.reset();
    switch (e.family) {
        case Family::E8_F: e.res = 0, e.res2 = 2; break;
        case Family::E8_Fp: e.res = 0, e.res2 = 1; break;
        case Family::E8_Feds: e.res = 1, e.res2 = 2; break;
        case Family::E8_Fpeds: e.res = 0, e.res2 = 1; break;
        default: break;
    }

    e.automizer = automizer_expr(e);
    e.automizer_order = order(e.automizer);
    e.automizer_desc = str(e.automizer);
    return e;
}

BigInt automizer_order(const FamilyEntry& e) { return order(automizer_expr(e)); }

std::vector<FamilyEntry> catalog(LieType t) {
    auto out = enumerate(t);
    for (auto& e : out) e = invariants_of(std::move(e));
    return out;
}

std::vector<FamilyEntry> catalog_all() {
    std::vector<FamilyEntry> out;
    for (auto t : all_lie_types()) {
        auto part = catalog(t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---------------------------------------------------------------- label models

std::string to_string(Label l) {
    switch (l) {
        case Label::Identity: return "1";
        case Label::S1: return "sigma1";
        case Label::S2: return "sigma2";
        case Label::S3: return "sigma3";
        case Label::S4: return "sigma4";
    }
    return "?";
}

namespace {

LabelModel block_A() { return {1, {Label::Identity, Label::S2}}; }

LabelModel block_B(int s) {
    LabelModel m{s, std::vector<Label>(std::size_t(1) << s, Label::S1)};
    m.labels[0] = Label::Identity;
    return m;
}

LabelModel block_C() { return {2, {Label::Identity, Label::S1, Label::S2, Label::S2}}; }

LabelModel block_D() {
    LabelModel m{3, std::vector<Label>(8, Label::S2)};
    m.labels[0] = Label::Identity;
    m.labels[1] = Label::S1;
    return m;
}

// orthogonal product: mu multiplies, sigma_1 <-> -1
LabelModel product(const LabelModel& a, const LabelModel& b) {
    LabelModel m{a.rank + b.rank, std::vector<Label>(std::size_t(1) << (a.rank + b.rank))};
    for (std::size_t ia = 0; ia < a.labels.size(); ++ia)
        for (std::size_t ib = 0; ib < b.labels.size(); ++ib) {
            const std::size_t idx = ia | (ib << a.rank);
            if (idx == 0) {
                m.labels[idx] = Label::Identity;
                continue;
            }
            const bool neg = (a.labels[ia] == Label::S1) != (b.labels[ib] == Label::S1);
            m.labels[idx] = neg ? Label::S1 : Label::S2;
        }
    return m;
}

LabelModel power(const LabelModel& blk, int times) {
    LabelModel m{0, {Label::Identity}};
    for (int i = 0; i < times; ++i) m = product(m, blk);
    return m;
}

LabelModel products(std::initializer_list<LabelModel> blocks) {
    LabelModel m{0, {Label::Identity}};
    for (const auto& b : blocks) m = product(m, b);
    return m;
}

// new top generator z; label of z*f given by rule(label of f)
LabelModel extend(const LabelModel& inner, const std::function<Label(Label)>& rule) {
    LabelModel m{inner.rank + 1, inner.labels};
    for (std::size_t f = 0; f < inner.labels.size(); ++f) m.labels.push_back(rule(inner.labels[f]));
    return m;
}

// sigma_4-centralizer model: quaternion 4x4 monomials, inner classes by mu
LabelModel sp4_model(int eps, int delta, int r, int s) {
    const FieldMode q = FieldMode::Quaternion;
    const ProjectiveElement x1(MonomialMatrix::scalar(q, 4, Unit::i()));
    const ProjectiveElement x2(MonomialMatrix::scalar(q, 4, Unit::j()));
    const ProjectiveElement x3(mat_I(q, 2, 2));
    const ProjectiveElement x4(mat_Jprime(q, 2));
    const ProjectiveElement x5(MonomialMatrix::diagonal(q, {Unit::one(), Unit::minus_one(), Unit::one(), Unit::minus_one()}));
    const ProjectiveElement x6(MonomialMatrix(q, {1, 0, 3, 2}, std::vector<Unit>(4, Unit::one())));
    const std::vector<std::pair<ProjectiveElement, ProjectiveElement>> pairs{{x3, x4}, {x5, x6}};
    const std::vector<ProjectiveElement> diag{x3, x5};

    std::vector<ProjectiveElement> gens;
    for (int i = 0; i < r; ++i) gens.push_back(diag[s + i]);
    if (eps || delta) gens.push_back(x1);
    if (delta) gens.push_back(x2);
    for (int i = 0; i < s; ++i) {
        gens.push_back(pairs[i].first);
        gens.push_back(pairs[i].second);
    }
    LabelModel m{static_cast<int>(gens.size()), {Label::Identity}};
    if (gens.empty()) return m;
    const SymplecticMetricSpace space = extract_sms(generate(gens));
    if (invariants(space) != InvariantTuple{eps, delta, r, s})
        throw std::logic_error("quaternion model invariants differ from the parameters");
    m.labels.assign(space.size(), Label::S2);
    m.labels[0] = Label::Identity;
    for (std::uint64_t v = 1; v < space.size(); ++v)
        if (space.mu(v)) m.labels[v] = Label::S1;
    return m;
}

}  // namespace

ModelResult build_label_model(const FamilyEntry& e) {
    const auto& p = e.params;
    const bool eds = p.size() == 4;
    const int r = eds ? p[2] : p[0];
    const int s = eds ? p[3] : (p.size() > 1 ? p[1] : 0);
    const int eps = eds ? p[0] : 0;
    const int delta = eds ? p[1] : 0;
    ModelResult res;
    switch (e.family) {
        case Family::G2_F:
            res.model = block_B(r);
            res.note = "single involution class";
            break;
        case Family::F4_F:
        case Family::E6_Fp:
            res.model = product(power(block_A(), r), block_B(s));
            res.note = "A^r x B_s";
            break;
        case Family::E6_F:
            res.model = extend(product(power(block_A(), r), block_B(s)),
                               [](Label l) { return l == Label::S1 ? Label::S4 : Label::S3; });
            res.note = "sigma_3 x (A^r x B_s)";
            break;
        case Family::E6_Fpeds:
            res.model = sp4_model(eps, delta, r, s);
            res.note = "Sp(4) quaternion model";
            break;
        case Family::E6_Feds:
            res.model = extend(sp4_model(eps, delta, r, s), [](Label) { return Label::S4; });
            res.note = "sigma_4 x Sp(4) quaternion model";
            break;
        case Family::E8_F:
            res.model = products({power(block_A(), r), block_B(s), block_B(3)});
            res.note = "A^r x B_s x B_3";
            break;
        case Family::E8_Fp:
            res.model = products({power(block_A(), r), block_B(s), block_B(2)});
            res.note = "A^r x B_s x B_2";
            break;
        case Family::E8_Fpeds:
            res.model = products({power(block_A(), r), power(block_C(), s), power(block_B(1), eps),
                                  power(block_B(2), 1 + delta)});
            res.note = "A^r x C^s x B^eps x B_2^(1+delta)";
            break;
        case Family::E8_Feds:
            if (s >= 1) {
                res.note = "no model: no orthogonal decomposition for s >= 1";
                break;
            }
            res.model = extend(products({power(block_A(), r), power(block_B(1), eps), power(block_B(2), 1 + delta)}),
                               [](Label) { return Label::S2; });
            res.note = "(A^r x B^eps x B_2^(1+delta)) with a sigma_2 coset";
            break;
        case Family::E8_Fpp_rs: {
            const LabelModel tail = s == 0 ? block_B(1) : s == 1 ? block_C() : block_D();
            res.model = product(power(block_A(), r), tail);
            res.note = s == 0 ? "A^r x B" : s == 1 ? "A^r x C" : "A^r x D";
            break;
        }
        case Family::E8_Fp_r:
            res.model = power(block_A(), r);
            res.note = "A^r";
            break;
        default: res.note = "no model: label data is formula-only for this type"; break;
    }
    return res;
}

// ---------------------------------------------------------------- counting

namespace {

bool inner_label(Label l) { return l == Label::Identity || l == Label::S1 || l == Label::S2; }

std::vector<std::uint64_t> translation_set(const LabelModel& m) {
    std::vector<std::uint64_t> a{0};
    const std::uint64_t n = m.labels.size();
    for (std::uint64_t x = 1; x < n; ++x) {
        if (m.labels[x] != Label::S2) continue;
        bool ok = true;
        for (std::uint64_t y = 1; y < n && ok; ++y)
            if (y != x && m.labels[x ^ y] != m.labels[y]) ok = false;
        if (ok) a.push_back(x);
    }
    return a;
}

bool is_subgroup(const std::vector<std::uint64_t>& set, std::uint64_t n) {
    std::vector<char> in(n, 0);
    for (auto v : set) in[v] = 1;
    if (!in[0]) return false;
    for (auto a : set)
        for (auto b : set)
            if (!in[a ^ b]) return false;
    return true;
}

int log2_exact(std::size_t v) {
    int k = 0;
    while ((std::size_t(1) << k) < v) ++k;
    return k;
}

int span_dim(int rank, const std::vector<std::uint64_t>& vs) {
    std::vector<F2Vector> vecs;
    for (auto v : vs) vecs.emplace_back(rank, v);
    return Subspace::span(rank, vecs).dim();
}

}  // namespace

std::string GraphInvariant::summary() const {
    if (vertices == 0) return "empty";
    if (vertices == 1) return "single vertex";
    if (bipartite) {
        std::ostringstream os;
        os << "K(" << bipartite->first << ',' << bipartite->second << ')';
        return os.str();
    }
    std::ostringstream os;
    os << "V=" << vertices << ";E=" << edges.size();
    return os.str();
}

GraphInvariant graph_of_model(const LabelModel& m) {
    GraphInvariant g;
    const auto a = translation_set(m);
    const std::uint64_t n = m.labels.size();
    std::map<std::uint64_t, int> vertex_of;  // coset min -> index
    std::vector<std::uint64_t> reps;
    for (std::uint64_t x = 1; x < n; ++x) {
        if (m.labels[x] != Label::S1) continue;
        std::uint64_t rep = x;
        for (auto t : a) rep = std::min(rep, x ^ t);
        if (!vertex_of.count(rep)) {
            vertex_of[rep] = static_cast<int>(reps.size());
            reps.push_back(rep);
        }
    }
    g.vertices = static_cast<int>(reps.size());
    std::vector<std::vector<char>> adj(g.vertices, std::vector<char>(g.vertices, 0));
    for (int i = 0; i < g.vertices; ++i)
        for (int j = i + 1; j < g.vertices; ++j) {
            const bool edge = m.labels[reps[i] ^ reps[j]] == Label::S2;
            for (auto ta : a)
                for (auto tb : a)
                    if ((m.labels[reps[i] ^ ta ^ reps[j] ^ tb] == Label::S2) != edge) g.well_defined = false;
            if (edge) {
                g.edges.emplace_back(i, j);
                adj[i][j] = adj[j][i] = 1;
            }
        }
    if (g.vertices >= 2) {
        if (g.edges.empty()) {
            g.bipartite = std::make_pair(0, g.vertices);
        } else {
            std::vector<int> color(g.vertices, -1);
            color[0] = 0;
            std::vector<int> queue{0};
            bool ok = true;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const int u = queue[h];
                for (int w = 0; w < g.vertices; ++w) {
                    if (!adj[u][w]) continue;
                    if (color[w] < 0) {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if (color[w] == color[u]) {
                        ok = false;
                    }
                }
            }
            int c0 = 0, c1 = 0;
            for (int u = 0; u < g.vertices; ++u) {
                if (color[u] < 0) ok = false;
                (color[u] == 0 ? c0 : c1)++;
            }
            if (ok && static_cast<std::size_t>(c0) * c1 == g.edges.size())
                g.bipartite = std::make_pair(std::min(c0, c1), std::max(c0, c1));
        }
    }
    return g;
}

std::optional<GraphInvariant> graph_of(const FamilyEntry& e) {
    if (e.type != LieType::E8) return std::nullopt;
    auto mr = build_label_model(e);
    if (!mr.model) return std::nullopt;
    return graph_of_model(*mr.model);
}

BigInt count_label_automorphisms(const LabelModel& m) {
    const int k = m.rank;
    if (k > 8) throw std::invalid_argument("label automorphism search limited to rank 8");
    if (k == 0) return 1;
    const std::uint64_t n = m.labels.size();
    std::vector<std::uint64_t> img(n, 0);
    std::vector<std::vector<char>> used(k + 1, std::vector<char>(n, 0));
    used[0][0] = 1;

    auto place = [&](int level, std::uint64_t v) {
        const std::uint64_t base = std::uint64_t(1) << level;
        for (std::uint64_t c = 0; c < base; ++c) {
            img[base | c] = img[c] ^ v;
            if (m.labels[img[base | c]] != m.labels[base | c]) return false;
        }
        auto& nxt = used[level + 1];
        nxt = used[level];
        for (std::uint64_t c = 0; c < base; ++c) nxt[img[base | c]] = 1;
        return true;
    };
    std::function<bool(int)> exists = [&](int level) {
        if (level == k) return true;
        for (std::uint64_t v = 1; v < n; ++v) {
            if (used[level][v] || m.labels[v] != m.labels[std::uint64_t(1) << level]) continue;
            if (place(level, v) && exists(level + 1)) return true;
        }
        return false;
    };
    BigInt total = 1;
    for (int level = 0; level < k; ++level) {
        for (int j = 0; j < level; ++j) place(j, std::uint64_t(1) << j);
        std::uint64_t orbit = 0;
        for (std::uint64_t v = 1; v < n; ++v) {
            if (used[level][v] || m.labels[v] != m.labels[std::uint64_t(1) << level]) continue;
            if (place(level, v) && exists(level + 1)) ++orbit;
            for (int j = 0; j < level; ++j) place(j, std::uint64_t(1) << j);
        }
        total *= orbit;
    }
    return total;
}

CrossCheck cross_check(const FamilyEntry& e, bool count_automorphisms) {
    CrossCheck cc;
    auto mr = build_label_model(e);
    cc.note = mr.note;
    if (!mr.model) return cc;
    cc.has_model = true;
    const LabelModel& m = *mr.model;
    const std::uint64_t n = m.labels.size();
    const std::string who = to_string(e.type) + " " + e.name();

    if (m.rank != e.rank) cc.problems.push_back(who + ": model rank " + std::to_string(m.rank) + " != " + std::to_string(e.rank));

    for (auto l : m.labels) {
        if (!inner_label(l)) continue;
        cc.defe_counted += (l == Label::S1) ? -1 : 1;
    }
    if (e.defe) {
        cc.defe_match = cc.defe_counted == *e.defe;
        if (!cc.defe_match)
            cc.problems.push_back(who + ": counted defe " + std::to_string(cc.defe_counted) + " != formula " +
                                  std::to_string(*e.defe));
    }

    const auto a = translation_set(m);
    cc.translation_is_subgroup = is_subgroup(a, n);
    cc.rank_A_counted = log2_exact(a.size());
    cc.rank_A_match = cc.translation_is_subgroup && cc.rank_A_counted == e.rank_A;
    if (!cc.rank_A_match)
        cc.problems.push_back(who + ": counted rank A_F " + std::to_string(cc.rank_A_counted) + " != " +
                              std::to_string(e.rank_A));

    std::vector<std::uint8_t> mu(n, 0);
    for (std::uint64_t v = 0; v < n; ++v) mu[v] = m.labels[v] == Label::S1;
    cc.bilinear = validate(SymplecticMetricSpace(m.rank, mu)).valid;

    if (e.type == LieType::E8) {
        const bool excluded = e.family == Family::E8_F || e.family == Family::E8_Feds ||
                              (e.family == Family::E8_Fpp_rs && e.param("s") == 2);
        cc.bilinear_expected = !excluded;
        if (cc.bilinear != *cc.bilinear_expected)
            cc.problems.push_back(who + (cc.bilinear ? ": m bilinear, expected failure" : ": m not bilinear, expected bilinear"));

        std::vector<std::uint64_t> s1;
        for (std::uint64_t v = 1; v < n; ++v)
            if (m.labels[v] == Label::S1) s1.push_back(v);
        cc.res_counted = m.rank - span_dim(m.rank, s1);
        int best = 0;
        for (auto x : s1) {
            std::vector<std::uint64_t> hx;
            for (std::uint64_t y = 0; y < n; ++y)
                if (m.labels[x ^ y] != m.labels[y]) hx.push_back(y);
            if (!is_subgroup(hx, n)) {
                cc.h_x_subgroups = false;
                continue;
            }
            best = std::max(best, m.rank - log2_exact(hx.size()));
            if (hx.size() == n) cc.lift_element = true;
        }
        cc.res2_counted = s1.empty() ? 0 : best;
        if (!cc.h_x_subgroups) cc.problems.push_back(who + ": some H_x is not a subgroup");
        if (e.res && (*e.res != *cc.res_counted || *e.res2 != *cc.res2_counted)) {
            cc.res_match = false;
            cc.problems.push_back(who + ": counted (Res,Res') differs from the published pair");
        }
        cc.graph = graph_of_model(m);
        if (!cc.graph->well_defined) cc.problems.push_back(who + ": graph edges not constant on cosets");
    }

    if (count_automorphisms) {
        cc.aut_count = count_label_automorphisms(m);
        cc.aut_match = *cc.aut_count == e.automizer_order;
        if (!cc.aut_match)
            cc.problems.push_back(who + ": label-preserving automorphisms " + cc.aut_count->str() +
                                  " != Automizer order " + e.automizer_order.str());
    }
    return cc;
}

std::vector<FamilyEntry> e8_lift_entries() {
    std::vector<FamilyEntry> out;
    for (const auto& e : catalog(LieType::E8)) {
        auto cc = cross_check(e, false);
        if (cc.lift_element) out.push_back(e);
    }
    return out;
}

std::vector<FamilyEntry> e7_pure_sigma1_entries() {
    std::vector<FamilyEntry> out;
    for (const auto& e : catalog(LieType::E7))
        if (e.family == Family::E7_Fppp_rs || e.family == Family::E7_Fpp_r) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------- distinctness

bool DistinctnessReport::ok() const {
    if (!within_family.empty()) return false;
    for (const auto& c : cross_family)
        if (!c.resolved) return false;
    return true;
}

namespace {

std::string key_of(const FamilyEntry& e) {
    std::ostringstream os;
    os << '(' << e.rank << ',' << e.rank_A << ',' << (e.defe ? std::to_string(*e.defe) : "-") << ')';
    return os.str();
}

struct E8Data {
    std::optional<int> res, res2;
    std::string graph;
};

E8Data e8_data(const FamilyEntry& e) {
    E8Data d{e.res, e.res2, ""};
    auto cc = cross_check(e, false);
    if (!d.res && cc.res_counted) {
        d.res = cc.res_counted;
        d.res2 = cc.res2_counted;
    }
    if (cc.graph) d.graph = cc.graph->summary();
    return d;
}

}  // namespace

std::optional<std::string> e8_parity_argument(const FamilyEntry& fp, const FamilyEntry& fpeds) {
    if (fp.family != Family::E8_Fp || fpeds.family != Family::E8_Fpeds)
        throw std::invalid_argument("parity argument applies to (F'_{r,s}, F'_{eps,delta,r,s}) in E8");
    const int r1 = fp.param("r"), s1 = fp.param("s");
    const int eps = fpeds.param("eps"), delta = fpeds.param("delta"), r = fpeds.param("r"), s = fpeds.param("s");
    if (r1 != r) return "rank A_F differs (r'=" + std::to_string(r1) + ", r=" + std::to_string(r) + ")";
    // sign of 2^{r+1}(2^{s'}-2) is sign(s'-1); sign of the other is (1-eps)(-1)^{delta+1}
    const int sign1 = sign_of(s1 - 1);
    const int sign2 = (1 - eps) * (delta ? 1 : -1);
    if (sign1 != sign_of(*fp.defe) || sign2 != sign_of(*fpeds.defe))
        throw std::logic_error("parity argument: defect signs disagree with the closed forms");
    if (sign1 != sign2) return "sign of defe differs (s'-1 != (1-eps)(-1)^(delta+1))";
    if (s1 != 2 * s + 2 * delta + eps) return "rank F/A_F differs (s' != 2s+2delta+eps)";
    return std::nullopt;
}

DistinctnessReport distinctness_audit(LieType t) {
    DistinctnessReport rep;
    rep.type = t;
    const auto entries = catalog(t);
    rep.entries = static_cast<int>(entries.size());

    std::map<Family, std::map<std::string, const FamilyEntry*>> seen;
    for (const auto& e : entries) {
        auto& m = seen[e.family];
        const std::string k = key_of(e);
        if (auto it = m.find(k); it != m.end())
            rep.within_family.push_back(Collision{*it->second, e, k, false, "none"});
        else
            m[k] = &e;
    }

    std::vector<E8Data> data;
    if (t == LieType::E8)
        for (const auto& e : entries) data.push_back(e8_data(e));

    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& a = entries[i];
            const auto& b = entries[j];
            if (a.family == b.family) continue;
            const bool same_key = key_of(a) == key_of(b);
            bool pattern = false;
            if (t == LieType::E8) {
                const bool fp_pair = (a.family == Family::E8_Fp && b.family == Family::E8_Fpeds) ||
                                     (a.family == Family::E8_Fpeds && b.family == Family::E8_Fp);
                pattern = fp_pair && a.rank == b.rank && data[i].res == data[j].res && data[i].res2 == data[j].res2;
            }
            if (!same_key && !pattern) continue;
            Collision c{a, b, key_of(a), false, ""};
            if (t != LieType::E8) {
                c.resolved = true;
                c.discriminator = "family characterization";
            } else if (pattern) {
                rep.parity_pattern_seen = true;
                const auto& fp = a.family == Family::E8_Fp ? a : b;
                const auto& fpe = a.family == Family::E8_Fp ? b : a;
                auto why = e8_parity_argument(fp, fpe);
                c.resolved = why.has_value();
                c.discriminator = why ? "parity argument: " + *why : "parity argument failed";
            } else if (data[i].res && data[j].res &&
                       (data[i].res != data[j].res || data[i].res2 != data[j].res2)) {
                c.resolved = true;
                c.discriminator = "(Res,Res')";
            } else if (!data[i].graph.empty() && !data[j].graph.empty() && data[i].graph != data[j].graph) {
                c.resolved = true;
                c.discriminator = "Graph(F): " + data[i].graph + " vs " + data[j].graph;
            } else {
                c.discriminator = "unresolved";
            }
            rep.cross_family.push_back(std::move(c));
        }
    return rep;
}

// ---------------------------------------------------------------- export

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string defe_str(const FamilyEntry& e) {
    if (!e.defe) return "";
    std::string v = std::to_string(*e.defe);
    if (e.defe_source == DefeSource::Corrected) v += "*";
    if (e.defe_source == DefeSource::Convention) v += "~";
    return v;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string graph_summary(const FamilyEntry& e) {
    if (e.type != LieType::E8) return "";
    auto g = graph_of(e);
    return g ? g->summary() : "no model";
}

std::string csv_header() {
    return "lie_type,family,params,rank,rank_A,defe,res,res2,automizer_order,automizer_desc,graph_summary";
}

std::string to_csv_row(const FamilyEntry& e) {
    std::vector<std::string> f{to_string(e.type),
                               family_tag(e.family),
                               e.params_str(),
                               std::to_string(e.rank),
                               std::to_string(e.rank_A),
                               defe_str(e),
                               opt_str(e.res),
                               opt_str(e.res2),
                               e.automizer_order.str(),
                               e.automizer_desc,
                               graph_summary(e)};
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
    return out;
}

std::string to_csv(const std::vector<FamilyEntry>& entries) {
    std::string out = csv_header() + "\n";
    for (const auto& e : entries) out += to_csv_row(e) + "\n";
    return out;
}

std::string to_json(const std::vector<FamilyEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["lie_type"] = to_string(e.type);
        j["family"] = family_tag(e.family);
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        const auto names = family_param_names(e.family);
        for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = e.params[i];
        j["params"] = params;
        j["rank"] = e.rank;
        j["rank_A"] = e.rank_A;
        j["defe"] = e.defe ? nlohmann::ordered_json(*e.defe) : nlohmann::ordered_json(nullptr);
        switch (e.defe_source) {
            case DefeSource::Absent: j["defe_source"] = "absent"; break;
            case DefeSource::Published: j["defe_source"] = "published"; break;
            case DefeSource::Convention: j["defe_source"] = "convention"; break;
            case DefeSource::Corrected:
                j["defe_source"] = "corrected";
                j["defe_printed"] = *e.defe_printed;
                break;
        }
        j["res"] = e.res ? nlohmann::ordered_json(*e.res) : nlohmann::ordered_json(nullptr);
        j["res2"] = e.res2 ? nlohmann::ordered_json(*e.res2) : nlohmann::ordered_json(nullptr);
        j["automizer_order"] = e.automizer_order.str();
        j["automizer_desc"] = e.automizer_desc;
        j["graph_summary"] = graph_summary(e);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace eab
