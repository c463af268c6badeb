// matgrp.cpp

#include "eab/matgrp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eab {

namespace {

// basis product table for 1,i,j,k: {sign bit, basis}
constexpr std::uint8_t kBasisProduct[4][4] = {
    {0, 1, 2, 3},
    {1, 4 | 0, 3, 4 | 2},
    {2, 4 | 3, 4 | 0, 1},
    {3, 2, 4 | 1, 4 | 0},
};

void require_same(const MonomialMatrix& a, const MonomialMatrix& b, const char* op) {
    if (a.mode() != b.mode()) throw std::invalid_argument(std::string(op) + ": field mode mismatch");
    if (a.n() != b.n()) throw std::invalid_argument(std::string(op) + ": size mismatch");
}

MonomialMatrix sigma(const MonomialMatrix& m, bool apply) { return apply ? m.conj() : m; }

// product of lifts without scalar normalization
std::pair<MonomialMatrix, bool> raw_product(const ProjectiveElement& a, const ProjectiveElement& b) {
    require_same(a.matrix(), b.matrix(), "multiply");
    return {a.matrix() * sigma(b.matrix(), a.conj()), a.conj() != b.conj()};
}

std::pair<MonomialMatrix, bool> raw_inverse(const ProjectiveElement& a) {
    const MonomialMatrix inv = a.matrix().inverse();
    return {a.conj() ? inv.conj() : inv, a.conj()};
}

}  // namespace

std::string to_string(FieldMode m) {
    switch (m) {
        case FieldMode::Real: return "real";
        case FieldMode::Complex: return "complex";
        case FieldMode::Quaternion: return "quaternion";
    }
    return "?";
}

FieldMode parse_field_mode(const std::string& s) {
    if (s == "real") return FieldMode::Real;
    if (s == "complex") return FieldMode::Complex;
    if (s == "quaternion") return FieldMode::Quaternion;
    throw std::invalid_argument("unknown field_mode '" + s + "' (expected real, complex or quaternion)");
}

Unit Unit::parse(const std::string& label) {
    std::string body = label;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::uint8_t basis;
    if (body == "1")
        basis = 0;
    else if (body == "i")
        basis = 1;
    else if (body == "j")
        basis = 2;
    else if (body == "k")
        basis = 3;
    else
        throw std::invalid_argument("unknown unit label '" + label + "'");
    return Unit(static_cast<std::uint8_t>(basis | (neg ? 4u : 0u)));
}

bool Unit::allowed_in(FieldMode m) const {
    switch (m) {
        case FieldMode::Real: return basis() == 0;
        case FieldMode::Complex: return basis() <= 1;
        case FieldMode::Quaternion: return true;
    }
    return false;
}

Unit Unit::operator*(Unit o) const {
    const std::uint8_t p = kBasisProduct[basis()][o.basis()];
    return Unit(static_cast<std::uint8_t>(p ^ (code_ & 4u) ^ (o.code_ & 4u)));
}

Unit Unit::conj() const { return basis() == 0 ? *this : -*this; }

std::string Unit::str() const {
    static const char* names[4] = {"1", "i", "j", "k"};
    return std::string(negative() ? "-" : "") + names[basis()];
}

MonomialMatrix::MonomialMatrix(FieldMode mode, std::vector<int> perm, std::vector<Unit> entries)
    : mode_(mode), perm_(std::move(perm)), entries_(std::move(entries)) {
    const int size = n();
    if (size < 1 || size > kMaxMatrixSize)
        throw std::invalid_argument("matrix size " + std::to_string(size) + " outside 1.." +
                                    std::to_string(kMaxMatrixSize));
    if (static_cast<int>(entries_.size()) != size)
        throw std::invalid_argument("entries length does not match permutation length");
    std::vector<char> seen(size, 0);
    for (int c = 0; c < size; ++c) {
        const int r = perm_[c];
        if (r < 0 || r >= size || seen[r])
            throw std::invalid_argument("perm is not a permutation of 0.." + std::to_string(size - 1));
        seen[r] = 1;
        if (!entries_[c].allowed_in(mode))
            throw std::invalid_argument("entry " + entries_[c].str() + " not allowed in " +
                                        to_string(mode) + " mode");
    }
}

MonomialMatrix MonomialMatrix::identity(FieldMode mode, int n) {
    return scalar(mode, n, Unit::one());
}

MonomialMatrix MonomialMatrix::diagonal(FieldMode mode, const std::vector<Unit>& d) {
    std::vector<int> perm(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) perm[c] = static_cast<int>(c);
    return MonomialMatrix(mode, std::move(perm), d);
}

MonomialMatrix MonomialMatrix::scalar(FieldMode mode, int n, Unit u) {
    return diagonal(mode, std::vector<Unit>(n, u));
}

bool MonomialMatrix::is_diagonal() const {
    for (int c = 0; c < n(); ++c)
        if (perm_[c] != c) return false;
    return true;
}

std::optional<Unit> MonomialMatrix::as_scalar() const {
    if (!is_diagonal()) return std::nullopt;
    for (const auto& e : entries_)
        if (e != entries_[0]) return std::nullopt;
    return entries_[0];
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
    require_same(*this, o, "matrix product");
    std::vector<int> perm(n());
    std::vector<Unit> e(n());
    for (int c = 0; c < n(); ++c) {
        const int mid = o.perm_[c];
        perm[c] = perm_[mid];
        e[c] = entries_[mid] * o.entries_[c];
    }
    return MonomialMatrix(mode_, std::move(perm), std::move(e));
}

MonomialMatrix MonomialMatrix::inverse() const {
    std::vector<int> perm(n());
    std::vector<Unit> e(n());
    for (int c = 0; c < n(); ++c) {
        perm[perm_[c]] = c;
        e[perm_[c]] = entries_[c].conj();
    }
    return MonomialMatrix(mode_, std::move(perm), std::move(e));
}

MonomialMatrix MonomialMatrix::conj() const {
    std::vector<Unit> e(entries_);
    for (auto& u : e) u = u.conj();
    return MonomialMatrix(mode_, perm_, std::move(e));
}

MonomialMatrix MonomialMatrix::left_scale(Unit u) const {
    std::vector<Unit> e(entries_);
    for (auto& x : e) x = u * x;
    return MonomialMatrix(mode_, perm_, std::move(e));
}

MonomialMatrix MonomialMatrix::kron(const MonomialMatrix& o) const {
    if (mode_ != o.mode_) throw std::invalid_argument("kron: field mode mismatch");
    const int nb = o.n();
    if (n() * nb > kMaxMatrixSize) throw std::invalid_argument("kron: result exceeds size cap");
    std::vector<int> perm(n() * nb);
    std::vector<Unit> e(n() * nb);
    for (int a = 0; a < n(); ++a)
        for (int b = 0; b < nb; ++b) {
            perm[a * nb + b] = perm_[a] * nb + o.perm_[b];
            e[a * nb + b] = entries_[a] * o.entries_[b];
        }
    return MonomialMatrix(mode_, std::move(perm), std::move(e));
}

std::strong_ordering MonomialMatrix::operator<=>(const MonomialMatrix& o) const {
    if (auto c = mode_ <=> o.mode_; c != 0) return c;
    if (auto c = perm_ <=> o.perm_; c != 0) return c;
    return entries_ <=> o.entries_;
}

std::string MonomialMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (int c = 0; c < n(); ++c) {
        if (c) os << ", ";
        os << c << "->" << perm_[c] << ':' << entries_[c].str();
    }
    os << ']';
    return os.str();
}

std::vector<Unit> scalar_units(FieldMode mode) {
    if (mode == FieldMode::Complex) return {Unit::one(), Unit::i(), Unit::minus_one(), -Unit::i()};
    return {Unit::one(), Unit::minus_one()};
}

ProjectiveElement::ProjectiveElement(MonomialMatrix m, bool conj) : m_(std::move(m)), conj_(conj) {
    if (conj_ && m_.mode() != FieldMode::Complex)
        throw std::invalid_argument("conjugation flag requires complex mode");
    MonomialMatrix best = m_;
    for (Unit u : scalar_units(m_.mode())) {
        MonomialMatrix cand = m_.left_scale(u);
        if (cand.entries()[0] < best.entries()[0]) best = std::move(cand);
    }
    m_ = std::move(best);
}

ProjectiveElement ProjectiveElement::identity(FieldMode mode, int n) {
    return ProjectiveElement(MonomialMatrix::identity(mode, n));
}

bool ProjectiveElement::operator<(const ProjectiveElement& o) const {
    if (conj_ != o.conj_) return conj_ < o.conj_;
    return m_ < o.m_;
}

std::string ProjectiveElement::str() const { return m_.str() + (conj_ ? " conj" : ""); }

ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b) {
    auto [m, c] = raw_product(a, b);
    return ProjectiveElement(std::move(m), c);
}

ProjectiveElement inverse(const ProjectiveElement& a) {
    auto [m, c] = raw_inverse(a);
    return ProjectiveElement(std::move(m), c);
}

bool is_identity(const ProjectiveElement& a) {
    return !a.conj() && a.matrix() == MonomialMatrix::identity(a.mode(), a.n());
}

Unit square_scalar(const ProjectiveElement& x) {
    auto [m, c] = raw_product(x, x);
    auto lambda = m.as_scalar();
    if (c || !lambda) throw std::domain_error("not a projective involution: " + x.str());
    return *lambda;
}

Unit commutator_scalar(const ProjectiveElement& x, const ProjectiveElement& y) {
    require_same(x.matrix(), y.matrix(), "commutator");
    // chain the lifts on plain matrices so the scalar is not normalized away
    MonomialMatrix acc = x.matrix();
    bool flag = x.conj();
    auto step = [&](const std::pair<MonomialMatrix, bool>& e) {
        acc = acc * sigma(e.first, flag);
        flag = flag != e.second;
    };
    step({y.matrix(), y.conj()});
    step(raw_inverse(x));
    step(raw_inverse(y));
    auto lambda = acc.as_scalar();
    if (flag || !lambda) throw std::domain_error("pair does not projectively commute");
    return *lambda;
}

int sign_bit(Unit u) {
    if (u == Unit::one()) return 0;
    if (u == Unit::minus_one()) return 1;
    throw std::domain_error("scalar " + u.str() + " is not +1 or -1");
}

GeneratedSubgroup generate(const std::vector<ProjectiveElement>& generators) {
    const int k = static_cast<int>(generators.size());
    if (k > 20) throw std::invalid_argument("too many generators");
    for (std::size_t i = 1; i < generators.size(); ++i)
        if (generators[i].n() != generators[0].n() || generators[i].mode() != generators[0].mode())
            throw std::invalid_argument("generators differ in size or field mode");
    for (int a = 0; a < k; ++a) {
        try {
            square_scalar(generators[a]);
        } catch (const std::domain_error&) {
            throw std::invalid_argument("generator " + std::to_string(a) +
                                        " is not a projective involution");
        }
        for (int b = a + 1; b < k; ++b) {
            try {
                commutator_scalar(generators[a], generators[b]);
            } catch (const std::domain_error&) {
                throw std::invalid_argument("generators " + std::to_string(a) + " and " +
                                            std::to_string(b) + " do not projectively commute");
            }
        }
    }
    GeneratedSubgroup g;
    g.generators = generators;
    if (k == 0) return g;
    const int n = generators[0].n();
    const FieldMode mode = generators[0].mode();
    g.elements.assign(std::size_t(1) << k, ProjectiveElement::identity(mode, n));
    for (std::uint64_t v = 1; v < g.elements.size(); ++v) {
        const int top = 63 - __builtin_clzll(v);
        g.elements[v] = multiply(g.elements[v ^ (std::uint64_t(1) << top)], generators[top]);
    }
    std::vector<ProjectiveElement> sorted(g.elements);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("generators are not independent modulo scalars");
    return g;
}

SymplecticMetricSpace extract_sms(const GeneratedSubgroup& f) {
    const int k = f.rank();
    if (k == 0) return SymplecticMetricSpace();
    for (const auto& g : f.generators)
        if (g.conj()) throw std::invalid_argument("extract_sms: outer (conjugation) generator present");
    std::vector<std::uint8_t> mu(f.elements.size(), 0);
    for (std::size_t v = 1; v < mu.size(); ++v)
        mu[v] = static_cast<std::uint8_t>(sign_bit(square_scalar(f.elements[v])));
    SymplecticMetricSpace space(k, std::move(mu));
    auto val = validate(space);
    if (!val.valid) throw std::logic_error("extract_sms: mu from square scalars is not quadratic: " + val.diagnostic);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const int m = sign_bit(commutator_scalar(f.generators[a], f.generators[b]));
            if (m != space.m(std::uint64_t(1) << a, std::uint64_t(1) << b))
                throw std::logic_error("extract_sms: commutator pairing disagrees with polarization of mu");
        }
    return space;
}

SymplecticVectorSpace extract_symplectic(const GeneratedSubgroup& f) {
    const int k = f.rank();
    F2Matrix g(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (sign_bit(commutator_scalar(f.generators[a], f.generators[b]))) g = g.with(a, b, true);
    return SymplecticVectorSpace::from_gram(std::move(g));
}

MonomialMatrix mat_I(FieldMode mode, int p, int q) {
    std::vector<Unit> d(p, Unit::minus_one());
    d.resize(p + q, Unit::one());
    return MonomialMatrix::diagonal(mode, d);
}

namespace {

MonomialMatrix swap_blocks(FieldMode mode, int n, Unit lower) {
    std::vector<int> perm(2 * n);
    std::vector<Unit> e(2 * n);
    for (int c = 0; c < n; ++c) {
        perm[c] = n + c;
        e[c] = lower;
        perm[n + c] = c;
        e[n + c] = Unit::one();
    }
    return MonomialMatrix(mode, std::move(perm), std::move(e));
}

}  // namespace

MonomialMatrix mat_J(FieldMode mode, int n) { return swap_blocks(mode, n, Unit::minus_one()); }

MonomialMatrix mat_Jprime(FieldMode mode, int n) { return swap_blocks(mode, n, Unit::one()); }

MonomialMatrix mat_K(FieldMode mode, int n) {
    // diag(J_n, -J_n)
    const MonomialMatrix j = mat_J(mode, n);
    std::vector<int> perm(4 * n);
    std::vector<Unit> e(4 * n);
    for (int c = 0; c < 2 * n; ++c) {
        perm[c] = j.perm()[c];
        e[c] = j.entries()[c];
        perm[2 * n + c] = 2 * n + j.perm()[c];
        e[2 * n + c] = -j.entries()[c];
    }
    return MonomialMatrix(mode, std::move(perm), std::move(e));
}

int canonical_subgroup_size(Target target, const InvariantTuple& t) {
    if (!t.admissible())
        throw std::invalid_argument("canonical_subgroup: inadmissible tuple " + t.label());
    long long n = 1LL << std::min(62, t.r + t.s);
    if (target == Target::Orthogonal) {
        if (t.eps) n *= 2;
        if (t.delta) n *= 4;
    }
    return n > kMaxMatrixSize ? -1 : static_cast<int>(n);
}

GeneratedSubgroup canonical_subgroup(Target target, const InvariantTuple& t) {
    const int n = canonical_subgroup_size(target, t);
    if (n < 0)
        throw std::invalid_argument("canonical_subgroup: " + t.label() + " needs more than " +
                                    std::to_string(kMaxMatrixSize) + " rows");
    const FieldMode mode = target == Target::Orthogonal ? FieldMode::Real : FieldMode::Quaternion;

    // tensor factors in order: r kernel, eps, delta, s pairs
    std::vector<int> dims;
    for (int i = 0; i < t.r; ++i) dims.push_back(2);
    const bool ortho = target == Target::Orthogonal;
    if (t.eps && ortho) dims.push_back(2);
    if (t.delta && ortho) dims.push_back(4);
    for (int i = 0; i < t.s; ++i) dims.push_back(2);

    auto embed = [&](std::size_t slot, const MonomialMatrix& g) {
        MonomialMatrix acc = MonomialMatrix::identity(mode, 1);
        for (std::size_t f = 0; f < dims.size(); ++f)
            acc = acc.kron(f == slot ? g : MonomialMatrix::identity(mode, dims[f]));
        return ProjectiveElement(acc);
    };
    auto scalar = [&](Unit u) { return ProjectiveElement(MonomialMatrix::scalar(mode, n, u)); };

    std::vector<ProjectiveElement> gens;
    std::size_t slot = 0;
    for (int i = 0; i < t.r; ++i) gens.push_back(embed(slot++, mat_I(mode, 1, 1)));
    if (t.eps) gens.push_back(ortho ? embed(slot++, mat_J(mode, 1)) : scalar(Unit::i()));
    if (t.delta) {
        if (ortho) {
            gens.push_back(embed(slot, mat_J(mode, 2)));
            gens.push_back(embed(slot, mat_K(mode, 1)));
            ++slot;
        } else {
            gens.push_back(scalar(Unit::i()));
            gens.push_back(scalar(Unit::j()));
        }
    }
    for (int i = 0; i < t.s; ++i) {
        gens.push_back(embed(slot, mat_I(mode, 1, 1)));
        gens.push_back(embed(slot, mat_Jprime(mode, 1)));
        ++slot;
    }
    if (gens.empty()) {
        GeneratedSubgroup g;
        g.elements.push_back(ProjectiveElement::identity(mode, n));
        return g;
    }
    return generate(gens);
}

std::vector<std::vector<int>> block_partition(const GeneratedSubgroup& f) {
    if (f.elements.empty()) return {};
    const int n = f.elements[0].n();
    for (std::size_t v = 0; v < f.elements.size(); ++v) {
        const auto& e = f.elements[v];
        if (e.conj() || !e.matrix().is_diagonal())
            throw std::invalid_argument("block_partition: element " + std::to_string(v) + " is not diagonal");
        int minus = 0;
        for (const auto& u : e.matrix().entries()) {
            if (!u.is_real())
                throw std::invalid_argument("block_partition: element " + std::to_string(v) +
                                            " has a non-real entry");
            minus += u.negative();
        }
        if (v != 0 && 2 * minus != n)
            throw std::invalid_argument("block_partition: element " + std::to_string(v) + " (" + e.str() +
                                        ") does not have n/2 entries -1");
    }
    std::map<std::uint64_t, std::vector<int>> parts;
    for (int c = 0; c < n; ++c) {
        std::uint64_t sig = 0;
        for (int g = 0; g < f.rank(); ++g)
            if (f.generators[g].matrix().entries()[c].negative()) sig |= std::uint64_t(1) << g;
        parts[sig].push_back(c);
    }
    std::vector<std::vector<int>> out;
    for (auto& [sig, cols] : parts) out.push_back(std::move(cols));
    return out;
}

TwistedReport twisted_mu_identity_check(const ProjectiveElement& z, const ProjectiveElement& x) {
    if (!z.conj()) throw std::invalid_argument("twisted check: z must carry the conjugation flag");
    if (x.conj()) throw std::invalid_argument("twisted check: x must be inner");
    TwistedReport rep;
    // z x z^-1 = A conj(X) A^-1 as a linear matrix
    const MonomialMatrix& a = z.matrix();
    const MonomialMatrix conjugated = a * x.matrix().conj() * a.inverse();
    const MonomialMatrix ratio = conjugated * x.matrix().inverse();
    auto lambda = ratio.as_scalar();
    if (!lambda || !(*lambda == Unit::one() || *lambda == Unit::minus_one())) return rep;
    rep.commute = true;

    const int sz = sign_bit(square_scalar(z));
    const int szx = sign_bit(square_scalar(multiply(z, x)));
    // representative of x fixed by z: c X with c^2 = lambda
    const Unit c = *lambda == Unit::one() ? Unit::one() : Unit::i();
    const MonomialMatrix fixed = x.matrix().left_scale(c);
    auto sq = (fixed * fixed).as_scalar();
    if (!sq) throw std::domain_error("twisted check: x is not a projective involution");
    const int szx_of = sign_bit(*sq);
    rep.mu_z = sz ? -1 : 1;
    rep.mu_zx = szx ? -1 : 1;
    rep.mu_z_of_x = szx_of ? -1 : 1;
    rep.identity_holds = rep.mu_z_of_x == rep.mu_z * rep.mu_zx;

    // explicit conjugator for z = tau_0 and x diagonal +-1
    const int n = x.n();
    if (a == MonomialMatrix::identity(a.mode(), n) && x.matrix().is_diagonal()) {
        bool real_diag = true;
        std::vector<Unit> ud(n);
        for (int col = 0; col < n; ++col) {
            const Unit e = x.matrix().entries()[col];
            if (!e.is_real()) real_diag = false;
            ud[col] = e.negative() ? Unit::i() : Unit::one();
        }
        if (real_diag) {
            rep.conjugation_checked = true;
            const ProjectiveElement u(MonomialMatrix::diagonal(a.mode(), ud));
            rep.conjugation_holds = multiply(multiply(u, z), inverse(u)) == multiply(z, x);
        }
    }
    return rep;
}

}  // namespace eab
