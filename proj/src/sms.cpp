// sms.cpp

#include "eab/sms.hpp"

#include <sstream>
#include <stdexcept>

namespace eab {

namespace {

void require_valid(const SymplecticMetricSpace& space, const char* op) {
    auto v = validate(space);
    if (!v.valid) throw std::domain_error(std::string(op) + ": " + v.diagnostic);
}

std::string bits_str(std::uint64_t v, int width) {
    std::string s;
    for (int i = 0; i < width; ++i) s += ((v >> i) & 1u) ? '1' : '0';
    return s;
}

}  // namespace

bool InvariantTuple::admissible() const {
    return (eps == 0 || eps == 1) && (delta == 0 || delta == 1) && eps * delta == 0 && r >= 0 &&
           s >= 0;
}

long long InvariantTuple::defect_closed_form() const {
    if (eps) return 0;
    long long v = 1LL << (r + s + delta);
    return delta ? -v : v;
}

std::string InvariantTuple::label() const {
    std::ostringstream os;
    os << "V_{" << r << ',' << s << ';' << eps << ',' << delta << '}';
    return os.str();
}

std::vector<InvariantTuple> admissible_tuples(int max_rank) {
    std::vector<InvariantTuple> out;
    for (int eps = 0; eps <= 1; ++eps)
        for (int delta = 0; delta <= 1 - eps; ++delta)
            for (int r = 0; r <= max_rank; ++r)
                for (int s = 0; 2 * s <= max_rank; ++s) {
                    InvariantTuple t{eps, delta, r, s};
                    if (t.ambient_rank() <= max_rank) out.push_back(t);
                }
    return out;
}

SymplecticMetricSpace::SymplecticMetricSpace(int rank, std::vector<std::uint8_t> mu)
    : rank_(rank), mu_(std::move(mu)) {
    if (rank < 0 || rank > kMaxSmsRank)
        throw std::invalid_argument("rank " + std::to_string(rank) + " outside 0.." +
                                    std::to_string(kMaxSmsRank));
    const std::size_t want = std::size_t(1) << rank;
    if (mu_.size() != want)
        throw std::invalid_argument("mu table has " + std::to_string(mu_.size()) +
                                    " entries, rank " + std::to_string(rank) + " needs " +
                                    std::to_string(want));
    for (std::size_t i = 0; i < mu_.size(); ++i)
        if (mu_[i] > 1)
            throw std::invalid_argument("mu table entry " + std::to_string(i) + " is not 0/1");
}

SymplecticVectorSpace SymplecticVectorSpace::from_gram(F2Matrix g) {
    if (!g.is_square()) throw std::invalid_argument("gram matrix not square");
    for (int i = 0; i < g.rows(); ++i) {
        if (g.get(i, i)) throw std::invalid_argument("gram matrix has nonzero diagonal");
        for (int j = 0; j < i; ++j)
            if (g.get(i, j) != g.get(j, i)) throw std::invalid_argument("gram matrix not symmetric");
    }
    return SymplecticVectorSpace{g.rows(), std::move(g)};
}

F2Matrix gram(const SymplecticMetricSpace& space) {
    const int k = space.rank();
    F2Matrix g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (space.m(std::uint64_t(1) << i, std::uint64_t(1) << j)) g = g.with(i, j, true);
    return g;
}

SymplecticVectorSpace symplectic_part(const SymplecticMetricSpace& space) {
    require_valid(space, "symplectic_part");
    return SymplecticVectorSpace::from_gram(gram(space));
}

SymplecticMetricSpace from_quadratic(int rank, std::uint64_t basis_mu, const F2Matrix& g) {
    if (g.rows() != rank || g.cols() != rank) throw std::invalid_argument("gram shape mismatch");
    std::vector<std::uint8_t> mu(std::size_t(1) << rank, 0);
    for (std::uint64_t x = 1; x < mu.size(); ++x) {
        const int i = __builtin_ctzll(x);
        const std::uint64_t rest = x ^ (std::uint64_t(1) << i);
        mu[x] = static_cast<std::uint8_t>(mu[rest] ^ ((basis_mu >> i) & 1u) ^
                                          parity(g.row(i).bits() & rest));
    }
    return SymplecticMetricSpace(rank, std::move(mu));
}

Validation validate(const SymplecticMetricSpace& space) {
    if (space.mu(0) != 0) return {false, "mu(0) must be 0"};
    const int k = space.rank();
    const F2Matrix g = gram(space);
    // mu is a quadratic form with polar g iff it equals the polarization
    // extension of its basis values; that is the bilinearity condition.
    std::vector<std::uint8_t> q(space.size(), 0);
    for (std::uint64_t x = 1; x < space.size(); ++x) {
        const int i = __builtin_ctzll(x);
        const std::uint64_t rest = x ^ (std::uint64_t(1) << i);
        q[x] = static_cast<std::uint8_t>(q[rest] ^ space.mu(std::uint64_t(1) << i) ^
                                         parity(g.row(i).bits() & rest));
        if (q[x] != space.mu(x)) {
            std::ostringstream os;
            os << "polarization of mu is not bilinear (m(" << bits_str(std::uint64_t(1) << i, k)
               << " + " << bits_str(rest, k) << ", -) breaks additivity at element "
               << bits_str(x, k) << ")";
            if (k == 3) {
                int ones = 0;
                for (auto b : space.mu_table()) ones += b;
                os << "; rank-3 parity rule: " << ones
                   << " elements have mu=1, a rank-3 space needs an even count";
            }
            return {false, os.str()};
        }
    }
    return {true, "ok"};
}

Subspace kernel(const SymplecticMetricSpace& space) {
    require_valid(space, "kernel");
    return nullspace(gram(space));
}

Subspace translation_subgroup(const SymplecticMetricSpace& space) {
    const Subspace ker = kernel(space);
    // mu is linear on ker m, so its zero set there is a subspace
    Subspace a(space.rank());
    std::vector<F2Vector> odd;
    for (const auto& v : ker.basis()) {
        if (space.mu(v.bits()) == 0)
            a.insert(v);
        else
            odd.push_back(v);
    }
    for (std::size_t i = 1; i < odd.size(); ++i) a.insert(odd[0] + odd[i]);
    return a;
}

InvariantTuple invariants(const SymplecticMetricSpace& space) {
    const Subspace ker = kernel(space);
    const int k = space.rank();
    const int dk = ker.dim();
    InvariantTuple t;
    for (const auto& v : ker.basis())
        if (space.mu(v.bits())) t.eps = 1;
    const int two_t = k - dk;
    if (two_t % 2) throw std::logic_error("invariants: odd rank of V/ker m");
    const int half = two_t / 2;
    t.r = dk - t.eps;
    if (t.eps || half == 0) {
        t.s = half;
        return t;
    }
    // mu is constant on cosets of ker m when eps = 0
    long long ones = 0;
    for (auto b : space.mu_table()) ones += b;
    const long long per_coset = ones >> dk;
    const long long hi = (1LL << (2 * half - 1)) + (1LL << (half - 1));
    const long long lo = (1LL << (2 * half - 1)) - (1LL << (half - 1));
    if (per_coset == hi)
        t.delta = 1;
    else if (per_coset != lo)
        throw std::logic_error("invariants: value count matches neither Arf class");
    t.s = half - t.delta;
    return t;
}

long long defect(const SymplecticMetricSpace& space) {
    long long ones = 0;
    for (auto b : space.mu_table()) ones += b;
    return static_cast<long long>(space.size()) - 2 * ones;
}

SymplecticMetricSpace canonical(const InvariantTuple& t) {
    if (!t.admissible())
        throw std::invalid_argument("canonical: inadmissible tuple " + t.label() +
                                    " (eps and delta cannot both be 1)");
    const int k = t.ambient_rank();
    if (k > kMaxSmsRank) throw std::invalid_argument("canonical: rank too large");
    F2Matrix g(k, k);
    std::uint64_t basis_mu = 0;
    int pos = t.r;
    if (t.eps) basis_mu |= std::uint64_t(1) << pos++;
    auto pair = [&](bool odd) {
        g = g.with(pos, pos + 1, true).with(pos + 1, pos, true);
        if (odd) basis_mu |= std::uint64_t(3) << pos;
        pos += 2;
    };
    if (t.delta) pair(true);
    for (int i = 0; i < t.s; ++i) pair(false);
    return from_quadratic(k, basis_mu, g);
}

bool is_isomorphic(const SymplecticMetricSpace& a, const SymplecticMetricSpace& b) {
    require_valid(a, "is_isomorphic");
    require_valid(b, "is_isomorphic");
    return a.rank() == b.rank() && invariants(a) == invariants(b);
}

SymplecticMetricSpace transport(const SymplecticMetricSpace& space, const F2Matrix& T) {
    if (T.rows() != space.rank() || T.cols() != space.rank())
        throw std::invalid_argument("transport: matrix shape mismatch");
    if (eab::rank(T) != space.rank()) throw std::invalid_argument("transport: matrix not invertible");
    std::vector<std::uint8_t> mu(space.size());
    for (std::uint64_t x = 0; x < space.size(); ++x) mu[x] = space.mu_table()[T.apply_bits(x)];
    return SymplecticMetricSpace(space.rank(), std::move(mu));
}

F2Matrix isomorphism_to_canonical(const SymplecticMetricSpace& space) {
    const InvariantTuple t = invariants(space);
    const Subspace ker = kernel(space);
    const int k = space.rank();
    auto mu = [&](const F2Vector& v) { return space.mu(v.bits()); };
    auto m = [&](const F2Vector& x, const F2Vector& y) { return space.m(x.bits(), y.bits()); };

    std::vector<F2Vector> a_part;
    std::optional<F2Vector> z;
    for (const auto& v : ker.basis())
        if (!z && mu(v)) z = v;
    for (const auto& v : ker.basis()) {
        if (z && v == *z) continue;
        a_part.push_back(z && mu(v) ? v + *z : v);
    }

    // complement of ker m by standard vectors, lowest index first
    Subspace seen = ker;
    std::vector<F2Vector> rest;
    for (int i = 0; i < k; ++i)
        if (seen.insert(F2Vector::unit(k, i))) rest.push_back(F2Vector::unit(k, i));

    std::vector<std::pair<F2Vector, F2Vector>> pairs;
    while (!rest.empty()) {
        const F2Vector x = rest.front();
        std::size_t j = 1;
        while (j < rest.size() && !m(x, rest[j])) ++j;
        if (j == rest.size()) throw std::logic_error("isomorphism_to_canonical: no partner");
        const F2Vector y = rest[j];
        std::vector<F2Vector> next;
        for (std::size_t i = 1; i < rest.size(); ++i) {
            if (i == j) continue;
            F2Vector w = rest[i];
            const int wy = m(w, y), wx = m(w, x);
            if (wy) w += x;
            if (wx) w += y;
            next.push_back(w);
        }
        rest = std::move(next);
        pairs.emplace_back(x, y);
    }

    std::vector<std::pair<F2Vector, F2Vector>> odd, even;
    for (auto [x, y] : pairs) {
        if (z) {
            if (mu(x)) x += *z;
            if (mu(y)) y += *z;
        } else if (mu(x) && !mu(y)) {
            x += y;
        } else if (!mu(x) && mu(y)) {
            y += x;
        }
        (mu(x) ? odd : even).emplace_back(x, y);
    }
    // two (1,1) planes are isometric to two (0,0) planes
    while (odd.size() >= 2) {
        auto [e, f] = odd[odd.size() - 2];
        auto [e2, f2] = odd[odd.size() - 1];
        odd.resize(odd.size() - 2);
        even.emplace_back(e + e2, f + e2);
        even.emplace_back(e + f + e2 + f2, e + f + f2);
    }

    std::vector<F2Vector> cols = a_part;
    if (z) cols.push_back(*z);
    for (auto& [x, y] : odd) {
        cols.push_back(x);
        cols.push_back(y);
    }
    for (auto& [x, y] : even) {
        cols.push_back(x);
        cols.push_back(y);
    }
    F2Matrix p = F2Matrix::from_columns(k, cols);
    if (transport(space, p) != canonical(t))
        throw std::logic_error("isomorphism_to_canonical: transport check failed");
    return p;
}

}  // namespace eab
