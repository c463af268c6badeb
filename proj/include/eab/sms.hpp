// sms.hpp
// Symplectic metric spaces over F2: a rank k space with a quadratic map mu
// stored as a table on all 2^k elements. Signs are additive: mu = 1 stands
// for the multiplicative value -1.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eab/f2core.hpp"

namespace eab {

constexpr int kMaxSmsRank = 24;

struct InvariantTuple {
    int eps = 0;
    int delta = 0;
    int r = 0;
    int s = 0;

    int ambient_rank() const { return r + eps + 2 * delta + 2 * s; }
    bool admissible() const;
    // (1-eps) (-1)^delta 2^(r+s+delta)
    long long defect_closed_form() const;
    // printed as V_{r,s;eps,delta}
    std::string label() const;

    bool operator==(const InvariantTuple&) const = default;
    auto operator<=>(const InvariantTuple&) const = default;
};

// All admissible tuples with ambient rank <= max_rank, in lexicographic order.
std::vector<InvariantTuple> admissible_tuples(int max_rank);

class SymplecticMetricSpace {
public:
    SymplecticMetricSpace() : rank_(0), mu_(1, 0) {}
    // throws std::invalid_argument on a structural problem (length, entries not 0/1)
    SymplecticMetricSpace(int rank, std::vector<std::uint8_t> mu);

    int rank() const { return rank_; }
    std::size_t size() const { return mu_.size(); }
    const std::vector<std::uint8_t>& mu_table() const { return mu_; }
    int mu(std::uint64_t v) const { return mu_[v]; }
    // polarization m(x,y) = mu(x)+mu(y)+mu(x+y)
    int m(std::uint64_t x, std::uint64_t y) const { return mu_[x] ^ mu_[y] ^ mu_[x ^ y]; }

    bool operator==(const SymplecticMetricSpace&) const = default;

private:
    int rank_;
    std::vector<std::uint8_t> mu_;
};

struct SymplecticVectorSpace {
    int rank = 0;
    F2Matrix gram;

    static SymplecticVectorSpace from_gram(F2Matrix gram);  // checks symmetric, zero diagonal
};

struct Validation {
    bool valid = false;
    std::string diagnostic;
    explicit operator bool() const { return valid; }
};

Validation validate(const SymplecticMetricSpace& space);

// Gram matrix of the polarization on basis pairs (defined for any table).
F2Matrix gram(const SymplecticMetricSpace& space);
SymplecticVectorSpace symplectic_part(const SymplecticMetricSpace& space);

Subspace kernel(const SymplecticMetricSpace& space);
Subspace translation_subgroup(const SymplecticMetricSpace& space);
InvariantTuple invariants(const SymplecticMetricSpace& space);
// #{mu=0} - #{mu=1}, by direct count
long long defect(const SymplecticMetricSpace& space);

SymplecticMetricSpace canonical(const InvariantTuple& t);
bool is_isomorphic(const SymplecticMetricSpace& a, const SymplecticMetricSpace& b);

// Returns P with mu_space(P c) = mu_canonical(c) for every c; column j of P
// is the image of the j-th canonical basis vector.
F2Matrix isomorphism_to_canonical(const SymplecticMetricSpace& space);

// Basis change: result(x) = space(T x). T must be invertible.
SymplecticMetricSpace transport(const SymplecticMetricSpace& space, const F2Matrix& T);

// Build a table from basis values and Gram matrix by polarization.
SymplecticMetricSpace from_quadratic(int rank, std::uint64_t basis_mu, const F2Matrix& gram);

}  // namespace eab
