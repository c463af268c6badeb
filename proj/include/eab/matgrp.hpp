// matgrp.hpp
// Exact projective monomial matrices with entries in {±1, ±i, ±j, ±k},
// optionally extended by entrywise complex conjugation.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eab/sms.hpp"

namespace eab {

enum class FieldMode { Real, Complex, Quaternion };

std::string to_string(FieldMode m);
FieldMode parse_field_mode(const std::string& s);

// Unit quaternion in Q8. Code = 4*sign + basis, basis 0..3 = 1,i,j,k; the
// code order is the canonical order +1,+i,+j,+k,-1,-i,-j,-k.
class Unit {
public:
    constexpr Unit() = default;
    constexpr explicit Unit(std::uint8_t code) : code_(code & 7u) {}
    static Unit parse(const std::string& label);  // "1","-1","i","-i",...

    static constexpr Unit one() { return Unit(0); }
    static constexpr Unit minus_one() { return Unit(4); }
    static constexpr Unit i() { return Unit(1); }
    static constexpr Unit j() { return Unit(2); }
    static constexpr Unit k() { return Unit(3); }

    std::uint8_t code() const { return code_; }
    int basis() const { return code_ & 3u; }
    bool negative() const { return code_ & 4u; }
    bool is_real() const { return basis() == 0; }
    bool allowed_in(FieldMode m) const;

    Unit operator*(Unit o) const;
    Unit operator-() const { return Unit(code_ ^ 4u); }
    Unit conj() const;  // quaternion conjugate (= complex conjugate on ±1, ±i)
    Unit inverse() const { return conj(); }

    bool operator==(const Unit&) const = default;
    auto operator<=>(const Unit&) const = default;
    std::string str() const;

private:
    std::uint8_t code_ = 0;
};

// Entry at row perm[c], column c equals entries[c].
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(FieldMode mode, std::vector<int> perm, std::vector<Unit> entries);

    static MonomialMatrix identity(FieldMode mode, int n);
    static MonomialMatrix diagonal(FieldMode mode, const std::vector<Unit>& d);
    static MonomialMatrix scalar(FieldMode mode, int n, Unit u);

    FieldMode mode() const { return mode_; }
    int n() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<Unit>& entries() const { return entries_; }
    bool is_diagonal() const;
    // Some(u) when the matrix equals u*I
    std::optional<Unit> as_scalar() const;

    MonomialMatrix operator*(const MonomialMatrix& o) const;
    MonomialMatrix inverse() const;  // conjugate transpose
    MonomialMatrix conj() const;     // entrywise complex conjugation
    MonomialMatrix left_scale(Unit u) const;
    MonomialMatrix kron(const MonomialMatrix& o) const;

    bool operator==(const MonomialMatrix&) const = default;
    std::strong_ordering operator<=>(const MonomialMatrix& o) const;
    std::string str() const;

private:
    FieldMode mode_ = FieldMode::Real;
    std::vector<int> perm_;
    std::vector<Unit> entries_;
};

std::vector<Unit> scalar_units(FieldMode mode);

// Element of the projective group; always stored as the canonical scalar
// representative. conj models the antilinear extension (complex mode only).
class ProjectiveElement {
public:
    ProjectiveElement() = default;
    explicit ProjectiveElement(MonomialMatrix m, bool conj = false);

    static ProjectiveElement identity(FieldMode mode, int n);

    const MonomialMatrix& matrix() const { return m_; }
    bool conj() const { return conj_; }
    FieldMode mode() const { return m_.mode(); }
    int n() const { return m_.n(); }

    bool operator==(const ProjectiveElement&) const = default;
    bool operator<(const ProjectiveElement& o) const;
    std::string str() const;

private:
    MonomialMatrix m_;
    bool conj_ = false;
};

// (A,a)(B,b) = (A sigma^a(B), a xor b)
ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b);
ProjectiveElement inverse(const ProjectiveElement& a);
bool is_identity(const ProjectiveElement& a);

// lambda with x^2 = lambda I; throws "not a projective involution" otherwise
Unit square_scalar(const ProjectiveElement& x);
// lambda with x y x^-1 y^-1 = lambda I
Unit commutator_scalar(const ProjectiveElement& x, const ProjectiveElement& y);
// -1 -> 1, +1 -> 0
int sign_bit(Unit u);

// Elementary abelian subgroup; elements[v] is the ordered product of the
// generators selected by the bits of v.
struct GeneratedSubgroup {
    std::vector<ProjectiveElement> generators;
    std::vector<ProjectiveElement> elements;

    int rank() const { return static_cast<int>(generators.size()); }
};

// throws std::invalid_argument for non-abelian input or dependent generators
GeneratedSubgroup generate(const std::vector<ProjectiveElement>& generators);

SymplecticMetricSpace extract_sms(const GeneratedSubgroup& f);
SymplecticVectorSpace extract_symplectic(const GeneratedSubgroup& f);

enum class Target { Orthogonal, Symplectic };
int canonical_subgroup_size(Target target, const InvariantTuple& t);
GeneratedSubgroup canonical_subgroup(Target target, const InvariantTuple& t);

// Notation matrices (real entries unless noted).
MonomialMatrix mat_I(FieldMode mode, int p, int q);       // diag(-I_p, I_q)
MonomialMatrix mat_J(FieldMode mode, int n);              // [[0,I_n],[-I_n,0]]
MonomialMatrix mat_Jprime(FieldMode mode, int n);         // [[0,I_n],[I_n,0]]
MonomialMatrix mat_K(FieldMode mode, int n);              // 4n x 4n
constexpr int kMaxMatrixSize = 64;

std::vector<std::vector<int>> block_partition(const GeneratedSubgroup& f);

struct TwistedReport {
    bool commute = false;
    int mu_z = 0, mu_zx = 0;      // square signs of z and zx (+1/-1)
    int mu_z_of_x = 0;            // square sign of the z-fixed representative of x
    bool identity_holds = false;  // mu_z(x) = mu(z) mu(zx)
    bool conjugation_checked = false;
    bool conjugation_holds = false;
    bool ok() const { return commute && identity_holds && (!conjugation_checked || conjugation_holds); }
};

TwistedReport twisted_mu_identity_check(const ProjectiveElement& z, const ProjectiveElement& x);

}  // namespace eab
