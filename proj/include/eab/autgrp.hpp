// autgrp.hpp
// Automorphism groups of symplectic (metric) spaces: closed-form orders and
// backtracking enumeration.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eab/f2core.hpp"
#include "eab/sms.hpp"

namespace eab {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kMaxAutRank = 8;

struct AutGroupSpec {
    enum class Kind { Metric, PlainSymplectic };
    Kind kind = Kind::Metric;
    InvariantTuple t;  // Metric: Sp(r,s;eps,delta)
    int s = 0;         // PlainSymplectic: Sp(s;t)
    int tdim = 0;

    static AutGroupSpec metric(int eps, int delta, int r, int s);
    static AutGroupSpec metric(const InvariantTuple& t);
    static AutGroupSpec plain(int s, int t = 0);
    std::string str() const;
};

BigInt pow2(long long e);
BigInt gl_order(int n);
BigInt sp_order(int s);                               // |Sp(s)|
BigInt sp_metric_order(int eps, int delta, int s);    // |Sp(s;eps,delta)|, s = own s-invariant
BigInt order(const AutGroupSpec& spec);

// Backtracking over images of an adapted basis (kernel first). Visits each
// automorphism once, as the matrix T with mu(Tx) = mu(x); order of visits is
// lexicographic in the images of the adapted basis.
void for_each_automorphism(const SymplecticMetricSpace& space,
                           const std::function<void(const F2Matrix&)>& visit);
// Same set, sorted by row data.
std::vector<F2Matrix> enumerate_automorphisms(const SymplecticMetricSpace& space);
// Walks the full backtracking tree with bitmask candidate sets and counts its
// leaves (the last level by popcount). Each automorphism is one leaf.
std::uint64_t count_by_enumeration(const SymplecticMetricSpace& space);
// Exact count through the stabilizer chain of the adapted basis; each orbit
// point is confirmed by finding one full extension.
BigInt count_automorphisms(const SymplecticMetricSpace& space);

struct ComparisonReport {
    int s = 0;
    BigInt sp, sp00, sp01_shift, sp10;
    bool sp10_equals_sp = false;
    bool index00_exact = false, index01_exact = false;
    BigInt index00, index01;          // computed quotients
    BigInt expect00, expect01;        // 2^{s-1}(2^s+1), 2^{s-1}(2^s-1)
    bool ok() const;
};

ComparisonReport verify_comparisons(int s);

}  // namespace eab
