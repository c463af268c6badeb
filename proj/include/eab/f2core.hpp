// f2core.hpp
// Bit-packed linear algebra over F2. One machine word per vector (width <= 64).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eab {

constexpr int kMaxWidth = 64;
constexpr int kMaxGlEnumeration = 5;

inline std::uint64_t width_mask(int width) {
    return width >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << width) - 1);
}

inline int parity(std::uint64_t w) { return __builtin_parityll(w); }

class F2Vector {
public:
    F2Vector() = default;
    F2Vector(int width, std::uint64_t bits);

    static F2Vector zero(int width) { return F2Vector(width, 0); }
    static F2Vector unit(int width, int i);

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }
    bool get(int i) const { return (bits_ >> i) & 1u; }
    bool is_zero() const { return bits_ == 0; }
    int weight() const { return __builtin_popcountll(bits_); }
    // lowest set coordinate, -1 for the zero vector
    int lowest() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

    F2Vector with(int i, bool v) const;
    int dot(const F2Vector& o) const { return parity(bits_ & o.bits_); }

    F2Vector operator+(const F2Vector& o) const;
    F2Vector& operator+=(const F2Vector& o);
    bool operator==(const F2Vector& o) const = default;
    auto operator<=>(const F2Vector& o) const = default;

    std::string str() const;  // coordinates 0..width-1, left to right

private:
    int width_ = 0;
    std::uint64_t bits_ = 0;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);
    F2Matrix(int cols, std::vector<F2Vector> rows);

    static F2Matrix identity(int n);
    static F2Matrix zero(int rows, int cols) { return F2Matrix(rows, cols); }
    // columns given as vectors of width `rows`
    static F2Matrix from_columns(int rows, const std::vector<F2Vector>& cols);
    static F2Matrix from_row_bits(int cols, const std::vector<std::uint64_t>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<F2Vector>& row_data() const { return data_; }
    const F2Vector& row(int i) const { return data_[i]; }
    F2Vector column(int j) const;
    bool get(int i, int j) const { return data_[i].get(j); }
    F2Matrix with(int i, int j, bool v) const;

    F2Vector apply(const F2Vector& v) const;     // M v
    std::uint64_t apply_bits(std::uint64_t v) const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix transpose() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const F2Matrix& o) const = default;
    bool operator<(const F2Matrix& o) const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<F2Vector> data_;
};

// Subspace of F2^width held in reduced row-echelon form. Pivot of a basis row
// is its lowest set coordinate; rows are sorted by pivot. The form is unique,
// so equality of subspaces is equality of basis lists.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_width) : width_(ambient_width) {}

    static Subspace span(int ambient_width, const std::vector<F2Vector>& vs);
    static Subspace full(int ambient_width);

    int ambient_width() const { return width_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<F2Vector>& basis() const { return basis_; }

    bool contains(const F2Vector& v) const;
    F2Vector reduce(const F2Vector& v) const;
    // true if v was new (dimension grew)
    bool insert(const F2Vector& v);
    // every element, in increasing order of coefficient index
    std::vector<F2Vector> elements() const;

    bool operator==(const Subspace& o) const = default;

private:
    int width_ = 0;
    std::vector<F2Vector> basis_;
};

int rank(const F2Matrix& m);
Subspace nullspace(const F2Matrix& m);
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);
std::optional<F2Matrix> inverse(const F2Matrix& m);

// Visits each invertible n x n matrix once, rows chosen in increasing order.
void enumerate_gl(int n, const std::function<void(const F2Matrix&)>& visit);
std::vector<F2Matrix> enumerate_gl(int n);

}  // namespace eab
