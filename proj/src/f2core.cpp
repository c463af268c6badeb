// f2core.cpp

#include "eab/f2core.hpp"

#include <algorithm>
#include <stdexcept>

namespace eab {

namespace {

void check_width(int width) {
    if (width < 0 || width > kMaxWidth)
        throw std::invalid_argument("F2 width " + std::to_string(width) + " outside 0..64");
}

// Reduced echelon form in place; returns pivot column per row (rows beyond rank are dropped).
std::vector<int> rref(std::vector<std::uint64_t>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t next = 0;
    for (int c = 0; c < cols && next < rows.size(); ++c) {
        const std::uint64_t bit = std::uint64_t(1) << c;
        std::size_t p = next;
        while (p < rows.size() && !(rows[p] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && (rows[i] & bit)) rows[i] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

}  // namespace

F2Vector::F2Vector(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    check_width(width);
    if (bits & ~width_mask(width))
        throw std::invalid_argument("F2Vector: bits set above width");
}

F2Vector F2Vector::unit(int width, int i) {
    if (i < 0 || i >= width) throw std::out_of_range("F2Vector::unit index");
    return F2Vector(width, std::uint64_t(1) << i);
}

F2Vector F2Vector::with(int i, bool v) const {
    if (i < 0 || i >= width_) throw std::out_of_range("F2Vector::with index");
    const std::uint64_t bit = std::uint64_t(1) << i;
    return F2Vector(width_, v ? (bits_ | bit) : (bits_ & ~bit));
}

F2Vector F2Vector::operator+(const F2Vector& o) const {
    if (o.width_ != width_) throw std::invalid_argument("F2Vector: width mismatch");
    F2Vector r;
    r.width_ = width_;
    r.bits_ = bits_ ^ o.bits_;
    return r;
}

F2Vector& F2Vector::operator+=(const F2Vector& o) {
    *this = *this + o;
    return *this;
}

std::string F2Vector::str() const {
    std::string s;
    for (int i = 0; i < width_; ++i) s += get(i) ? '1' : '0';
    return s;
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_width(cols);
    if (rows < 0) throw std::invalid_argument("F2Matrix: negative row count");
    data_.assign(rows, F2Vector(cols, 0));
}

F2Matrix::F2Matrix(int cols, std::vector<F2Vector> rows)
    : rows_(static_cast<int>(rows.size())), cols_(cols), data_(std::move(rows)) {
    check_width(cols);
    for (const auto& r : data_)
        if (r.width() != cols) throw std::invalid_argument("F2Matrix: row width mismatch");
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = F2Vector::unit(n, i);
    return m;
}

F2Matrix F2Matrix::from_columns(int rows, const std::vector<F2Vector>& cols) {
    F2Matrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].width() != rows) throw std::invalid_argument("from_columns: width mismatch");
        for (int i = 0; i < rows; ++i)
            if (cols[j].get(i)) m.data_[i] = m.data_[i].with(static_cast<int>(j), true);
    }
    return m;
}

F2Matrix F2Matrix::from_row_bits(int cols, const std::vector<std::uint64_t>& rows) {
    std::vector<F2Vector> v;
    v.reserve(rows.size());
    for (auto r : rows) v.emplace_back(cols, r);
    return F2Matrix(cols, std::move(v));
}

F2Vector F2Matrix::column(int j) const {
    std::uint64_t b = 0;
    for (int i = 0; i < rows_; ++i)
        if (data_[i].get(j)) b |= std::uint64_t(1) << i;
    return F2Vector(rows_, b);
}

F2Matrix F2Matrix::with(int i, int j, bool v) const {
    F2Matrix m = *this;
    m.data_.at(i) = m.data_[i].with(j, v);
    return m;
}

std::uint64_t F2Matrix::apply_bits(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (int i = 0; i < rows_; ++i)
        if (parity(data_[i].bits() & v)) out |= std::uint64_t(1) << i;
    return out;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    if (v.width() != cols_) throw std::invalid_argument("F2Matrix::apply: width mismatch");
    return F2Vector(rows_, apply_bits(v.bits()));
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix product: shape mismatch");
    F2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t b = data_[i].bits();
        while (b) {
            const int k = __builtin_ctzll(b);
            acc ^= o.data_[k].bits();
            b &= b - 1;
        }
        r.data_[i] = F2Vector(o.cols_, acc);
    }
    return r;
}

F2Matrix F2Matrix::transpose() const {
    std::vector<F2Vector> cols;
    for (int j = 0; j < cols_; ++j) cols.push_back(column(j));
    return F2Matrix(rows_, std::move(cols));
}

bool F2Matrix::operator<(const F2Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (int i = 0; i < rows_; ++i)
        if (data_[i].bits() != o.data_[i].bits()) return data_[i].bits() < o.data_[i].bits();
    return false;
}

std::string F2Matrix::str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        if (i) s += '/';
        s += data_[i].str();
    }
    return s;
}

Subspace Subspace::span(int ambient_width, const std::vector<F2Vector>& vs) {
    Subspace s(ambient_width);
    for (const auto& v : vs) s.insert(v);
    return s;
}

Subspace Subspace::full(int ambient_width) {
    Subspace s(ambient_width);
    for (int i = 0; i < ambient_width; ++i) s.basis_.push_back(F2Vector::unit(ambient_width, i));
    return s;
}

F2Vector Subspace::reduce(const F2Vector& v) const {
    if (v.width() != width_) throw std::invalid_argument("Subspace: width mismatch");
    std::uint64_t b = v.bits();
    for (const auto& row : basis_)
        if ((b >> row.lowest()) & 1u) b ^= row.bits();
    return F2Vector(width_, b);
}

bool Subspace::contains(const F2Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::insert(const F2Vector& v) {
    F2Vector r = reduce(v);
    if (r.is_zero()) return false;
    const int p = r.lowest();
    const std::uint64_t bit = std::uint64_t(1) << p;
    for (auto& row : basis_)
        if (row.bits() & bit) row = row + r;
    auto pos = std::find_if(basis_.begin(), basis_.end(),
                            [p](const F2Vector& row) { return row.lowest() > p; });
    basis_.insert(pos, r);
    return true;
}

std::vector<F2Vector> Subspace::elements() const {
    const int d = dim();
    std::vector<F2Vector> out;
    out.reserve(std::size_t(1) << d);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << d); ++c) {
        std::uint64_t b = 0;
        for (int i = 0; i < d; ++i)
            if ((c >> i) & 1u) b ^= basis_[i].bits();
        out.emplace_back(width_, b);
    }
    return out;
}

int rank(const F2Matrix& m) {
    std::vector<std::uint64_t> rows;
    for (const auto& r : m.row_data()) rows.push_back(r.bits());
    return static_cast<int>(rref(rows, m.cols()).size());
}

Subspace nullspace(const F2Matrix& m) {
    std::vector<std::uint64_t> rows;
    for (const auto& r : m.row_data()) rows.push_back(r.bits());
    const auto pivots = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    Subspace out(m.cols());
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t v = std::uint64_t(1) << f;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> f) & 1u) v |= std::uint64_t(1) << pivots[i];
        out.insert(F2Vector(m.cols(), v));
    }
    return out;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.width() != m.rows()) throw std::invalid_argument("solve: b width must equal rows");
    if (m.cols() >= 64) throw std::invalid_argument("solve: at most 63 columns");
    // augmented column sits at index cols
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i).bits() | (std::uint64_t(b.get(i)) << m.cols()));
    const auto pivots = rref(rows, m.cols() + 1);
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;
        if ((rows[i] >> m.cols()) & 1u) x |= std::uint64_t(1) << pivots[i];
    }
    return F2Vector(m.cols(), x);
}

std::optional<F2Matrix> inverse(const F2Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    std::vector<F2Vector> cols;
    for (int j = 0; j < n; ++j) {
        auto x = solve(m, F2Vector::unit(n, j));
        if (!x) return std::nullopt;
        cols.push_back(*x);
    }
    if (rank(m) != n) return std::nullopt;
    return F2Matrix::from_columns(n, cols);
}

void enumerate_gl(int n, const std::function<void(const F2Matrix&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_gl: negative dimension");
    if (n > kMaxGlEnumeration)
        throw std::invalid_argument("enumerate_gl: n=" + std::to_string(n) +
                                    " exceeds enumeration limit " +
                                    std::to_string(kMaxGlEnumeration));
    const std::uint64_t size = std::uint64_t(1) << n;
    std::vector<std::uint64_t> rows(n);
    // span[level] marks the span of the first `level` rows
    std::vector<std::vector<char>> span(n + 1, std::vector<char>(size, 0));
    span[0][0] = 1;

    auto rec = [&](auto&& self, int level) -> void {
        if (level == n) {
            visit(F2Matrix::from_row_bits(n, rows));
            return;
        }
        const auto& cur = span[level];
        for (std::uint64_t v = 1; v < size; ++v) {
            if (cur[v]) continue;
            rows[level] = v;
            auto& nxt = span[level + 1];
            for (std::uint64_t w = 0; w < size; ++w) nxt[w] = cur[w] || cur[w ^ v];
            self(self, level + 1);
        }
    };
    rec(rec, 0);
}

std::vector<F2Matrix> enumerate_gl(int n) {
    std::vector<F2Matrix> out;
    enumerate_gl(n, [&](const F2Matrix& m) { out.push_back(m); });
    return out;
}

}  // namespace eab
