// Small dense exact linear algebra: vectors, matrices, elimination.
//
// Matrices act on column vectors. Column j of a matrix M holds the
// coordinates of M(e_j); entry (i, j) is the coefficient of e_i in M(e_j).

#ifndef HJD_LINEAR_HPP
#define HJD_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hjd/error.hpp"
#include "hjd/scalar.hpp"

namespace hjd {

template <Scalar K>
class Vector {
public:
    using value_type = K;

    Vector() = default;
    Vector(field_t<K> f, std::size_t n) : field_(std::move(f)), c_(n, field_.zero()) {}
    Vector(field_t<K> f, std::vector<K> coords) : field_(std::move(f)), c_(std::move(coords)) {}

    static Vector basis(const field_t<K>& f, std::size_t n, std::size_t i) {
        Vector v(f, n);
        v.c_.at(i) = f.one();
        return v;
    }

    const field_t<K>& field() const { return field_; }
    std::size_t size() const { return c_.size(); }
    const K& operator[](std::size_t i) const { return c_[i]; }
    K& operator[](std::size_t i) { return c_[i]; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<K>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        same_size(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        same_size(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
        return *this;
    }
    Vector& operator*=(const K& s) {
        for (auto& a : c_) a *= s;
        return *this;
    }
    /// this += s * o
    void axpy(const K& s, const Vector& o) {
        same_size(o);
        if (s.is_zero()) return;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i].add_product(s, o.c_[i]);
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const K& s, Vector v) { return v *= s; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

    /// Concatenation, used for direct sums A (+) V.
    friend Vector concat(const Vector& a, const Vector& b) {
        std::vector<K> c = a.c_;
        c.insert(c.end(), b.c_.begin(), b.c_.end());
        return Vector(a.field_, std::move(c));
    }
    Vector slice(std::size_t from, std::size_t count) const {
        return Vector(field_, std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(from),
                                             c_.begin() + static_cast<std::ptrdiff_t>(from + count)));
    }

private:
    void same_size(const Vector& o) const {
        if (o.size() != size())
            throw DimensionMismatch("vector sizes " + std::to_string(size()) + " and " +
                                    std::to_string(o.size()));
    }

    field_t<K> field_{};
    std::vector<K> c_;
};

template <Scalar K>
class Matrix {
public:
    using value_type = K;

    Matrix() = default;
    Matrix(field_t<K> f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix zero(const field_t<K>& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    static Matrix identity(const field_t<K>& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }
    static Matrix diagonal(const field_t<K>& f, const std::vector<K>& d) {
        Matrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    /// Row-major nested initializer.
    static Matrix from_rows(const field_t<K>& f, const std::vector<std::vector<K>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const field_t<K>& f, std::size_t rows, const std::vector<Vector<K>>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    const field_t<K>& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector<K> column(std::size_t j) const {
        Vector<K> v(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    /// M v
    Vector<K> apply(const Vector<K>& v) const {
        if (v.size() != cols_)
            throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                                    std::to_string(v.size()));
        Vector<K> out(field_, rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const K& m = (*this)(i, j);
                if (!m.is_zero()) out[i].add_product(m, v[j]);
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const K& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const K& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                    " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix power(unsigned k) const {
        if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
        Matrix r = identity(field_, rows_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Block diagonal a (+) b.
    friend Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
        return m;
    }

private:
    void same_shape(const Matrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionMismatch("matrix shapes differ");
    }

    field_t<K> field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> a_;
};

/// Free-function form of M v.
template <Scalar K>
Vector<K> mat_apply(const Matrix<K>& m, const Vector<K>& v) {
    return m.apply(v);
}

/// Reduced row echelon form. Returns the pivot column indices.
template <Scalar K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const K inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const K f = m(r, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Scalar K>
std::size_t rank(Matrix<K> m) {
    return rref_in_place(m).size();
}

/// Exact inverse, or std::nullopt when the matrix is singular.
template <Scalar K>
std::optional<Matrix<K>> mat_invert(const Matrix<K>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix<K> inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Solves M x = b; std::nullopt when b is not in the column space.
template <Scalar K>
std::optional<Vector<K>> solve(const Matrix<K>& m, const Vector<K>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
    Matrix<K> aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref_in_place(aug);
    Vector<K> x(m.field(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

/// Indices of a maximal independent subset of the columns (pivot columns).
template <Scalar K>
std::vector<std::size_t> independent_columns(Matrix<K> m) {
    return rref_in_place(m);
}

/// Basis of the kernel of M, one vector per free column.
template <Scalar K>
std::vector<Vector<K>> kernel_basis(Matrix<K> m) {
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<K>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<K> v(m.field(), m.cols());
        v[free] = m.field().one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hjd

#endif  // HJD_LINEAR_HPP
