#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shv::linalg {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("ragged row in from_rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("ragged column in from_columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<K> column(std::size_t j) const {
        std::vector<K> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }
    void append_row(const std::vector<K>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionMismatch("append_row: wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix<K> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class K>
std::vector<K> operator*(const Matrix<K>& a, const std::vector<K>& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: length differs");
    std::vector<K> y(a.rows(), K(0));
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
    }
    return y;
}

// row vector times matrix
template <class K>
std::vector<K> left_multiply(const std::vector<K>& x, const Matrix<K>& a) {
    if (a.rows() != x.size()) throw DimensionMismatch("vector-matrix product: length differs");
    std::vector<K> y(a.cols(), K(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) y[j] += x[i] * a(i, j);
    }
    return y;
}

namespace detail {

// Fraction-free elimination with full pivot search.  Works over any integral
// domain K for which exact_quotient(a, b) performs exact division.  Returns
// the rank; `sign` tracks row/column swaps, `last_pivot` the final Bareiss
// pivot (the determinant up to sign for full-rank square input).
template <class K>
std::size_t bareiss(Matrix<K>& m, int& sign, K& last_pivot) {
    const std::size_t R = m.rows(), C = m.cols();
    K prev(1);
    sign = 1;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < R && k < C; ++k) {
        std::size_t pr = R, pc = C;
        for (std::size_t j = k; j < C && pr == R; ++j)
            for (std::size_t i = k; i < R; ++i)
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == R) break;
        if (pr != k) {
            for (std::size_t j = 0; j < C; ++j) std::swap(m(pr, j), m(k, j));
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < R; ++i) std::swap(m(i, pc), m(i, k));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < R; ++i) {
            for (std::size_t j = k + 1; j < C; ++j) {
                K v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(v, prev);
            }
            m(i, k) = K(0);
        }
        prev = m(k, k);
        ++rank;
    }
    last_pivot = prev;
    return rank;
}

}  // namespace detail

template <class K>
std::size_t rank(Matrix<K> m) {
    int sign;
    K last(1);
    return detail::bareiss(m, sign, last);
}

template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0) return K(1);
    int sign;
    K last(1);
    if (detail::bareiss(m, sign, last) < m.rows()) return K(0);
    return sign < 0 ? K(0) - last : last;
}

// Reduced row echelon form over a field; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = K(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of {x : m x = 0}; each vector has a 1 in its free coordinate.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m) {
    const std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> x(n, K(0));
        x[f] = K(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = K(0) - m(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves m x = b; nullopt when b is not in the column span.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length differs");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<K> x(m.cols(), K(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

// True when v lies in the span of the columns of m.
template <class K>
bool in_span(const std::vector<K>& v, const Matrix<K>& m) {
    if (v.size() != m.rows()) throw DimensionMismatch("in_span: vector length differs from row count");
    return solve(m, v).has_value();
}

// Row-reduced basis of the span of a family of row vectors (length n).
template <class K>
std::vector<std::vector<K>> row_space_basis(const std::vector<std::vector<K>>& vs, std::size_t n) {
    Matrix<K> m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != n) throw DimensionMismatch("row_space_basis: wrong length");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
    }
    auto pivots = rref(m);
    std::vector<std::vector<K>> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
    return out;
}

// Incrementally maintained echelon basis; supports fast membership tests.
template <class K>
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t n = 0) : n_(n) {}
    std::size_t ambient() const { return n_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<std::vector<K>>& rows() const { return rows_; }

    // reduces v against the basis; returns true if v was already contained
    bool contains(std::vector<K> v) const { return reduce(v); }

    // adds v; returns true if the span grew
    bool add(std::vector<K> v) {
        if (v.size() != n_) throw DimensionMismatch("EchelonSpan::add: wrong length");
        if (reduce(v)) return false;
        std::size_t p = 0;
        while (v[p].is_zero()) ++p;
        K inv = K(1) / v[p];
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
        // keep fully reduced: clear column p in existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][p].is_zero()) continue;
            K f = rows_[i][p];
            for (std::size_t j = 0; j < n_; ++j)
                if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

private:
    std::size_t n_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;

    bool reduce(std::vector<K>& v) const {
        if (v.size() != n_) throw DimensionMismatch("EchelonSpan: wrong length");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t p = pivots_[i];
            if (v[p].is_zero()) continue;
            K f = v[p];
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
};

}  // namespace shv::linalg
