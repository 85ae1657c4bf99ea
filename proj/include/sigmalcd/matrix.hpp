#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace sigmalcd {

using Vec = std::vector<Elem>;

inline Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "dot product of unequal lengths");
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

/// Dense row-major matrix over a runtime finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
        Matrix m(f, 0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    Vec row_vector(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    void append_row(std::span<const Elem> r) {
        if (r.size() != cols_) throw Error(ErrorKind::LengthMismatch, "row length does not match matrix width");
        for (Elem x : r)
            if (!f_.contains(x)) throw Error(ErrorKind::FieldMismatch, "entry outside " + f_.to_string());
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (Elem x : a_)
            if (x) return false;
        return true;
    }

    /// Returns a copy keeping only the listed columns, in the given order.
    Matrix select_columns(std::span<const std::size_t> cols) const {
        Matrix s(f_, rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.f_ != y.f_) throw Error(ErrorKind::FieldMismatch, "matrix product across fields");
        if (x.cols_ != y.rows_) throw Error(ErrorKind::LengthMismatch, "matrix product dimension mismatch");
        const Field& f = x.f_;
        Matrix p(f, x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Elem a = x(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) = f.add(p(i, j), f.mul(a, y(k, j)));
            }
        return p;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_ && (x.a_.empty() || x.f_ == y.f_);
    }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

inline Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw Error(ErrorKind::LengthMismatch, "vstack width mismatch");
    if (top.field() != bottom.field()) throw Error(ErrorKind::FieldMismatch, "vstack across fields");
    Matrix m = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i) m.append_row(bottom.row(i));
    return m;
}

struct Rref {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot rule: in the leftmost unfinished column,
/// the first nonzero entry scanning top to bottom.
inline Rref rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Nonzero rows of the reduced echelon form.
inline Matrix row_basis(const Matrix& m) {
    Rref r = rref(m);
    Matrix b(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) b.append_row(r.reduced.row(i));
    return b;
}

/// Basis rows of {v : M v = 0}, one per free column in increasing order.
inline Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix basis(f, 0, m.cols());
    Vec v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
        basis.append_row(v);
    }
    return basis;
}

/// Coefficients x with sum_i x_i * rows(i,:) == target, if any.
inline std::optional<Vec> solve_combination(const Matrix& rows, std::span<const Elem> target) {
    if (target.size() != rows.cols()) throw Error(ErrorKind::LengthMismatch, "target length mismatch");
    const Field& f = rows.field();
    Matrix aug(f, rows.cols(), rows.rows() + 1);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) aug(j, i) = rows(i, j);
    for (std::size_t j = 0; j < rows.cols(); ++j) aug(j, rows.rows()) = target[j];
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == rows.rows()) return std::nullopt;
    Vec x(rows.rows(), 0);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, rows.rows());
    return x;
}

/// dim(rowspace(a) ∩ rowspace(b)) by the rank identity.
inline std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(vstack(a, b));
}

}  // namespace sigmalcd
