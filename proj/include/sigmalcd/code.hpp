#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace sigmalcd {

/// A q-ary [n, k] linear code held by its canonical (reduced row-echelon)
/// generator matrix, so equal codes compare equal structurally.
class LinearCode {
public:
    LinearCode() = default;

    static LinearCode from_rows(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
        return from_matrix(Matrix::from_rows(f, n, rows));
    }

    static LinearCode from_matrix(const Matrix& rows) {
        LinearCode c;
        c.gen_ = row_basis(rows);
        c.pivots_ = rref(c.gen_).pivots;
        return c;
    }

    static LinearCode zero(const Field& f, std::size_t n) { return from_matrix(Matrix(f, 0, n)); }
    static LinearCode full(const Field& f, std::size_t n) { return from_matrix(Matrix::identity(f, n)); }

    const Field& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Membership by reduction against the canonical generator.
    bool contains(std::span<const Elem> v) const {
        if (v.size() != length()) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
        const Field& f = field();
        Vec r(v.begin(), v.end());
        for (std::size_t i = 0; i < gen_.rows(); ++i) {
            const Elem c = r[pivots_[i]];
            if (!c) continue;
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, gen_(i, j)));
        }
        for (Elem x : r)
            if (x) return false;
        return true;
    }

    bool contains(const LinearCode& other) const {
        for (std::size_t i = 0; i < other.dimension(); ++i)
            if (!contains(other.generator().row(i))) return false;
        return true;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

private:
    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

/// sigma = permute ∘ scale ∘ frobenius acting on F_q^n:
/// sigma(c)[perm[i]] = diag[i] * c[i]^(p^frob).
class SemiLinearMap {
public:
    SemiLinearMap() = default;

    SemiLinearMap(Field f, std::vector<std::size_t> perm, Vec diag, unsigned frob)
        : f_(std::move(f)), perm_(std::move(perm)), diag_(std::move(diag)), frob_(frob % f_.degree()) {
        if (perm_.size() != diag_.size()) throw Error(ErrorKind::LengthMismatch, "perm and diag lengths differ");
        std::vector<bool> seen(perm_.size(), false);
        for (auto p : perm_) {
            if (p >= perm_.size() || seen[p]) throw Error(ErrorKind::Parse, "perm is not a bijection");
            seen[p] = true;
        }
        for (Elem d : diag_)
            if (d == 0 || !f_.contains(d)) throw Error(ErrorKind::Parse, "diag entries must be nonzero field elements");
    }

    static SemiLinearMap identity(const Field& f, std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        return {f, std::move(p), Vec(n, 1), 0};
    }
    static SemiLinearMap permutation(const Field& f, std::vector<std::size_t> perm) {
        const std::size_t n = perm.size();
        return {f, std::move(perm), Vec(n, 1), 0};
    }
    static SemiLinearMap diagonal(const Field& f, Vec diag) {
        std::vector<std::size_t> p(diag.size());
        std::iota(p.begin(), p.end(), 0);
        return {f, std::move(p), std::move(diag), 0};
    }
    static SemiLinearMap frobenius(const Field& f, std::size_t n, unsigned s) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        return {f, std::move(p), Vec(n, 1), s};
    }
    /// (c_0, ..., c_{n-1}) -> (c_{n-1}, ..., c_0)
    static SemiLinearMap reversal(const Field& f, std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
        return permutation(f, std::move(p));
    }

    const Field& field() const { return f_; }
    std::size_t length() const { return perm_.size(); }
    const std::vector<std::size_t>& perm() const { return perm_; }
    const Vec& diag() const { return diag_; }
    unsigned frob() const { return frob_; }

    bool is_permutation() const {
        if (frob_ != 0) return false;
        for (Elem d : diag_)
            if (d != 1) return false;
        return true;
    }
    bool is_monomial() const { return frob_ == 0; }
    bool is_identity() const {
        if (!is_permutation()) return false;
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != i) return false;
        return true;
    }

    Vec apply(std::span<const Elem> c) const {
        if (c.size() != length()) throw Error(ErrorKind::LengthMismatch, "vector length differs from map length");
        Vec out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[perm_[i]] = f_.mul(diag_[i], f_.frobenius(c[i], frob_));
        return out;
    }

    /// (*this) ∘ inner
    SemiLinearMap compose(const SemiLinearMap& inner) const {
        if (inner.length() != length()) throw Error(ErrorKind::LengthMismatch, "composition length mismatch");
        const std::size_t n = length();
        std::vector<std::size_t> p(n);
        Vec d(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = perm_[inner.perm_[i]];
            d[i] = f_.mul(f_.frobenius(inner.diag_[i], frob_), diag_[inner.perm_[i]]);
        }
        return {f_, std::move(p), std::move(d), frob_ + inner.frob_};
    }

    SemiLinearMap inverse() const {
        const std::size_t n = length();
        const unsigned s = (f_.degree() - frob_) % f_.degree();
        std::vector<std::size_t> p(n);
        Vec d(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[perm_[i]] = i;
            d[perm_[i]] = f_.frobenius(f_.inv(diag_[i]), s);
        }
        return {f_, std::move(p), std::move(d), s};
    }

    friend bool operator==(const SemiLinearMap& a, const SemiLinearMap& b) {
        return a.f_ == b.f_ && a.perm_ == b.perm_ && a.diag_ == b.diag_ && a.frob_ == b.frob_;
    }

private:
    Field f_;
    std::vector<std::size_t> perm_;
    Vec diag_;
    unsigned frob_ = 0;
};

}  // namespace sigmalcd
