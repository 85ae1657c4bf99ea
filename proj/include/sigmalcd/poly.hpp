#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace sigmalcd {

/// Univariate polynomial over GF(q), little-endian, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(Field f, Vec coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (Elem x : c_)
            if (!f_.contains(x)) throw Error(ErrorKind::FieldMismatch, "coefficient outside " + f_.to_string());
        normalize();
    }

    static Poly zero(const Field& f) { return {f, {}}; }
    static Poly constant(const Field& f, Elem c) { return {f, {c}}; }
    static Poly one(const Field& f) { return constant(f, 1); }
    static Poly monomial(const Field& f, std::size_t deg, Elem coef = 1) {
        Vec c(deg + 1, 0);
        c[deg] = coef;
        return {f, std::move(c)};
    }
    /// x^m - 1
    static Poly cyclic_modulus(const Field& f, std::size_t m) {
        Vec c(m + 1, 0);
        c[0] = f.neg(1);
        c[m] = f.add(c[m], 1);
        return {f, std::move(c)};
    }

    const Field& field() const { return f_; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(f_.inv(lead()));
    }

    Poly scale(Elem s) const {
        Vec c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.mul(c_[i], s);
        return {f_, std::move(c)};
    }

    Elem eval(Elem a) const {
        Elem acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, a), c_[i]);
        return acc;
    }

    /// Reduction modulo x^m - 1 (exponents folded mod m).
    Poly reduce_cyclic(std::size_t m) const {
        Vec c(m, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i % m] = f_.add(c[i % m], c_[i]);
        return {f_, std::move(c)};
    }

    /// c(x^a) mod (x^m - 1); a may be negative.
    Poly substitute_power(long long a, std::size_t m) const {
        const long long mm = static_cast<long long>(m);
        const long long aa = ((a % mm) + mm) % mm;
        Vec c(m, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const std::size_t j = static_cast<std::size_t>((static_cast<long long>(i % m) * aa) % mm);
            c[j] = f_.add(c[j], c_[i]);
        }
        return {f_, std::move(c)};
    }

    /// Coefficient vector padded (or required to fit) to exactly len entries.
    Vec padded(std::size_t len) const {
        if (c_.size() > len) throw Error(ErrorKind::LengthMismatch, "polynomial longer than target length");
        Vec v = c_;
        v.resize(len, 0);
        return v;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        Vec c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
        return {a.f_, std::move(c)};
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check(a, b);
        Vec c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
        return {a.f_, std::move(c)};
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.f_);
        const Field& f = a.f_;
        Vec c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return {f, std::move(c)};
    }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        check(a, b);
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        const Field& f = a.f_;
        Vec r = a.c_;
        if (r.size() < b.c_.size()) return {zero(f), a};
        Vec q(r.size() - b.c_.size() + 1, 0);
        const Elem lead_inv = f.inv(b.lead());
        for (std::size_t k = q.size(); k-- > 0;) {
            const Elem t = f.mul(r[k + b.c_.size() - 1], lead_inv);
            q[k] = t;
            if (!t) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(t, b.c_[j]));
        }
        return {Poly(f, std::move(q)), Poly(f, std::move(r))};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.f_ == b.f_);
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    }

    Field f_;
    Vec c_;
};

/// Monic gcd by the Euclidean algorithm.
inline Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// gcd of a list; the list must contain at least one nonzero entry.
inline Poly gcd(std::span<const Poly> polys) {
    std::optional<Poly> acc;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc ? gcd(*acc, p) : p.monic();
    }
    if (!acc) throw Error(ErrorKind::BothZero, "gcd of zero polynomials");
    return *acc;
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
    const Field& f = m.field();
    Poly r0 = m, r1 = a % m;
    Poly s0 = Poly::zero(f), s1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) return std::nullopt;
    return (s0.scale(f.inv(r0.lead()))) % m;
}

/// Horner evaluation of f (over the embedding's small field) at alpha in the
/// big field.
inline Elem eval_ext(const Poly& f, Elem alpha, const Embedding& emb) {
    if (!f.is_zero() && f.field() != emb.small())
        throw Error(ErrorKind::EmbeddingMissing, "polynomial field is not the embedded subfield");
    const Field& big = emb.big();
    Elem acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, alpha), emb(c[i]));
    return acc;
}

inline FieldElement eval_ext(const Poly& f, const FieldElement& alpha, const Embedding& emb) {
    if (alpha.field() != emb.big())
        throw Error(ErrorKind::EmbeddingMissing, "evaluation point is not in the embedding's target field");
    return {emb.big(), eval_ext(f, alpha.value(), emb)};
}

}  // namespace sigmalcd
