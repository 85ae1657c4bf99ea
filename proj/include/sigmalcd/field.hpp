#pragma once

// Finite fields GF(p^e) with runtime parameters.
//
// Elements are plain integers holding the base-p digit encoding
// sum(coeffs[i] * p^i) of the residue polynomial; the Field object owns
// the arithmetic. Fields up to 2^20 elements use log/antilog tables,
// larger ones fall back to polynomial multiplication.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sigmalcd {

using Elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over GF(p) as little-endian digit vectors (no normalisation
// required by callers; trailing zeros are trimmed where it matters).
using DigitPoly = std::vector<std::uint32_t>;

inline void trim(DigitPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime and small; Fermat
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t k = p - 2; k; k >>= 1) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
inline DigitPoly digit_mod(DigitPoly a, DigitPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    DigitPoly modulus;  // monic, degree e
    std::vector<std::uint32_t> pw;  // p^i, i < e
    std::vector<Elem> exp_table;  // length 2(q-1) when tables are enabled
    std::vector<std::uint32_t> log_table;
    std::vector<Elem> add_table;  // odd p, small q only
    Elem primitive = 1;

    DigitPoly digits(Elem a) const {
        DigitPoly d(e);
        for (std::uint32_t i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }

    Elem from_digits(const DigitPoly& d) const {
        Elem v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return v;
    }

    Elem add_slow(Elem a, Elem b) const {
        if (p == 2) return a ^ b;
        Elem r = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            r += ((a % p + b % p) % p) * pw[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    Elem neg_slow(Elem a) const {
        if (p == 2) return a;
        Elem r = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            r += ((p - a % p) % p) * pw[i];
            a /= p;
        }
        return r;
    }

    Elem mul_slow(Elem a, Elem b) const {
        if (e == 1) return static_cast<Elem>(std::uint64_t(a) * b % p);
        const DigitPoly da = digits(a), db = digits(b);
        DigitPoly prod(2 * e - 1, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < e; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
        }
        DigitPoly r = digit_mod(prod, modulus, p);
        r.resize(e, 0);
        return from_digits(r);
    }
};

// Irreducibility over GF(p) by trial division with every monic polynomial
// of degree 1..deg/2.
inline bool is_irreducible(const DigitPoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        DigitPoly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (digit_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
public:
    static constexpr std::uint32_t kTableLimit = 1u << 20;
    static constexpr std::uint64_t kMaxSize = 1ull << 31;

    Field() = default;

    /// Builds GF(p^e). Without an explicit modulus the lexicographically least
    /// monic irreducible of degree e is used, comparing coefficient tuples
    /// (c_0, c_1, ..., c_{e-1}) with the constant term first.
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        if (e < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxSize) throw Error(ErrorKind::FieldTooLarge, "p^e exceeds 2^31");
        }
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->e = e;
        d->q = static_cast<std::uint32_t>(q);
        d->pw.resize(e);
        for (std::uint32_t i = 0, v = 1; i < e; ++i, v *= p) d->pw[i] = v;

        if (modulus) {
            detail::DigitPoly m = *modulus;
            detail::trim(m);
            if (m.size() != e + 1 || m.back() != 1)
                throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(e));
            for (auto c : m)
                if (c >= p) throw Error(ErrorKind::DegreeMismatch, "modulus coefficient out of range");
            if (!detail::is_irreducible(m, p))
                throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
            d->modulus = std::move(m);
        } else {
            d->modulus = default_modulus(p, e);
        }
        d->primitive = find_primitive(*d);
        build_tables(*d);
        Field f;
        f.d_ = std::move(d);
        return f;
    }

    static Field prime(std::uint32_t p) { return make(p, 1); }

    /// GF(q) for a prime power q, default modulus.
    static Field of_order(std::uint64_t q) {
        if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be >= 2");
        auto pf = detail::prime_factors(q);
        if (pf.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        std::uint32_t e = 0;
        for (std::uint64_t t = q; t > 1; t /= pf[0]) ++e;
        return make(static_cast<std::uint32_t>(pf[0]), e);
    }

    bool valid() const { return static_cast<bool>(d_); }
    std::uint32_t characteristic() const { return d_->p; }
    std::uint32_t degree() const { return d_->e; }
    std::uint32_t size() const { return d_->q; }
    const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
    Elem primitive_element() const { return d_->primitive; }

    static constexpr Elem zero() { return 0; }
    static constexpr Elem one() { return 1; }
    bool contains(Elem a) const { return a < d_->q; }

    Elem add(Elem a, Elem b) const {
        if (d_->p == 2) return a ^ b;
        if (d_->e == 1) {
            Elem s = a + b;
            return s >= d_->p ? s - d_->p : s;
        }
        if (!d_->add_table.empty()) return d_->add_table[std::size_t(a) * d_->q + b];
        return d_->add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (d_->p == 2) return a;
        if (d_->e == 1) return a == 0 ? 0 : d_->p - a;
        return d_->neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (!d_->exp_table.empty()) return d_->exp_table[d_->log_table[a] + d_->log_table[b]];
        return d_->mul_slow(a, b);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        if (!d_->exp_table.empty()) return d_->exp_table[(d_->q - 1 - d_->log_table[a]) % (d_->q - 1)];
        return pow(a, d_->q - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t k) const {
        if (k == 0) return 1;
        if (a == 0) return 0;
        if (!d_->exp_table.empty())
            return d_->exp_table[(std::uint64_t(d_->log_table[a]) * (k % (d_->q - 1))) % (d_->q - 1)];
        Elem r = 1, b = a;
        for (; k; k >>= 1) {
            if (k & 1) r = d_->mul_slow(r, b);
            b = d_->mul_slow(b, b);
        }
        return r;
    }

    /// a^(p^s); s is taken modulo the extension degree.
    Elem frobenius(Elem a, std::uint64_t s) const {
        s %= d_->e;
        for (std::uint64_t i = 0; i < s; ++i) a = pow(a, d_->p);
        return a;
    }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const {
        const std::int64_t p = d_->p;
        return static_cast<Elem>(((n % p) + p) % p);
    }

    std::vector<std::uint32_t> coefficients(Elem a) const { return d_->digits(a); }
    Elem from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() > d_->e) throw Error(ErrorKind::DegreeMismatch, "too many coefficients");
        for (auto x : c)
            if (x >= d_->p) throw Error(ErrorKind::DegreeMismatch, "coefficient out of range");
        return d_->from_digits(c);
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
        std::uint64_t n = d_->q - 1;
        for (auto r : detail::prime_factors(d_->q - 1))
            while (n % r == 0 && pow(a, n / r) == 1) n /= r;
        return n;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << d_->p << '^' << d_->e;
        return os.str();
    }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    static detail::DigitPoly default_modulus(std::uint32_t p, std::uint32_t e) {
        if (e == 1) return {0, 1};
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < e; ++i) count *= p;
        detail::DigitPoly m(e + 1, 0);
        m[e] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            // c_0 is the most significant digit of idx: constant-term-first lexicographic order
            std::uint64_t t = idx;
            for (std::uint32_t i = e; i-- > 0;) {
                m[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (m[0] == 0) continue;
            if (detail::is_irreducible(m, p)) return m;
        }
        throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
    }

    static Elem find_primitive(const detail::FieldData& d) {
        if (d.q == 2) return 1;
        const auto factors = detail::prime_factors(d.q - 1);
        for (Elem g = 1; g < d.q; ++g) {
            bool ok = true;
            for (auto r : factors) {
                Elem x = 1, b = g;
                for (std::uint64_t k = (d.q - 1) / r; k; k >>= 1) {
                    if (k & 1) x = d.mul_slow(x, b);
                    b = d.mul_slow(b, b);
                }
                if (x == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
        throw Error(ErrorKind::ConstructionFailed, "no primitive element");
    }

    static void build_tables(detail::FieldData& d) {
        if (d.q > kTableLimit) return;
        const std::uint32_t n = d.q - 1;
        d.exp_table.resize(2 * std::size_t(n) + 1);
        d.log_table.assign(d.q, 0);
        Elem x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            d.exp_table[i] = x;
            d.log_table[x] = i;
            x = d.mul_slow(x, d.primitive);
        }
        for (std::uint32_t i = n; i < d.exp_table.size(); ++i) d.exp_table[i] = d.exp_table[i - n];
        if (d.p != 2 && d.e > 1 && d.q <= 1024) {
            d.add_table.resize(std::size_t(d.q) * d.q);
            for (Elem a = 0; a < d.q; ++a)
                for (Elem b = 0; b < d.q; ++b) d.add_table[std::size_t(a) * d.q + b] = d.add_slow(a, b);
        }
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// A field element bound to its field; mixing fields is an error.
class FieldElement {
public:
    FieldElement(Field f, Elem v) : f_(std::move(f)), v_(v) {
        if (!f_.contains(v_)) throw Error(ErrorKind::FieldMismatch, "encoding out of range for " + f_.to_string());
    }

    static FieldElement from_coefficients(const Field& f, const std::vector<std::uint32_t>& c) {
        return {f, f.from_coefficients(c)};
    }

    const Field& field() const { return f_; }
    Elem value() const { return v_; }
    std::vector<std::uint32_t> coefficients() const { return f_.coefficients(v_); }
    bool is_zero() const { return v_ == 0; }

    FieldElement frobenius(std::uint64_t s) const { return {f_, f_.frobenius(v_, s)}; }
    FieldElement inverse() const { return {f_, f_.inv(v_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.div(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) throw Error(ErrorKind::FieldMismatch, a.f_.to_string() + " vs " + b.f_.to_string());
    }

    Field f_;
    Elem v_;
};

/// Fixed embedding of a subfield into a larger field of the same
/// characteristic. Prime fields embed naturally; otherwise the generator
/// (class of x) maps to the root of the small modulus with least encoding.
class Embedding {
public:
    Embedding() = default;

    Embedding(Field small, Field big) : small_(std::move(small)), big_(std::move(big)) {
        if (small_.characteristic() != big_.characteristic() || big_.degree() % small_.degree() != 0)
            throw Error(ErrorKind::EmbeddingMissing,
                        small_.to_string() + " is not a subfield of " + big_.to_string());
        image_.resize(small_.size());
        if (small_ == big_) {
            for (Elem a = 0; a < small_.size(); ++a) image_[a] = a;
        } else if (small_.degree() == 1) {
            for (Elem a = 0; a < small_.size(); ++a) image_[a] = a;
        } else {
            const auto& mod = small_.modulus();
            std::optional<Elem> root;
            for (Elem r = 0; r < big_.size() && !root; ++r) {
                Elem acc = 0;
                for (std::size_t i = mod.size(); i-- > 0;) acc = big_.add(big_.mul(acc, r), big_.from_int(mod[i]));
                if (acc == 0) root = r;
            }
            if (!root) throw Error(ErrorKind::EmbeddingMissing, "modulus has no root in target field");
            for (Elem a = 0; a < small_.size(); ++a) {
                const auto c = small_.coefficients(a);
                Elem acc = 0;
                for (std::size_t i = c.size(); i-- > 0;) acc = big_.add(big_.mul(acc, *root), big_.from_int(c[i]));
                image_[a] = acc;
            }
        }
        for (Elem a = 0; a < small_.size(); ++a) preimage_.emplace(image_[a], a);
    }

    const Field& small() const { return small_; }
    const Field& big() const { return big_; }

    Elem operator()(Elem a) const { return image_.at(a); }

    std::optional<Elem> preimage(Elem b) const {
        auto it = preimage_.find(b);
        if (it == preimage_.end()) return std::nullopt;
        return it->second;
    }

private:
    Field small_, big_;
    std::vector<Elem> image_;
    std::unordered_map<Elem, Elem> preimage_;
};

}  // namespace sigmalcd
