#pragma once

// Group algebras F_q[G] for finite Abelian G = Z_{n_1} x ... x Z_{n_r},
// ideals as codes of length |G|, the mu_{-1} involution and idempotent
// generators.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "sigma.hpp"

namespace sigmalcd {

/// Elements are indexed in mixed radix with the first factor varying slowest.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
        for (auto n : factors_)
            if (n < 1) throw Error(ErrorKind::Parse, "cyclic factor orders must be >= 1");
        for (auto n : factors_) order_ *= n;
    }

    /// "23" or "3,3"
    static AbelianGroup parse(std::string_view s) {
        std::vector<std::size_t> f;
        std::stringstream ss{std::string(s)};
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(tok, &used);
                if (used != tok.size()) throw Error(ErrorKind::Parse, "bad group factor '" + tok + "'");
                f.push_back(v);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, "bad group factor '" + tok + "'");
            }
        }
        if (f.empty()) throw Error(ErrorKind::Parse, "empty group spec");
        return AbelianGroup(std::move(f));
    }

    const std::vector<std::size_t>& factors() const { return factors_; }
    std::size_t order() const { return order_; }

    std::vector<std::size_t> digits(std::size_t idx) const {
        std::vector<std::size_t> d(factors_.size());
        for (std::size_t r = factors_.size(); r-- > 0;) {
            d[r] = idx % factors_[r];
            idx /= factors_[r];
        }
        return d;
    }
    std::size_t index(const std::vector<std::size_t>& d) const {
        std::size_t idx = 0;
        for (std::size_t r = 0; r < factors_.size(); ++r) idx = idx * factors_[r] + d[r] % factors_[r];
        return idx;
    }
    std::size_t add(std::size_t a, std::size_t b) const {
        auto da = digits(a), db = digits(b);
        for (std::size_t r = 0; r < da.size(); ++r) da[r] += db[r];
        return index(da);
    }
    std::size_t neg(std::size_t a) const {
        auto d = digits(a);
        for (std::size_t r = 0; r < d.size(); ++r) d[r] = (factors_[r] - d[r]) % factors_[r];
        return index(d);
    }
    /// The r-th cyclic generator.
    std::size_t generator(std::size_t r) const {
        std::vector<std::size_t> d(factors_.size(), 0);
        d[r] = 1;
        return index(d);
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

private:
    std::vector<std::size_t> factors_;
    std::size_t order_ = 1;
};

class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    GroupAlgebraElement(Field f, AbelianGroup g, Vec coeffs) : f_(std::move(f)), g_(std::move(g)), c_(std::move(coeffs)) {
        if (c_.size() != g_.order()) throw Error(ErrorKind::GroupMismatch, "coefficient count differs from |G|");
        for (Elem x : c_)
            if (!f_.contains(x)) throw Error(ErrorKind::FieldMismatch, "coefficient outside " + f_.to_string());
    }

    static GroupAlgebraElement zero(const Field& f, const AbelianGroup& g) { return {f, g, Vec(g.order(), 0)}; }
    static GroupAlgebraElement one(const Field& f, const AbelianGroup& g) { return basis(f, g, 0); }
    static GroupAlgebraElement basis(const Field& f, const AbelianGroup& g, std::size_t idx) {
        Vec c(g.order(), 0);
        c[idx] = 1;
        return {f, g, std::move(c)};
    }

    const Field& field() const { return f_; }
    const AbelianGroup& group() const { return g_; }
    const Vec& coeffs() const { return c_; }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        check(a, b);
        Vec c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.c_[i], b.c_[i]);
        return {a.f_, a.g_, std::move(c)};
    }

    /// Convolution: (ab)_g = sum_h a_h b_{g h^{-1}}.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        check(a, b);
        const Field& f = a.f_;
        Vec c(a.c_.size(), 0);
        for (std::size_t h = 0; h < a.c_.size(); ++h) {
            if (!a.c_[h]) continue;
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                if (!b.c_[k]) continue;
                const std::size_t g = a.g_.add(h, k);
                c[g] = f.add(c[g], f.mul(a.c_[h], b.c_[k]));
            }
        }
        return {f, a.g_, std::move(c)};
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.f_ == b.f_ && a.g_ == b.g_ && a.c_ == b.c_;
    }

private:
    static void check(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        if (!(a.g_ == b.g_)) throw Error(ErrorKind::GroupMismatch, "elements of different groups");
        if (a.f_ != b.f_) throw Error(ErrorKind::FieldMismatch, "elements over different fields");
    }

    Field f_;
    AbelianGroup g_;
    Vec c_;
};

/// sum a_g g -> sum a_{g^{-1}} g
inline GroupAlgebraElement mu_minus1_ga(const GroupAlgebraElement& a) {
    const auto& g = a.group();
    Vec c(g.order());
    for (std::size_t i = 0; i < c.size(); ++i) c[g.neg(i)] = a.coeffs()[i];
    return {a.field(), g, std::move(c)};
}

/// mu_{-1} as a coordinate permutation on F_q^{|G|}.
inline SemiLinearMap mu_minus1_map(const Field& f, const AbelianGroup& g) {
    std::vector<std::size_t> perm(g.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = g.neg(i);
    return SemiLinearMap::permutation(f, std::move(perm));
}

inline bool is_idempotent(const GroupAlgebraElement& e) { return e * e == e; }

/// F_q-span of {g e : g in G}.
inline LinearCode ideal_from_generator(const GroupAlgebraElement& e) {
    const auto& g = e.group();
    Matrix rows(e.field(), 0, g.order());
    for (std::size_t h = 0; h < g.order(); ++h)
        rows.append_row((GroupAlgebraElement::basis(e.field(), g, h) * e).coeffs());
    return LinearCode::from_matrix(rows);
}

/// Closure under multiplication by each cyclic generator.
inline bool is_ideal(const LinearCode& c, const AbelianGroup& g) {
    if (c.length() != g.order()) throw Error(ErrorKind::GroupMismatch, "code length differs from |G|");
    for (std::size_t r = 0; r < g.factors().size(); ++r) {
        const auto x = GroupAlgebraElement::basis(c.field(), g, g.generator(r));
        for (std::size_t i = 0; i < c.dimension(); ++i) {
            const GroupAlgebraElement w(c.field(), g, c.generator().row_vector(i));
            if (!c.contains((x * w).coeffs())) return false;
        }
    }
    return true;
}

/// Solves 1 = e + f with e in C and f in (mu_{-1}(C))^⊥. The solution exists
/// and is unique exactly when C is mu_{-1}-LCD; e is then verified to be an
/// idempotent generating C.
inline std::optional<GroupAlgebraElement> find_idempotent_generator(const LinearCode& c, const AbelianGroup& g) {
    if (!is_ideal(c, g)) throw Error(ErrorKind::NotAnIdeal, "code is not closed under the group action");
    const Field& f = c.field();
    const std::size_t n = g.order();
    const LinearCode dual = sigma_dual(c, mu_minus1_map(f, g));
    const Matrix stacked = vstack(c.generator(), dual.generator());
    if (rank(stacked) != n) return std::nullopt;
    const Vec one = GroupAlgebraElement::one(f, g).coeffs();
    const auto x = solve_combination(stacked, one);
    if (!x) return std::nullopt;
    Vec e(n, 0);
    for (std::size_t i = 0; i < c.dimension(); ++i)
        for (std::size_t j = 0; j < n; ++j) e[j] = f.add(e[j], f.mul((*x)[i], c.generator()(i, j)));
    GroupAlgebraElement el(f, g, std::move(e));
    if (!is_idempotent(el) || !(ideal_from_generator(el) == c))
        throw Error(ErrorKind::Discrepancy, "solution of 1 = e + f is not an idempotent generator");
    return el;
}

/// Idempotent route, cross-checked against hull_dim under mu_{-1}.
inline bool is_abelian_mu1_lcd(const LinearCode& c, const AbelianGroup& g) {
    const bool by_idempotent = find_idempotent_generator(c, g).has_value();
    const bool by_hull = is_sigma_lcd(c, mu_minus1_map(c.field(), g));
    if (by_idempotent != by_hull) throw Error(ErrorKind::Discrepancy, "idempotent and hull verdicts disagree");
    return by_idempotent;
}

}  // namespace sigmalcd
