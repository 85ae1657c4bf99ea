#pragma once

// Seeded random generators and small reference implementations used by the
// unit and acceptance tests. The reference code deliberately avoids the
// library's own arithmetic shortcuts (tables, rank formulas).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <sigmalcd/sigmalcd.hpp>

namespace testsupport {

using namespace sigmalcd;

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20261016);
    return r;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline Vec random_vec(const Field& f, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = static_cast<Elem>(uniform(0, f.size() - 1));
    return v;
}

/// Code spanned by k random rows (so the dimension may fall below k).
inline LinearCode random_code(const Field& f, std::size_t n, std::size_t k) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vec(f, n));
    return LinearCode::from_rows(f, n, rows);
}

/// Code of dimension exactly k.
inline LinearCode random_code_exact(const Field& f, std::size_t n, std::size_t k) {
    for (;;) {
        LinearCode c = random_code(f, n, k);
        if (c.dimension() == k) return c;
    }
}

inline std::vector<std::size_t> random_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng());
    return p;
}

inline SemiLinearMap random_sigma(const Field& f, std::size_t n) {
    Vec d(n);
    for (auto& x : d) x = static_cast<Elem>(uniform(1, f.size() - 1));
    return {f, random_perm(n), d, static_cast<unsigned>(uniform(0, f.degree() - 1))};
}

inline Poly random_poly(const Field& f, std::size_t max_deg) {
    return {f, random_vec(f, uniform(0, max_deg + 1))};
}

// Reference GF(p^e) multiplication on digit vectors: schoolbook product and
// long division by the modulus, with no tables.
inline Elem ref_mul(const Field& f, Elem a, Elem b) {
    const std::uint32_t p = f.characteristic(), e = f.degree();
    auto da = f.coefficients(a), db = f.coefficients(b);
    std::vector<std::uint64_t> prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
    const auto& m = f.modulus();
    for (std::size_t k = prod.size(); k-- > e;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        for (std::uint32_t j = 0; j <= e; ++j) prod[k - e + j] = (prod[k - e + j] + (p - c) * m[j]) % p;
    }
    std::vector<std::uint32_t> out(e);
    for (std::uint32_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return f.from_coefficients(out);
}

inline Elem ref_add(const Field& f, Elem a, Elem b) {
    auto da = f.coefficients(a), db = f.coefficients(b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % f.characteristic();
    return f.from_coefficients(da);
}

// Rank over GF(q) by brute force: counting the distinct vectors in the row
// span by closure, then taking log_q.
inline std::size_t ref_rank(const Matrix& m) {
    const Field& f = m.field();
    std::vector<Vec> span{Vec(m.cols(), 0)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Vec> next;
        for (const auto& v : span)
            for (Elem a = 0; a < f.size(); ++a) {
                Vec w = v;
                for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(a, m(r, j)));
                next.push_back(std::move(w));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
    }
    std::size_t k = 0;
    for (std::size_t s = span.size(); s > 1; s /= f.size()) ++k;
    return k;
}

// Hull dimension by enumerating the code and testing sigma-orthogonality of
// each word against every generator row.
inline std::size_t ref_hull_dim(const LinearCode& c, const SemiLinearMap& s) {
    const Field& f = c.field();
    std::vector<Vec> images;
    for (std::size_t i = 0; i < c.dimension(); ++i) images.push_back(s.apply(c.generator().row(i)));
    std::uint64_t count = 0;
    for_each_codeword(c, EnumerationBudget{}, [&](std::span<const Elem> w) {
        for (const auto& im : images)
            if (dot(f, w, im) != 0) return;
        ++count;
    });
    std::size_t k = 0;
    for (std::uint64_t t = count; t > 1; t /= f.size()) ++k;
    return k;
}

// Every element of F_q[G], in base-q counting order.
template <class Fn>
void for_each_group_element(const Field& f, const AbelianGroup& g, Fn&& fn) {
    Vec c(g.order(), 0);
    for (;;) {
        fn(GroupAlgebraElement(f, g, c));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == f.size()) c[i++] = 0;
        if (i == c.size()) return;
    }
}

/// All ideals of F_q[G]: principal ideals closed under sums.
inline std::vector<LinearCode> all_ideals(const Field& f, const AbelianGroup& g) {
    std::vector<LinearCode> ideals;
    auto add = [&](const LinearCode& c) {
        if (std::find(ideals.begin(), ideals.end(), c) != ideals.end()) return false;
        ideals.push_back(c);
        return true;
    };
    for_each_group_element(f, g, [&](const GroupAlgebraElement& e) { add(ideal_from_generator(e)); });
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            add(LinearCode::from_matrix(vstack(ideals[i].generator(), ideals[j].generator())));
    return ideals;
}

/// Ideals generated by an idempotent, found by testing every element.
inline std::vector<LinearCode> idempotent_ideals(const Field& f, const AbelianGroup& g) {
    std::vector<LinearCode> out;
    for_each_group_element(f, g, [&](const GroupAlgebraElement& e) {
        if (!(e * e == e)) return;
        LinearCode c = ideal_from_generator(e);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    });
    return out;
}

/// Binary Golay [23,12] generator: the degree-11 factor of x^23 - 1 with
/// the least integer encoding.
inline Poly golay_generator() {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 23);
    std::optional<Poly> best;
    auto encode = [](const Poly& p) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) v |= std::uint64_t(p.coeffs()[i]) << i;
        return v;
    };
    for (auto i : ctx.leaders()) {
        Poly m = ctx.minimal_polynomial(static_cast<long long>(i));
        if (m.degree() == 11 && (!best || encode(m) < encode(*best))) best = m;
    }
    return *best;
}

}  // namespace testsupport
