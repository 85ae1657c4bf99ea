#pragma once

// sigma-duals, hulls, hull normalization and the constructions that turn an
// arbitrary code (or pair of codes) into a sigma-LCD code (or an LCP).

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "oracle.hpp"

namespace sigmalcd {

namespace detail {

inline void check_compatible(const LinearCode& c, const SemiLinearMap& s) {
    if (c.length() != s.length()) throw Error(ErrorKind::LengthMismatch, "sigma length differs from code length");
    if (c.field() != s.field()) throw Error(ErrorKind::FieldMismatch, "sigma and code over different fields");
}

// Rows sigma(G(i,:)).
inline Matrix sigma_rows(const SemiLinearMap& s, const Matrix& g) {
    Matrix out(g.field(), 0, g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) out.append_row(s.apply(g.row(i)));
    return out;
}

}  // namespace detail

inline LinearCode euclidean_dual(const LinearCode& c) { return LinearCode::from_matrix(nullspace(c.generator())); }

/// sigma(C). With a Frobenius part the image is checked for closure under
/// scalar multiplication by the primitive element.
inline LinearCode apply_sigma(const SemiLinearMap& sigma, const LinearCode& c) {
    detail::check_compatible(c, sigma);
    const Matrix images = detail::sigma_rows(sigma, c.generator());
    LinearCode out = LinearCode::from_matrix(images);
    if (sigma.frob() != 0) {
        const Field& f = c.field();
        const Elem g = f.primitive_element();
        Vec scaled(c.length());
        for (std::size_t i = 0; i < c.dimension(); ++i) {
            const auto row = c.generator().row(i);
            for (std::size_t j = 0; j < row.size(); ++j) scaled[j] = f.mul(g, row[j]);
            if (!out.contains(sigma.apply(scaled)))
                throw Error(ErrorKind::ImageNotLinear, "sigma(C) is not closed under scalar multiplication");
        }
    }
    return out;
}

/// C^{⊥σ} = (σ(C))^⊥
inline LinearCode sigma_dual(const LinearCode& c, const SemiLinearMap& sigma) {
    return euclidean_dual(apply_sigma(sigma, c));
}

/// k - rank(G (G^σ)^T)
inline std::size_t hull_dim(const LinearCode& c, const SemiLinearMap& sigma) {
    detail::check_compatible(c, sigma);
    if (c.dimension() == 0) return 0;
    const Matrix& g = c.generator();
    return c.dimension() - rank(g * detail::sigma_rows(sigma, g).transpose());
}

inline bool is_sigma_lcd(const LinearCode& c, const SemiLinearMap& sigma) { return hull_dim(c, sigma) == 0; }

inline bool is_sigma_self_orthogonal(const LinearCode& c, const SemiLinearMap& sigma) {
    return hull_dim(c, sigma) == c.dimension();
}

inline bool is_sigma_self_dual(const LinearCode& c, const SemiLinearMap& sigma) {
    return 2 * c.dimension() == c.length() && is_sigma_self_orthogonal(c, sigma);
}

/// Euclidean hull C ∩ C^⊥ as a code.
inline LinearCode euclidean_hull(const LinearCode& c) {
    const Field& f = c.field();
    const Matrix& g = c.generator();
    // x G lies in C^⊥ iff x (G G^T) = 0
    const Matrix coeffs = nullspace((g * g.transpose()).transpose());
    Matrix rows(f, 0, c.length());
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        Vec w(c.length(), 0);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            const Elem x = coeffs(r, i);
            if (!x) continue;
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(x, g(i, j)));
        }
        rows.append_row(w);
    }
    return LinearCode::from_matrix(rows);
}

struct HullNormalForm {
    SemiLinearMap pi;  ///< coordinate permutation
    Matrix g;          ///< generator of pi(C): [I_h | A'] over [0 | A'']
    std::size_t h = 0;
};

/// Permutes the hull's pivot columns to the front (stable) and returns a
/// generator of pi(C) whose first h rows span the hull.
inline HullNormalForm normalize_hull(const LinearCode& c) {
    const Field& f = c.field();
    const std::size_t n = c.length();
    const LinearCode hull = euclidean_hull(c);
    const std::size_t h = hull.dimension();

    std::vector<std::size_t> perm(n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t t = 0; t < h; ++t) {
        perm[hull.pivots()[t]] = t;
        is_pivot[hull.pivots()[t]] = true;
    }
    for (std::size_t j = 0, next = h; j < n; ++j)
        if (!is_pivot[j]) perm[j] = next++;
    SemiLinearMap pi = SemiLinearMap::permutation(f, perm);

    Matrix basis = hull.generator();
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        Matrix trial = basis;
        trial.append_row(c.generator().row(i));
        if (rank(trial) > basis.rows()) basis = std::move(trial);
    }

    Matrix g = detail::sigma_rows(pi, basis);
    for (std::size_t r = h; r < g.rows(); ++r)
        for (std::size_t t = 0; t < h; ++t) {
            const Elem x = g(r, t);
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) g(r, j) = f.sub(g(r, j), f.mul(x, g(t, j)));
        }
    return {std::move(pi), std::move(g), h};
}

struct LcdConstruction {
    SemiLinearMap sigma;
    LinearCode code;
};

/// For q > 2 returns (sigma, C) with sigma diagonal: the smallest element
/// outside {0, 1} on the hull pivot coordinates and 1 elsewhere. For q = 2
/// returns (sigma, {0} x C) with sigma a permutation of n + 1 coordinates.
inline LcdConstruction make_lcd_sigma(const LinearCode& c) {
    const Field& f = c.field();
    const std::size_t n = c.length();
    const HullNormalForm nf = normalize_hull(c);
    const std::size_t h = nf.h;

    if (f.size() > 2) {
        const Elem lambda = 2;
        Vec diag(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            if (nf.pi.perm()[i] < h) diag[i] = lambda;
        return {SemiLinearMap::diagonal(f, std::move(diag)), c};
    }

    Matrix lengthened(f, 0, n + 1);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        Vec row(n + 1, 0);
        const auto src = c.generator().row(i);
        std::copy(src.begin(), src.end(), row.begin() + 1);
        lengthened.append_row(row);
    }
    std::vector<std::size_t> p1(n + 1), p2(n + 1);
    p1[0] = 0;
    for (std::size_t i = 0; i < n; ++i) p1[i + 1] = nf.pi.perm()[i] + 1;
    std::iota(p2.begin(), p2.end(), 0);
    if (h > 0) {
        p2[0] = h;
        for (std::size_t i = 1; i <= h; ++i) p2[i] = i - 1;
    }
    const SemiLinearMap pi1 = SemiLinearMap::permutation(f, std::move(p1));
    const SemiLinearMap pi2 = SemiLinearMap::permutation(f, std::move(p2));
    return {pi1.inverse().compose(pi2.compose(pi1)), LinearCode::from_matrix(lengthened)};
}

inline std::size_t min_distance(const LinearCode& c, const EnumerationBudget& budget = {}, unsigned jobs = 1) {
    return brute_min_distance(c, budget, jobs);
}

struct LcpPair {
    LinearCode c1;
    LinearCode c2;
    SemiLinearMap sigma;  ///< c2 = (sigma(input c2))^⊥, on the output length
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d1;  ///< distance of c1, when within budget
    std::optional<std::size_t> d2;  ///< distance of c2^⊥, when within budget
};

namespace detail {

inline LinearCode prepend_zero(const LinearCode& c) {
    Matrix m(c.field(), 0, c.length() + 1);
    Vec row(c.length() + 1, 0);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        const auto src = c.generator().row(i);
        std::copy(src.begin(), src.end(), row.begin() + 1);
        m.append_row(row);
    }
    return LinearCode::from_matrix(m);
}

// Permutation sending the pivot columns of `from` onto those of `to` in
// order, and the remaining columns onto the remaining columns in order.
inline std::vector<std::size_t> align_pivots(const LinearCode& from, const LinearCode& to) {
    const std::size_t n = from.length();
    std::vector<std::size_t> perm(n);
    std::vector<bool> from_piv(n, false), to_piv(n, false);
    for (std::size_t t = 0; t < from.dimension(); ++t) {
        perm[from.pivots()[t]] = to.pivots()[t];
        from_piv[from.pivots()[t]] = true;
        to_piv[to.pivots()[t]] = true;
    }
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (from_piv[j]) continue;
        while (to_piv[next]) ++next;
        perm[j] = next++;
    }
    return perm;
}

inline bool pair_is_complementary(const LinearCode& c1, const LinearCode& c2, const SemiLinearMap& s) {
    if (c1.dimension() == 0) return true;
    return rank(c1.generator() * sigma_rows(s, c2.generator()).transpose()) == c1.dimension();
}

// q > 2: sigma = D P with D chosen coordinate by coordinate on the pivot
// columns of c1 so that every leading principal minor of G1 (σ G2)^T is
// nonzero. Each minor is affine in the newest entry with nonzero slope, so
// at most one nonzero value fails.
inline SemiLinearMap lcp_sigma_odd(const LinearCode& c1, const LinearCode& c2) {
    const Field& f = c1.field();
    const std::size_t k = c1.dimension();
    const std::vector<std::size_t> perm = align_pivots(c2, c1);
    Vec diag(c1.length(), 1);
    std::vector<std::size_t> input_of(c1.length());
    for (std::size_t i = 0; i < perm.size(); ++i) input_of[perm[i]] = i;

    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t in = input_of[c1.pivots()[t]];
        bool found = false;
        for (Elem lambda = 1; lambda < f.size() && !found; ++lambda) {
            diag[in] = lambda;
            const SemiLinearMap s(f, perm, diag, 0);
            const Matrix m = c1.generator() * sigma_rows(s, c2.generator()).transpose();
            Matrix minor(f, 0, t + 1);
            for (std::size_t r = 0; r <= t; ++r) {
                Vec row(t + 1);
                for (std::size_t j = 0; j <= t; ++j) row[j] = m(r, j);
                minor.append_row(row);
            }
            found = rank(minor) == t + 1;
        }
        if (!found) throw Error(ErrorKind::ConstructionFailed, "no admissible scaling for the pair");
    }
    return {f, perm, std::move(diag), 0};
}

// q = 2 on lengthened codes: after aligning pivots, G1 (P G2)^T = I + N with
// N from the non-pivot columns. A permutation tau of the pivot columns and
// the zero column turns the identity part into a partial permutation matrix
// Q. Rows of Q are assigned by backtracking with a rank check per row.
inline std::optional<SemiLinearMap> lcp_sigma_binary(const LinearCode& c1, const LinearCode& c2) {
    const Field& f = c1.field();
    const std::size_t n = c1.length();
    const std::size_t k = c1.dimension();
    const std::vector<std::size_t> align = align_pivots(c2, c1);
    const SemiLinearMap p = SemiLinearMap::permutation(f, align);
    const Matrix pg2 = sigma_rows(p, c2.generator());
    const auto& piv = c1.pivots();

    std::vector<bool> special(n, false);
    for (auto s : piv) special[s] = true;
    special[0] = true;
    Matrix nmat(f, k, k);
    for (std::size_t j = 0; j < n; ++j) {
        if (special[j]) continue;
        for (std::size_t r = 0; r < k; ++r) {
            if (!c1.generator()(r, j)) continue;
            for (std::size_t u = 0; u < k; ++u) nmat(r, u) = f.add(nmat(r, u), pg2(u, j));
        }
    }

    // choice[t] in [0, k) picks e_u as row t of Q; k means the zero row
    std::vector<std::size_t> choice(k, 0);
    std::vector<bool> used(k + 1, false);
    Matrix rows(f, 0, k);
    std::function<bool(std::size_t)> place = [&](std::size_t t) -> bool {
        if (t == k) return true;
        std::vector<std::size_t> order;
        if (!used[t]) order.push_back(t);
        for (std::size_t u = 0; u <= k; ++u)
            if (u != t && !used[u]) order.push_back(u);
        for (std::size_t u : order) {
            Vec row(nmat.row(t).begin(), nmat.row(t).end());
            if (u < k) row[u] = f.add(row[u], 1);
            Matrix trial = rows;
            trial.append_row(row);
            if (rank(trial) != t + 1) continue;
            used[u] = true;
            choice[t] = u;
            Matrix saved = rows;
            rows = std::move(trial);
            if (place(t + 1)) return true;
            rows = std::move(saved);
            used[u] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    // tau(piv[u]) = piv[t] for choice[t] = u; tau(0) = piv[t] for the zero row;
    // the source left unassigned goes to 0.
    std::vector<std::size_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    std::vector<bool> source_used(k + 1, false);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t u = choice[t];
        if (u < k)
            tau[piv[u]] = piv[t];
        else
            tau[0] = piv[t];
        source_used[u] = true;
    }
    for (std::size_t u = 0; u <= k; ++u)
        if (!source_used[u]) (u < k ? tau[piv[u]] : tau[0]) = 0;
    return SemiLinearMap::permutation(f, tau).compose(p);
}

}  // namespace detail

/// Linear complementary pair from two codes of equal dimension: returns
/// (C1, (σ(C2))^⊥), lengthening both by a zero coordinate when q = 2.
inline LcpPair build_lcp(const LinearCode& c1_in, const LinearCode& c2_in, const EnumerationBudget& budget = {}) {
    if (c1_in.field() != c2_in.field()) throw Error(ErrorKind::FieldMismatch, "LCP inputs over different fields");
    if (c1_in.length() != c2_in.length()) throw Error(ErrorKind::LengthMismatch, "LCP inputs of different lengths");
    if (c1_in.dimension() != c2_in.dimension())
        throw Error(ErrorKind::DimensionMismatch, "LCP inputs of different dimensions");
    const Field& f = c1_in.field();
    const bool binary = f.size() == 2;
    const LinearCode c1 = binary ? detail::prepend_zero(c1_in) : c1_in;
    const LinearCode c2 = binary ? detail::prepend_zero(c2_in) : c2_in;
    const std::size_t n = c1.length();

    std::optional<SemiLinearMap> sigma;
    const SemiLinearMap id = SemiLinearMap::identity(f, n);
    if (detail::pair_is_complementary(c1, c2, id))
        sigma = id;
    else if (!binary)
        sigma = detail::lcp_sigma_odd(c1, c2);
    else
        sigma = detail::lcp_sigma_binary(c1, c2);

    if (!sigma || !detail::pair_is_complementary(c1, c2, *sigma))
        throw Error(ErrorKind::ConstructionFailed, "no complementary sigma found for the pair");

    const LinearCode image = apply_sigma(*sigma, c2);
    LcpPair out{c1, euclidean_dual(image), *sigma, n, c1.dimension(), std::nullopt, std::nullopt};
    if (out.k > 0 && word_count(c1) <= budget.max_words) out.d1 = brute_min_distance(c1, budget);
    if (out.k > 0 && word_count(image) <= budget.max_words) out.d2 = brute_min_distance(image, budget);
    return out;
}

}  // namespace sigmalcd
