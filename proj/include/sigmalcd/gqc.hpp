#pragma once

// Generalized quasi-cyclic codes: F_q[x]-submodules of
// R_1 x ... x R_l with R_j = F_q[x]/(x^{m_j} - 1), their constituents over
// the splitting field and the mu_a-LCD / self-orthogonal / self-dual tests.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "code.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "sigma.hpp"

namespace sigmalcd {

namespace detail {

inline std::size_t lcm_of(std::span<const std::size_t> xs) {
    std::size_t l = 1;
    for (auto x : xs) l = std::lcm(l, x);
    return l;
}

inline long long mod_pos(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace detail

class GqcCode {
public:
    GqcCode() = default;

    /// F_q[x]-span of the generator tuples. Each entry is reduced modulo
    /// x^{m_j} - 1.
    static GqcCode from_generators(const Field& f, std::vector<std::size_t> blocks,
                                   const std::vector<std::vector<Poly>>& gens) {
        GqcCode c(f, std::move(blocks));
        for (const auto& g : gens) {
            if (g.size() != c.blocks_.size())
                throw Error(ErrorKind::LengthMismatch, "generator tuple size differs from the number of blocks");
            std::vector<Poly> reduced;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (!g[j].is_zero() && g[j].field() != f)
                    throw Error(ErrorKind::FieldMismatch, "generator polynomial over a different field");
                reduced.push_back(g[j].is_zero() ? Poly::zero(f) : g[j].reduce_cyclic(c.blocks_[j]));
            }
            c.gens_.push_back(std::move(reduced));
        }
        Matrix rows(f, 0, c.n_);
        for (const auto& g : c.gens_) {
            Vec w = c.join(g);
            for (std::size_t k = 0; k < c.m_; ++k) {
                rows.append_row(w);
                w = c.shift(w);
            }
        }
        c.flat_ = LinearCode::from_matrix(rows);
        return c;
    }

    /// A flat code with declared block lengths; it must be closed under the
    /// simultaneous cyclic shift of every block.
    static GqcCode from_flat(const Field& f, std::vector<std::size_t> blocks, const LinearCode& flat) {
        GqcCode c(f, std::move(blocks));
        if (flat.length() != c.n_) throw Error(ErrorKind::LengthMismatch, "flat code length differs from block sum");
        if (flat.field() != f) throw Error(ErrorKind::FieldMismatch, "flat code over a different field");
        for (std::size_t i = 0; i < flat.dimension(); ++i) {
            if (!flat.contains(c.shift(flat.generator().row(i))))
                throw Error(ErrorKind::NotShiftClosed, "code is not closed under the block-wise shift");
            c.gens_.push_back(c.split(flat.generator().row(i)));
        }
        c.flat_ = flat;
        return c;
    }

    const Field& field() const { return f_; }
    const std::vector<std::size_t>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t length() const { return n_; }
    /// lcm of the block lengths
    std::size_t m() const { return m_; }
    std::size_t offset(std::size_t j) const { return offsets_[j]; }
    const std::vector<std::vector<Poly>>& generators() const { return gens_; }
    const LinearCode& flat() const { return flat_; }

    bool is_quasi_cyclic() const {
        return std::all_of(blocks_.begin(), blocks_.end(), [&](std::size_t b) { return b == blocks_.front(); });
    }
    bool is_cyclic() const { return blocks_.size() == 1; }

    std::vector<Poly> split(std::span<const Elem> w) const {
        std::vector<Poly> out;
        for (std::size_t j = 0; j < blocks_.size(); ++j)
            out.emplace_back(f_, Vec(w.begin() + offsets_[j], w.begin() + offsets_[j] + blocks_[j]));
        return out;
    }

    Vec join(const std::vector<Poly>& polys) const {
        Vec w(n_, 0);
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            const auto& c = polys[j].coeffs();
            for (std::size_t k = 0; k < c.size(); ++k) {
                const std::size_t pos = offsets_[j] + k % blocks_[j];
                w[pos] = f_.add(w[pos], c[k]);
            }
        }
        return w;
    }

    /// Multiplication by x in every block.
    Vec shift(std::span<const Elem> w) const {
        Vec out(w.size());
        for (std::size_t j = 0; j < blocks_.size(); ++j)
            for (std::size_t k = 0; k < blocks_[j]; ++k)
                out[offsets_[j] + (k + 1) % blocks_[j]] = w[offsets_[j] + k];
        return out;
    }

private:
    GqcCode(Field f, std::vector<std::size_t> blocks) : f_(std::move(f)), blocks_(std::move(blocks)) {
        for (auto b : blocks_) {
            if (b == 0) throw Error(ErrorKind::LengthMismatch, "block length must be positive");
            if (std::gcd<std::uint64_t, std::uint64_t>(b, f_.size()) != 1)
                throw Error(ErrorKind::GcdNotOne, "block length " + std::to_string(b) + " not coprime to q");
        }
        for (auto b : blocks_) {
            offsets_.push_back(n_);
            n_ += b;
        }
        m_ = detail::lcm_of(blocks_);
        flat_ = LinearCode::zero(f_, n_);
    }

    Field f_;
    std::vector<std::size_t> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t n_ = 0, m_ = 1;
    std::vector<std::vector<Poly>> gens_;
    LinearCode flat_;
};

namespace detail {

inline void check_unit(long long a, std::size_t m) {
    if (std::gcd<long long, long long>(mod_pos(a, static_cast<long long>(m)), static_cast<long long>(m)) != 1 &&
        m != 1)
        throw Error(ErrorKind::GcdNotOne, "gcd(a, m) != 1 for a = " + std::to_string(a));
}

inline void check_context(const GqcCode& c, const CyclotomicContext& ctx) {
    if (c.field() != ctx.base()) throw Error(ErrorKind::FieldMismatch, "context field differs from code field");
    for (auto b : c.blocks())
        if (ctx.m() % b != 0) throw Error(ErrorKind::LengthMismatch, "block length does not divide context m");
}

}  // namespace detail

/// The coordinate permutation c_j(x) -> c_j(x^a) mod (x^{m_j} - 1).
inline SemiLinearMap mu_a_map(const Field& f, std::span<const std::size_t> blocks, long long a) {
    std::vector<std::size_t> perm;
    std::size_t off = 0;
    for (auto b : blocks) {
        const long long aa = detail::mod_pos(a, static_cast<long long>(b));
        for (std::size_t k = 0; k < b; ++k)
            perm.push_back(off + static_cast<std::size_t>((static_cast<long long>(k) * aa) % static_cast<long long>(b)));
        off += b;
    }
    return SemiLinearMap::permutation(f, std::move(perm));
}

inline GqcCode mu_a(const GqcCode& c, long long a) {
    detail::check_unit(a, c.m());
    const SemiLinearMap s = mu_a_map(c.field(), c.blocks(), a);
    return GqcCode::from_flat(c.field(), c.blocks(), apply_sigma(s, c.flat()));
}

/// C_i as a subspace of V_i, held over the splitting field of the context.
/// Entries lie in GF(q)[xi^i] and coordinates of inactive blocks are zero.
struct Constituent {
    std::size_t index = 0;
    std::vector<bool> active;  ///< block j active iff xi^{i m_j} = 1
    LinearCode code;
    /// Pairing weight m_j^{-1} of block j; empty means all ones.
    Vec weight;

    std::size_t ambient_dim() const { return static_cast<std::size_t>(std::count(active.begin(), active.end(), true)); }
    std::size_t dimension() const { return code.dimension(); }
    bool is_zero() const { return code.dimension() == 0; }
    bool is_full() const { return code.dimension() == ambient_dim(); }
};

/// m_j^{-1} in the prime subfield. The flat Euclidean product of two words
/// splits over i in Z_m as sum_j m_j^{-1} c_j(xi^i) w_j(xi^{-i}), so this is
/// the weight each block carries in a V_i pairing.
inline Vec block_weights(std::span<const std::size_t> blocks, const Field& ext) {
    Vec w;
    for (auto b : blocks) w.push_back(ext.inv(static_cast<Elem>(b % ext.characteristic())));
    return w;
}

inline std::vector<bool> active_blocks(std::span<const std::size_t> blocks, const CyclotomicContext& ctx, long long i) {
    std::vector<bool> act;
    const std::size_t ii = ctx.reduce(i);
    for (auto b : blocks) act.push_back((ii * b) % ctx.m() == 0);
    return act;
}

/// Evaluation vector (c_1(xi^i) delta_1, ..., c_l(xi^i) delta_l) of one word.
inline Vec evaluate_word(const GqcCode& c, const CyclotomicContext& ctx, long long i, std::span<const Elem> w,
                         const std::vector<bool>& active) {
    const Field& ext = ctx.ext();
    const Embedding& emb = ctx.embedding();
    Vec v(c.block_count(), 0);
    for (std::size_t j = 0; j < c.block_count(); ++j) {
        if (!active[j]) continue;
        Elem acc = 0;
        for (std::size_t k = 0; k < c.blocks()[j]; ++k) {
            const Elem x = w[c.offset(j) + k];
            if (x) acc = ext.add(acc, ext.mul(emb(x), ctx.xi_pow(static_cast<long long>(k) * i)));
        }
        v[j] = acc;
    }
    return v;
}

inline Constituent constituent(const GqcCode& c, const CyclotomicContext& ctx, long long i) {
    detail::check_context(c, ctx);
    Constituent out;
    out.index = ctx.reduce(i);
    out.active = active_blocks(c.blocks(), ctx, i);
    out.weight = block_weights(c.blocks(), ctx.ext());
    Matrix rows(ctx.ext(), 0, c.block_count());
    for (std::size_t r = 0; r < c.flat().dimension(); ++r)
        rows.append_row(evaluate_word(c, ctx, i, c.flat().generator().row(r), out.active));
    out.code = LinearCode::from_matrix(rows);
    return out;
}

/// Dual inside V_i for sum_j weight_j c_j w_j. With equal weights on the
/// active blocks (QC codes, or every m_j of the same residue mod p) this is
/// the plain Euclidean V_i-dual.
inline Constituent v_dual(const Constituent& con) {
    const std::size_t l = con.active.size();
    const Field& f = con.code.field();
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < l; ++j)
        if (con.active[j]) cols.push_back(j);
    Constituent out{con.index, con.active, LinearCode::zero(f, l), con.weight};
    if (cols.empty()) return out;
    Matrix g = con.code.generator().select_columns(cols);
    if (!con.weight.empty())
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t t = 0; t < cols.size(); ++t) g(r, t) = f.mul(g(r, t), con.weight[cols[t]]);
    const Matrix ns = nullspace(g);
    Matrix rows(f, 0, l);
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        Vec w(l, 0);
        for (std::size_t t = 0; t < cols.size(); ++t) w[cols[t]] = ns(r, t);
        rows.append_row(w);
    }
    out.code = LinearCode::from_matrix(rows);
    return out;
}

/// Hermitian dual inside V_i with exponent q^{d/2}, d = |C_i|:
/// the entrywise q^{d/2}-power of the Euclidean V_i-dual.
inline Constituent hermitian_v_dual(const Constituent& con, const CyclotomicContext& ctx) {
    const std::size_t d = ctx.coset_of(static_cast<long long>(con.index)).size();
    if (d % 2 != 0) throw Error(ErrorKind::DegreeOdd, "coset size " + std::to_string(d) + " is odd");
    const Field& ext = ctx.ext();
    const std::uint64_t s = static_cast<std::uint64_t>(ctx.base().degree()) * (d / 2);
    Constituent e = v_dual(con);
    Matrix rows(ext, 0, con.active.size());
    for (std::size_t r = 0; r < e.code.dimension(); ++r) {
        Vec w = e.code.generator().row_vector(r);
        for (auto& x : w) x = ext.frobenius(x, s);
        rows.append_row(w);
    }
    e.code = LinearCode::from_matrix(rows);
    return e;
}

namespace detail {

// Lazily computed constituents of one code.
class ConstituentTable {
public:
    ConstituentTable(const GqcCode& c, const CyclotomicContext& ctx) : c_(c), ctx_(ctx), cache_(ctx.m()) {
        check_context(c, ctx);
    }
    const Constituent& at(long long i) {
        auto& slot = cache_[ctx_.reduce(i)];
        if (!slot) slot = constituent(c_, ctx_, i);
        return *slot;
    }

private:
    const GqcCode& c_;
    const CyclotomicContext& ctx_;
    std::vector<std::optional<Constituent>> cache_;
};

inline std::vector<std::size_t> check_indices(const CyclotomicContext& ctx, bool all_indices) {
    if (!all_indices) return ctx.leaders();
    std::vector<std::size_t> all(ctx.m());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

}  // namespace detail

/// C_i ∩ C_{-ai}^{⊥'} = {0} over the coset leaders; conjugation by q maps
/// the intersection at i onto the one at iq, so leaders suffice. Pass
/// all_indices to test every i in Z_m instead.
inline bool is_mua_lcd(const GqcCode& c, const CyclotomicContext& ctx, long long a, bool all_indices = false) {
    detail::check_unit(a, ctx.m());
    detail::ConstituentTable table(c, ctx);
    for (std::size_t i : detail::check_indices(ctx, all_indices)) {
        const Constituent& ci = table.at(static_cast<long long>(i));
        if (ci.is_zero()) continue;
        const Constituent d = v_dual(table.at(-a * static_cast<long long>(i)));
        if (intersection_dim(ci.code.generator(), d.code.generator()) != 0) return false;
    }
    return true;
}

inline bool is_mua_self_orthogonal(const GqcCode& c, const CyclotomicContext& ctx, long long a,
                                   bool all_indices = false) {
    detail::check_unit(a, ctx.m());
    detail::ConstituentTable table(c, ctx);
    for (std::size_t i : detail::check_indices(ctx, all_indices)) {
        const Constituent& ci = table.at(static_cast<long long>(i));
        if (!v_dual(table.at(-a * static_cast<long long>(i))).code.contains(ci.code)) return false;
    }
    return true;
}

inline bool is_mua_self_dual(const GqcCode& c, const CyclotomicContext& ctx, long long a, bool all_indices = false) {
    detail::check_unit(a, ctx.m());
    detail::ConstituentTable table(c, ctx);
    for (std::size_t i : detail::check_indices(ctx, all_indices)) {
        const Constituent& ci = table.at(static_cast<long long>(i));
        if (!(v_dual(table.at(-a * static_cast<long long>(i))).code == ci.code)) return false;
    }
    return true;
}

/// Flat-code counterparts through hull_dim with mu_a as a permutation.
inline std::size_t flat_mua_hull_dim(const GqcCode& c, long long a) {
    detail::check_unit(a, c.m());
    return hull_dim(c.flat(), mu_a_map(c.field(), c.blocks(), a));
}
inline bool flat_mua_lcd(const GqcCode& c, long long a) { return flat_mua_hull_dim(c, a) == 0; }
inline bool flat_mua_self_orthogonal(const GqcCode& c, long long a) {
    return flat_mua_hull_dim(c, a) == c.flat().dimension();
}
inline bool flat_mua_self_dual(const GqcCode& c, long long a) {
    return 2 * c.flat().dimension() == c.length() && flat_mua_self_orthogonal(c, a);
}

/// S = {i in Z_m : C_i != {0}}; requires every constituent to be {0} or V_i.
inline std::vector<std::size_t> nonzero_support(const GqcCode& c, const CyclotomicContext& ctx) {
    detail::ConstituentTable table(c, ctx);
    std::vector<std::size_t> s;
    for (std::size_t i : ctx.leaders()) {
        const Constituent& ci = table.at(static_cast<long long>(i));
        if (!ci.is_zero() && !ci.is_full())
            throw Error(ErrorKind::ConstituentNotTrivial, "constituent " + std::to_string(i) + " is neither {0} nor V_i");
        if (!ci.is_zero())
            for (std::size_t j : ctx.coset_of(static_cast<long long>(i))) s.push_back(j);
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// S = -aS for codes whose constituents are all {0} or V_i.
inline bool trivial_constituent_lcd(const GqcCode& c, const CyclotomicContext& ctx, long long a) {
    detail::check_unit(a, ctx.m());
    const std::vector<std::size_t> s = nonzero_support(c, ctx);
    std::vector<std::size_t> t;
    for (std::size_t i : s) t.push_back(ctx.reduce(-a * static_cast<long long>(i)));
    std::sort(t.begin(), t.end());
    return s == t;
}

/// Whether the flat code under coordinate reversal is sigma-LCD.
inline bool reversal_sigma_lcd(const GqcCode& c) {
    if (!c.is_cyclic()) throw Error(ErrorKind::NotCyclic, "reversal test needs a single block");
    return is_sigma_lcd(c.flat(), SemiLinearMap::reversal(c.field(), c.length()));
}

/// Projection of the code onto block j, as a cyclic code.
inline GqcCode block_projection(const GqcCode& c, std::size_t j) {
    std::vector<std::size_t> cols(c.blocks()[j]);
    std::iota(cols.begin(), cols.end(), c.offset(j));
    return GqcCode::from_flat(c.field(), {c.blocks()[j]},
                              LinearCode::from_matrix(c.flat().generator().select_columns(cols)));
}

/// Pairwise coprime blocks: mu_a-LCD iff every block projection is a mu_a-LCD
/// cyclic code and C_0 is Euclidean LCD in F_q^l.
inline bool cross_block_lcd(const GqcCode& c, const CyclotomicContext& ctx, long long a) {
    const auto& b = c.blocks();
    std::size_t prod = 1;
    for (std::size_t x = 0; x < b.size(); ++x) {
        prod *= b[x];
        for (std::size_t y = x + 1; y < b.size(); ++y)
            if (std::gcd(b[x], b[y]) != 1) throw Error(ErrorKind::BlocksNotCoprime, "block lengths not pairwise coprime");
    }
    detail::check_unit(a, prod);
    for (std::size_t j = 0; j < b.size(); ++j) {
        const GqcCode proj = block_projection(c, j);
        if (!is_mua_lcd(proj, CyclotomicContext(c.field(), b[j]), a)) return false;
    }
    const Constituent c0 = constituent(c, ctx, 0);
    return intersection_dim(c0.code.generator(), v_dual(c0).code.generator()) == 0;
}

// ---------------------------------------------------------------------------
// 1-generator codes

namespace detail {

inline std::vector<Poly> reduce_tuple(const std::vector<Poly>& cvec, std::span<const std::size_t> blocks) {
    if (cvec.size() != blocks.size()) throw Error(ErrorKind::LengthMismatch, "tuple size differs from block count");
    std::vector<Poly> out;
    for (std::size_t j = 0; j < cvec.size(); ++j) out.push_back(cvec[j].reduce_cyclic(blocks[j]));
    return out;
}

// Per leader: (evaluation vector is nonzero, sum_j delta m_j^{-1} c_j(xi^i) c_j(xi^{-ai})).
inline std::vector<std::pair<bool, Elem>> one_gen_evaluations(const Field& f, const std::vector<Poly>& cvec,
                                                              std::span<const std::size_t> blocks,
                                                              const CyclotomicContext& ctx, long long a) {
    if (f != ctx.base()) throw Error(ErrorKind::FieldMismatch, "context field differs from tuple field");
    for (auto b : blocks)
        if (ctx.m() % b != 0) throw Error(ErrorKind::LengthMismatch, "block length does not divide context m");
    check_unit(a, ctx.m());
    const Field& ext = ctx.ext();
    const Vec weight = block_weights(blocks, ext);
    std::vector<std::pair<bool, Elem>> out;
    for (std::size_t i : ctx.leaders()) {
        const auto act = active_blocks(blocks, ctx, static_cast<long long>(i));
        bool nonzero = false;
        Elem sum = 0;
        for (std::size_t j = 0; j < cvec.size(); ++j) {
            if (!act[j]) continue;
            const Elem x = eval_ext(cvec[j], ctx.xi_pow(static_cast<long long>(i)), ctx.embedding());
            const Elem y = eval_ext(cvec[j], ctx.xi_pow(-a * static_cast<long long>(i)), ctx.embedding());
            nonzero = nonzero || x != 0;
            sum = ext.add(sum, ext.mul(weight[j], ext.mul(x, y)));
        }
        out.emplace_back(nonzero, sum);
    }
    return out;
}

inline std::size_t common_block(std::span<const std::size_t> blocks) {
    if (blocks.empty() || !std::all_of(blocks.begin(), blocks.end(), [&](auto b) { return b == blocks[0]; }))
        throw Error(ErrorKind::NotQuasiCyclic, "criterion needs equal block lengths");
    return blocks[0];
}

}  // namespace detail

/// Evaluation form: at every leader with a nonzero evaluation vector the
/// mu_a pairing sum is nonzero.
inline bool one_gen_lcd_eval(const Field& f, const std::vector<Poly>& cvec, std::span<const std::size_t> blocks,
                             const CyclotomicContext& ctx, long long a) {
    const auto red = detail::reduce_tuple(cvec, blocks);
    for (const auto& [nonzero, sum] : detail::one_gen_evaluations(f, red, blocks, ctx, a))
        if (nonzero && sum == 0) return false;
    return true;
}

/// Sum_j c_j(x) c_j(x^{-a}) mod x^m - 1.
inline Poly mu_a_pairing_poly(const Field& f, const std::vector<Poly>& cvec, std::size_t m, long long a) {
    Poly sum = Poly::zero(f);
    for (const auto& c : cvec) sum = sum + c * c.substitute_power(-a, m);
    return sum.reduce_cyclic(m);
}

/// gcd(c_1, ..., c_l, x^m - 1)
inline Poly tuple_gcd(const Field& f, const std::vector<Poly>& cvec, std::size_t m) {
    std::vector<Poly> all(cvec.begin(), cvec.end());
    all.push_back(Poly::cyclic_modulus(f, m));
    return gcd(std::span<const Poly>(all));
}

/// Gcd form, equal block lengths only:
/// gcd(sum c_j(x) c_j(x^{-a}), x^m - 1) == gcd(c_1, ..., c_l, x^m - 1).
inline bool one_gen_lcd_gcd(const Field& f, const std::vector<Poly>& cvec, std::span<const std::size_t> blocks,
                            long long a) {
    const std::size_t m = detail::common_block(blocks);
    detail::check_unit(a, m);
    const auto red = detail::reduce_tuple(cvec, blocks);
    return gcd(mu_a_pairing_poly(f, red, m, a), Poly::cyclic_modulus(f, m)) == tuple_gcd(f, red, m);
}

/// Evaluation form, cross-checked against the gcd form on equal blocks.
inline bool one_gen_lcd(const Field& f, const std::vector<Poly>& cvec, std::span<const std::size_t> blocks,
                        const CyclotomicContext& ctx, long long a) {
    const bool eval = one_gen_lcd_eval(f, cvec, blocks, ctx, a);
    if (!blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [&](auto b) { return b == blocks[0]; }) &&
        one_gen_lcd_gcd(f, cvec, blocks, a) != eval)
        throw Error(ErrorKind::Discrepancy, "evaluation and gcd forms disagree");
    return eval;
}

inline bool one_gen_self_orthogonal(const Field& f, const std::vector<Poly>& cvec, std::span<const std::size_t> blocks,
                                    const CyclotomicContext& ctx, long long a) {
    const auto red = detail::reduce_tuple(cvec, blocks);
    for (const auto& ev : detail::one_gen_evaluations(f, red, blocks, ctx, a))
        if (ev.second != 0) return false;
    return true;
}

/// S_j = {i in Z_m : c_j(xi^i) != 0}
inline std::vector<std::vector<std::size_t>> evaluation_supports(const std::vector<Poly>& cvec,
                                                                 const CyclotomicContext& ctx) {
    std::vector<std::vector<std::size_t>> s;
    for (const auto& c : cvec) {
        std::vector<std::size_t> sj;
        for (std::size_t i = 0; i < ctx.m(); ++i)
            if (eval_ext(c, ctx.xi_pow(static_cast<long long>(i)), ctx.embedding()) != 0) sj.push_back(i);
        s.push_back(std::move(sj));
    }
    return s;
}

/// True when the supports S_j are pairwise disjoint (the code is then
/// mu_{-1}-LCD, which is re-checked); false means the criterion does not apply.
inline bool disjoint_support_lcd(const Field& f, const std::vector<Poly>& cvec, std::span<const std::size_t> blocks,
                                 const CyclotomicContext& ctx) {
    detail::common_block(blocks);
    const auto red = detail::reduce_tuple(cvec, blocks);
    const auto s = evaluation_supports(red, ctx);
    std::vector<bool> seen(ctx.m(), false);
    for (const auto& sj : s)
        for (std::size_t i : sj) {
            if (seen[i]) return false;
            seen[i] = true;
        }
    if (!one_gen_lcd(f, red, blocks, ctx, -1))
        throw Error(ErrorKind::Discrepancy, "disjoint supports but not mu_{-1}-LCD");
    return true;
}

struct MaximalCheck {
    bool lcd = false;
    bool maximal = false;
    std::optional<Poly> canonical;  ///< c with C = F_q[x](c, c + 1)
};

inline MaximalCheck maximal_one_gen_check(const Field& f, const std::vector<Poly>& cvec,
                                          std::span<const std::size_t> blocks, long long a) {
    const std::size_t m = detail::common_block(blocks);
    detail::check_unit(a, m);
    const auto red = detail::reduce_tuple(cvec, blocks);
    MaximalCheck r;
    r.maximal = tuple_gcd(f, red, m).degree() == 0;
    r.lcd = one_gen_lcd_gcd(f, red, blocks, a);
    const bool shape = f.characteristic() == 2 && red.size() == 2 && m % 2 == 1 &&
                       detail::mod_pos(a, static_cast<long long>(m)) == static_cast<long long>(m) - 1;
    if (shape && r.lcd && r.maximal) {
        const Poly mod = Poly::cyclic_modulus(f, m);
        const auto inv = inverse_mod(red[0] + red[1], mod);
        if (!inv) throw Error(ErrorKind::InverseMissing, "c_1 + c_2 is not invertible modulo x^m + 1");
        r.canonical = (red[0] * *inv) % mod;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Product construction

struct ProductComponent {
    std::size_t m = 1;
    std::size_t r = 1;
    LinearCode code;  ///< [r, k] Euclidean LCD code over GF(q^{d}), d = deg M_{xi^{m/m_j}}
};

struct ProductResult {
    GqcCode code;
    std::size_t length = 0;
    std::size_t dimension = 0;            ///< sum_j k_j d_j
    std::vector<std::size_t> degrees;     ///< d_j
    std::vector<Poly> h;                  ///< H_j = (x^{m_j} - 1) / M_j
    std::vector<std::optional<std::size_t>> component_distance;
    std::vector<std::optional<std::size_t>> h_distance;
    std::optional<std::size_t> bound;     ///< min_j d_j d_{H_j}
};

/// Degree of the minimal polynomial of a primitive m_j-th root over GF(q).
inline std::size_t component_degree(const Field& q, std::size_t mj) { return multiplicative_order(q.size(), mj); }

/// GF(q^d) with the default modulus over the prime field.
inline Field component_field(const Field& q, std::size_t mj) {
    return Field::make(q.characteristic(), static_cast<std::uint32_t>(q.degree() * component_degree(q, mj)));
}

inline ProductResult product_lcd_gqc(const Field& q, const std::vector<ProductComponent>& comps,
                                     const EnumerationBudget& budget = {}) {
    std::vector<std::size_t> ms;
    for (const auto& c : comps) {
        if (std::find(ms.begin(), ms.end(), c.m) != ms.end())
            throw Error(ErrorKind::BlocksNotDistinct, "component block lengths must be distinct");
        if (std::gcd<std::uint64_t, std::uint64_t>(c.m, q.size()) != 1)
            throw Error(ErrorKind::GcdNotOne, "block length not coprime to q");
        ms.push_back(c.m);
    }
    ProductResult res;
    std::vector<std::size_t> blocks;
    for (const auto& c : comps)
        for (std::size_t t = 0; t < c.r; ++t) blocks.push_back(c.m);
    if (comps.empty()) {
        res.code = GqcCode::from_generators(q, {}, {});
        return res;
    }

    const CyclotomicContext ctx(q, detail::lcm_of(ms));
    const Field& ext = ctx.ext();
    std::vector<std::vector<Poly>> gens;
    std::size_t block_base = 0;
    for (const auto& comp : comps) {
        const Field cf = component_field(q, comp.m);
        if (comp.code.field() != cf)
            throw Error(ErrorKind::FieldMismatch, "component code must be over " + cf.to_string());
        if (comp.code.length() != comp.r)
            throw Error(ErrorKind::LengthMismatch, "component code length differs from r");
        if (!is_sigma_lcd(comp.code, SemiLinearMap::identity(cf, comp.r)))
            throw Error(ErrorKind::ComponentNotLcd, "component code is not Euclidean LCD");

        const long long mhat = static_cast<long long>(ctx.m() / comp.m);
        const Poly mpoly = ctx.minimal_polynomial(mhat);
        const std::size_t d = static_cast<std::size_t>(mpoly.degree());
        const Poly hj = Poly::cyclic_modulus(q, comp.m) / mpoly;
        res.degrees.push_back(d);
        res.h.push_back(hj);

        // Evaluation at beta = xi^{m/m_j} is a bijection from the ideal
        // (H_j) onto GF(q)[beta]; invert it by enumerating the ideal.
        const Elem beta = ctx.xi_pow(mhat);
        std::unordered_map<Elem, Poly> inverse;
        std::vector<Poly> basis;
        for (std::size_t k = 0; k < d; ++k) basis.push_back((Poly::monomial(q, k) * hj).reduce_cyclic(comp.m));
        std::vector<Elem> digits(d, 0);
        for (;;) {
            Poly u = Poly::zero(q);
            for (std::size_t k = 0; k < d; ++k)
                if (digits[k]) u = u + basis[k].scale(digits[k]);
            inverse.emplace(eval_ext(u, beta, ctx.embedding()), u);
            std::size_t k = 0;
            while (k < d && ++digits[k] == q.size()) digits[k++] = 0;
            if (k == d) break;
        }
        std::size_t expected = 1;
        for (std::size_t k = 0; k < d; ++k) expected *= q.size();
        if (inverse.size() != expected) throw Error(ErrorKind::Discrepancy, "evaluation on the ideal is not injective");

        const Embedding emb(cf, ext);
        for (std::size_t row = 0; row < comp.code.dimension(); ++row) {
            std::vector<Poly> g(blocks.size(), Poly::zero(q));
            for (std::size_t t = 0; t < comp.r; ++t) {
                const auto it = inverse.find(emb(comp.code.generator()(row, t)));
                if (it == inverse.end()) throw Error(ErrorKind::Discrepancy, "component entry outside GF(q)[beta]");
                g[block_base + t] = it->second;
            }
            gens.push_back(std::move(g));
        }
        res.dimension += comp.code.dimension() * d;

        const LinearCode hcode = GqcCode::from_generators(q, {comp.m}, {{hj}}).flat();
        res.h_distance.push_back(word_count(hcode) <= budget.max_words && hcode.dimension() > 0
                                     ? std::optional<std::size_t>(brute_min_distance(hcode, budget))
                                     : std::nullopt);
        res.component_distance.push_back(word_count(comp.code) <= budget.max_words && comp.code.dimension() > 0
                                             ? std::optional<std::size_t>(brute_min_distance(comp.code, budget))
                                             : std::nullopt);
        block_base += comp.r;
    }

    res.code = GqcCode::from_generators(q, blocks, gens);
    res.length = res.code.length();
    if (res.code.flat().dimension() != res.dimension)
        throw Error(ErrorKind::Discrepancy, "product dimension differs from sum k_j d_j");
    if (!is_mua_lcd(res.code, ctx, -1)) throw Error(ErrorKind::ConstructionFailed, "product code is not mu_{-1}-LCD");

    std::optional<std::size_t> bound;
    for (std::size_t j = 0; j < comps.size(); ++j) {
        if (comps[j].code.dimension() == 0) continue;
        if (!res.component_distance[j] || !res.h_distance[j]) {
            bound.reset();
            break;
        }
        const std::size_t b = *res.component_distance[j] * *res.h_distance[j];
        bound = bound ? std::min(*bound, b) : b;
    }
    res.bound = bound;
    return res;
}

}  // namespace sigmalcd
