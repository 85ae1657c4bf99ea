#pragma once

// Brute-force ground truth: codeword enumeration, exact minimum distance,
// subspace intersection and exhaustive searches for sigma maps. Nothing
// here uses the rank formula for hulls; everything else is checked against
// this module on small instances.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string_view>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace sigmalcd {

struct EnumerationBudget {
    std::uint64_t max_words = 1ull << 22;
    std::uint64_t max_field_size = 1ull << 16;
};

/// q^k, saturating at UINT64_MAX.
inline std::uint64_t word_count(const LinearCode& c) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / c.field().size())
            return std::numeric_limits<std::uint64_t>::max();
        count *= c.field().size();
    }
    return count;
}

namespace detail {

// Modular q-ary Gray walk over the message space of the first `rows` rows
// of gen, starting from `word`. Each step changes one message digit by +1
// (mod q), so the word is updated by one scaled row addition.
template <class Fn>
bool gray_walk(const Matrix& gen, std::size_t rows, Vec word, Fn&& fn) {
    const Field& f = gen.field();
    const std::uint64_t q = f.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rows; ++i) count *= q;
    std::vector<Elem> digit(rows, 0);
    if (!fn(std::as_const(word))) return false;
    for (std::uint64_t t = 1; t < count; ++t) {
        std::size_t j = 0;
        for (std::uint64_t u = t; u % q == 0; u /= q) ++j;
        const Elem old_digit = digit[j];
        const Elem new_digit = static_cast<Elem>((old_digit + 1) % q);
        const Elem delta = f.sub(new_digit, old_digit);
        const auto row = gen.row(j);
        for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], f.mul(delta, row[c]));
        digit[j] = new_digit;
        if (!fn(std::as_const(word))) return false;
    }
    return true;
}

inline void check_budget(const LinearCode& c, const EnumerationBudget& budget) {
    if (word_count(c) > budget.max_words)
        throw Error(ErrorKind::BudgetExceeded, "q^k = " + std::to_string(c.field().size()) + "^" +
                                                   std::to_string(c.dimension()) + " exceeds the enumeration budget");
}

inline std::size_t weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

}  // namespace detail

/// Calls fn(word) for each of the q^k codewords exactly once, in Gray order.
template <class Fn>
void for_each_codeword(const LinearCode& c, const EnumerationBudget& budget, Fn&& fn) {
    detail::check_budget(c, budget);
    detail::gray_walk(c.generator(), c.dimension(), Vec(c.length(), 0), [&](const Vec& w) {
        fn(std::span<const Elem>(w));
        return true;
    });
}

inline std::vector<Vec> enumerate_codewords(const LinearCode& c, const EnumerationBudget& budget = {}) {
    std::vector<Vec> out;
    for_each_codeword(c, budget, [&](std::span<const Elem> w) { out.emplace_back(w.begin(), w.end()); });
    return out;
}

/// Exact minimum nonzero weight. With jobs > 1 the message space is split by
/// the value of the last message digit; the result does not depend on jobs.
inline std::size_t brute_min_distance(const LinearCode& c, const EnumerationBudget& budget = {}, unsigned jobs = 1) {
    if (c.dimension() == 0) throw Error(ErrorKind::NoNonzeroWords, "zero-dimensional code has no nonzero words");
    detail::check_budget(c, budget);
    const Field& f = c.field();
    const Matrix& g = c.generator();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();

    auto chunk_min = [&](Elem lead) {
        Vec start(n, 0);
        const auto last = g.row(k - 1);
        for (std::size_t j = 0; j < n; ++j) start[j] = f.mul(lead, last[j]);
        std::size_t best = n + 1;
        detail::gray_walk(g, k - 1, std::move(start), [&](const Vec& w) {
            const std::size_t wt = detail::weight(w);
            if (wt > 0 && wt < best) best = wt;
            return best > 1;
        });
        return best;
    };

    const std::size_t chunks = f.size();
    std::vector<std::size_t> results(chunks, n + 1);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        for (std::size_t v = 0; v < chunks; ++v) results[v] = chunk_min(static_cast<Elem>(v));
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t v = w; v < chunks; v += workers) results[v] = chunk_min(static_cast<Elem>(v));
            });
        for (auto& t : pool) t.join();
    }
    return *std::min_element(results.begin(), results.end());
}

/// Basis of rowspace(c1) ∩ rowspace(c2) from the nullspace of the stacked
/// generators: x G1 = y G2 pairs map to common vectors x G1.
inline LinearCode intersection(const LinearCode& c1, const LinearCode& c2) {
    if (c1.length() != c2.length()) throw Error(ErrorKind::LengthMismatch, "intersection of codes of unequal length");
    if (c1.field() != c2.field()) throw Error(ErrorKind::FieldMismatch, "intersection across fields");
    const Field& f = c1.field();
    const std::size_t k1 = c1.dimension(), k2 = c2.dimension(), n = c1.length();
    // columns are generator rows of c1 and -c2
    Matrix m(f, n, k1 + k2);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k1; ++i) m(j, i) = c1.generator()(i, j);
        for (std::size_t i = 0; i < k2; ++i) m(j, k1 + i) = f.neg(c2.generator()(i, j));
    }
    const Matrix ns = nullspace(m);
    Matrix words(f, 0, n);
    Vec w(n);
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t i = 0; i < k1; ++i) {
            const Elem x = ns(r, i);
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(x, c1.generator()(i, j)));
        }
        words.append_row(w);
    }
    return LinearCode::from_matrix(words);
}

inline std::size_t brute_intersection_dim(const LinearCode& c1, const LinearCode& c2) {
    return intersection(c1, c2).dimension();
}

enum class SigmaFamily { DiagonalLambda, CyclicPi2, PermutationSample };

inline std::optional<SigmaFamily> parse_sigma_family(std::string_view s) {
    if (s == "diagonal-lambda" || s == "diagonal") return SigmaFamily::DiagonalLambda;
    if (s == "cyclic-pi2") return SigmaFamily::CyclicPi2;
    if (s == "permutation-sample" || s == "permutation") return SigmaFamily::PermutationSample;
    return std::nullopt;
}

namespace detail {

// dim(C ∩ (sigma(C))^⊥) by explicit dual construction and intersection.
inline std::size_t oracle_hull_dim(const LinearCode& c, const SemiLinearMap& sigma) {
    Matrix images(c.field(), 0, c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) images.append_row(sigma.apply(c.generator().row(i)));
    const LinearCode dual = LinearCode::from_matrix(nullspace(images));
    return brute_intersection_dim(c, dual);
}

}  // namespace detail

/// First sigma of the family, in its fixed order, under which c is sigma-LCD.
///   diagonal-lambda: identity, then diagonal maps with entries in F_q^*
///                    (lexicographic in the encodings).
///   cyclic-pi2:      identity, then for h = 1..n-1 the cyclic shift moving
///                    coordinate 0 to position h and 1..h down by one.
///   permutation-sample: identity, then all permutations in lexicographic
///                    order when n! fits the budget, else a seeded sample.
inline std::optional<SemiLinearMap> exhaustive_sigma_search(const LinearCode& c, SigmaFamily family,
                                                            const EnumerationBudget& budget = {}) {
    const Field& f = c.field();
    const std::size_t n = c.length();
    auto lcd = [&](const SemiLinearMap& s) { return detail::oracle_hull_dim(c, s) == 0; };

    const SemiLinearMap id = SemiLinearMap::identity(f, n);
    if (lcd(id)) return id;

    switch (family) {
        case SigmaFamily::DiagonalLambda: {
            Vec d(n, 1);
            std::uint64_t tried = 0;
            while (tried++ < budget.max_words) {
                std::size_t i = n;
                while (i-- > 0) {
                    if (d[i] + 1 < f.size()) {
                        ++d[i];
                        break;
                    }
                    d[i] = 1;
                }
                if (i == static_cast<std::size_t>(-1)) break;
                SemiLinearMap s = SemiLinearMap::diagonal(f, d);
                if (lcd(s)) return s;
            }
            return std::nullopt;
        }
        case SigmaFamily::CyclicPi2: {
            for (std::size_t h = 1; h < n; ++h) {
                std::vector<std::size_t> p(n);
                std::iota(p.begin(), p.end(), 0);
                p[0] = h;
                for (std::size_t i = 1; i <= h; ++i) p[i] = i - 1;
                SemiLinearMap s = SemiLinearMap::permutation(f, p);
                if (lcd(s)) return s;
            }
            return std::nullopt;
        }
        case SigmaFamily::PermutationSample: {
            std::uint64_t fact = 1;
            bool exhaustive = true;
            for (std::size_t i = 2; i <= n; ++i) {
                fact *= i;
                if (fact > budget.max_words) {
                    exhaustive = false;
                    break;
                }
            }
            std::vector<std::size_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            if (exhaustive) {
                while (std::next_permutation(p.begin(), p.end())) {
                    SemiLinearMap s = SemiLinearMap::permutation(f, p);
                    if (lcd(s)) return s;
                }
                return std::nullopt;
            }
            std::mt19937_64 rng(0x5eed);
            for (std::uint64_t t = 0; t < budget.max_words; ++t) {
                std::shuffle(p.begin(), p.end(), rng);
                SemiLinearMap s = SemiLinearMap::permutation(f, p);
                if (lcd(s)) return s;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace sigmalcd
