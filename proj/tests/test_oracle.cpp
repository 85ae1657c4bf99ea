#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace sigmalcd;
using namespace testsupport;

TEST(Oracle, EnumerateExamples) {
    const Field f2 = Field::prime(2), f3 = Field::prime(3);
    auto words = enumerate_codewords(LinearCode::from_rows(f2, 3, {{1, 1, 1}}));
    std::sort(words.begin(), words.end());
    EXPECT_EQ(words, (std::vector<Vec>{{0, 0, 0}, {1, 1, 1}}));
    EXPECT_EQ(enumerate_codewords(LinearCode::full(f3, 2)).size(), 9u);
    EXPECT_EQ(enumerate_codewords(LinearCode::zero(f3, 2)), (std::vector<Vec>{{0, 0}}));
}

TEST(Oracle, EnumerationDistinctAndMember) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 20; ++t) {
            const LinearCode c = random_code(f, uniform(1, 6), uniform(0, 3));
            const auto words = enumerate_codewords(c);
            EXPECT_EQ(words.size(), word_count(c));
            EXPECT_EQ(std::set<Vec>(words.begin(), words.end()).size(), words.size());
            for (const auto& w : words) EXPECT_TRUE(c.contains(w));
        }
    }
}

TEST(Oracle, BudgetExceeded) {
    const Field f = Field::prime(2);
    try {
        enumerate_codewords(LinearCode::full(f, 12), EnumerationBudget{1000, 1 << 16});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

// Naive distance: weight of every message combination computed from scratch.
static std::size_t naive_distance(const LinearCode& c) {
    const Field& f = c.field();
    const std::size_t k = c.dimension(), n = c.length();
    std::size_t best = n + 1;
    std::vector<Elem> msg(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.size()) msg[i++] = 0;
        if (i == k) break;
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Elem s = 0;
            for (std::size_t r = 0; r < k; ++r) s = f.add(s, f.mul(msg[r], c.generator()(r, j)));
            w += s != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

TEST(Oracle, MinDistanceMatchesNaive) {
    for (std::uint64_t q : {2, 3, 4, 7}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 25; ++t) {
            const LinearCode c = random_code(f, uniform(2, 9), uniform(1, 4));
            if (c.dimension() == 0) continue;
            const std::size_t d = naive_distance(c);
            EXPECT_EQ(brute_min_distance(c), d);
            EXPECT_EQ(brute_min_distance(c, {}, 3), d);
        }
    }
}

TEST(Oracle, IntersectionExamples) {
    const Field f2 = Field::prime(2);
    const LinearCode c = LinearCode::from_rows(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    EXPECT_EQ(brute_intersection_dim(c, c), 2u);
    EXPECT_EQ(brute_intersection_dim(c, LinearCode::from_rows(f2, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})), 0u);
    const LinearCode c11 = LinearCode::from_rows(f2, 2, {{1, 1}});
    EXPECT_EQ(brute_intersection_dim(c11, euclidean_dual(c11)), 1u);
    EXPECT_THROW(brute_intersection_dim(c, c11), Error);
}

TEST(Oracle, IntersectionMatchesEnumeration) {
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = uniform(1, 6);
            const LinearCode a = random_code(f, n, uniform(0, n)), b = random_code(f, n, uniform(0, n));
            std::uint64_t common = 0;
            for (const auto& w : enumerate_codewords(a)) common += b.contains(w);
            std::size_t dim = 0;
            for (auto x = common; x > 1; x /= q) ++dim;
            const LinearCode i = intersection(a, b);
            EXPECT_EQ(i.dimension(), dim);
            EXPECT_TRUE(a.contains(i));
            EXPECT_TRUE(b.contains(i));
        }
    }
}

TEST(Oracle, SigmaSearchExamples) {
    const Field f2 = Field::prime(2), f5 = Field::prime(5);
    const LinearCode rep = LinearCode::from_rows(f2, 3, {{1, 1, 1}});
    for (auto fam : {SigmaFamily::DiagonalLambda, SigmaFamily::CyclicPi2, SigmaFamily::PermutationSample}) {
        const auto s = exhaustive_sigma_search(rep, fam);
        ASSERT_TRUE(s.has_value());
        EXPECT_TRUE(s->is_identity());
    }
    const auto s = exhaustive_sigma_search(LinearCode::from_rows(f5, 2, {{1, 2}}), SigmaFamily::DiagonalLambda);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->diag(), (Vec{1, 2}));
    EXPECT_TRUE(is_sigma_lcd(LinearCode::from_rows(f5, 2, {{1, 2}}), *s));

    const LinearCode even = LinearCode::from_rows(f2, 4, {{1, 1, 1, 1}, {1, 1, 0, 0}});
    EXPECT_FALSE(exhaustive_sigma_search(even, SigmaFamily::PermutationSample).has_value());
    EXPECT_FALSE(exhaustive_sigma_search(even, SigmaFamily::CyclicPi2).has_value());
    const auto fixed = make_lcd_sigma(even);
    EXPECT_EQ(detail::oracle_hull_dim(fixed.code, fixed.sigma), 0u);
}

TEST(Oracle, ParseFamily) {
    EXPECT_EQ(parse_sigma_family("diagonal-lambda"), SigmaFamily::DiagonalLambda);
    EXPECT_EQ(parse_sigma_family("cyclic-pi2"), SigmaFamily::CyclicPi2);
    EXPECT_EQ(parse_sigma_family("permutation-sample"), SigmaFamily::PermutationSample);
    EXPECT_FALSE(parse_sigma_family("bogus").has_value());
}
