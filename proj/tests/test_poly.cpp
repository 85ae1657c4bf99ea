#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmalcd;
using namespace testsupport;

namespace {

Poly P(const Field& f, Vec c) { return {f, std::move(c)}; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

}  // namespace

TEST(Poly, GcdExamples) {
    const Field f2 = Field::prime(2), f3 = Field::prime(3);
    EXPECT_EQ(gcd(P(f2, {0, 1, 1}), P(f2, {1, 0, 0, 1})), P(f2, {1, 1}));
    const Poly f = P(f3, {2, 0, 2});  // 2x^2 + 2
    EXPECT_EQ(gcd(f, Poly::zero(f3)), f.monic());
    EXPECT_EQ(gcd(P(f3, {2, 0, 1}), P(f3, {2, 1})), P(f3, {2, 1}));  // x^2 - 1, x - 1
    EXPECT_THROW(gcd(Poly::zero(f2), Poly::zero(f2)), Error);
}

TEST(Poly, NormalizesTrailingZeros) {
    const Field f = Field::prime(3);
    EXPECT_TRUE(P(f, {0, 0}).is_zero());
    EXPECT_EQ(P(f, {1, 2, 0}).degree(), 1);
}

// Every monic divisor of degree <= 2 that divides both inputs must divide
// the gcd, and the gcd divides both inputs.
TEST(Poly, GcdPropertiesRandom) {
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        std::vector<Poly> small;
        for (std::uint64_t t = 0; t < q * q; ++t) {
            small.push_back(P(f, {static_cast<Elem>(t % q), 1}));
            small.push_back(P(f, {static_cast<Elem>(t % q), static_cast<Elem>(t / q), 1}));
        }
        for (int it = 0; it < 80; ++it) {
            const Poly common = random_poly(f, 2);
            Poly a = random_poly(f, 5) * common, b = random_poly(f, 5) * common;
            if (a.is_zero() && b.is_zero()) continue;
            const Poly g = gcd(a, b);
            EXPECT_EQ(g.lead(), 1u);
            EXPECT_TRUE(divides(g, a));
            EXPECT_TRUE(divides(g, b));
            for (const auto& d : small)
                if (divides(d, a) && divides(d, b)) EXPECT_TRUE(divides(d, g));
        }
    }
}

TEST(Poly, DivmodRoundTrip) {
    const Field f = Field::of_order(9);
    for (int it = 0; it < 100; ++it) {
        const Poly a = random_poly(f, 8);
        Poly b = random_poly(f, 4);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Poly, InverseMod) {
    const Field f = Field::prime(2);
    const Poly m = Poly::cyclic_modulus(f, 7);
    for (int it = 0; it < 50; ++it) {
        const Poly a = random_poly(f, 6);
        const auto inv = inverse_mod(a, m);
        const bool unit = !a.is_zero() && gcd(a, m).degree() == 0;
        ASSERT_EQ(inv.has_value(), unit);
        if (unit) EXPECT_EQ((a * *inv) % m, Poly::one(f));
    }
}

TEST(Poly, CyclicHelpers) {
    const Field f = Field::prime(3);
    const Poly a = P(f, {1, 2, 0, 1});  // 1 + 2x + x^3
    EXPECT_EQ(a.reduce_cyclic(3), P(f, {2, 2}));
    // a(x^-1) mod x^4 - 1 = 1 + 2x^3 + x
    EXPECT_EQ(a.substitute_power(-1, 4), P(f, {1, 1, 0, 2}));
    EXPECT_EQ(Poly::cyclic_modulus(f, 4), P(f, {2, 0, 0, 0, 1}));
}

TEST(Poly, EvalExtExamples) {
    const Field f2 = Field::prime(2), f8 = Field::make(2, 3), f4 = Field::make(2, 2);
    const Embedding e8(f2, f8), e4(f2, f4);
    // The class of x in GF(8) is a root of the default modulus.
    const Poly m8 = P(f2, Vec(f8.modulus().begin(), f8.modulus().end()));
    EXPECT_EQ(eval_ext(m8, 2, e8), 0u);
    // x^3 + x + 1 has its roots among the other elements.
    std::size_t roots = 0;
    for (Elem a = 0; a < 8; ++a) roots += eval_ext(P(f2, {1, 1, 0, 1}), a, e8) == 0;
    EXPECT_EQ(roots, 3u);
    EXPECT_EQ(eval_ext(Poly::one(f2), 5, e8), 1u);
    EXPECT_EQ(eval_ext(P(f2, {0, 1}), 2, e4), 2u);
    EXPECT_THROW(eval_ext(P(f4, {0, 1}), FieldElement(f8, 2), Embedding()), Error);
}
