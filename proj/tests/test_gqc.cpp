#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmalcd;
using namespace testsupport;

namespace {

Poly P(const Field& f, Vec c) { return {f, std::move(c)}; }

GqcCode cyclic(const Field& f, std::size_t m, const Poly& g) { return GqcCode::from_generators(f, {m}, {{g}}); }

std::vector<std::size_t> divisors(std::size_t m) {
    std::vector<std::size_t> d;
    for (std::size_t x = 1; x <= m; ++x)
        if (m % x == 0) d.push_back(x);
    return d;
}

// Random GQC code: blocks are divisors of m, at least one equal to m.
GqcCode random_gqc(const Field& f, std::size_t m, std::size_t l, std::size_t gens) {
    const auto ds = divisors(m);
    std::vector<std::size_t> blocks{m};
    for (std::size_t j = 1; j < l; ++j) blocks.push_back(ds[uniform(0, ds.size() - 1)]);
    std::shuffle(blocks.begin(), blocks.end(), rng());
    std::vector<std::vector<Poly>> g;
    for (std::size_t t = 0; t < gens; ++t) {
        std::vector<Poly> tuple;
        for (auto b : blocks) tuple.push_back(random_poly(f, b - 1));
        g.push_back(tuple);
    }
    return GqcCode::from_generators(f, blocks, g);
}

std::vector<long long> units(std::size_t m) {
    std::vector<long long> u;
    for (std::size_t a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) u.push_back(static_cast<long long>(a));
    return u;
}

const std::vector<std::pair<std::uint64_t, std::size_t>> kSmallCases{{2, 3}, {2, 5}, {2, 7}, {2, 9}, {2, 15},
                                                                      {3, 4}, {3, 5}, {3, 8}, {3, 10}, {3, 13}};

}  // namespace

TEST(Gqc, ConstructionAndShiftClosure) {
    const Field f = Field::prime(2);
    const GqcCode c = GqcCode::from_generators(f, {3, 5}, {{P(f, {1, 1}), P(f, {1, 0, 1})}});
    EXPECT_EQ(c.length(), 8u);
    EXPECT_EQ(c.m(), 15u);
    for (std::size_t i = 0; i < c.flat().dimension(); ++i) EXPECT_TRUE(c.flat().contains(c.shift(c.flat().generator().row(i))));
    EXPECT_EQ(GqcCode::from_flat(f, {3, 5}, c.flat()).flat(), c.flat());
    EXPECT_THROW(GqcCode::from_flat(f, {3, 5}, LinearCode::from_rows(f, 8, {{1, 0, 0, 0, 0, 0, 0, 0}})), Error);
    EXPECT_THROW(GqcCode::from_generators(f, {4}, {}), Error);
    EXPECT_TRUE(GqcCode::from_generators(f, {7, 7}, {}).is_quasi_cyclic());
}

TEST(Gqc, HammingConstituents) {
    const Field f = Field::prime(2);
    const Poly g = P(f, {1, 1, 0, 1});
    const GqcCode ham = cyclic(f, 7, g);
    const CyclotomicContext ctx(f, 7);
    // the vanishing constituents are exactly the cosets of roots of g
    std::size_t zero = 0, full = 0;
    for (auto i : ctx.leaders()) {
        const Constituent con = constituent(ham, ctx, static_cast<long long>(i));
        const bool root = eval_ext(g, ctx.xi_pow(static_cast<long long>(i)), ctx.embedding()) == 0;
        EXPECT_EQ(con.is_zero(), root);
        EXPECT_EQ(con.is_full(), !root);
        zero += con.is_zero();
        full += con.is_full();
    }
    EXPECT_EQ(zero, 1u);
    EXPECT_EQ(full, 2u);
}

TEST(Gqc, TrivialConstituentsOfZeroAndFull) {
    const Field f = Field::prime(3);
    const std::vector<std::size_t> blocks{4, 2};
    const GqcCode zero = GqcCode::from_generators(f, blocks, {});
    const GqcCode full = GqcCode::from_flat(f, blocks, LinearCode::full(f, 6));
    const CyclotomicContext ctx(f, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(constituent(zero, ctx, static_cast<long long>(i)).is_zero());
        EXPECT_TRUE(constituent(full, ctx, static_cast<long long>(i)).is_full());
    }
    // block of length 2 is active only at even i
    EXPECT_EQ(constituent(full, ctx, 1).ambient_dim(), 1u);
    EXPECT_EQ(constituent(full, ctx, 2).ambient_dim(), 2u);
}

TEST(Gqc, VDualExamples) {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 3);
    const Field& e = ctx.ext();
    Constituent con{1, {true, true}, LinearCode::zero(e, 2)};
    EXPECT_TRUE(v_dual(con).is_full());
    con.code = LinearCode::full(e, 2);
    EXPECT_TRUE(v_dual(con).is_zero());
    const Elem alpha = ctx.xi();
    con.code = LinearCode::from_rows(e, 2, {{1, alpha}});
    EXPECT_EQ(v_dual(con).code, LinearCode::from_rows(e, 2, {{e.neg(alpha), 1}}));
    // inactive coordinates stay zero
    con = Constituent{1, {true, false}, LinearCode::zero(e, 2)};
    EXPECT_EQ(v_dual(con).code, LinearCode::from_rows(e, 2, {{1, 0}}));
}

TEST(Gqc, HermitianVDualMatchesNegatedIndex) {
    std::size_t checked = 0;
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        const CyclotomicContext ctx(f, m);
        const auto gamma = gamma_partition(ctx);
        for (int t = 0; t < 6; ++t) {
            const GqcCode c = random_gqc(f, m, uniform(1, 3), uniform(1, 2));
            const CyclotomicContext cc(f, c.m());
            for (auto i : gamma.gamma0_minus) {
                const Constituent ci = constituent(c, cc, static_cast<long long>(i));
                const Constituent cneg = constituent(c, cc, -static_cast<long long>(i));
                EXPECT_EQ(hermitian_v_dual(ci, cc).code, v_dual(cneg).code);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 0u);
    const CyclotomicContext c7(Field::prime(2), 7);
    const GqcCode c = cyclic(Field::prime(2), 7, P(Field::prime(2), {1, 1}));
    EXPECT_THROW(hermitian_v_dual(constituent(c, c7, 1), c7), Error);
    Constituent z{1, {true}, LinearCode::zero(CyclotomicContext(Field::prime(2), 5).ext(), 1)};
    EXPECT_TRUE(hermitian_v_dual(z, CyclotomicContext(Field::prime(2), 5)).is_full());
}

TEST(Gqc, MuAExamples) {
    const Field f = Field::prime(3);
    const GqcCode c = random_gqc(f, 8, 2, 1);
    EXPECT_EQ(mu_a(c, 1).flat(), c.flat());
    const SemiLinearMap rev = mu_a_map(f, std::vector<std::size_t>{5}, -1);
    EXPECT_EQ(rev.apply(Vec{1, 2, 0, 0, 1}), (Vec{1, 1, 0, 0, 2}));
    EXPECT_THROW(mu_a(c, 2), Error);
    for (int t = 0; t < 20; ++t) {
        const GqcCode d = random_gqc(Field::prime(2), 15, 2, 1);
        for (long long a : {2LL, 4LL, 7LL})
            for (long long b : {8LL, 11LL, 13LL})
                EXPECT_EQ(mu_a(mu_a(d, b), a).flat(), mu_a(d, a * b).flat());
    }
}

TEST(Gqc, MuAPermutesConstituents) {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 15);
    for (int t = 0; t < 10; ++t) {
        const GqcCode c = random_gqc(f, 15, 2, 1);
        const CyclotomicContext cc(f, c.m());
        for (long long a : units(15)) {
            const GqcCode ma = mu_a(c, a);
            for (std::size_t i = 0; i < cc.m(); ++i)
                EXPECT_EQ(constituent(ma, cc, static_cast<long long>(i)).code,
                          constituent(c, cc, a * static_cast<long long>(i)).code);
        }
    }
}

TEST(Gqc, MuaLcdExamples) {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 7);
    const GqcCode ham = cyclic(f, 7, P(f, {1, 1, 0, 1}));
    EXPECT_TRUE(is_mua_lcd(ham, ctx, -1));
    EXPECT_FALSE(is_mua_lcd(ham, ctx, 1));
    EXPECT_TRUE(is_mua_lcd(GqcCode::from_generators(f, {7}, {}), ctx, 1));
    EXPECT_THROW(is_mua_lcd(ham, CyclotomicContext(f, 9), 1), Error);
    EXPECT_THROW(is_mua_lcd(GqcCode::from_generators(Field::prime(3), {4}, {}), CyclotomicContext(Field::prime(3), 4), 2),
                 Error);
}

TEST(Gqc, CriteriaAgreeWithFlatOracle) {
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 8; ++t) {
            const GqcCode c = random_gqc(f, m, uniform(1, 3), uniform(0, 2));
            const CyclotomicContext ctx(f, c.m());
            for (long long a : units(c.m())) {
                const bool lcd = is_mua_lcd(c, ctx, a);
                ASSERT_EQ(lcd, flat_mua_lcd(c, a)) << q << " " << m << " a=" << a;
                ASSERT_EQ(lcd, detail::oracle_hull_dim(c.flat(), mu_a_map(f, c.blocks(), a)) == 0);
                ASSERT_EQ(lcd, is_mua_lcd(c, ctx, a, true));
                ASSERT_EQ(is_mua_self_orthogonal(c, ctx, a), flat_mua_self_orthogonal(c, a));
                ASSERT_EQ(is_mua_self_dual(c, ctx, a), flat_mua_self_dual(c, a));
            }
        }
    }
}

// Small self-orthogonal and self-dual instances exist and are recognised.
TEST(Gqc, SelfOrthogonalInstances) {
    const Field f = Field::prime(3);
    const CyclotomicContext ctx(f, 4);
    const GqcCode zero = GqcCode::from_generators(f, {4}, {});
    EXPECT_TRUE(is_mua_self_orthogonal(zero, ctx, 1));
    EXPECT_FALSE(is_mua_self_dual(zero, ctx, 1));
    const GqcCode full = GqcCode::from_flat(f, {4}, LinearCode::full(f, 4));
    EXPECT_FALSE(is_mua_self_orthogonal(full, ctx, 1));
    // (x - 1)(x^2 + 1) over GF(3): decided by constituents, checked by the oracle
    const GqcCode c = cyclic(f, 4, P(f, {2, 1}) * P(f, {1, 0, 1}));
    for (long long a : {1LL, 3LL}) {
        const LinearCode flat = c.flat();
        const LinearCode dual = sigma_dual(flat, mu_a_map(f, c.blocks(), a));
        EXPECT_EQ(is_mua_self_orthogonal(c, ctx, a), dual.contains(flat));
    }
    std::size_t so = 0, sd = 0;
    for (int t = 0; t < 300; ++t) {
        const GqcCode r = random_gqc(Field::prime(2), 7, 2, 1);
        const CyclotomicContext cc(Field::prime(2), 7);
        so += is_mua_self_orthogonal(r, cc, -1) && r.flat().dimension() > 0;
        sd += is_mua_self_dual(r, cc, -1);
    }
    EXPECT_GT(so, 0u);
    EXPECT_GT(sd, 0u);
}

TEST(Gqc, DecompositionDimension) {
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 6; ++t) {
            const GqcCode c = random_gqc(f, m, uniform(1, 3), uniform(0, 2));
            const CyclotomicContext ctx(f, c.m());
            std::size_t total = 0;
            for (auto i : ctx.leaders())
                total += ctx.coset_of(static_cast<long long>(i)).size() *
                         constituent(c, ctx, static_cast<long long>(i)).dimension();
            EXPECT_EQ(total, c.flat().dimension());
        }
    }
}

TEST(Gqc, DualDecomposition) {
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 4; ++t) {
            const GqcCode c = random_gqc(f, m, uniform(1, 3), 1);
            const CyclotomicContext ctx(f, c.m());
            for (long long a : units(c.m())) {
                const GqcCode dual =
                    GqcCode::from_flat(f, c.blocks(), euclidean_dual(apply_sigma(mu_a_map(f, c.blocks(), a), c.flat())));
                for (auto i : ctx.leaders())
                    EXPECT_EQ(constituent(dual, ctx, static_cast<long long>(i)).code,
                              v_dual(constituent(c, ctx, -a * static_cast<long long>(i))).code);
            }
        }
    }
}

TEST(Gqc, Conjugacy) {
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        const GqcCode c = random_gqc(f, m, uniform(1, 3), 1);
        const CyclotomicContext ctx(f, c.m());
        const Field& e = ctx.ext();
        for (std::size_t i = 0; i < ctx.m(); ++i) {
            const Constituent ci = constituent(c, ctx, static_cast<long long>(i));
            Matrix pw(e, 0, c.block_count());
            for (std::size_t r = 0; r < ci.dimension(); ++r) {
                Vec w = ci.code.generator().row_vector(r);
                for (auto& x : w) x = e.frobenius(x, f.degree());
                pw.append_row(w);
            }
            EXPECT_EQ(LinearCode::from_matrix(pw), constituent(c, ctx, static_cast<long long>(i * q)).code);
        }
    }
}

TEST(Gqc, TrivialConstituentExamples) {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 7);
    // nonzero constituents at {0} ∪ C_1: generator is the minimal polynomial of C_3
    const GqcCode c = cyclic(f, 7, ctx.minimal_polynomial(3));
    EXPECT_EQ(nonzero_support(c, ctx), (std::vector<std::size_t>{0, 1, 2, 4}));
    EXPECT_FALSE(trivial_constituent_lcd(c, ctx, 1));
    for (long long j = 0; j < 3; ++j) EXPECT_TRUE(trivial_constituent_lcd(c, ctx, -(1LL << j)));
    const GqcCode full = GqcCode::from_flat(f, {7}, LinearCode::full(f, 7));
    for (long long a : units(7)) EXPECT_TRUE(trivial_constituent_lcd(full, ctx, a));

    const Field f3 = Field::prime(3);
    const GqcCode two = GqcCode::from_generators(f3, {4, 4}, {{P(f3, {1}), P(f3, {1})}});
    try {
        trivial_constituent_lcd(two, CyclotomicContext(f3, 4), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConstituentNotTrivial);
    }
}

TEST(Gqc, ReversalExamples) {
    const Field f = Field::prime(2);
    EXPECT_TRUE(reversal_sigma_lcd(cyclic(f, 7, P(f, {1, 1, 0, 1}))));
    EXPECT_TRUE(reversal_sigma_lcd(cyclic(f, 7, P(f, {1, 1, 1, 1, 1, 1, 1}))));
    EXPECT_TRUE(reversal_sigma_lcd(cyclic(f, 7, P(f, {1, 1}))));
    try {
        reversal_sigma_lcd(GqcCode::from_generators(f, {3, 3}, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCyclic);
    }
}

TEST(Gqc, CrossBlockExamples) {
    const Field f = Field::prime(2);
    const CyclotomicContext ctx(f, 15);
    const GqcCode ones = GqcCode::from_generators(f, {3, 5}, {{P(f, {1, 1, 1}), P(f, {1, 1, 1, 1, 1})}});
    EXPECT_EQ(constituent(ones, ctx, 0).code, LinearCode::from_rows(ctx.ext(), 2, {{1, 1}}));
    EXPECT_FALSE(cross_block_lcd(ones, ctx, -1));
    EXPECT_FALSE(is_mua_lcd(ones, ctx, -1));
    EXPECT_TRUE(cross_block_lcd(GqcCode::from_generators(f, {3, 5}, {}), ctx, 1));
    const GqcCode ham = cyclic(f, 7, P(f, {1, 1, 0, 1}));
    const CyclotomicContext c7(f, 7);
    for (long long a : units(7)) EXPECT_EQ(cross_block_lcd(ham, c7, a), is_mua_lcd(ham, c7, a));
    try {
        cross_block_lcd(GqcCode::from_generators(f, {3, 9}, {}), CyclotomicContext(f, 9), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BlocksNotCoprime);
    }
}

TEST(Gqc, CrossBlockAgreesRandom) {
    const Field f = Field::prime(2);
    for (auto blocks : std::vector<std::vector<std::size_t>>{{3, 5}, {1, 3, 5}, {5, 7}, {3, 7}}) {
        for (int t = 0; t < 10; ++t) {
            std::vector<Poly> g;
            for (auto b : blocks) g.push_back(random_poly(f, b - 1));
            const GqcCode c = GqcCode::from_generators(f, blocks, {g});
            const CyclotomicContext ctx(f, c.m());
            for (long long a : units(c.m())) EXPECT_EQ(cross_block_lcd(c, ctx, a), is_mua_lcd(c, ctx, a));
        }
    }
}

TEST(Gqc, OneGenExamples) {
    const Field f = Field::prime(2);
    const std::vector<std::size_t> b3{3, 3};
    const std::vector<Poly> c{P(f, {1, 1}), P(f, {1, 0, 1})};
    EXPECT_EQ(gcd(mu_a_pairing_poly(f, c, 3, -1), Poly::cyclic_modulus(f, 3)), P(f, {1, 1}));
    EXPECT_EQ(tuple_gcd(f, c, 3), P(f, {1, 1}));
    EXPECT_TRUE(one_gen_lcd(f, c, b3, CyclotomicContext(f, 3), -1));

    const std::vector<Poly> qr{P(f, {1, 1, 1, 0, 1}), P(f, {1, 0, 0, 1, 0, 1, 1})};
    const std::vector<std::size_t> b7{7, 7};
    const CyclotomicContext c7(f, 7);
    EXPECT_TRUE(one_gen_lcd(f, qr, b7, c7, -1));
    EXPECT_TRUE(is_mua_lcd(GqcCode::from_generators(f, b7, {qr}), c7, -1));

    const std::vector<Poly> zero{Poly::zero(f), Poly::zero(f)};
    EXPECT_TRUE(one_gen_lcd(f, zero, b7, c7, -1));
    EXPECT_TRUE(one_gen_self_orthogonal(f, zero, b7, c7, -1));
}

TEST(Gqc, OneGenCoherenceRandom) {
    for (auto [q, m] : kSmallCases) {
        const Field f = Field::of_order(q);
        for (int t = 0; t < 8; ++t) {
            const std::size_t l = uniform(1, 3);
            const bool qc = uniform(0, 1) == 1;
            const GqcCode shape = random_gqc(f, m, l, 0);
            std::vector<std::size_t> blocks = qc ? std::vector<std::size_t>(l, m) : shape.blocks();
            std::vector<Poly> cvec;
            for (auto b : blocks) cvec.push_back(random_poly(f, b - 1));
            const GqcCode code = GqcCode::from_generators(f, blocks, {cvec});
            const CyclotomicContext ctx(f, code.m());
            for (long long a : units(code.m())) {
                const bool ev = one_gen_lcd_eval(f, cvec, blocks, ctx, a);
                ASSERT_EQ(ev, flat_mua_lcd(code, a));
                if (qc) ASSERT_EQ(ev, one_gen_lcd_gcd(f, cvec, blocks, a));
                ASSERT_EQ(one_gen_self_orthogonal(f, cvec, blocks, ctx, a), flat_mua_self_orthogonal(code, a));
            }
        }
    }
}

// A nonzero binary QC instance with sum c_j(x) c_j(x^{-a}) = 0 mod x^m - 1,
// found by seeded random search.
TEST(Gqc, OneGenSelfOrthogonalInstance) {
    const Field f = Field::prime(2);
    const std::vector<std::size_t> blocks{7, 7};
    const CyclotomicContext ctx(f, 7);
    bool found = false;
    for (int t = 0; t < 2000 && !found; ++t) {
        const std::vector<Poly> c{random_poly(f, 6), random_poly(f, 6)};
        if (c[0].is_zero() && c[1].is_zero()) continue;
        if (!mu_a_pairing_poly(f, c, 7, -1).is_zero()) continue;
        found = true;
        EXPECT_TRUE(one_gen_self_orthogonal(f, c, blocks, ctx, -1));
        const GqcCode code = GqcCode::from_generators(f, blocks, {c});
        EXPECT_TRUE(is_mua_self_orthogonal(code, ctx, -1));
        EXPECT_FALSE(one_gen_lcd(f, c, blocks, ctx, -1));
    }
    EXPECT_TRUE(found);
}

TEST(Gqc, DisjointSupportExamples) {
    const Field f = Field::prime(2);
    const CyclotomicContext c7(f, 7);
    const std::vector<Poly> qr{P(f, {1, 1, 1, 0, 1}), P(f, {1, 0, 0, 1, 0, 1, 1})};
    const std::vector<std::size_t> b7{7, 7};
    EXPECT_TRUE(disjoint_support_lcd(f, qr, b7, c7));
    const auto s = evaluation_supports(qr, c7);
    // both vanish at 1; the two nonzero cosets split between them
    std::vector<std::size_t> all(s[0]);
    all.insert(all.end(), s[1].begin(), s[1].end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(s[0].size(), 3u);
    EXPECT_FALSE(disjoint_support_lcd(f, {P(f, {1}), P(f, {1})}, b7, c7));
    EXPECT_TRUE(disjoint_support_lcd(f, {P(f, {1, 1})}, std::vector<std::size_t>{7}, c7));
}

TEST(Gqc, MaximalExamples) {
    const Field f = Field::prime(2);
    const std::vector<std::size_t> b{3, 3};
    auto r = maximal_one_gen_check(f, {P(f, {1}), P(f, {0, 1})}, b, -1);
    EXPECT_TRUE(r.maximal);
    EXPECT_FALSE(r.lcd);
    EXPECT_FALSE(r.canonical.has_value());
    r = maximal_one_gen_check(f, {P(f, {0, 1}), P(f, {1, 1})}, b, -1);
    EXPECT_TRUE(r.lcd);
    EXPECT_TRUE(r.maximal);
    ASSERT_TRUE(r.canonical.has_value());
    EXPECT_EQ(*r.canonical, P(f, {0, 1}));
}

TEST(Gqc, MaximalCountQ2M3) {
    const Field f = Field::prime(2);
    const std::vector<std::size_t> b{3, 3};
    std::vector<LinearCode> codes;
    for (std::uint32_t x = 0; x < 64; ++x) {
        const Poly c1 = P(f, {x & 1, (x >> 1) & 1, (x >> 2) & 1}), c2 = P(f, {(x >> 3) & 1, (x >> 4) & 1, (x >> 5) & 1});
        const auto r = maximal_one_gen_check(f, {c1, c2}, b, -1);
        if (!r.lcd || !r.maximal) continue;
        const GqcCode code = GqcCode::from_generators(f, b, {{c1, c2}});
        EXPECT_TRUE(flat_mua_lcd(code, -1));
        const Poly& c = *r.canonical;
        EXPECT_EQ(GqcCode::from_generators(f, b, {{c, c + Poly::one(f)}}).flat(), code.flat());
        if (std::find(codes.begin(), codes.end(), code.flat()) == codes.end()) codes.push_back(code.flat());
    }
    EXPECT_EQ(codes.size(), 8u);
}

TEST(Gqc, ProductExamples) {
    const Field f = Field::prime(2);
    const Field f4 = component_field(f, 3);
    EXPECT_EQ(f4.size(), 4u);
    auto r = product_lcd_gqc(f, {ProductComponent{3, 1, LinearCode::full(f4, 1)}});
    EXPECT_EQ(r.code.flat(), cyclic(f, 3, P(f, {1, 1})).flat());
    EXPECT_TRUE(is_mua_lcd(r.code, CyclotomicContext(f, 3), -1));
    EXPECT_EQ(r.bound, 2u);

    const Field f16 = component_field(f, 5);
    r = product_lcd_gqc(f, {ProductComponent{3, 1, LinearCode::full(f4, 1)}, ProductComponent{5, 1, LinearCode::full(f16, 1)}});
    EXPECT_EQ(r.length, 8u);
    EXPECT_EQ(r.dimension, 6u);
    EXPECT_EQ(r.code.flat().dimension(), 6u);
    EXPECT_TRUE(flat_mua_lcd(r.code, -1));
    EXPECT_LE(*r.bound, brute_min_distance(r.code.flat()));

    r = product_lcd_gqc(f, {});
    EXPECT_EQ(r.code.length(), 0u);

    auto kind = [&](const std::vector<ProductComponent>& comps) {
        try {
            product_lcd_gqc(f, comps);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Discrepancy;
    };
    // (1, w) over GF(4): 1 + w^2 = w, nonzero, but (1, 1) is self-orthogonal
    EXPECT_EQ(kind({ProductComponent{3, 2, LinearCode::from_rows(f4, 2, {{1, 1}})}}), ErrorKind::ComponentNotLcd);
    EXPECT_EQ(kind({ProductComponent{3, 1, LinearCode::full(f4, 1)}, ProductComponent{3, 1, LinearCode::full(f4, 1)}}),
              ErrorKind::BlocksNotDistinct);
    EXPECT_EQ(kind({ProductComponent{3, 1, LinearCode::full(f, 1)}}), ErrorKind::FieldMismatch);
}
