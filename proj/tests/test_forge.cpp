#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cyclo;

namespace {

Poly P(std::vector<std::uint32_t> e) { return poly::from_exponents(e); }

RootOfUnity root15() { return root_with_minimal_polynomial(build_field(2, 4), 15, 2, P({4, 1, 0})); }
RootOfUnity root21() { return root_with_minimal_polynomial(build_field(2, 6), 21, 2, P({6, 5, 4, 2, 0})); }

Poly cofactor(const RootOfUnity& a, const Poly& h)
{
    return poly::divmod(a.gf(), poly::xn_minus_one(a.gf(), a.n), h).first;
}

// Record properties that hold for every construction.
void check_record(const ConstructionRecord& r)
{
    const std::uint32_t n = r.code.length();
    const auto f = cyclic_shift(poly::reduce(r.code.root().gf(), r.divisor, n), r.shift);
    EXPECT_EQ(r.dimension, f.weight());
    EXPECT_EQ(r.code.nonzeros(), f.support());
    EXPECT_EQ(r.claimed_distance, n - static_cast<std::uint32_t>(r.divisor.degree()));
    EXPECT_EQ(bch_bound(r.code), r.claimed_distance);
    if (r.code.length() <= 21 && r.code.q() == 2) {
        EXPECT_EQ(oracle::binary_distance_from_zeros(r.code), r.claimed_distance);
    } else if (r.dimension <= 24) {
        EXPECT_EQ(min_distance(r.code).distance, r.claimed_distance);
    }
    // The generator word lies in the code.
    const auto s = dft(r.generator_word, r.code.root());
    for (auto d : r.code.defining_set())
        EXPECT_EQ(s.values[d], r.code.root().gf().zero());
}

} // namespace

TEST(Forge, FifteenDivisorRows)
{
    const auto a = root15();
    const Poly g2 = cofactor(a, P({2, 1, 0})), g3 = cofactor(a, P({4, 1, 0})), g4 = cofactor(a, P({4, 3, 0})),
               g5 = cofactor(a, P({4, 3, 2, 1, 0}));
    const auto r2 = construct_from_divisor(a, 2, g2, 1);
    EXPECT_EQ(r2.generator_word, poly::reduce(a.gf(), P({10, 5}), 15));
    EXPECT_EQ(r2.dimension, 10u);
    EXPECT_EQ(r2.claimed_distance, 2u);
    const auto r3 = construct_from_divisor(a, 2, g3, 1);
    EXPECT_EQ(r3.dimension, 8u);
    EXPECT_EQ(r3.claimed_distance, 4u);
    const auto r4 = construct_from_divisor(a, 2, g4, 3);
    EXPECT_EQ(r4.generator_word, poly::reduce(a.gf(), P({8, 4, 2, 1}), 15));
    EXPECT_EQ(r4.dimension, 8u);
    for (const auto* r : {&r2, &r3, &r4})
        check_record(*r);

    EXPECT_EQ(find_shift(a, 2, g2), std::optional<std::uint32_t>{1});
    EXPECT_EQ(find_shift(a, 2, g3), std::optional<std::uint32_t>{1});
    EXPECT_EQ(find_shift(a, 2, g4), std::optional<std::uint32_t>{3});
    EXPECT_EQ(find_shift(a, 2, g5), std::nullopt);
    EXPECT_THROW(construct_from_divisor(a, 2, g5, 0), NotRational);
    EXPECT_THROW(construct_from_divisor(a, 2, P({2, 0}), 0), InvalidArgument);

    const auto h235 = poly::mul(a.gf(), poly::mul(a.gf(), P({2, 1, 0}), P({4, 1, 0})), P({4, 3, 2, 1, 0}));
    const auto r5 = construct_from_divisor(a, 2, h235, 0);
    EXPECT_EQ(r5.dimension, 7u);
    EXPECT_EQ(r5.claimed_distance, 5u);
    check_record(r5);
}

TEST(Forge, FifteenCongruenceFailsForH5)
{
    const auto a = root15();
    EXPECT_EQ(congruence_construct(a, 2, P({4, 3, 2, 1, 0}), 3), std::nullopt);
    EXPECT_THROW(congruence_construct(a, 2, P({4, 3, 2, 1, 0}), 1), InvalidArgument);
    EXPECT_THROW(congruence_construct(a, 2, P({4, 0}), 1), NotIrreducible);
}

TEST(Forge, TwentyOneRows)
{
    const auto a = root21();
    const auto r5 = construct_from_divisor(a, 2, cofactor(a, P({6, 4, 2, 1, 0})), 1);
    EXPECT_EQ(r5.dimension, 8u);
    EXPECT_EQ(r5.claimed_distance, 6u);
    check_record(r5);
    const auto c3 = congruence_construct_any(a, 2, P({3, 1, 0}));
    ASSERT_TRUE(c3);
    EXPECT_EQ(c3->dimension, 12u);
    EXPECT_EQ(c3->claimed_distance, 3u);
    check_record(*c3);
}

TEST(Forge, FortyFiveShift)
{
    auto F = build_field(2, 12, std::vector<std::uint32_t>{1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto b = root_with_minimal_polynomial(F, 45, 2, P({12, 3, 0}));
    const Poly g = P({40, 39, 38, 36, 35, 32, 30, 25, 24, 23, 21, 20, 17, 15, 10, 9, 8, 6, 5, 2, 0});
    EXPECT_EQ(find_shift(b, 2, g), std::optional<std::uint32_t>{5});
    const auto rec = construct_from_divisor(b, 2, g, 5);
    EXPECT_EQ(rec.code.defining_set(), cosets_union(45, 2, std::vector<std::uint32_t>{1, 3, 9, 21}));
    EXPECT_EQ(rec.dimension, 21u);
    EXPECT_EQ(bch_bound(rec.code), 5u);
    const auto ext = extend_to_bch(b, 2, g, 5);
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& e : ext) {
        EXPECT_EQ(e.code.dimension(), 29u);
        got.insert(e.code.defining_set());
    }
    EXPECT_TRUE(got.count(bch_code(b, 2, 5, 1).code.defining_set()));
    EXPECT_TRUE(got.count(bch_code(b, 2, 5, 16).code.defining_set()));
}

// Whenever the congruence route yields a record, evaluation finds a shift
// giving the same code.
TEST(Forge, CongruenceAgreesWithFindShift)
{
    for (std::uint32_t n : {7u, 9u, 15u, 17u, 21u, 23u, 31u, 33u, 35u}) {
        auto F = build_field(2, multiplicative_order(2, n));
        const auto a = nth_root(F, n);
        for (const auto& fac : factor_xn(a).factors) {
            const Poly g = cofactor(a, fac.poly);
            for (auto j : fac.exponents) {
                const auto rec = congruence_construct(a, 2, fac.poly, j);
                if (!rec)
                    continue;
                const auto k = find_shift(a, 2, g);
                ASSERT_TRUE(k) << n;
                EXPECT_LE(*k, rec->shift);
                // Any two rational shifts of g give permutation-equivalent
                // codes with the same parameters.
                const auto other = construct_from_divisor(a, 2, g, *k);
                EXPECT_EQ(other.dimension, rec->dimension);
                EXPECT_EQ(bch_bound(other.code), bch_bound(rec->code));
            }
        }
    }
}

TEST(Forge, ForgedRecordsSatisfyEquality)
{
    for (std::uint32_t n : {7u, 9u, 15u, 21u}) {
        auto F = build_field(2, multiplicative_order(2, n));
        const auto a = nth_root(F, n);
        const auto recs = forge_divisors(a, 2);
        EXPECT_FALSE(recs.empty());
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& r : recs) {
            check_record(r);
            EXPECT_TRUE(seen.insert(r.code.defining_set()).second);
        }
        for (std::size_t i = 1; i < recs.size(); ++i)
            EXPECT_GE(recs[i - 1].dimension, recs[i].dimension);
    }
    auto F = build_field(2, 6);
    EXPECT_THROW(forge_divisors(nth_root(F, 21), 2, ForgeOptions{.subfield_degree = 0, .budget = 5}), BudgetExceeded);
}

TEST(Forge, FifteenDivisorModeContainsExampleRows)
{
    const auto a = root15();
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> params;
    for (const auto& r : forge_divisors(a, 2))
        params.insert({r.dimension, r.claimed_distance});
    EXPECT_TRUE(params.count({10, 2}));
    EXPECT_GE(params.count({8, 4}), 2u);
    EXPECT_TRUE(params.count({7, 5}));
}

TEST(Forge, PrimitiveFamilyCounts)
{
    for (std::uint32_t m = 2; m <= 6; ++m) {
        const std::uint32_t n = (1u << m) - 1;
        const auto recs = primitive_family(m);
        EXPECT_EQ(recs.size(), euler_totient(n) / m) << m;
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& r : recs) {
            EXPECT_EQ(r.source, Source::primitive_family);
            EXPECT_TRUE(seen.insert(r.code.defining_set()).second);
            check_record(r);
        }
    }
    EXPECT_THROW(primitive_family(1), InvalidArgument);
}

TEST(Forge, ExtensionsContainSourceAndAreBch)
{
    for (std::uint32_t n : {15u, 21u, 31u}) {
        auto F = build_field(2, multiplicative_order(2, n));
        const auto a = nth_root(F, n);
        for (const auto& src : forge_divisors(a, 2)) {
            for (const auto& e : extension_records(src)) {
                const auto& D = e.code.defining_set();
                EXPECT_TRUE(std::includes(src.code.defining_set().begin(), src.code.defining_set().end(), D.begin(),
                                          D.end()));
                EXPECT_GE(e.dimension, src.dimension);
                // Every coset in D meets the window.
                const auto w = bch_window(n, *e.bch_delta, *e.bch_offset);
                const auto& part = e.code.partition();
                for (auto d : D) {
                    const auto& c = part.cosets[part.coset_index[d]];
                    EXPECT_TRUE(std::any_of(w.begin(), w.end(), [&](std::uint32_t x) {
                        return std::binary_search(c.begin(), c.end(), x);
                    }));
                }
                EXPECT_EQ(bch_bound(e.code), *e.bch_delta);
                if (n <= 21) {
                    EXPECT_EQ(oracle::binary_distance_from_zeros(e.code), *e.bch_delta);
                } else if (e.dimension <= 26) {
                    EXPECT_EQ(min_distance(e.code).distance, *e.bch_delta);
                }
            }
        }
    }
}

TEST(Forge, ThirtyThreeExtension)
{
    auto F = build_field(2, 10);
    const auto a = root_with_minimal_polynomial(F, 33, 2, P({10, 7, 5, 3, 0}));
    const Poly g = poly::mul(*F, poly::mul(*F, minimal_polynomial(a, 1, 2), minimal_polynomial(a, 3, 2)),
                             minimal_polynomial(a, 5, 2));
    const auto ext = extend_to_bch(a, 2, g, 0);
    const auto want = bch_code(a, 2, 3, 31).code.defining_set();
    const auto it = std::find_if(ext.begin(), ext.end(), [&](const BchCode& b) { return b.code.defining_set() == want; });
    ASSERT_NE(it, ext.end());
    EXPECT_EQ(it->code.dimension(), 23u);
    EXPECT_EQ(it->code.defining_set(), cosets_union(33, 2, std::vector<std::uint32_t>{1}));
    EXPECT_EQ(construct_from_divisor(a, 2, g, 0).generator_word, poly::reduce(*F, P({22, 11, 0}), 33));
    EXPECT_EQ(min_distance(it->code).distance, 3u);
}

TEST(Forge, VerifyRecordMeasuresDistance)
{
    const auto a = root15();
    auto rec = construct_from_divisor(a, 2, cofactor(a, P({4, 1, 0})), 1);
    verify_record(rec);
    EXPECT_TRUE(rec.verified);
    EXPECT_EQ(rec.measured_distance, std::optional<std::uint32_t>{4});
    EXPECT_STREQ(to_string(Source::primitive_family), "primitive-family");
}
