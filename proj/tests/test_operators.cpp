#include <gtest/gtest.h>

#include "fixture_recipes.hpp"
#include "hjd/hjd.hpp"
#include "support/generators.hpp"

using namespace hjd;
using namespace hjd::fixtures;

namespace {

const RationalField Q;
const PrimeField F5(5);

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST(RotaBaxter, ZeroPassesBoth) {
    const auto a = example_algebra<Rational>(Q, 2, 3);
    const auto r = verify_rota_baxter(a, label::circ, Matrix<Rational>::zero(Q, 3, 3));
    EXPECT_TRUE(r.quadratic.pass);
    EXPECT_TRUE(r.twist.pass);
    EXPECT_TRUE(r.overall());
}

TEST(RotaBaxter, ExampleQuadraticAlwaysTwistOnlyOnSubvariety) {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long l1 = -1; l1 <= 2; ++l1)
                for (long l2 = -1; l2 <= 2; ++l2) {
                    const auto alg = example_algebra<Rational>(Q, a, b);
                    const auto r = verify_rota_baxter(alg, label::circ, example_rb<Rational>(Q, l1, l2));
                    EXPECT_TRUE(r.quadratic.pass);
                    EXPECT_EQ(r.twist.pass, a == b || (l1 == 0 && l2 == 0));
                    EXPECT_EQ(r.overall(), r.twist.pass);
                    const auto lax = verify_rota_baxter(alg, label::circ, example_rb<Rational>(Q, l1, l2), Policy::lax);
                    EXPECT_TRUE(lax.overall());
                }
}

TEST(RotaBaxter, D2PassesBoth) {
    const auto r = verify_rota_baxter(d2_algebra<Rational>(Q), label::circ, d2_rb<Rational>(Q));
    EXPECT_TRUE(r.quadratic.pass && r.twist.pass);
}

TEST(RotaBaxter, FailureCarriesWitnessPair) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto r = verify_rota_baxter(d2, label::circ, Matrix<Rational>::identity(Q, 2));
    ASSERT_FALSE(r.quadratic.pass);
    EXPECT_EQ(r.quadratic.witness, (std::vector<std::size_t>{0, 0}));  // u*u = u but R(2u) = 2u
}

TEST(OOperatorJordan, Examples) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto ad = adjoint_representation(d2);
    EXPECT_TRUE(verify_o_operator_jordan(d2, ad, Matrix<Rational>::zero(Q, 2, 2)).overall());
    const auto a = verify_o_operator_jordan(d2, ad, d2_rb<Rational>(Q));
    const auto b = verify_rota_baxter(d2, label::circ, d2_rb<Rational>(Q));
    EXPECT_EQ(a.quadratic.pass, b.quadratic.pass);
    EXPECT_EQ(a.twist.pass, b.twist.pass);
    EXPECT_TRUE(a.overall());

    const auto ex = example_algebra<Rational>(Q, 2, 3);
    const auto r = verify_o_operator_jordan(ex, adjoint_representation(ex), example_rb<Rational>(Q, 1, 2));
    EXPECT_TRUE(r.quadratic.pass);
    ASSERT_FALSE(r.twist.pass);
    EXPECT_EQ(r.twist.witness, (std::vector<std::size_t>{0}));
}

TEST(OOperatorJordan, ShapeMismatch) {
    const auto d2 = d2_algebra<Rational>(Q);
    EXPECT_THROW(verify_o_operator_jordan(d2, adjoint_representation(d2), Matrix<Rational>::zero(Q, 3, 2)), DimensionMismatch);
}

TEST(OOperatorPreJordan, Examples) {
    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    const auto reg = regular_bimodule(d2);
    EXPECT_TRUE(verify_o_operator_prejordan(d2, reg, Matrix<Rational>::zero(Q, 2, 2)).overall());
    EXPECT_TRUE(verify_o_operator_prejordan(d2, reg, d2_rb<Rational>(Q)).overall());
}

TEST(OOperatorPreJordan, IdentityOnJDendriformModules) {
    for (const auto& [name, text] : all_fixtures()) {
        if (name.find("jdendriform") == std::string::npos) continue;
        const auto a = parse_algebra_as<Rational>(text).algebra;
        const auto id = Matrix<Rational>::identity(Q, a.dim);
        // vertical algebra with (L_succ, L_prec)
        const auto v = vertical(a).algebra;
        BimoduleData<Rational> vb{"vertical", a.dim, left_multiplications(a.product(label::succ)),
                                  left_multiplications(a.product(label::prec)), a.twist};
        EXPECT_TRUE(check_bimodule(v, vb).pass()) << name;
        EXPECT_TRUE(verify_o_operator_prejordan(v, vb, id).overall()) << name;
        // horizontal algebra with (L_succ, R_prec)
        const auto h = jdendriform_bimodule(a);
        EXPECT_TRUE(verify_o_operator_prejordan(h.algebra, h.bimodules[0], id).overall()) << name;
    }
}

TEST(CommuteCheck, Examples) {
    const auto r = example_rb<Rational>(Q, 1, 2);
    EXPECT_TRUE(commute_check(r, r).pass);
    EXPECT_TRUE(commute_check(r, Matrix<Rational>::zero(Q, 3, 3)).pass);
    const auto a = Matrix<Rational>::from_rows(Q, {{q(0), q(1)}, {q(0), q(0)}});
    const auto b = Matrix<Rational>::from_rows(Q, {{q(0), q(0)}, {q(1), q(0)}});
    const auto v = commute_check(a, b);
    ASSERT_FALSE(v.pass);
    EXPECT_EQ(v.witness, (std::vector<std::size_t>{0}));
    EXPECT_THROW(commute_check(a, Matrix<Rational>::zero(Q, 3, 3)), DimensionMismatch);
}

TEST(Search, ZeroAlgebraDimOne) {
    const auto z = single_product(label::circ, Tensor<Fp>(F5, 1), Matrix<Fp>::identity(F5, 1));
    const auto found = search_rota_baxter_fp(z, label::circ, SearchPattern::all_free(1), Policy::strict);
    ASSERT_EQ(found.size(), 5u);
    for (long v = 0; v < 5; ++v) EXPECT_EQ(found[v](0, 0), F5.from_int(v));
}

TEST(Search, D2ContainsR) {
    const auto d2 = d2_algebra<Fp>(F5);
    const auto found = search_rota_baxter_fp(d2, label::circ, SearchPattern::all_free(2), Policy::lax);
    const auto r = d2_rb<Fp>(F5);
    EXPECT_NE(std::find(found.begin(), found.end(), r), found.end());
    for (const auto& m : found) EXPECT_TRUE(verify_rota_baxter(d2, label::circ, m, Policy::lax).overall());
}

TEST(Search, ExamplePatternGivesAllLambdas) {
    const auto ex = example_algebra<Fp>(F5, 1, 1);
    const auto found = search_rota_baxter_fp(ex, label::circ, SearchPattern::parse("000;000;**0", 3), Policy::strict);
    ASSERT_EQ(found.size(), 25u);
    std::size_t k = 0;
    for (long l1 = 0; l1 < 5; ++l1)
        for (long l2 = 0; l2 < 5; ++l2) EXPECT_EQ(found[k++], (example_rb<Fp>(F5, l1, l2)));
}

TEST(Search, ExhaustiveAgreesWithVerifier) {
    const auto d2 = d2_algebra<Fp>(F5);
    const auto found = search_rota_baxter_fp(d2, label::circ, SearchPattern::all_free(2), Policy::strict);
    std::size_t passing = 0;
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b)
            for (long c = 0; c < 5; ++c)
                for (long d = 0; d < 5; ++d) {
                    const auto m = Matrix<Fp>::from_rows(F5, {{F5.from_int(a), F5.from_int(b)}, {F5.from_int(c), F5.from_int(d)}});
                    if (verify_rota_baxter(d2, label::circ, m).overall()) {
                        ASSERT_LT(passing, found.size());
                        EXPECT_EQ(found[passing], m);
                        ++passing;
                    }
                }
    EXPECT_EQ(passing, found.size());
}

TEST(Search, ThreadsGiveSameOrder) {
    const auto ex = example_algebra<Fp>(F5, 1, 1);
    const auto pattern = SearchPattern::parse("000;**0;**0", 3);
    const auto one = search_rota_baxter_fp(ex, label::circ, pattern, Policy::lax, default_search_budget, 1);
    for (unsigned jobs : {2u, 3u, 8u}) EXPECT_EQ(search_rota_baxter_fp(ex, label::circ, pattern, Policy::lax, default_search_budget, jobs), one);
}

TEST(Search, Budget) {
    const PrimeField f7(7);
    const auto ex = example_algebra<Fp>(f7, 1, 1);
    EXPECT_THROW(search_rota_baxter_fp(ex, label::circ, SearchPattern::all_free(3), Policy::lax), BudgetExceeded);
    EXPECT_THROW(search_rota_baxter_fp(ex, label::circ, SearchPattern::parse("000;000;**0", 3), Policy::lax, 10), BudgetExceeded);
}

TEST(Search, PatternParsing) {
    EXPECT_EQ(SearchPattern::parse("0*;*0", 2).free_count(), 2u);
    EXPECT_THROW(SearchPattern::parse("0*;*", 2), InputError);
    EXPECT_THROW(SearchPattern::parse("0*", 2), InputError);
    EXPECT_THROW(SearchPattern::parse("0x;**", 2), InputError);
}

TEST(Properties, RotaBaxterMatchesAdjointOOperator) {
    gen::Rng rng(17);
    std::vector<HomAlgebra<Rational>> algebras;
    for (const auto& p : example_points()) algebras.push_back(example_algebra<Rational>(Q, p.a, p.b));
    algebras.push_back(d2_algebra<Rational>(Q));
    for (int k = 0; k < 4; ++k) algebras.push_back(gen::hom_jordan(gen::random_assoc<Rational>(Q, rng, 2)));
    for (const auto& a : algebras) {
        const auto ad = adjoint_representation(a);
        for (int k = 0; k < 100; ++k) {
            Matrix<Rational> r(Q, a.dim, a.dim);
            // sparse random matrices hit passing operators often enough
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t j = 0; j < a.dim; ++j)
                    if (rng() % 3 == 0) r(i, j) = gen::small<Rational>(Q, rng);
            const auto x = verify_rota_baxter(a, label::circ, r), y = verify_o_operator_jordan(a, ad, r);
            EXPECT_EQ(x.quadratic.pass, y.quadratic.pass);
            EXPECT_EQ(x.twist.pass, y.twist.pass);
            if (!x.quadratic.pass) EXPECT_EQ(x.quadratic.witness, y.quadratic.witness);
        }
    }
}

TEST(Properties, CommutingOperatorsAndTheLemma) {
    gen::Rng rng(23);
    for (int k = 0; k < 40; ++k) {
        const auto in = gen::random_assoc<Rational>(Q, rng);
        const auto a = gen::hom_jordan(in);
        const auto [r1, r2] = gen::commuting_pair(in, rng);
        ASSERT_TRUE(verify_rota_baxter(a, label::circ, r1).overall());
        ASSERT_TRUE(verify_rota_baxter(a, label::circ, r2).overall());
        ASSERT_TRUE(commute_check(r1, r2).pass);
        EXPECT_TRUE(check_suite(commuting_rb_jdendriform(a, r1, r2).algebra, SuiteId::hom_j_dendriform).pass()) << in.recipe;
        EXPECT_TRUE(verify_rota_baxter(rb_prejordan(a, r1).algebra, label::dot, r2).overall()) << in.recipe;
    }
}
