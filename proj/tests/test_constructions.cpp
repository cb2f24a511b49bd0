#include <gtest/gtest.h>

#include "fixture_recipes.hpp"
#include "hjd/hjd.hpp"
#include "support/generators.hpp"

using namespace hjd;
using namespace hjd::fixtures;

namespace {

const RationalField Q;
const ConstructionOptions unchecked{false, Policy::strict};

Rational q(long n, long d = 1) { return Rational(n, d); }
Vector<Rational> e(std::size_t n, std::size_t i) { return Vector<Rational>::basis(Q, n, i); }

Vector<Rational> scaled(Vector<Rational> v, const Rational& s) {
    v *= s;
    return v;
}

HomAlgebra<Rational> d2_dendriform() {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto& c = d2.product(label::circ);
    const auto r = d2_rb<Rational>(Q);
    return two_product(Tensor<Rational>::from_basis(Q, 2, [&](std::size_t i, std::size_t j) { return c.eval(e(2, i), r.column(j)); }),
                       Tensor<Rational>::from_basis(Q, 2, [&](std::size_t i, std::size_t j) { return c.eval(r.column(i), e(2, j)); }),
                       Matrix<Rational>::identity(Q, 2));
}

}  // namespace

TEST(Anticommutator, Examples) {
    const auto z = single_product(label::dot, Tensor<Rational>(Q, 2), Matrix<Rational>::identity(Q, 2));
    EXPECT_TRUE(anticommutator(z).algebra.product(label::circ).is_zero());

    const auto a = example_algebra<Rational>(Q, 1, 1);
    const auto pj = rb_prejordan(a, example_rb<Rational>(Q, 1, 0));
    const auto ac = anticommutator(pj.algebra);
    const auto& c = ac.algebra.product(label::circ);
    EXPECT_EQ(c.basis_product(0, 0), scaled(e(3, 2), q(2)));
    EXPECT_EQ(c.basis_product(0, 1), scaled(e(3, 2), q(1, 2)));
    EXPECT_EQ(ac.expected_suite, SuiteId::hom_jordan);

    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    Tensor<Rational> twice = d2.product(label::dot);
    twice *= q(2);
    EXPECT_EQ(anticommutator(d2).algebra.product(label::circ), twice);
}

TEST(RbPreJordan, Examples) {
    const auto a = example_algebra<Rational>(Q, 1, 1);
    EXPECT_TRUE(rb_prejordan(a, Matrix<Rational>::zero(Q, 3, 3)).algebra.product(label::dot).is_zero());

    for (const auto& p : example_points()) {
        const auto r = rb_prejordan(example_algebra<Rational>(Q, p.a, p.b), example_rb<Rational>(Q, p.l1, p.l2),
                                    {true, Policy::lax});
        EXPECT_EQ(r.algebra.product(label::dot), example_dot_table<Rational>(Q, p));
        EXPECT_EQ(r.algebra.twist, example_algebra<Rational>(Q, p.a, p.b).twist);
    }

    const auto d = rb_prejordan(d2_algebra<Rational>(Q), d2_rb<Rational>(Q)).algebra.product(label::dot);
    EXPECT_EQ(d.basis_product(0, 0), e(2, 1));
    EXPECT_TRUE(d.basis_product(0, 1).is_zero());
    EXPECT_TRUE(d.basis_product(1, 0).is_zero());
    EXPECT_TRUE(d.basis_product(1, 1).is_zero());
}

TEST(RbPreJordan, StrictPolicyRejectsNonCommutingOperator) {
    const auto a = example_algebra<Rational>(Q, 2, 3);
    EXPECT_THROW(rb_prejordan(a, example_rb<Rational>(Q, 1, 2)), PreconditionFailed);
    EXPECT_NO_THROW(rb_prejordan(a, example_rb<Rational>(Q, 1, 2), {true, Policy::lax}));
    EXPECT_NO_THROW(rb_prejordan(a, example_rb<Rational>(Q, 0, 0)));
}

TEST(RbPreJordan, ProductsOfAnticommutatorLieInE3) {
    for (const auto& p : example_points()) {
        const auto pj = rb_prejordan(example_algebra<Rational>(Q, p.a, p.b), example_rb<Rational>(Q, p.l1, p.l2), {true, Policy::lax});
        const auto ac = anticommutator(pj.algebra);
        EXPECT_TRUE(check_suite(ac.algebra, SuiteId::hom_jordan).pass());
        const auto& c = ac.algebra.product(label::circ);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                EXPECT_TRUE(c(i, j, 0).is_zero());
                EXPECT_TRUE(c(i, j, 1).is_zero());
            }
    }
}

TEST(PrealtToPreJordan, Examples) {
    const auto z = two_product(Tensor<Rational>(Q, 2), Tensor<Rational>(Q, 2), Matrix<Rational>::identity(Q, 2));
    EXPECT_TRUE(prealt_to_prejordan(z).algebra.product(label::dot).is_zero());

    const auto dd = prealt_to_prejordan(d2_dendriform());
    EXPECT_EQ(dd.algebra.product(label::dot).basis_product(0, 0), scaled(e(2, 1), q(2)));

    Tensor<Rational> s(Q, 2);
    s(0, 1, 0) = q(3);
    s(1, 1, 1) = q(-1);
    const auto r = prealt_to_prejordan(two_product(s.transposed(), s, Matrix<Rational>::identity(Q, 2)), unchecked);
    Tensor<Rational> twice = s;
    twice *= q(2);
    EXPECT_EQ(r.algebra.product(label::dot), twice);
}

TEST(SemidirectJordan, Examples) {
    const auto d2 = d2_algebra<Rational>(Q);
    RepresentationData<Rational> zero;
    zero.module_dim = 1;
    zero.rho.assign(2, Matrix<Rational>::zero(Q, 1, 1));
    zero.phi = Matrix<Rational>::identity(Q, 1);
    const auto z = semidirect_jordan_result(d2, zero).algebra;
    EXPECT_EQ(z.dim, 3u);
    EXPECT_TRUE(z.product(label::circ).basis_product(2, 2).is_zero());
    EXPECT_TRUE(z.product(label::circ).basis_product(0, 2).is_zero());

    const auto dd = semidirect_jordan_result(d2, adjoint_representation(d2));
    EXPECT_EQ(dd.algebra.dim, 4u);
    EXPECT_TRUE(check_suite(dd.algebra, SuiteId::hom_jordan).pass());

    const auto ex = example_algebra<Rational>(Q, 1, 1);
    const auto ee = semidirect_jordan_result(ex, adjoint_representation(ex));
    EXPECT_EQ(ee.algebra.dim, 6u);
    EXPECT_TRUE(check_suite(ee.algebra, SuiteId::hom_jordan).pass());
    EXPECT_EQ(ee.algebra.twist, direct_sum(ex.twist, ex.twist));
}

TEST(SemidirectPreJordan, Examples) {
    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    BimoduleData<Rational> zero;
    zero.module_dim = 2;
    zero.l.assign(2, Matrix<Rational>::zero(Q, 2, 2));
    zero.r = zero.l;
    zero.phi = Matrix<Rational>::identity(Q, 2);
    const auto s = semidirect_prejordan(d2, zero);
    for (std::size_t i = 2; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(s.product(label::dot).basis_product(i, j).is_zero());

    EXPECT_TRUE(semidirect_prejordan_result(d2, regular_bimodule(d2)).algebra.dim == 4u);
    EXPECT_TRUE(check_suite(semidirect_prejordan(d2, regular_bimodule(d2)), SuiteId::hom_pre_jordan).pass());
}

TEST(OOperatorPreJordan, Examples) {
    const auto ex = example_algebra<Rational>(Q, 1, 1);
    const auto ad = adjoint_representation(ex);
    EXPECT_TRUE(o_op_prejordan_on_module(ex, ad, Matrix<Rational>::zero(Q, 3, 3)).algebra.product(label::dot).is_zero());

    const auto r = example_rb<Rational>(Q, 1, 2);
    const auto via_o = o_op_prejordan_on_module(ex, ad, r);
    EXPECT_EQ(via_o.algebra.product(label::dot), rb_prejordan(ex, r).algebra.product(label::dot));
    ASSERT_FALSE(via_o.assertions.empty());
    EXPECT_TRUE(via_o.assertions[0].pass);

    const auto d2 = d2_algebra<Rational>(Q);
    EXPECT_EQ(o_op_prejordan_on_module(d2, adjoint_representation(d2), d2_rb<Rational>(Q)).algebra.product(label::dot),
              rb_prejordan(d2, d2_rb<Rational>(Q)).algebra.product(label::dot));
}

TEST(CompatiblePreJordan, IdentityAndScaling) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto ad = adjoint_representation(d2);
    // id is not an O-operator for the adjoint representation (x o y != 2 x o y)
    EXPECT_THROW(compatible_prejordan_from_invertible(d2, ad, Matrix<Rational>::identity(Q, 2)), PreconditionFailed);

    const auto r = compatible_prejordan_from_invertible(d2, ad, Matrix<Rational>::identity(Q, 2), unchecked);
    EXPECT_EQ(r.algebra.product(label::dot), d2.product(label::circ));
    Tensor<Rational> twice = d2.product(label::circ);
    twice *= q(2);
    EXPECT_EQ(anticommutator(r.algebra, unchecked).algebra.product(label::circ), twice);
    bool reported = false;
    for (const auto& v : r.assertions)
        if (v.name == "compatibility") reported = !v.pass;
    EXPECT_TRUE(reported);

    auto c = Matrix<Rational>::identity(Q, 2);
    c *= q(3);
    const auto rc = compatible_prejordan_from_invertible(d2, ad, c, unchecked);
    EXPECT_EQ(rc.algebra.product(label::dot), d2.product(label::circ));

    EXPECT_THROW(compatible_prejordan_from_invertible(d2, ad, d2_rb<Rational>(Q), unchecked), NotInvertible);

    const auto z = single_product(label::circ, Tensor<Rational>(Q, 2), Matrix<Rational>::identity(Q, 2));
    EXPECT_TRUE(compatible_prejordan_from_invertible(z, adjoint_representation(z), Matrix<Rational>::identity(Q, 2))
                    .algebra.product(label::dot)
                    .is_zero());
}

TEST(CompatiblePreJordan, InvertibleOOperatorIsCompatible) {
    // e1 o e1 = e2; T = diag(2,1) is an invertible Rota-Baxter operator.
    Tensor<Rational> t(Q, 2);
    t(0, 0, 1) = q(1);
    const auto a = single_product(label::circ, t, Matrix<Rational>::identity(Q, 2));
    const auto r = compatible_prejordan_from_invertible(a, adjoint_representation(a), Matrix<Rational>::diagonal(Q, {q(2), q(1)}));
    for (const auto& v : r.assertions) EXPECT_TRUE(v.pass) << v.name;
    EXPECT_EQ(r.algebra.product(label::dot).basis_product(0, 0), scaled(e(2, 1), q(1, 2)));
    EXPECT_EQ(anticommutator(r.algebra).algebra.product(label::circ), t);
}

TEST(JdendFromOOp, Examples) {
    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    const auto reg = regular_bimodule(d2);
    const auto z = jdend_from_o_op(d2, reg, Matrix<Rational>::zero(Q, 2, 2)).algebra;
    EXPECT_TRUE(z.product(label::prec).is_zero() && z.product(label::succ).is_zero());

    const auto r = jdend_from_o_op(d2, reg, d2_rb<Rational>(Q));
    const auto& succ = r.algebra.product(label::succ);
    const auto& prec = r.algebra.product(label::prec);
    EXPECT_EQ(succ.basis_product(0, 0), e(2, 1));
    EXPECT_EQ(prec.basis_product(0, 0), e(2, 1));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (i + j > 0) {
                EXPECT_TRUE(succ.basis_product(i, j).is_zero() && prec.basis_product(i, j).is_zero());
            }

    // vertical product equals (Tu).v + v.(Tu)
    const auto& dot = d2.product(label::dot);
    const auto t = d2_rb<Rational>(Q);
    const auto expected = Tensor<Rational>::from_basis(Q, 2, [&](std::size_t i, std::size_t j) {
        return dot.eval(t.column(i), e(2, j)) + dot.eval(e(2, j), t.column(i));
    });
    EXPECT_EQ(derive_products(r.algebra).dot, expected);
    EXPECT_TRUE(r.assertions[0].pass);
}

TEST(RbJdendriform, Examples) {
    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    const auto z = rb_jdendriform_on_prejordan(d2, Matrix<Rational>::zero(Q, 2, 2)).algebra;
    EXPECT_TRUE(z.product(label::prec).is_zero() && z.product(label::succ).is_zero());

    const auto r = rb_jdendriform_on_prejordan(d2, d2_rb<Rational>(Q)).algebra;
    EXPECT_EQ(r.product(label::succ).basis_product(0, 0), e(2, 1));
    EXPECT_EQ(r.product(label::prec).basis_product(0, 0), e(2, 1));

    const auto ex = example_algebra<Rational>(Q, 1, 1);
    const auto rb = example_rb<Rational>(Q, 1, 2);
    const auto pj = rb_prejordan(ex, rb).algebra;
    EXPECT_TRUE(verify_rota_baxter(pj, label::dot, rb).overall());
    const auto jd = rb_jdendriform_on_prejordan(pj, rb).algebra;
    EXPECT_TRUE(jd.product(label::prec).is_zero() && jd.product(label::succ).is_zero());
}

TEST(CommutingRb, Examples) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto z0 = Matrix<Rational>::zero(Q, 2, 2);
    const auto z = commuting_rb_jdendriform(d2, z0, z0).algebra;
    EXPECT_TRUE(z.product(label::prec).is_zero() && z.product(label::succ).is_zero());

    const auto r = d2_rb<Rational>(Q);
    const auto dd = commuting_rb_jdendriform(d2, r, r);
    EXPECT_TRUE(dd.algebra.product(label::prec).is_zero() && dd.algebra.product(label::succ).is_zero());
    EXPECT_TRUE(check_suite(dd.algebra, SuiteId::hom_j_dendriform).pass());

    const auto ex = example_algebra<Rational>(Q, 1, 1);
    const auto er = example_rb<Rational>(Q, 2, 1);
    const auto ee = commuting_rb_jdendriform(ex, er, er).algebra;
    EXPECT_TRUE(ee.product(label::prec).is_zero() && ee.product(label::succ).is_zero());

    const auto nc = Matrix<Rational>::from_rows(Q, {{q(0), q(1)}, {q(0), q(0)}});
    EXPECT_THROW(commuting_rb_jdendriform(d2, r, nc), PreconditionFailed);
}

TEST(Transpose, Examples) {
    const auto z = two_product(Tensor<Rational>(Q, 2), Tensor<Rational>(Q, 2), Matrix<Rational>::identity(Q, 2));
    const auto tz = transpose_jdendriform(z).algebra;
    EXPECT_TRUE(tz.product(label::prec).is_zero() && tz.product(label::succ).is_zero());

    const auto d2 = d2_algebra<Rational>(Q, label::dot);
    const auto jd = jdend_from_o_op(d2, regular_bimodule(d2), d2_rb<Rational>(Q)).algebra;
    const auto t = transpose_jdendriform(jd).algebra;
    EXPECT_EQ(transpose_jdendriform(t).algebra, jd);
    EXPECT_EQ(derive_products(t).dot, derive_products(jd).diamond);
    EXPECT_EQ(derive_products(t).diamond, derive_products(jd).dot);
    EXPECT_EQ(derive_products(t).circ, derive_products(jd).circ);
}

TEST(YauTwist, Examples) {
    const auto dd = d2_dendriform();
    EXPECT_EQ(yau_twist(dd, Matrix<Rational>::identity(Q, 2), {true, Policy::strict}, SuiteId::hom_dendriform).algebra, dd);

    const auto zero = yau_twist(dd, Matrix<Rational>::zero(Q, 2, 2), unchecked).algebra;
    EXPECT_TRUE(zero.product(label::prec).is_zero() && zero.product(label::succ).is_zero() && zero.twist.is_zero());
    EXPECT_TRUE(check_suite(zero, SuiteId::hom_j_dendriform).pass());

    const Rational c(5, 2);
    const auto beta = Matrix<Rational>::diagonal(Q, {c, c * c});
    for (const auto& [l, t] : dd.products) EXPECT_TRUE(is_algebra_morphism(t, beta).pass) << l;
    const auto tw = yau_twist(dd, beta, {true, Policy::strict}, SuiteId::hom_dendriform);
    // u -> c u, t -> c^2 t respects u*u = t; the twisted u*'u is c^2 t
    EXPECT_EQ(tw.algebra.product(label::succ).basis_product(0, 0), scaled(e(2, 1), c * c));
    EXPECT_EQ(tw.algebra.product(label::prec).basis_product(0, 0), scaled(e(2, 1), c * c));
    EXPECT_THROW(yau_twist(dd, Matrix<Rational>::diagonal(Q, {q(1), c})), PreconditionFailed);
    EXPECT_EQ(tw.algebra.twist, beta);
    EXPECT_TRUE(check_suite(tw.algebra, SuiteId::hom_dendriform).pass());

    const auto bad = Matrix<Rational>::from_rows(Q, {{q(0), q(1)}, {q(1), q(0)}});
    EXPECT_THROW(yau_twist(dd, bad), PreconditionFailed);
}

TEST(YauTwist, NoteOutsideIdentityTwistedJDendriformCase) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto r = yau_twist(d2, Matrix<Rational>::identity(Q, 2));
    EXPECT_FALSE(r.notes.empty());
}

TEST(VerticalHorizontal, ShareCirc) {
    for (const auto& [name, text] : all_fixtures()) {
        if (name.find("jdendriform") == std::string::npos) continue;
        const auto a = parse_algebra_as<Rational>(text).algebra;
        const auto v = vertical(a).algebra, h = horizontal(a).algebra;
        EXPECT_TRUE(check_suite(v, SuiteId::hom_pre_jordan).pass()) << name;
        EXPECT_TRUE(check_suite(h, SuiteId::hom_pre_jordan).pass()) << name;
        EXPECT_EQ(anticommutator(v).algebra.product(label::circ), anticommutator(h).algebra.product(label::circ)) << name;
    }
}

TEST(ImagePreJordan, RestrictsToImage) {
    const auto d2 = d2_algebra<Rational>(Q);
    const auto r = image_prejordan(d2, adjoint_representation(d2), d2_rb<Rational>(Q));
    EXPECT_EQ(r.algebra.dim, 1u);
    EXPECT_TRUE(check_suite(r.algebra, SuiteId::hom_pre_jordan).pass());
}

TEST(Preconditions, CheckedModeRejectsBadInput) {
    auto broken = example_algebra<Rational>(Q, 1, 1);
    broken.products.at("circ")(1, 0, 1) = q(0);
    EXPECT_THROW(rb_prejordan(broken, example_rb<Rational>(Q, 1, 1)), PreconditionFailed);
    EXPECT_NO_THROW(rb_prejordan(broken, example_rb<Rational>(Q, 1, 1), unchecked));
    const auto d2 = d2_algebra<Rational>(Q);
    const auto not_rb = Matrix<Rational>::identity(Q, 2);
    EXPECT_THROW(rb_prejordan(d2, not_rb), PreconditionFailed);
    EXPECT_THROW(transpose_jdendriform(two_product(d2.product(label::circ), d2.product(label::circ), Matrix<Rational>::identity(Q, 2))),
                 PreconditionFailed);
}
