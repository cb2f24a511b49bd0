// Constructions producing new Hom-algebras, modules and operators from old ones.
//
// In checked mode every construction first verifies its hypotheses and throws
// PreconditionFailed when they do not hold. Each result names the suite its
// output is expected to pass.

#ifndef HJD_CONSTRUCTIONS_HPP
#define HJD_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hjd/algebra.hpp"
#include "hjd/check.hpp"
#include "hjd/operators.hpp"

namespace hjd {

struct ConstructionOptions {
    bool checked = true;
    Policy policy = Policy::strict;
};

template <Scalar K>
struct ConstructionResult {
    std::string construction;
    std::vector<std::string> inputs;
    HomAlgebra<K> algebra;
    std::vector<RepresentationData<K>> representations;  // expected to verify over `algebra`
    std::vector<BimoduleData<K>> bimodules;              // expected to verify over `algebra`
    std::optional<SuiteId> expected_suite;
    std::vector<Verdict<K>> assertions;  // extra claims (morphisms, compatibility)
    std::vector<std::string> notes;
};

/// Runs the expected suite and module checks of a result.
template <Scalar K>
std::vector<CheckReport<K>> verify_result(const ConstructionResult<K>& r) {
    std::vector<CheckReport<K>> out;
    if (r.expected_suite) out.push_back(check_suite(r.algebra, *r.expected_suite));
    for (const auto& rep : r.representations) out.push_back(check_representation(r.algebra, rep));
    for (const auto& bim : r.bimodules) out.push_back(check_bimodule(r.algebra, bim));
    return out;
}

namespace detail {

template <Scalar K>
std::string describe_failure(const Verdict<K>& v) {
    std::string s = v.name;
    if (!v.witness.empty()) {
        s += " at (";
        for (std::size_t k = 0; k < v.witness.size(); ++k) s += (k ? "," : "") + std::to_string(v.witness[k]);
        s += ")";
    }
    return s;
}

template <Scalar K>
void require_suite(const HomAlgebra<K>& a, SuiteId s, std::string_view what) {
    auto rep = check_suite(a, s);
    if (!rep.pass())
        throw PreconditionFailed(std::string(what) + " is not " + std::string(suite_name(s)) + ": " +
                                 describe_failure(*rep.first_failure()));
}

template <Scalar K>
void require_operator(const OperatorReport<K>& r, std::string_view what) {
    if (!r.quadratic.pass)
        throw PreconditionFailed(std::string(what) + " fails the quadratic identity: " + describe_failure(r.quadratic));
    if (r.policy == Policy::strict && !r.twist.pass)
        throw PreconditionFailed(std::string(what) + " does not commute with the twist (strict policy): " +
                                 describe_failure(r.twist));
}

template <Scalar K>
void require_square(const Matrix<K>& m, std::size_t n, std::string_view what) {
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace detail

/// x o y = x.y + y.x
template <Scalar K>
ConstructionResult<K> anticommutator(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_pre_jordan, "input");
    const auto& d = a.product(label::dot);
    ConstructionResult<K> r;
    r.construction = "anticommutator";
    r.algebra = single_product(label::circ, d + d.transposed(), a.twist);
    r.expected_suite = SuiteId::hom_jordan;
    return r;
}

/// x.y = R(x) o y
template <Scalar K>
ConstructionResult<K> rb_prejordan(const HomAlgebra<K>& a, const Matrix<K>& rb, const ConstructionOptions& o = {}) {
    detail::require_square(rb, a.dim, "R");
    if (o.checked) {
        detail::require_suite(a, SuiteId::hom_jordan, "input");
        detail::require_operator(verify_rota_baxter(a, label::circ, rb, o.policy), "R");
    }
    const auto& c = a.product(label::circ);
    ConstructionResult<K> r;
    r.construction = "rb-prejordan";
    r.algebra = single_product(label::dot, Tensor<K>::from_basis(a.field, a.dim, [&](std::size_t i, std::size_t j) {
                                   return c.eval(rb.column(i), Vector<K>::basis(a.field, a.dim, j));
                               }),
                               a.twist);
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// x.y = x>y + y<x
template <Scalar K>
ConstructionResult<K> prealt_to_prejordan(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_pre_alt, "input");
    ConstructionResult<K> r;
    r.construction = "prealt-prejordan";
    r.algebra = single_product(label::dot, a.product(label::succ) + a.product(label::prec).transposed(), a.twist);
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// A (+) V; Hom-Jordan exactly when (V, rho, phi) is a representation.
template <Scalar K>
ConstructionResult<K> semidirect_jordan_result(const HomAlgebra<K>& a, const RepresentationData<K>& rep,
                                               const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_jordan, "input");
    ConstructionResult<K> r;
    r.construction = "semidirect-jordan";
    r.algebra = semidirect_jordan(a, rep);
    r.expected_suite = SuiteId::hom_jordan;
    auto rc = check_representation(a, rep);
    Verdict<K> v = rc.pass() ? Verdict<K>::ok("representation") : *rc.first_failure();
    v.name = "representation";
    r.assertions.push_back(std::move(v));
    return r;
}

/// A (+) V; Hom-pre-Jordan exactly when (V, l, r, phi) is a bimodule.
template <Scalar K>
ConstructionResult<K> semidirect_prejordan_result(const HomAlgebra<K>& a, const BimoduleData<K>& bim,
                                                  const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_pre_jordan, "input");
    ConstructionResult<K> r;
    r.construction = "semidirect-prejordan";
    r.algebra = semidirect_prejordan(a, bim);
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// Assertion T(u*v + v*u) = T(u) o T(v) on module basis pairs.
template <Scalar K>
Verdict<K> morphism_to(const Tensor<K>& source, const Tensor<K>& target, const Matrix<K>& t, std::string name) {
    const std::size_t m = source.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto l = t.apply(source.basis_product(i, j));
            auto r = target.eval(t.column(i), t.column(j));
            if (!(l == r)) return Verdict<K>::fail(std::move(name), {i, j}, std::move(l), std::move(r),
                                                   {Sort::module, Sort::module});
        }
    return Verdict<K>::ok(std::move(name));
}

/// u*v = rho(T u) v on V, twist phi.
template <Scalar K>
ConstructionResult<K> o_op_prejordan_on_module(const HomAlgebra<K>& a, const RepresentationData<K>& rep,
                                               const Matrix<K>& t, const ConstructionOptions& o = {}) {
    rep.validate(a.dim);
    if (t.rows() != a.dim || t.cols() != rep.module_dim) throw DimensionMismatch("T must be dim x moduleDim");
    if (o.checked) {
        detail::require_suite(a, SuiteId::hom_jordan, "input");
        auto rc = check_representation(a, rep);
        if (!rc.pass()) throw PreconditionFailed("module is not a representation: " + detail::describe_failure(*rc.first_failure()));
        detail::require_operator(verify_o_operator_jordan(a, rep, t, o.policy), "T");
    }
    const std::size_t m = rep.module_dim;
    auto prod = Tensor<K>::from_basis(a.field, m, [&](std::size_t i, std::size_t j) {
        return rep.rho_of(t.column(i)).column(j);
    });
    ConstructionResult<K> r;
    r.construction = "o-op-prejordan";
    const auto circ = product_environment(a).at(std::string(label::circ));
    r.assertions.push_back(morphism_to(prod + prod.transposed(), circ, t, "T-morphism"));
    r.algebra = single_product(label::dot, std::move(prod), rep.phi);
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// x.y = T(rho(x) T^{-1} y) on A, for invertible T. Compatibility (the
/// anticommutator equals circ) is reported, not assumed.
template <Scalar K>
ConstructionResult<K> compatible_prejordan_from_invertible(const HomAlgebra<K>& a, const RepresentationData<K>& rep,
                                                           const Matrix<K>& t, const ConstructionOptions& o = {}) {
    rep.validate(a.dim);
    detail::require_square(t, a.dim, "T");
    auto inv = mat_invert(t);
    if (!inv) throw NotInvertible("T is not invertible");
    if (o.checked) {
        detail::require_suite(a, SuiteId::hom_jordan, "input");
        detail::require_operator(verify_o_operator_jordan(a, rep, t, o.policy), "T");
    }
    auto prod = Tensor<K>::from_basis(a.field, a.dim, [&](std::size_t i, std::size_t j) {
        return (t * rep.rho[i] * *inv).column(j);
    });
    ConstructionResult<K> r;
    r.construction = "compatible-prejordan";
    const auto circ = product_environment(a).at(std::string(label::circ));
    const auto anti = prod + prod.transposed();
    Verdict<K> compat = Verdict<K>::ok("compatibility");
    for (std::size_t i = 0; i < a.dim && compat.pass; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (!(anti.basis_product(i, j) == circ.basis_product(i, j))) {
                compat = Verdict<K>::fail("compatibility", {i, j}, anti.basis_product(i, j), circ.basis_product(i, j));
                break;
            }
    r.assertions.push_back(std::move(compat));
    r.algebra = single_product(label::dot, std::move(prod), a.twist);
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// u<v = r(Tu)v, u>v = l(Tu)v on V, twist phi.
template <Scalar K>
ConstructionResult<K> jdend_from_o_op(const HomAlgebra<K>& a, const BimoduleData<K>& bim, const Matrix<K>& t,
                                      const ConstructionOptions& o = {}) {
    bim.validate(a.dim);
    if (t.rows() != a.dim || t.cols() != bim.module_dim) throw DimensionMismatch("T must be dim x moduleDim");
    if (o.checked) {
        auto bc = check_bimodule(a, bim);
        if (!bc.pass()) throw PreconditionFailed("module is not a bimodule: " + detail::describe_failure(*bc.first_failure()));
        detail::require_operator(verify_o_operator_prejordan(a, bim, t, o.policy), "T");
    }
    const std::size_t m = bim.module_dim;
    auto prec = Tensor<K>::from_basis(a.field, m, [&](std::size_t i, std::size_t j) { return bim.r_of(t.column(i)).column(j); });
    auto succ = Tensor<K>::from_basis(a.field, m, [&](std::size_t i, std::size_t j) { return bim.l_of(t.column(i)).column(j); });
    ConstructionResult<K> r;
    r.construction = "jdend-from-o-op";
    r.assertions.push_back(morphism_to(succ + prec.transposed(), a.product(label::dot), t, "T-morphism"));
    r.algebra = two_product(std::move(prec), std::move(succ), bim.phi);
    r.expected_suite = SuiteId::hom_j_dendriform;
    return r;
}

/// x<y = y.R(x), x>y = R(x).y
template <Scalar K>
ConstructionResult<K> rb_jdendriform_on_prejordan(const HomAlgebra<K>& a, const Matrix<K>& rb,
                                                  const ConstructionOptions& o = {}) {
    detail::require_square(rb, a.dim, "R");
    if (o.checked) {
        detail::require_suite(a, SuiteId::hom_pre_jordan, "input");
        detail::require_operator(verify_rota_baxter(a, label::dot, rb, o.policy), "R");
    }
    const auto& d = a.product(label::dot);
    const std::size_t n = a.dim;
    auto e = [&](std::size_t i) { return Vector<K>::basis(a.field, n, i); };
    ConstructionResult<K> r;
    r.construction = "rb-jdendriform";
    r.algebra = two_product(
        Tensor<K>::from_basis(a.field, n, [&](std::size_t i, std::size_t j) { return d.eval(e(j), rb.column(i)); }),
        Tensor<K>::from_basis(a.field, n, [&](std::size_t i, std::size_t j) { return d.eval(rb.column(i), e(j)); }),
        a.twist);
    r.expected_suite = SuiteId::hom_j_dendriform;
    return r;
}

/// x<y = R1(y) o R2(x), x>y = R1R2(x) o y
template <Scalar K>
ConstructionResult<K> commuting_rb_jdendriform(const HomAlgebra<K>& a, const Matrix<K>& r1, const Matrix<K>& r2,
                                               const ConstructionOptions& o = {}) {
    detail::require_square(r1, a.dim, "R1");
    detail::require_square(r2, a.dim, "R2");
    if (o.checked) {
        detail::require_suite(a, SuiteId::hom_jordan, "input");
        detail::require_operator(verify_rota_baxter(a, label::circ, r1, o.policy), "R1");
        detail::require_operator(verify_rota_baxter(a, label::circ, r2, o.policy), "R2");
        auto cm = commute_check(r1, r2);
        if (!cm.pass) throw PreconditionFailed("R1 and R2 do not commute: " + detail::describe_failure(cm));
    }
    const auto& c = a.product(label::circ);
    const std::size_t n = a.dim;
    const Matrix<K> r12 = r1 * r2;
    ConstructionResult<K> r;
    r.construction = "commuting-rb-jdendriform";
    r.algebra = two_product(
        Tensor<K>::from_basis(a.field, n, [&](std::size_t i, std::size_t j) { return c.eval(r1.column(j), r2.column(i)); }),
        Tensor<K>::from_basis(a.field, n, [&](std::size_t i, std::size_t j) {
            return c.eval(r12.column(i), Vector<K>::basis(a.field, n, j));
        }),
        a.twist);
    r.expected_suite = SuiteId::hom_j_dendriform;
    return r;
}

/// x <^t y = y < x, x >^t y = x > y. Swapping only prec is what makes the
/// vertical and horizontal products trade places; swapping succ as well does not.
template <Scalar K>
ConstructionResult<K> transpose_jdendriform(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_j_dendriform, "input");
    ConstructionResult<K> r;
    r.construction = "transpose";
    r.algebra = two_product(a.product(label::prec).transposed(), a.product(label::succ), a.twist);
    r.algebra.basis = a.basis;
    r.expected_suite = SuiteId::hom_j_dendriform;
    return r;
}

/// Suite an algebra's declared products point to.
template <Scalar K>
SuiteId default_suite(const HomAlgebra<K>& a) {
    if (a.is_two_product()) return SuiteId::hom_j_dendriform;
    if (a.has(label::dot)) return SuiteId::hom_pre_jordan;
    return SuiteId::hom_jordan;
}

/// x *' y = beta(x) * beta(y) for every product, twist beta alpha.
template <Scalar K>
ConstructionResult<K> yau_twist(const HomAlgebra<K>& a, const Matrix<K>& beta, const ConstructionOptions& o = {},
                                std::optional<SuiteId> suite = std::nullopt) {
    detail::require_square(beta, a.dim, "beta");
    const SuiteId s = suite.value_or(default_suite(a));
    if (o.checked) {
        detail::require_suite(a, s, "input");
        for (const auto& [l, t] : a.products) {
            auto v = is_algebra_morphism(t, beta, "morphism(" + l + ")");
            if (!v.pass) throw PreconditionFailed("beta is not a morphism: " + detail::describe_failure(v));
        }
        if (!(beta * a.twist == a.twist * beta)) throw PreconditionFailed("beta does not commute with the twist");
    }
    ConstructionResult<K> r;
    r.construction = "yau-twist";
    r.algebra = HomAlgebra<K>(a.field, a.dim);
    r.algebra.basis = a.basis;
    std::vector<Vector<K>> img;
    for (std::size_t i = 0; i < a.dim; ++i) img.push_back(beta.column(i));
    for (const auto& [l, t] : a.products)
        r.algebra.products.emplace(
            l, Tensor<K>::from_basis(a.field, a.dim, [&](std::size_t i, std::size_t j) { return t.eval(img[i], img[j]); }));
    r.algebra.twist = beta * a.twist;
    r.expected_suite = s;
    if (!(s == SuiteId::hom_j_dendriform && a.twist == Matrix<K>::identity(a.field, a.dim)))
        r.notes.push_back("outside the J-dendriform case with identity twist; output verified, not guaranteed");
    return r;
}

/// (A, dot) with x.y = x>y + y<x.
template <Scalar K>
ConstructionResult<K> vertical(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_j_dendriform, "input");
    ConstructionResult<K> r;
    r.construction = "vertical";
    r.algebra = single_product(label::dot, derive_products(a).dot, a.twist);
    r.algebra.basis = a.basis;
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// (A, dot) with x.y = x>y + x<y.
template <Scalar K>
ConstructionResult<K> horizontal(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_j_dendriform, "input");
    ConstructionResult<K> r;
    r.construction = "horizontal";
    r.algebra = single_product(label::dot, derive_products(a).diamond, a.twist);
    r.algebra.basis = a.basis;
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

/// Horizontal algebra together with its bimodule (A, L_succ, R_prec, alpha).
template <Scalar K>
ConstructionResult<K> jdendriform_bimodule(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    auto r = horizontal(a, o);
    r.construction = "jdendriform-bimodule";
    BimoduleData<K> bim;
    bim.name = "succ-prec";
    bim.module_dim = a.dim;
    bim.l = left_multiplications(a.product(label::succ));
    bim.r = right_multiplications(a.product(label::prec));
    bim.phi = a.twist;
    r.bimodules.push_back(std::move(bim));
    return r;
}

/// The input algebra with its adjoint representation attached.
template <Scalar K>
ConstructionResult<K> adjoint_result(const HomAlgebra<K>& a, const ConstructionOptions& o = {}) {
    if (o.checked) detail::require_suite(a, SuiteId::hom_jordan, "input");
    ConstructionResult<K> r;
    r.construction = "adjoint";
    r.algebra = a;
    r.representations.push_back(adjoint_representation(a));
    if (!is_algebra_morphism(a, label::circ, a.twist).pass)
        r.notes.push_back("twist is not multiplicative; the adjoint representation need not verify");
    return r;
}

/// Induced Hom-pre-Jordan structure on T(V): T(u).T(v) = T(rho(Tu)v), twist
/// alpha restricted to T(V). Errors when the restriction is not closed or the
/// product is not well defined.
template <Scalar K>
ConstructionResult<K> image_prejordan(const HomAlgebra<K>& a, const RepresentationData<K>& rep, const Matrix<K>& t,
                                      const ConstructionOptions& o = {}) {
    auto on_v = o_op_prejordan_on_module(a, rep, t, o);
    const auto& prod = on_v.algebra.product(label::dot);
    const auto pivots = independent_columns(t);
    const std::size_t k = pivots.size();
    std::vector<Vector<K>> basis;
    for (auto p : pivots) basis.push_back(t.column(p));
    const auto b = Matrix<K>::from_columns(a.field, a.dim, basis);
    auto coords = [&](const Vector<K>& x, std::string_view what) {
        auto c = solve(b, x);
        if (!c) throw PreconditionFailed(std::string(what) + " leaves the image of T");
        return *c;
    };
    // coordinates of T(e_j) in the image basis
    std::vector<Vector<K>> tc;
    for (std::size_t j = 0; j < t.cols(); ++j) tc.push_back(coords(t.column(j), "T"));
    Tensor<K> induced = Tensor<K>::from_basis(a.field, k, [&](std::size_t i, std::size_t j) {
        return coords(t.apply(prod.basis_product(pivots[i], pivots[j])), "the product");
    });
    // well defined: T(u*v) must depend on u, v only through T(u), T(v)
    for (std::size_t i = 0; i < t.cols(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            auto direct = coords(t.apply(prod.basis_product(i, j)), "the product");
            if (!(direct == induced.eval(tc[i], tc[j])))
                throw PreconditionFailed("induced product on T(V) is not well defined");
        }
    Matrix<K> tw(a.field, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto c = coords(a.twist.apply(basis[i]), "the twist");
        for (std::size_t r = 0; r < k; ++r) tw(r, i) = c[r];
    }
    ConstructionResult<K> r;
    r.construction = "image-prejordan";
    r.algebra = single_product(label::dot, std::move(induced), std::move(tw));
    r.expected_suite = SuiteId::hom_pre_jordan;
    return r;
}

}  // namespace hjd

#endif  // HJD_CONSTRUCTIONS_HPP
