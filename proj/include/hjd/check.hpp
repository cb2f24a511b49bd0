// Suite checks on algebras, representations and bimodules.

#ifndef HJD_CHECK_HPP
#define HJD_CHECK_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hjd/algebra.hpp"
#include "hjd/expr.hpp"
#include "hjd/suites.hpp"

namespace hjd {

template <Scalar K>
struct CheckReport {
    std::string suite;
    std::vector<Verdict<K>> identities;  // decide the verdict
    std::vector<Verdict<K>> structural;  // reported alongside, never decide it
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& v : identities)
            if (!v.pass) return false;
        return true;
    }
    const Verdict<K>* first_failure() const {
        for (const auto& v : identities)
            if (!v.pass) return &v;
        return nullptr;
    }
};

/// as(x, y, z) = (x*y)*alpha(z) - alpha(x)*(y*z)
template <Scalar K>
Vector<K> hom_associator(const HomAlgebra<K>& a, std::string_view l, const Vector<K>& x, const Vector<K>& y,
                         const Vector<K>& z) {
    const auto& t = a.product(l);
    return t.eval(t.eval(x, y), a.alpha(z)) - t.eval(a.alpha(x), t.eval(y, z));
}

/// Evaluates identities on all basis tuples. Identities with the same variable
/// sorts share one memo table.
template <Scalar K>
std::vector<Verdict<K>> run_identities(const EvalContext<K>& ctx, const std::vector<Identity>& ids) {
    std::map<std::vector<Sort>, Evaluator<K>> evals;
    std::vector<Verdict<K>> out;
    for (const auto& id : ids) {
        auto it = evals.find(id.sorts);
        if (it == evals.end()) it = evals.emplace(id.sorts, Evaluator<K>::on_basis(ctx, id.sorts)).first;
        auto r = it->second.run(id);
        if (r.pass) out.push_back(Verdict<K>::ok(id.name));
        else out.push_back(Verdict<K>::fail(id.name, r.witness, std::move(*r.lhs), std::move(*r.rhs), id.sorts));
    }
    return out;
}

template <Scalar K>
EvalContext<K> suite_context(const HomAlgebra<K>& a, SuiteId s) {
    if (s == SuiteId::jordan_rep) throw InputError("JORDAN_REP is checked on a representation");
    auto ctx = EvalContext<K>::of(a);
    for (auto l : required_products(s))
        if (ctx.products.find(l) == ctx.products.end())
            throw UnknownLabel(std::string(suite_name(s)) + " needs product \"" + std::string(l) + "\"");
    if ((s == SuiteId::hom_pre_alt || s == SuiteId::hom_dendriform || s == SuiteId::hom_j_dendriform) &&
        !a.is_two_product())
        throw UnknownLabel(std::string(suite_name(s)) + " needs an algebra with exactly prec and succ");
    return ctx;
}

template <Scalar K>
EvalContext<K> representation_context(const HomAlgebra<K>& a, const RepresentationData<K>& rep) {
    rep.validate(a.dim);
    auto ctx = EvalContext<K>::of(a);
    if (ctx.products.find(label::circ) == ctx.products.end())
        throw UnknownLabel("representation check needs a circ product");
    ctx.dim_v = rep.module_dim;
    ctx.phi = rep.phi;
    ctx.actions.emplace("rho", rep.rho);
    return ctx;
}

template <Scalar K>
EvalContext<K> bimodule_context(const HomAlgebra<K>& a, const BimoduleData<K>& bim) {
    bim.validate(a.dim);
    auto ctx = EvalContext<K>::of(a);
    if (ctx.products.find(label::dot) == ctx.products.end()) throw UnknownLabel("bimodule check needs a dot product");
    ctx.dim_v = bim.module_dim;
    ctx.phi = bim.phi;
    ctx.actions.emplace("l", bim.l);
    ctx.actions.emplace("r", bim.r);
    return ctx;
}

namespace detail {

template <Scalar K>
void add_multiplicativity(CheckReport<K>& rep, const HomAlgebra<K>& a) {
    for (const auto& [l, t] : a.products) rep.structural.push_back(is_algebra_morphism(t, a.twist, "twist-multiplicative(" + l + ")"));
}

}  // namespace detail

template <Scalar K>
CheckReport<K> check_suite(const HomAlgebra<K>& a, SuiteId s) {
    const auto ctx = suite_context(a, s);
    CheckReport<K> rep;
    rep.suite = std::string(suite_name(s));
    rep.identities = run_identities(ctx, suite_identities(s));
    detail::add_multiplicativity(rep, a);
    return rep;
}

template <Scalar K>
CheckReport<K> check_representation(const HomAlgebra<K>& a, const RepresentationData<K>& r) {
    const auto ctx = representation_context(a, r);
    CheckReport<K> rep;
    rep.suite = std::string(suite_name(SuiteId::jordan_rep));
    rep.identities = run_identities(ctx, suite_identities(SuiteId::jordan_rep));
    detail::add_multiplicativity(rep, a);
    return rep;
}

/// Bimodule verdict: the semidirect sum A (+) V must be Hom-pre-Jordan. The
/// direct identities on (l, r, phi) are reported as structural entries.
template <Scalar K>
CheckReport<K> check_bimodule(const HomAlgebra<K>& a, const BimoduleData<K>& bim) {
    CheckReport<K> rep;
    rep.suite = "BIMODULE";
    auto base = check_suite(a, SuiteId::hom_pre_jordan);
    if (!base.pass()) {
        auto v = *base.first_failure();
        v.name = "base-pre-jordan:" + v.name;
        rep.identities.push_back(std::move(v));
        rep.notes.push_back("base algebra is not Hom-pre-Jordan");
        return rep;
    }
    const auto semi = semidirect_prejordan(a, bim);
    for (auto& v : check_suite(semi, SuiteId::hom_pre_jordan).identities) {
        v.name = "semidirect:" + v.name;
        rep.identities.push_back(std::move(v));
    }
    for (auto& v : run_identities(bimodule_context(a, bim), suites::bimodule_auxiliary())) rep.structural.push_back(std::move(v));
    return rep;
}

template <Scalar K, class Rng>
Vector<K> random_vector(const field_t<K>& f, std::size_t n, Rng& rng) {
    Vector<K> v(f, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.random(rng);
    return v;
}

/// lhs - rhs of an identity at `count` random argument tuples.
template <Scalar K, class Rng>
std::vector<Vector<K>> random_residuals(const EvalContext<K>& ctx, const Identity& id, std::size_t count, Rng& rng) {
    std::vector<Vector<K>> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::vector<Vector<K>>> in;
        for (Sort s : id.sorts)
            in.push_back({random_vector<K>(ctx.field, s == Sort::algebra ? ctx.dim_a : ctx.dim_v, rng)});
        Evaluator<K> ev(ctx, std::move(in));
        auto [l, r] = ev.values_at(id, std::vector<std::size_t>(id.arity(), 0));
        out.push_back(l - r);
    }
    return out;
}

}  // namespace hjd

#endif  // HJD_CHECK_HPP
