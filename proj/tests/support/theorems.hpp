// Executable theorems over generated instances. Shared by the property tests
// and the acceptance binary so both run the same checks.
#ifndef HJD_TESTS_THEOREMS_HPP
#define HJD_TESTS_THEOREMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "hjd/hjd.hpp"
#include "support/generators.hpp"

namespace hjd::theorems {

struct Tally {
    std::size_t instances = 0;
    std::size_t residual_checks = 0;  // identities probed at 20 random points after a PASS
    std::size_t semidirect_pass = 0;  // both directions of the semidirect iff
    std::size_t semidirect_fail = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && instances > 0; }
    void merge(const Tally& o) {
        instances += o.instances;
        residual_checks += o.residual_checks;
        semidirect_pass += o.semidirect_pass;
        semidirect_fail += o.semidirect_fail;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

// Premises are verified by the runner itself, so constructions skip their own checks.
inline constexpr ConstructionOptions unchecked{false, Policy::strict};

template <Scalar K>
class Runner {
public:
    Runner(const field_t<K>& f, std::uint64_t seed) : f_(f), rng_(seed) {}

    const field_t<K>& field() const { return f_; }
    gen::Rng& rng() { return rng_; }
    Tally& tally() { return tally_; }

    void fail(const std::string& what) {
        if (tally_.failures.size() < 20) tally_.failures.push_back(context_ + ": " + what);
    }

    /// Next generated associative seed; every fourth one has dimension 2.
    gen::AssocInstance<K> next() {
        ++tally_.instances;
        auto in = gen::random_assoc<K>(f_, rng_, tally_.instances % 4 == 0 ? 2 : 4);
        context_ = field_name() + " #" + std::to_string(tally_.instances) + " " + in.recipe;
        return in;
    }

    /// Suite verdict; on PASS also probes every identity at 20 random points.
    bool suite(const HomAlgebra<K>& a, SuiteId s, const std::string& what) {
        const auto rep = check_suite(a, s);
        if (!rep.pass()) {
            fail(what + " fails " + std::string(suite_name(s)) + " at " + rep.first_failure()->name);
            return false;
        }
        residuals(suite_context(a, s), suite_identities(s), what);
        return true;
    }

    bool representation(const HomAlgebra<K>& a, const RepresentationData<K>& r) {
        if (!check_representation(a, r).pass()) return false;
        residuals(representation_context(a, r), suite_identities(SuiteId::jordan_rep), "representation");
        return true;
    }

    void residuals(const EvalContext<K>& ctx, const std::vector<Identity>& ids, const std::string& what) {
        for (const auto& id : ids) {
            ++tally_.residual_checks;
            for (const auto& r : random_residuals<K>(ctx, id, 20, rng_))
                if (!r.is_zero()) {
                    fail(what + ": " + id.name + " passes on the basis but not at a random point");
                    break;
                }
        }
    }

    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }

private:
    std::string field_name() const {
        if constexpr (std::is_same_v<K, Rational>) return "Q";
        else return "F" + std::to_string(f_.p);
    }

    field_t<K> f_;
    gen::Rng rng_;
    Tally tally_;
    std::string context_;
};

/// a. anticommutator of a pre-Jordan algebra is Hom-Jordan.
template <Scalar K>
void anticommutator_is_jordan(Runner<K>& run) {
    const auto in = run.next();
    const auto pj = gen::prejordan(in, gen::small_nonzero<K>(run.field(), run.rng()));
    if (!run.suite(pj, SuiteId::hom_pre_jordan, "generated pre-Jordan")) return;
    run.suite(anticommutator(pj, unchecked).algebra, SuiteId::hom_jordan, "anticommutator");
}

/// b. dendriform is pre-alternative, and its pre-Jordan image is pre-Jordan.
template <Scalar K>
void dendriform_to_prejordan(Runner<K>& run) {
    const auto d = gen::dendriform(run.next());
    if (!run.suite(d, SuiteId::hom_dendriform, "generated dendriform")) return;
    if (!run.suite(d, SuiteId::hom_pre_alt, "dendriform as pre-alternative")) return;
    run.suite(prealt_to_prejordan(d, unchecked).algebra, SuiteId::hom_pre_jordan, "prealt-prejordan");
}

/// c. vertical and horizontal products, transpose.
template <Scalar K>
void jdendriform_splittings(Runner<K>& run) {
    const auto jd = gen::jdendriform(run.next());
    if (!run.suite(jd, SuiteId::hom_j_dendriform, "generated J-dendriform")) return;
    const auto v = vertical(jd, unchecked).algebra, h = horizontal(jd, unchecked).algebra;
    run.suite(v, SuiteId::hom_pre_jordan, "vertical");
    run.suite(h, SuiteId::hom_pre_jordan, "horizontal");
    run.expect(anticommutator(v, unchecked).algebra.product(label::circ) ==
                   anticommutator(h, unchecked).algebra.product(label::circ),
               "vertical and horizontal circ differ");
    const auto t = transpose_jdendriform(jd, unchecked).algebra;
    run.expect(transpose_jdendriform(t, unchecked).algebra == jd, "transpose is not an involution");
    const auto dj = derive_products(jd), dt = derive_products(t);
    run.expect(dt.dot == dj.diamond && dt.diamond == dj.dot, "transpose does not swap dot and diamond");
    run.suite(t, SuiteId::hom_j_dendriform, "transpose");
}

/// d. semidirect sum is a multiplicative Hom-Jordan algebra iff the module is a
/// representation. Bases here have multiplicative twists.
template <Scalar K>
void semidirect_iff_representation(Runner<K>& run) {
    const auto in = run.next();
    const auto pj = gen::prejordan(in, gen::small_nonzero<K>(run.field(), run.rng()));
    const auto base_pj = anticommutator(pj, unchecked).algebra;
    const auto j = gen::hom_jordan(in);
    RepresentationData<K> ldot{"l-dot", pj.dim, left_multiplications(pj.product(label::dot)), pj.twist};
    const std::pair<const HomAlgebra<K>*, RepresentationData<K>> cases[] = {{&j, adjoint_representation(j)},
                                                                            {&base_pj, ldot}};
    for (const auto& [base, valid] : cases) {
        for (int k = 0; k < 2; ++k) {
            const auto rep = k == 0 ? valid : gen::corrupt(valid, run.rng());
            const bool is_rep = run.representation(*base, rep);
            if (k == 0 && !is_rep) run.fail(rep.name + " is not a representation");
            const auto semi = semidirect_jordan(*base, rep);
            // multiplicativity of alpha + phi carries the equivariance condition, the
            // Hom-Jordan identities carry the other two
            const bool jordan = check_suite(semi, SuiteId::hom_jordan).pass() &&
                                is_algebra_morphism(semi, label::circ, semi.twist).pass;
            if (jordan) run.residuals(suite_context(semi, SuiteId::hom_jordan), suite_identities(SuiteId::hom_jordan), "semidirect");
            run.expect(is_rep == jordan, rep.name + (k ? " (corrupted)" : "") + ": representation " +
                                             (is_rep ? "PASS" : "FAIL") + " but semidirect " + (jordan ? "PASS" : "FAIL"));
            ++(jordan ? run.tally().semidirect_pass : run.tally().semidirect_fail);
        }
    }
}

/// e. commuting Rota-Baxter pairs give J-dendriform algebras; R2 stays Rota-Baxter on the R1 pre-Jordan algebra.
template <Scalar K>
void commuting_pairs(Runner<K>& run) {
    const auto in = run.next();
    const auto j = gen::hom_jordan(in);
    const auto [r1, r2] = gen::commuting_pair(in, run.rng());
    const bool premise = verify_rota_baxter(j, label::circ, r1).overall() && verify_rota_baxter(j, label::circ, r2).overall() &&
                         commute_check(r1, r2).pass;
    if (!premise) {
        run.fail("generated pair is not a commuting strict Rota-Baxter pair");
        return;
    }
    run.suite(commuting_rb_jdendriform(j, r1, r2, unchecked).algebra, SuiteId::hom_j_dendriform, "commuting-rb-jdendriform");
    const auto pj = rb_prejordan(j, r1, unchecked).algebra;
    run.expect(verify_rota_baxter(pj, label::dot, r2).overall(), "R2 is not Rota-Baxter on the R1 pre-Jordan algebra");
}

/// f. O-operators on bimodules give J-dendriform algebras and T is a morphism.
template <Scalar K>
void o_operator_jdendriform(Runner<K>& run) {
    const auto in = run.next();
    const auto j = gen::hom_jordan(in);
    const auto [r1, r2] = gen::commuting_pair(in, run.rng());
    const auto pj = rb_prejordan(j, r1, unchecked).algebra;
    // the bimodules are regular or (L_succ, R_prec), bimodules by construction;
    // the operator premise is cheap enough to confirm
    auto check = [&](const HomAlgebra<K>& a, const BimoduleData<K>& bim, const Matrix<K>& t, const std::string& what) {
        if (!verify_o_operator_prejordan(a, bim, t).overall()) {
            run.fail(what + ": T is not an O-operator");
            return;
        }
        const auto r = jdend_from_o_op(a, bim, t, unchecked);
        run.suite(r.algebra, SuiteId::hom_j_dendriform, what);
        for (const auto& v : r.assertions) run.expect(v.pass, what + ": " + v.name + " fails");
    };
    check(pj, regular_bimodule(pj), r2, "regular bimodule, T = R2");

    const auto jd = gen::jdendriform(in);
    const auto hb = jdendriform_bimodule(jd, unchecked);
    check(hb.algebra, hb.bimodules[0], Matrix<K>::identity(run.field(), jd.dim), "horizontal bimodule, T = id");
}

using Theorem = std::function<Tally(std::uint64_t seed, std::size_t count)>;

/// Runs `body` on `count` instances over Q and on `count` over F5.
template <template <class> class Body>
Tally over_q_and_f5(std::uint64_t seed, std::size_t count) {
    Tally out;
    {
        Runner<Rational> run(RationalField{}, seed);
        for (std::size_t k = 0; k < count; ++k) Body<Rational>::apply(run);
        out.merge(run.tally());
    }
    {
        Runner<Fp> run(PrimeField(5), seed + 1);
        for (std::size_t k = 0; k < count; ++k) Body<Fp>::apply(run);
        out.merge(run.tally());
    }
    return out;
}

#define HJD_THEOREM(name, fn) \
    template <class K>        \
    struct name {             \
        static void apply(Runner<K>& r) { fn<K>(r); } \
    };

HJD_THEOREM(AnticommutatorIsJordan, anticommutator_is_jordan)
HJD_THEOREM(DendriformToPrejordan, dendriform_to_prejordan)
HJD_THEOREM(JdendriformSplittings, jdendriform_splittings)
HJD_THEOREM(SemidirectIffRepresentation, semidirect_iff_representation)
HJD_THEOREM(CommutingPairs, commuting_pairs)
HJD_THEOREM(OOperatorJdendriform, o_operator_jdendriform)

#undef HJD_THEOREM

}  // namespace hjd::theorems

#endif  // HJD_TESTS_THEOREMS_HPP
