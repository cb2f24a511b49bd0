// The axiom systems, written as multilinear identities.

#ifndef HJD_SUITES_HPP
#define HJD_SUITES_HPP

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hjd/expr.hpp"

namespace hjd {

enum class SuiteId { hom_jordan, hom_pre_jordan, hom_pre_alt, hom_dendriform, hom_j_dendriform, jordan_rep };

inline constexpr std::array<SuiteId, 6> all_suites = {SuiteId::hom_jordan,     SuiteId::hom_pre_jordan,
                                                      SuiteId::hom_pre_alt,    SuiteId::hom_dendriform,
                                                      SuiteId::hom_j_dendriform, SuiteId::jordan_rep};

inline std::string_view suite_name(SuiteId s) {
    switch (s) {
        case SuiteId::hom_jordan: return "HOM_JORDAN";
        case SuiteId::hom_pre_jordan: return "HOM_PRE_JORDAN";
        case SuiteId::hom_pre_alt: return "HOM_PRE_ALT";
        case SuiteId::hom_dendriform: return "HOM_DENDRIFORM";
        case SuiteId::hom_j_dendriform: return "HOM_J_DENDRIFORM";
        case SuiteId::jordan_rep: return "JORDAN_REP";
    }
    return "";
}

/// Accepts "HOM_PRE_JORDAN" or the CLI spelling "hom-pre-jordan".
inline std::optional<SuiteId> parse_suite(std::string_view text) {
    std::string norm;
    for (char c : text) norm += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (norm == "REPRESENTATION") return SuiteId::jordan_rep;
    for (auto s : all_suites)
        if (suite_name(s) == norm) return s;
    return std::nullopt;
}

/// Products an algebra must provide (declared or derived) for the suite.
inline std::vector<std::string_view> required_products(SuiteId s) {
    switch (s) {
        case SuiteId::hom_jordan: return {label::circ};
        case SuiteId::hom_pre_jordan: return {label::dot};
        case SuiteId::hom_pre_alt:
        case SuiteId::hom_dendriform: return {label::prec, label::succ};
        case SuiteId::hom_j_dendriform: return {label::prec, label::succ};
        case SuiteId::jordan_rep: return {label::circ};
    }
    return {};
}

namespace suites {

using L = std::string_view;

inline Expr a(const Expr& e) { return tw(e, 1); }
inline Expr a2(const Expr& e) { return tw(e, 2); }
inline Expr m(L l, const Expr& x, const Expr& y) { return mul(l, x, y); }

inline const std::vector<Sort>& four_algebra() {
    static const std::vector<Sort> s(4, Sort::algebra);
    return s;
}
inline const std::vector<Sort>& three_algebra() {
    static const std::vector<Sort> s(3, Sort::algebra);
    return s;
}

inline std::vector<Identity> hom_jordan() {
    const L c = label::circ;
    auto x = var(0), y = var(1), z = var(2), u = var(3);
    Identity comm{"commutativity", {Sort::algebra, Sort::algebra}, m(c, x, y), m(c, y, x), true};
    // sum over cyclic (x,y,z) of as(x o y, a(u), a(z)) = 0, linearized Jordan identity
    auto left = [&](const Expr& p, const Expr& q, const Expr& r) { return m(c, m(c, m(c, p, q), a(u)), a2(r)); };
    auto right = [&](const Expr& p, const Expr& q, const Expr& r) { return m(c, a(m(c, p, q)), m(c, a(u), a(r))); };
    Identity jordan{"jordan-linearized", four_algebra(), left(x, y, z) + left(y, z, x) + left(z, x, y),
                    right(x, y, z) + right(y, z, x) + right(z, x, y)};
    return {comm, jordan};
}

/// Quadratic form as(x o x, a(y), a(x)) = 0; not multilinear, random-vector use only.
inline Identity hom_jordan_quadratic() {
    const L c = label::circ;
    auto x = var(0), y = var(1);
    auto xx = m(c, x, x);
    return Identity{"jordan-quadratic", {Sort::algebra, Sort::algebra}, m(c, m(c, xx, a(y)), a2(x)),
                    m(c, a(xx), m(c, a(y), a(x)))};
}

inline std::vector<Identity> hom_pre_jordan() {
    const L d = label::dot, c = label::circ;
    auto x = var(0), y = var(1), z = var(2), u = var(3);
    auto rhs = m(d, a2(x), m(d, m(c, y, z), a(u))) + m(d, a2(y), m(d, m(c, z, x), a(u))) +
               m(d, a2(z), m(d, m(c, x, y), a(u)));
    auto cyc = [&](const Expr& p, const Expr& q, const Expr& r) { return m(d, m(c, a(p), a(q)), m(d, a(r), a(u))); };
    Identity first{"pre-jordan-cyclic", four_algebra(), cyc(x, y, z) + cyc(y, z, x) + cyc(z, x, y), rhs};
    Identity second{"pre-jordan-split", four_algebra(),
                    m(d, m(c, m(c, x, z), a(y)), a2(u)) + m(d, a2(x), m(d, a(y), m(d, z, u))) +
                        m(d, a2(z), m(d, a(y), m(d, x, u))),
                    rhs};
    return {first, second};
}

inline std::vector<Identity> hom_pre_alt() {
    const L P = label::prec, S = label::succ, st = label::star;
    auto x = var(0), y = var(1), z = var(2);
    auto d1 = m(P, m(S, x, y), a(z));
    auto d1r = m(S, a(x), m(P, y, z));
    return {
        Identity{"pre-alt-1", three_algebra(), d1 + m(P, m(P, y, x), a(z)), d1r + m(P, a(y), m(st, x, z))},
        Identity{"pre-alt-2", three_algebra(), d1 + m(S, m(st, x, z), a(y)), d1r + m(S, a(x), m(S, z, y))},
        Identity{"pre-alt-3", three_algebra(), m(P, m(P, x, y), a(z)) + m(P, m(P, x, z), a(y)),
                 m(P, a(x), m(st, y, z)) + m(P, a(x), m(st, z, y))},
        Identity{"pre-alt-4", three_algebra(), m(S, m(st, x, y), a(z)) + m(S, m(st, y, x), a(z)),
                 m(S, a(x), m(S, y, z)) + m(S, a(y), m(S, x, z))},
    };
}

inline std::vector<Identity> hom_dendriform() {
    const L P = label::prec, S = label::succ, st = label::star;
    auto x = var(0), y = var(1), z = var(2);
    return {
        Identity{"dendriform-middle", three_algebra(), m(P, m(S, x, y), a(z)), m(S, a(x), m(P, y, z))},
        Identity{"dendriform-left", three_algebra(), m(P, m(P, x, y), a(z)), m(P, a(x), m(st, y, z))},
        Identity{"dendriform-right", three_algebra(), m(S, m(st, x, y), a(z)), m(S, a(x), m(S, y, z))},
    };
}

inline std::vector<Identity> hom_j_dendriform() {
    const L P = label::prec, S = label::succ, d = label::dot, D = label::diamond, c = label::circ;
    auto x = var(0), y = var(1), z = var(2), u = var(3);
    auto lhs_succ = [&](const Expr& p, const Expr& q, const Expr& r) { return m(S, a(m(c, p, q)), a(m(S, r, u))); };
    Poly cyc_succ = lhs_succ(x, y, z) + lhs_succ(y, z, x) + lhs_succ(z, x, y);
    Poly mixed = m(S, a(m(c, x, y)), a(m(P, z, u))) + m(P, a(m(d, x, z)), a(m(D, y, u))) +
                 m(P, a(m(d, y, z)), a(m(D, x, u)));
    return {
        Identity{"j-dendriform-1", four_algebra(), cyc_succ,
                 m(S, a2(x), m(S, m(c, y, z), a(u))) + m(S, a2(y), m(S, m(c, z, x), a(u))) +
                     m(S, a2(z), m(S, m(c, x, y), a(u)))},
        Identity{"j-dendriform-2", four_algebra(), cyc_succ,
                 m(S, a2(x), m(S, a(y), m(S, z, u))) + m(S, a2(z), m(S, a(y), m(S, x, u))) +
                     m(S, m(c, a(y), m(c, z, x)), a2(u))},
        Identity{"j-dendriform-3", four_algebra(), mixed,
                 m(S, a2(x), m(P, a(z), m(D, y, u))) + m(S, a2(y), m(P, a(z), m(D, x, u))) +
                     m(P, m(d, m(c, x, y), a(z)), a2(u))},
        Identity{"j-dendriform-4", four_algebra(),
                 m(P, a(m(d, z, y)), a(m(D, x, u))) + m(P, a(m(d, x, y)), a(m(D, z, u))) +
                     m(S, a(m(c, x, z)), a(m(P, y, u))),
                 m(S, a2(x), m(P, m(d, z, y), a(u))) + m(S, a2(z), m(P, m(d, x, y), a(u))) +
                     m(P, a2(y), m(D, m(c, x, z), a(u)))},
        Identity{"j-dendriform-5", four_algebra(), mixed,
                 m(S, a2(x), m(S, a(y), m(P, z, u))) + m(P, a2(z), m(D, a(y), m(D, x, u))) +
                     m(P, m(d, a(y), m(d, x, z)), a2(u))},
    };
}

/// Conditions on (rho, phi) over (A, circ, alpha); the module variable is last.
inline std::vector<Identity> jordan_rep(L r = "rho") {
    const L c = label::circ;
    auto x = var(0), y = var(1), z = var(2);
    auto w = var(3, Sort::module);
    auto w1 = var(1, Sort::module);
    const std::vector<Sort> sorts{Sort::algebra, Sort::algebra, Sort::algebra, Sort::module};
    auto rr = [&](const Expr& p, const Expr& v) { return act(r, p, v); };
    auto outer = [&](const Expr& p, const Expr& q, const Expr& s) { return rr(m(c, a(p), a(q)), rr(a(s), a(w))); };
    Poly cyc_outer = outer(x, y, z) + outer(y, z, x) + outer(z, x, y);
    return {
        Identity{"equivariance", {Sort::algebra, Sort::module}, a(rr(x, w1)), rr(a(x), a(w1))},
        Identity{"rep-cyclic", sorts,
                 rr(a2(x), rr(m(c, y, z), a(w))) + rr(a2(y), rr(m(c, z, x), a(w))) +
                     rr(a2(z), rr(m(c, x, y), a(w))),
                 cyc_outer},
        Identity{"rep-split", sorts,
                 rr(m(c, m(c, x, y), a(z)), a2(w)) + rr(a2(x), rr(a(z), rr(y, w))) + rr(a2(y), rr(a(z), rr(x, w))),
                 cyc_outer},
    };
}

/// Direct identities on (l, r, phi) over a Hom-pre-Jordan algebra; informational,
/// the normative bimodule test is the semidirect sum.
inline std::vector<Identity> bimodule_auxiliary() {
    const L c = label::circ;
    auto x = var(0), y = var(1), z = var(2);
    auto w = var(3, Sort::module);
    auto w1 = var(1, Sort::module);
    const std::vector<Sort> sorts{Sort::algebra, Sort::algebra, Sort::algebra, Sort::module};
    auto l = [&](const Expr& p, const Expr& v) { return act("l", p, v); };
    Poly cyc_l = l(a2(x), l(m(c, y, z), a(w))) + l(a2(y), l(m(c, z, x), a(w))) + l(a2(z), l(m(c, x, y), a(w)));
    auto outer = [&](const Expr& p, const Expr& q, const Expr& s) { return l(m(c, a(p), a(q)), l(a(s), a(w))); };
    return {
        Identity{"l-equivariance", {Sort::algebra, Sort::module}, a(l(x, w1)), l(a(x), a(w1))},
        Identity{"r-equivariance", {Sort::algebra, Sort::module}, a(act("r", x, w1)), act("r", a(x), a(w1))},
        Identity{"l-cyclic", sorts, outer(x, y, z) + outer(y, z, x) + outer(z, x, y), cyc_l},
        Identity{"l-split", sorts,
                 l(m(c, m(c, x, z), a(y)), a2(w)) + l(a2(x), l(a(y), l(z, w))) + l(a2(z), l(a(y), l(x, w))), cyc_l},
    };
}

}  // namespace suites

inline const std::vector<Identity>& suite_identities(SuiteId s) {
    static const std::vector<Identity> hj = suites::hom_jordan();
    static const std::vector<Identity> pj = suites::hom_pre_jordan();
    static const std::vector<Identity> pa = suites::hom_pre_alt();
    static const std::vector<Identity> de = suites::hom_dendriform();
    static const std::vector<Identity> jd = suites::hom_j_dendriform();
    static const std::vector<Identity> rep = suites::jordan_rep();
    switch (s) {
        case SuiteId::hom_jordan: return hj;
        case SuiteId::hom_pre_jordan: return pj;
        case SuiteId::hom_pre_alt: return pa;
        case SuiteId::hom_dendriform: return de;
        case SuiteId::hom_j_dendriform: return jd;
        case SuiteId::jordan_rep: return rep;
    }
    return hj;
}

}  // namespace hjd

#endif  // HJD_SUITES_HPP
