// Rota-Baxter and O-operators: verification and exhaustive search over F_p.

#ifndef HJD_OPERATORS_HPP
#define HJD_OPERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hjd/algebra.hpp"
#include "hjd/error.hpp"
#include "hjd/linear.hpp"

namespace hjd {

enum class Policy { strict, lax };

inline std::string_view policy_name(Policy p) { return p == Policy::strict ? "strict" : "lax"; }

template <Scalar K>
struct OperatorReport {
    Verdict<K> quadratic;
    Verdict<K> twist;
    Policy policy = Policy::strict;

    bool overall() const { return quadratic.pass && (policy == Policy::lax || twist.pass); }
};

namespace detail {

template <Scalar K>
const Tensor<K>& env_product(const std::map<std::string, Tensor<K>, std::less<>>& env, std::string_view l) {
    auto it = env.find(l);
    if (it == env.end()) throw UnknownLabel("product \"" + std::string(l) + "\" not available");
    return it->second;
}

/// T phi = alpha T, compared column by column.
template <Scalar K>
Verdict<K> twist_commutation(const Matrix<K>& t, const Matrix<K>& phi, const Matrix<K>& alpha, Sort slot) {
    const Matrix<K> l = t * phi, r = alpha * t;
    for (std::size_t j = 0; j < t.cols(); ++j) {
        auto a = l.column(j), b = r.column(j);
        if (!(a == b)) return Verdict<K>::fail("twist-commutation", {j}, std::move(a), std::move(b), {slot});
    }
    return Verdict<K>::ok("twist-commutation");
}

}  // namespace detail

/// R(x)*R(y) = R(R(x)*y + x*R(y)) on basis pairs, and R alpha = alpha R.
template <Scalar K>
OperatorReport<K> verify_rota_baxter(const HomAlgebra<K>& a, std::string_view l, const Matrix<K>& r,
                                     Policy policy = Policy::strict) {
    const auto env = product_environment(a);
    const Tensor<K>& t = detail::env_product(env, l);
    if (r.rows() != a.dim || r.cols() != a.dim) throw DimensionMismatch("Rota-Baxter operator must be dim x dim");
    OperatorReport<K> rep{Verdict<K>::ok("quadratic-identity"), Verdict<K>::ok("twist-commutation"), policy};
    for (std::size_t i = 0; i < a.dim && rep.quadratic.pass; ++i) {
        const auto ri = r.column(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const auto rj = r.column(j);
            auto lhs = t.eval(ri, rj);
            auto rhs = r.apply(t.eval(ri, Vector<K>::basis(a.field, a.dim, j)) +
                               t.eval(Vector<K>::basis(a.field, a.dim, i), rj));
            if (!(lhs == rhs)) {
                rep.quadratic = Verdict<K>::fail("quadratic-identity", {i, j}, std::move(lhs), std::move(rhs));
                break;
            }
        }
    }
    rep.twist = detail::twist_commutation(r, a.twist, a.twist, Sort::algebra);
    return rep;
}

/// T(u) o T(v) = T(rho(Tu)v + rho(Tv)u) on module basis pairs, and T phi = alpha T.
template <Scalar K>
OperatorReport<K> verify_o_operator_jordan(const HomAlgebra<K>& a, const RepresentationData<K>& rep,
                                           const Matrix<K>& t, Policy policy = Policy::strict) {
    rep.validate(a.dim);
    const auto env = product_environment(a);
    const Tensor<K>& circ = detail::env_product(env, label::circ);
    if (t.rows() != a.dim || t.cols() != rep.module_dim) throw DimensionMismatch("O-operator must be dim x moduleDim");
    OperatorReport<K> out{Verdict<K>::ok("quadratic-identity"), Verdict<K>::ok("twist-commutation"), policy};
    const std::size_t m = rep.module_dim;
    for (std::size_t i = 0; i < m && out.quadratic.pass; ++i) {
        const auto tu = t.column(i);
        const auto u = Vector<K>::basis(a.field, m, i);
        for (std::size_t j = 0; j < m; ++j) {
            const auto tv = t.column(j);
            const auto v = Vector<K>::basis(a.field, m, j);
            auto lhs = circ.eval(tu, tv);
            auto rhs = t.apply(rep.rho_of(tu).apply(v) + rep.rho_of(tv).apply(u));
            if (!(lhs == rhs)) {
                out.quadratic = Verdict<K>::fail("quadratic-identity", {i, j}, std::move(lhs), std::move(rhs),
                                                 {Sort::module, Sort::module});
                break;
            }
        }
    }
    out.twist = detail::twist_commutation(t, rep.phi, a.twist, Sort::module);
    return out;
}

/// T(u).T(v) = T(l(Tu)v + r(Tv)u) on module basis pairs, and T phi = alpha T.
template <Scalar K>
OperatorReport<K> verify_o_operator_prejordan(const HomAlgebra<K>& a, const BimoduleData<K>& bim,
                                              const Matrix<K>& t, Policy policy = Policy::strict) {
    bim.validate(a.dim);
    const Tensor<K>& dot = a.product(label::dot);
    if (t.rows() != a.dim || t.cols() != bim.module_dim) throw DimensionMismatch("O-operator must be dim x moduleDim");
    OperatorReport<K> out{Verdict<K>::ok("quadratic-identity"), Verdict<K>::ok("twist-commutation"), policy};
    const std::size_t m = bim.module_dim;
    for (std::size_t i = 0; i < m && out.quadratic.pass; ++i) {
        const auto tu = t.column(i);
        const auto u = Vector<K>::basis(a.field, m, i);
        for (std::size_t j = 0; j < m; ++j) {
            const auto tv = t.column(j);
            const auto v = Vector<K>::basis(a.field, m, j);
            auto lhs = dot.eval(tu, tv);
            auto rhs = t.apply(bim.l_of(tu).apply(v) + bim.r_of(tv).apply(u));
            if (!(lhs == rhs)) {
                out.quadratic = Verdict<K>::fail("quadratic-identity", {i, j}, std::move(lhs), std::move(rhs),
                                                 {Sort::module, Sort::module});
                break;
            }
        }
    }
    out.twist = detail::twist_commutation(t, bim.phi, a.twist, Sort::module);
    return out;
}

/// R1 R2 = R2 R1; the witness is the first differing column.
template <Scalar K>
Verdict<K> commute_check(const Matrix<K>& r1, const Matrix<K>& r2) {
    if (!r1.is_square() || !(r1.rows() == r2.rows() && r1.cols() == r2.cols()))
        throw DimensionMismatch("commute_check needs square matrices of equal size");
    const Matrix<K> a = r1 * r2, b = r2 * r1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        auto x = a.column(j), y = b.column(j);
        if (!(x == y)) return Verdict<K>::fail("commute", {j}, std::move(x), std::move(y));
    }
    return Verdict<K>::ok("commute");
}

/// Which matrix entries a search may vary. Text form: rows separated by ';',
/// '*' marks a free entry and '0' a fixed zero, e.g. "000;000;**0".
struct SearchPattern {
    std::size_t n = 0;
    std::vector<bool> free;  // row-major

    static SearchPattern all_free(std::size_t n) { return SearchPattern{n, std::vector<bool>(n * n, true)}; }

    static SearchPattern parse(std::string_view text, std::size_t n) {
        SearchPattern p{n, {}};
        std::size_t rows = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(';', start);
            if (end == std::string_view::npos) end = text.size();
            auto row = text.substr(start, end - start);
            if (row.size() != n)
                throw InputError("pattern row " + std::to_string(rows + 1) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
            for (char c : row) {
                if (c != '*' && c != '0') throw InputError(std::string("pattern entries must be '*' or '0', got '") + c + "'");
                p.free.push_back(c == '*');
            }
            ++rows;
            start = end + 1;
        }
        if (rows != n) throw InputError("pattern has " + std::to_string(rows) + " rows, expected " + std::to_string(n));
        return p;
    }

    std::size_t free_count() const { return static_cast<std::size_t>(std::count(free.begin(), free.end(), true)); }
};

inline constexpr std::uint64_t default_search_budget = 10'000'000;

namespace detail {

/// Fast yes/no Rota-Baxter test with early exit, used by the search.
template <Scalar K>
bool rota_baxter_holds(const Tensor<K>& t, const Matrix<K>& r, const Matrix<K>& alpha, Policy policy) {
    if (policy == Policy::strict && !(r * alpha == alpha * r)) return false;
    const std::size_t n = t.dim();
    std::vector<Vector<K>> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(r.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = t.eval(cols[i], cols[j]);
            Vector<K> inner(t.field(), n);
            for (std::size_t k = 0; k < n; ++k) {
                if (!cols[i][k].is_zero()) inner.axpy(cols[i][k], t.basis_product(k, j));
                if (!cols[j][k].is_zero()) inner.axpy(cols[j][k], t.basis_product(i, k));
            }
            if (!(lhs == r.apply(inner))) return false;
        }
    return true;
}

}  // namespace detail

/// All R over F_p matching the pattern that verify as Rota-Baxter under the
/// policy, in row-major lexicographic order of entries.
inline std::vector<Matrix<Fp>> search_rota_baxter_fp(const HomAlgebra<Fp>& a, std::string_view l,
                                                     const SearchPattern& pattern, Policy policy,
                                                     std::uint64_t budget = default_search_budget,
                                                     unsigned jobs = 1) {
    const auto env = product_environment(a);
    const Tensor<Fp>& t = detail::env_product(env, l);
    if (pattern.n != a.dim) throw DimensionMismatch("pattern size differs from algebra dimension");
    const std::uint64_t p = static_cast<std::uint64_t>(a.field.p);
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < pattern.free.size(); ++k)
        if (pattern.free[k]) positions.push_back(k);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (total > budget / p) {
            throw BudgetExceeded("search space " + std::to_string(p) + "^" + std::to_string(positions.size()) +
                                 " exceeds the budget of " + std::to_string(budget) +
                                 " candidates; constrain the search with a pattern");
        }
        total *= p;
    }
    if (total > budget)
        throw BudgetExceeded("search space exceeds the budget of " + std::to_string(budget) + " candidates");

    const std::size_t n = a.dim;
    auto candidate = [&](std::uint64_t index) {
        Matrix<Fp> r(a.field, n, n);
        // last free position is the least significant digit
        for (std::size_t k = positions.size(); k-- > 0;) {
            const auto pos = positions[k];
            r(pos / n, pos % n) = a.field.element(static_cast<std::int64_t>(index % p));
            index /= p;
        }
        return r;
    };
    auto scan = [&](std::uint64_t from, std::uint64_t to, std::vector<Matrix<Fp>>& out) {
        for (std::uint64_t i = from; i < to; ++i) {
            auto r = candidate(i);
            if (detail::rota_baxter_holds(t, r, a.twist, policy)) out.push_back(std::move(r));
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    std::vector<std::vector<Matrix<Fp>>> parts(jobs);
    if (jobs == 1) {
        scan(0, total, parts[0]);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t from = std::min(total, w * chunk), to = std::min(total, from + chunk);
            threads.emplace_back([&, w, from, to] { scan(from, to, parts[w]); });
        }
        for (auto& th : threads) th.join();
    }
    std::vector<Matrix<Fp>> out;
    for (auto& part : parts)
        for (auto& r : part) out.push_back(std::move(r));
    return out;
}

}  // namespace hjd

#endif  // HJD_OPERATORS_HPP
