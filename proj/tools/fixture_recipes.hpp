// Shipped fixtures: the 3-dimensional Example at several parameter points, the
// dual numbers D2 and a few derived algebras. Used by make_fixtures and tests.

#ifndef HJD_FIXTURE_RECIPES_HPP
#define HJD_FIXTURE_RECIPES_HPP

#include <string>
#include <utility>
#include <vector>

#include "hjd/hjd.hpp"

namespace hjd::fixtures {

struct ExamplePoint {
    long a, b, l1, l2;
};

inline const std::vector<ExamplePoint>& example_points() {
    static const std::vector<ExamplePoint> pts{{1, 1, 1, 1}, {2, 3, 1, 2}, {1, -1, 0, 3}};
    return pts;
}

inline std::string example_file_name(const ExamplePoint& p) {
    auto s = [](long v) { return v < 0 ? "m" + std::to_string(-v) : std::to_string(v); };
    return "example_" + s(p.a) + "_" + s(p.b) + "_" + s(p.l1) + "_" + s(p.l2) + ".json";
}

/// circ table with parameters a, b; twist diag(a, a, b).
template <Scalar K>
HomAlgebra<K> example_algebra(const field_t<K>& f, long a, long b) {
    const K ka = f.from_int(a), kb = f.from_int(b), half_b = f.from_int(b) / f.from_int(2);
    Tensor<K> c(f, 3);
    c(0, 0, 0) = ka;
    c(0, 1, 1) = ka;
    c(0, 2, 2) = kb;
    c(1, 0, 1) = ka;
    c(1, 1, 1) = ka;
    c(1, 2, 2) = half_b;
    c(2, 0, 2) = kb;
    c(2, 1, 2) = half_b;
    auto alg = single_product(label::circ, std::move(c), Matrix<K>::diagonal(f, {ka, ka, kb}));
    alg.basis = {"e1", "e2", "e3"};
    return alg;
}

/// R(e1) = l1 e3, R(e2) = l2 e3, R(e3) = 0.
template <Scalar K>
Matrix<K> example_rb(const field_t<K>& f, long l1, long l2) {
    Matrix<K> r(f, 3, 3);
    r(2, 0) = f.from_int(l1);
    r(2, 1) = f.from_int(l2);
    return r;
}

/// The dot table R(x) o y written out entrywise.
template <Scalar K>
Tensor<K> example_dot_table(const field_t<K>& f, const ExamplePoint& p) {
    const K b = f.from_int(p.b), half_b = f.from_int(p.b) / f.from_int(2);
    Tensor<K> d(f, 3);
    d(0, 0, 2) = f.from_int(p.l1) * b;
    d(0, 1, 2) = f.from_int(p.l1) * half_b;
    d(1, 0, 2) = f.from_int(p.l2) * b;
    d(1, 1, 2) = f.from_int(p.l2) * half_b;
    return d;
}

template <Scalar K>
AlgebraModel<K> example_model(const field_t<K>& f, const ExamplePoint& p) {
    AlgebraModel<K> m;
    m.algebra = example_algebra<K>(f, p.a, p.b);
    m.maps.emplace("R", example_rb<K>(f, p.l1, p.l2));
    return m;
}

/// Dual numbers: u.u = u, u.t = t.u = t, t.t = 0, identity twist.
template <Scalar K>
HomAlgebra<K> d2_algebra(const field_t<K>& f, std::string_view l = label::circ) {
    Tensor<K> c(f, 2);
    c(0, 0, 0) = f.one();
    c(0, 1, 1) = f.one();
    c(1, 0, 1) = f.one();
    auto alg = single_product(l, std::move(c), Matrix<K>::identity(f, 2));
    alg.basis = {"u", "t"};
    return alg;
}

/// R(u) = t, R(t) = 0.
template <Scalar K>
Matrix<K> d2_rb(const field_t<K>& f) {
    return Matrix<K>::from_rows(f, {{f.zero(), f.zero()}, {f.one(), f.zero()}});
}

/// K[t]/(t^m) in the basis 1, t, ..., t^(m-1).
template <Scalar K>
Tensor<K> truncated_polynomials(const field_t<K>& f, std::size_t m) {
    Tensor<K> c(f, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j) c(i, j, i + j) = f.one();
    return c;
}

/// t^k -> t^(k+1)/(k+1), truncated.
template <Scalar K>
Matrix<K> integration(const field_t<K>& f, std::size_t m) {
    Matrix<K> r(f, m, m);
    for (std::size_t k = 0; k + 1 < m; ++k) r(k + 1, k) = f.one() / f.from_int(static_cast<long>(k + 1));
    return r;
}

inline std::vector<std::string> power_basis(std::size_t m) {
    std::vector<std::string> b{"1"};
    for (std::size_t k = 1; k < m; ++k) b.push_back(k == 1 ? "t" : "t" + std::to_string(k));
    return b;
}

/// File name and canonical text of every shipped fixture.
inline std::vector<std::pair<std::string, std::string>> all_fixtures() {
    const RationalField q;
    const PrimeField f5(5);
    std::vector<std::pair<std::string, std::string>> out;

    for (const auto& p : example_points()) out.emplace_back(example_file_name(p), serialize_algebra(example_model<Rational>(q, p)));

    {
        auto m = example_model<Rational>(q, {1, 1, 1, 1});
        Tensor<Rational>& c = m.algebra.products.at(std::string(label::circ));
        c(1, 0, 1) = q.zero();
        out.emplace_back("example_broken.json", serialize_algebra(m));
    }
    out.emplace_back("example_f5.json", serialize_algebra(example_model<Fp>(f5, {1, 1, 1, 1})));

    {
        AlgebraModel<Rational> m;
        m.algebra = d2_algebra<Rational>(q);
        m.maps.emplace("R", d2_rb<Rational>(q));
        auto ad = adjoint_representation(m.algebra);
        ad.name = "ad";
        m.modules.emplace_back(std::move(ad));
        out.emplace_back("d2.json", serialize_algebra(m));
    }
    {
        AlgebraModel<Fp> m;
        m.algebra = d2_algebra<Fp>(f5);
        out.emplace_back("d2_f5.json", serialize_algebra(m));
    }
    {
        AlgebraModel<Rational> m;
        m.algebra = d2_algebra<Rational>(q, label::dot);
        m.maps.emplace("T", d2_rb<Rational>(q));
        auto reg = regular_bimodule(m.algebra);
        reg.name = "reg";
        m.modules.emplace_back(std::move(reg));
        out.emplace_back("d2_prejordan.json", serialize_algebra(m));
    }
    {
        // x>y = R(x)y, x<y = xR(y)
        const auto d2 = d2_algebra<Rational>(q);
        const auto& c = d2.product(label::circ);
        const auto r = d2_rb<Rational>(q);
        auto e = [&](std::size_t i) { return Vector<Rational>::basis(q, 2, i); };
        AlgebraModel<Rational> m;
        m.algebra = two_product(
            Tensor<Rational>::from_basis(q, 2, [&](std::size_t i, std::size_t j) { return c.eval(e(i), r.column(j)); }),
            Tensor<Rational>::from_basis(q, 2, [&](std::size_t i, std::size_t j) { return c.eval(r.column(i), e(j)); }),
            Matrix<Rational>::identity(q, 2));
        m.algebra.basis = d2.basis;
        m.maps.emplace("beta", Matrix<Rational>::diagonal(q, {q.from_int(2), q.from_int(4)}));
        out.emplace_back("d2_dendriform.json", serialize_algebra(m));
    }
    {
        AlgebraModel<Rational> m;
        m.algebra = single_product(label::circ, truncated_polynomials<Rational>(q, 3), Matrix<Rational>::identity(q, 3));
        m.algebra.basis = power_basis(3);
        m.maps.emplace("R1", integration<Rational>(q, 3));
        auto r2 = integration<Rational>(q, 3);
        r2 *= q.from_int(2);
        m.maps.emplace("R2", r2);
        out.emplace_back("poly3.json", serialize_algebra(m));

        auto jd = commuting_rb_jdendriform(m.algebra, m.maps.at("R1"), m.maps.at("R2"));
        AlgebraModel<Rational> j;
        j.algebra = jd.algebra;
        j.algebra.basis = m.algebra.basis;
        out.emplace_back("poly3_jdendriform.json", serialize_algebra(j));
    }
    {
        // (e.e = e, e.n = n) (x) K[t]/(t^2), Yau-twisted by diag(1,2) (x) id; x<y = y*R(x), x>y = R(x)*y
        const auto seed = Tensor<Rational>::from_basis(q, 2, [&](std::size_t i, std::size_t j) {
            Vector<Rational> v(q, 2);
            if (i == 0) v[j] = q.one();
            return v;
        });
        const auto poly = truncated_polynomials<Rational>(q, 2);
        const auto mu0 = Tensor<Rational>::from_basis(q, 4, [&](std::size_t i, std::size_t j) {
            Vector<Rational> v(q, 4);
            for (std::size_t k1 = 0; k1 < 2; ++k1)
                for (std::size_t k2 = 0; k2 < 2; ++k2) v[k1 * 2 + k2] = seed(i / 2, j / 2, k1) * poly(i % 2, j % 2, k2);
            return v;
        });
        const auto beta = Matrix<Rational>::diagonal(q, {q.one(), q.one(), q.from_int(2), q.from_int(2)});
        Matrix<Rational> r(q, 4, 4);
        r(1, 0) = q.one();
        r(3, 2) = q.one();
        auto e = [&](std::size_t i) { return Vector<Rational>::basis(q, 4, i); };
        auto mu = [&](const Vector<Rational>& x, const Vector<Rational>& y) { return beta.apply(mu0.eval(x, y)); };
        AlgebraModel<Rational> m;
        m.algebra = two_product(
            Tensor<Rational>::from_basis(q, 4, [&](std::size_t i, std::size_t j) { return mu(e(j), r.column(i)); }),
            Tensor<Rational>::from_basis(q, 4, [&](std::size_t i, std::size_t j) { return mu(r.column(i), e(j)); }),
            beta);
        m.algebra.basis = {"e", "et", "n", "nt"};
        out.emplace_back("nc2_jdendriform.json", serialize_algebra(m));
    }
    {
        AlgebraModel<Rational> m;
        m.algebra = single_product(label::circ, Tensor<Rational>(q, 1), Matrix<Rational>::identity(q, 1));
        out.emplace_back("minimal.json", serialize_algebra(m));
    }
    {
        AlgebraModel<Rational> m;
        m.algebra = single_product(label::succ, d2_algebra<Rational>(q).product(label::circ), Matrix<Rational>::identity(q, 2));
        m.algebra.basis = {"u", "t"};
        out.emplace_back("missing_prec.json", serialize_algebra(m));
    }
    return out;
}

}  // namespace hjd::fixtures

#endif  // HJD_FIXTURE_RECIPES_HPP
