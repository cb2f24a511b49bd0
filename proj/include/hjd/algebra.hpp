// Hom-algebras given by structure constants, their modules and basic predicates.

#ifndef HJD_ALGEBRA_HPP
#define HJD_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hjd/error.hpp"
#include "hjd/linear.hpp"
#include "hjd/scalar.hpp"
#include "hjd/tensor.hpp"

namespace hjd {

namespace label {
inline constexpr std::string_view circ = "circ";
inline constexpr std::string_view dot = "dot";
inline constexpr std::string_view prec = "prec";
inline constexpr std::string_view succ = "succ";
// derived from prec/succ only
inline constexpr std::string_view diamond = "diamond";
inline constexpr std::string_view star = "star";
}  // namespace label

inline bool is_declarable_label(std::string_view l) {
    return l == label::circ || l == label::dot || l == label::prec || l == label::succ;
}

/// Kind of a variable slot: algebra element or module vector.
enum class Sort { algebra, module };

/// Outcome of one predicate or identity. On failure, `witness` holds basis
/// indices and `lhs`/`rhs` the two unequal values.
template <Scalar K>
struct Verdict {
    std::string name;
    bool pass = true;
    std::vector<std::size_t> witness;
    std::vector<Sort> witness_sorts;  // empty means all algebra slots
    std::optional<Vector<K>> lhs;
    std::optional<Vector<K>> rhs;

    static Verdict ok(std::string n) { return Verdict{std::move(n), true, {}, {}, std::nullopt, std::nullopt}; }
    static Verdict fail(std::string n, std::vector<std::size_t> w, Vector<K> l, Vector<K> r,
                        std::vector<Sort> sorts = {}) {
        return Verdict{std::move(n), false, std::move(w), std::move(sorts), std::move(l), std::move(r)};
    }
};

template <Scalar K>
struct HomAlgebra {
    field_t<K> field{};
    std::size_t dim = 0;
    std::vector<std::string> basis;  // cosmetic names, may be empty
    std::map<std::string, Tensor<K>, std::less<>> products;
    Matrix<K> twist;

    HomAlgebra() = default;
    HomAlgebra(field_t<K> f, std::size_t n) : field(std::move(f)), dim(n), twist(Matrix<K>::identity(field, n)) {}

    bool has(std::string_view l) const { return products.find(l) != products.end(); }
    bool is_two_product() const { return products.size() == 2 && has(label::prec) && has(label::succ); }

    const Tensor<K>& product(std::string_view l) const {
        auto it = products.find(l);
        if (it == products.end()) throw UnknownLabel("product \"" + std::string(l) + "\" not declared");
        return it->second;
    }

    Vector<K> alpha(const Vector<K>& x) const { return twist.apply(x); }

    std::string basis_name(std::size_t i) const {
        if (i < basis.size()) return basis[i];
        return "e" + std::to_string(i + 1);
    }

    /// Shape and class invariants; throws on violation.
    void validate() const {
        if (twist.rows() != dim || twist.cols() != dim)
            throw DimensionMismatch("twist must be " + std::to_string(dim) + "x" + std::to_string(dim));
        if (!basis.empty() && basis.size() != dim) throw DimensionMismatch("basis names do not match dim");
        for (const auto& [l, t] : products) {
            if (!is_declarable_label(l)) throw UnknownLabel("unknown product label \"" + l + "\"");
            if (t.dim() != dim) throw DimensionMismatch("product \"" + l + "\" has wrong dimension");
        }
        if (products.size() == 2 && !is_two_product())
            throw InputError("two-product algebras must declare exactly prec and succ");
        if (products.size() > 2) throw InputError("at most two products may be declared");
    }

    friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

template <Scalar K>
Vector<K> eval_product(const HomAlgebra<K>& a, std::string_view l, const Vector<K>& x, const Vector<K>& y) {
    return a.product(l).eval(x, y);
}

/// The four products derived from (prec, succ).
template <Scalar K>
struct DerivedProducts {
    Tensor<K> dot;      // x.y = x>y + y<x
    Tensor<K> diamond;  // x<>y = x>y + x<y
    Tensor<K> circ;     // x.y + y.x
    Tensor<K> star;     // x<y + x>y
};

template <Scalar K>
DerivedProducts<K> derive_products(const HomAlgebra<K>& a) {
    const Tensor<K>& p = a.product(label::prec);
    const Tensor<K>& s = a.product(label::succ);
    DerivedProducts<K> d;
    d.dot = s + p.transposed();
    d.diamond = s + p;
    d.circ = d.dot + d.dot.transposed();
    d.star = d.diamond;
    return d;
}

/// Declared products plus everything derivable from them: circ from dot,
/// and dot/diamond/circ/star from prec/succ.
template <Scalar K>
std::map<std::string, Tensor<K>, std::less<>> product_environment(const HomAlgebra<K>& a) {
    auto env = a.products;
    if (a.has(label::prec) && a.has(label::succ)) {
        auto d = derive_products(a);
        env.emplace(std::string(label::dot), std::move(d.dot));
        env.emplace(std::string(label::diamond), std::move(d.diamond));
        env.emplace(std::string(label::circ), std::move(d.circ));
        env.emplace(std::string(label::star), std::move(d.star));
    } else if (a.has(label::dot) && !a.has(label::circ)) {
        const auto& t = a.product(label::dot);
        env.emplace(std::string(label::circ), t + t.transposed());
    }
    return env;
}

template <Scalar K>
Verdict<K> is_commutative(const HomAlgebra<K>& a, std::string_view l) {
    const auto& t = a.product(l);
    std::string name = "commutativity(" + std::string(l) + ")";
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto u = t.basis_product(i, j), v = t.basis_product(j, i);
            if (!(u == v)) return Verdict<K>::fail(name, {i, j}, std::move(u), std::move(v));
        }
    return Verdict<K>::ok(name);
}

/// M(e_i * e_j) = M(e_i) * M(e_j) on all basis pairs.
template <Scalar K>
Verdict<K> is_algebra_morphism(const Tensor<K>& t, const Matrix<K>& m, std::string name = "morphism") {
    const std::size_t n = t.dim();
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("morphism must be square of the algebra dimension");
    std::vector<Vector<K>> img;
    for (std::size_t i = 0; i < n; ++i) img.push_back(m.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto l = m.apply(t.basis_product(i, j));
            auto r = t.eval(img[i], img[j]);
            if (!(l == r)) return Verdict<K>::fail(std::move(name), {i, j}, std::move(l), std::move(r));
        }
    return Verdict<K>::ok(std::move(name));
}

template <Scalar K>
Verdict<K> is_algebra_morphism(const HomAlgebra<K>& a, std::string_view l, const Matrix<K>& m) {
    return is_algebra_morphism(a.product(l), m, "morphism(" + std::string(l) + ")");
}

/// L(e_i): column j is e_i * e_j.
template <Scalar K>
std::vector<Matrix<K>> left_multiplications(const Tensor<K>& t) {
    const std::size_t n = t.dim();
    std::vector<Matrix<K>> out;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> m(t.field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = t(i, j, k);
        out.push_back(std::move(m));
    }
    return out;
}

/// R(e_i): column j is e_j * e_i.
template <Scalar K>
std::vector<Matrix<K>> right_multiplications(const Tensor<K>& t) {
    return left_multiplications(t.transposed());
}

/// Linear extension x -> sum_i x_i M_i of a per-basis matrix list.
template <Scalar K>
Matrix<K> linear_combination(const std::vector<Matrix<K>>& ms, const Vector<K>& x, std::size_t rows,
                             std::size_t cols) {
    if (ms.size() != x.size()) throw DimensionMismatch("coefficient vector length differs from matrix count");
    Matrix<K> out(x.field(), rows, cols);
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (!x[i].is_zero()) out += x[i] * ms[i];
    return out;
}

/// (V, rho, phi) over an algebra (A, circ, alpha).
template <Scalar K>
struct RepresentationData {
    std::string name;
    std::size_t module_dim = 0;
    std::vector<Matrix<K>> rho;  // rho(e_i)
    Matrix<K> phi;

    Matrix<K> rho_of(const Vector<K>& x) const { return linear_combination(rho, x, module_dim, module_dim); }

    void validate(std::size_t base_dim) const {
        if (rho.size() != base_dim) throw DimensionMismatch("rho needs one matrix per basis vector of the algebra");
        for (const auto& m : rho)
            if (m.rows() != module_dim || m.cols() != module_dim)
                throw DimensionMismatch("rho matrices must be moduleDim x moduleDim");
        if (phi.rows() != module_dim || phi.cols() != module_dim)
            throw DimensionMismatch("phi must be moduleDim x moduleDim");
    }

    friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

/// (V, l, r, phi) over a Hom-pre-Jordan algebra (A, dot, alpha).
template <Scalar K>
struct BimoduleData {
    std::string name;
    std::size_t module_dim = 0;
    std::vector<Matrix<K>> l;
    std::vector<Matrix<K>> r;
    Matrix<K> phi;

    Matrix<K> l_of(const Vector<K>& x) const { return linear_combination(l, x, module_dim, module_dim); }
    Matrix<K> r_of(const Vector<K>& x) const { return linear_combination(r, x, module_dim, module_dim); }

    void validate(std::size_t base_dim) const {
        if (l.size() != base_dim || r.size() != base_dim)
            throw DimensionMismatch("l and r need one matrix per basis vector of the algebra");
        for (const auto* side : {&l, &r})
            for (const auto& m : *side)
                if (m.rows() != module_dim || m.cols() != module_dim)
                    throw DimensionMismatch("l/r matrices must be moduleDim x moduleDim");
        if (phi.rows() != module_dim || phi.cols() != module_dim)
            throw DimensionMismatch("phi must be moduleDim x moduleDim");
    }

    friend bool operator==(const BimoduleData&, const BimoduleData&) = default;
};

enum class OperatorKind { rota_baxter, o_operator };

template <Scalar K>
struct OperatorData {
    OperatorKind kind = OperatorKind::rota_baxter;
    Matrix<K> map;
    std::optional<std::string> attached_module;  // name of a module in the same file
};

/// ad(e_i) = left circ-multiplication by e_i, phi = alpha.
template <Scalar K>
RepresentationData<K> adjoint_representation(const HomAlgebra<K>& a) {
    auto env = product_environment(a);
    auto it = env.find(label::circ);
    if (it == env.end()) throw UnknownLabel("adjoint representation needs a circ product");
    RepresentationData<K> rep;
    rep.name = "adjoint";
    rep.module_dim = a.dim;
    rep.rho = left_multiplications(it->second);
    rep.phi = a.twist;
    return rep;
}

/// (A, L_dot, R_dot, alpha).
template <Scalar K>
BimoduleData<K> regular_bimodule(const HomAlgebra<K>& a, std::string_view l = label::dot) {
    const auto env = product_environment(a);
    auto it = env.find(l);
    if (it == env.end()) throw UnknownLabel("product \"" + std::string(l) + "\" not available");
    BimoduleData<K> bim;
    bim.name = "regular";
    bim.module_dim = a.dim;
    bim.l = left_multiplications(it->second);
    bim.r = right_multiplications(it->second);
    bim.phi = a.twist;
    return bim;
}

/// Single-product algebra with the given tensor as `l`.
template <Scalar K>
HomAlgebra<K> single_product(std::string_view l, Tensor<K> t, Matrix<K> twist) {
    HomAlgebra<K> a(t.field(), t.dim());
    a.products.emplace(std::string(l), std::move(t));
    a.twist = std::move(twist);
    return a;
}

template <Scalar K>
HomAlgebra<K> two_product(Tensor<K> prec, Tensor<K> succ, Matrix<K> twist) {
    HomAlgebra<K> a(prec.field(), prec.dim());
    a.products.emplace(std::string(label::prec), std::move(prec));
    a.products.emplace(std::string(label::succ), std::move(succ));
    a.twist = std::move(twist);
    return a;
}

/// Re-expresses a tensor in the basis given by the columns of P.
template <Scalar K>
Tensor<K> change_basis(const Tensor<K>& t, const Matrix<K>& p, const Matrix<K>& p_inv) {
    const std::size_t n = t.dim();
    std::vector<Vector<K>> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
    return Tensor<K>::from_basis(t.field(), n, [&](std::size_t i, std::size_t j) {
        return p_inv.apply(t.eval(cols[i], cols[j]));
    });
}

/// The isomorphic algebra in the basis given by the columns of an invertible P.
template <Scalar K>
HomAlgebra<K> change_basis(const HomAlgebra<K>& a, const Matrix<K>& p) {
    auto inv = mat_invert(p);
    if (!inv) throw NotInvertible("change of basis matrix is singular");
    HomAlgebra<K> b(a.field, a.dim);
    for (const auto& [l, t] : a.products) b.products.emplace(l, change_basis(t, p, *inv));
    b.twist = *inv * a.twist * p;
    return b;
}

namespace detail {

/// Product on A (+) V: (x+u)*(y+v) = x*y + left(x)v + right(y)u.
template <Scalar K>
Tensor<K> block_product(const Tensor<K>& base, const std::vector<Matrix<K>>& left,
                        const std::vector<Matrix<K>>& right, std::size_t m) {
    const std::size_t n = base.dim();
    const std::size_t N = n + m;
    Tensor<K> t(base.field(), N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t(i, j, k) = base(i, j, k);
    // e_i * v_j = left(e_i) v_j, v_j * e_i = right(e_i) v_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                t(i, n + j, n + k) = left[i](k, j);
                t(n + j, i, n + k) = right[i](k, j);
            }
    return t;
}

}  // namespace detail

/// A (+) V with (x+u)o(y+v) = xoy + rho(x)v + rho(y)u and twist alpha (+) phi.
template <Scalar K>
HomAlgebra<K> semidirect_jordan(const HomAlgebra<K>& a, const RepresentationData<K>& rep) {
    rep.validate(a.dim);
    const auto env = product_environment(a);
    auto it = env.find(label::circ);
    if (it == env.end()) throw UnknownLabel("semidirect sum needs a circ product");
    return single_product(label::circ, detail::block_product(it->second, rep.rho, rep.rho, rep.module_dim),
                          direct_sum(a.twist, rep.phi));
}

/// A (+) V with (x+u).(y+v) = x.y + l(x)v + r(y)u and twist alpha (+) phi.
template <Scalar K>
HomAlgebra<K> semidirect_prejordan(const HomAlgebra<K>& a, const BimoduleData<K>& bim) {
    bim.validate(a.dim);
    return single_product(label::dot, detail::block_product(a.product(label::dot), bim.l, bim.r, bim.module_dim),
                          direct_sum(a.twist, bim.phi));
}

}  // namespace hjd

#endif  // HJD_ALGEBRA_HPP
