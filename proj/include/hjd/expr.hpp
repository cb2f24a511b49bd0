// Multilinear identities as data, and their memoized evaluation.
//
// A term is built from variables, twists (alpha on the algebra, phi on the
// module), named bilinear products, and actions of algebra elements on
// module vectors. An identity is a pair of integer combinations of terms.

#ifndef HJD_EXPR_HPP
#define HJD_EXPR_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hjd/algebra.hpp"
#include "hjd/error.hpp"
#include "hjd/linear.hpp"
#include "hjd/tensor.hpp"

namespace hjd {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { var, twist, mul, act };

    Kind kind = Kind::var;
    Sort sort = Sort::algebra;
    std::size_t var = 0;     // var
    unsigned power = 0;      // twist
    std::string label;       // mul: product label; act: action label
    TermPtr a, b;            // operands (twist uses a only)
    std::string key;         // canonical text, doubles as memo key
    std::vector<std::size_t> vars;  // sorted variables this term depends on
};

namespace detail {

inline std::vector<std::size_t> merge_vars(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::vector<std::size_t> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i] < y[j])) out.push_back(x[i++]);
        else if (i == x.size() || y[j] < x[i]) out.push_back(y[j++]);
        else { out.push_back(x[i++]); ++j; }
    }
    return out;
}

}  // namespace detail

/// Handle used to write identities.
class Expr {
public:
    explicit Expr(TermPtr t) : t_(std::move(t)) {}
    const TermPtr& term() const { return t_; }
    Sort sort() const { return t_->sort; }

private:
    TermPtr t_;
};

inline Expr var(std::size_t i, Sort s = Sort::algebra) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::var;
    t->sort = s;
    t->var = i;
    t->key = (s == Sort::algebra ? "x" : "v") + std::to_string(i);
    t->vars = {i};
    return Expr(std::move(t));
}

/// alpha^p on algebra terms, phi^p on module terms.
inline Expr tw(const Expr& e, unsigned p = 1) {
    if (p == 0) return e;
    const auto& c = e.term();
    if (c->kind == Term::Kind::twist) return tw(Expr(c->a), p + c->power);
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::twist;
    t->sort = c->sort;
    t->power = p;
    t->a = c;
    t->key = "t" + std::to_string(p) + "(" + c->key + ")";
    t->vars = c->vars;
    return Expr(std::move(t));
}

inline Expr mul(std::string_view l, const Expr& x, const Expr& y) {
    if (x.sort() != Sort::algebra || y.sort() != Sort::algebra)
        throw InputError("products take algebra arguments");
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::mul;
    t->sort = Sort::algebra;
    t->label = std::string(l);
    t->a = x.term();
    t->b = y.term();
    t->key = t->label + "(" + t->a->key + "," + t->b->key + ")";
    t->vars = detail::merge_vars(t->a->vars, t->b->vars);
    return Expr(std::move(t));
}

/// action(x)(v) for an algebra term x and a module term v.
inline Expr act(std::string_view l, const Expr& x, const Expr& v) {
    if (x.sort() != Sort::algebra || v.sort() != Sort::module)
        throw InputError("actions take an algebra element and a module vector");
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::act;
    t->sort = Sort::module;
    t->label = std::string(l);
    t->a = x.term();
    t->b = v.term();
    t->key = "@" + t->label + "[" + t->a->key + "](" + t->b->key + ")";
    t->vars = detail::merge_vars(t->a->vars, t->b->vars);
    return Expr(std::move(t));
}

/// Integer combination of terms.
struct Poly {
    std::vector<std::pair<long, TermPtr>> terms;

    Poly() = default;
    Poly(const Expr& e) : terms{{1, e.term()}} {}  // NOLINT(google-explicit-constructor)

    Poly& operator+=(const Poly& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [c, t] : o.terms) terms.emplace_back(-c, t);
        return *this;
    }
};

// Namespace scope so that Expr operands convert implicitly.
inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator-(const Poly& a) { return Poly{} - a; }
inline Poly operator*(long s, Poly p) {
    for (auto& [c, t] : p.terms) c *= s;
    return p;
}

struct Identity {
    std::string name;
    std::vector<Sort> sorts;  // one per variable
    Poly lhs;
    Poly rhs;
    /// Only tuples with strictly decreasing indices are evaluated. Valid for
    /// identities that are antisymmetric in their (two) arguments and vanish on
    /// the diagonal, such as x*y = y*x.
    bool decreasing_only = false;

    std::size_t arity() const { return sorts.size(); }
};

/// Everything a term can refer to.
template <Scalar K>
struct EvalContext {
    field_t<K> field{};
    std::size_t dim_a = 0;
    std::size_t dim_v = 0;
    std::map<std::string, Tensor<K>, std::less<>> products;
    Matrix<K> alpha;
    Matrix<K> phi;
    std::map<std::string, std::vector<Matrix<K>>, std::less<>> actions;

    static EvalContext of(const HomAlgebra<K>& a) {
        EvalContext c;
        c.field = a.field;
        c.dim_a = a.dim;
        c.products = product_environment(a);
        c.alpha = a.twist;
        return c;
    }
};

/// Result of evaluating an identity on a grid of inputs.
template <Scalar K>
struct IdentityOutcome {
    bool pass = true;
    std::size_t evaluated = 0;
    std::vector<std::size_t> witness;
    std::optional<Vector<K>> lhs, rhs;
};

/// Evaluates identities on grids of input vectors, memoizing every subterm
/// over the indices of the variables it depends on.
template <Scalar K>
class Evaluator {
public:
    /// inputs[i] lists the candidate vectors for variable i.
    Evaluator(const EvalContext<K>& ctx, std::vector<std::vector<Vector<K>>> inputs)
        : ctx_(ctx), inputs_(std::move(inputs)) {}

    /// Evaluator over basis vectors, each variable ranging over its sort's basis.
    /// Sorts of shared variable indices must agree across identities evaluated with it.
    static Evaluator on_basis(const EvalContext<K>& ctx, const std::vector<Sort>& sorts) {
        std::vector<std::vector<Vector<K>>> in;
        for (Sort s : sorts) {
            const std::size_t n = s == Sort::algebra ? ctx.dim_a : ctx.dim_v;
            std::vector<Vector<K>> b;
            for (std::size_t i = 0; i < n; ++i) b.push_back(Vector<K>::basis(ctx.field, n, i));
            in.push_back(std::move(b));
        }
        return Evaluator(ctx, std::move(in));
    }

    IdentityOutcome<K> run(const Identity& id) {
        if (id.arity() > inputs_.size()) throw InputError("identity " + id.name + " has more variables than inputs");
        std::vector<std::size_t> radix;
        std::size_t total = 1;
        for (std::size_t i = 0; i < id.arity(); ++i) {
            radix.push_back(inputs_[i].size());
            total *= inputs_[i].size();
        }
        std::vector<const Table*> lt, rt;
        for (const auto& [c, t] : id.lhs.terms) lt.push_back(&table(t));
        for (const auto& [c, t] : id.rhs.terms) rt.push_back(&table(t));

        IdentityOutcome<K> out;
        std::vector<std::size_t> idx(id.arity(), 0);
        const std::size_t dim_out = sort_dim(id.lhs.terms.empty() ? id.rhs.terms.front().second->sort
                                                                  : id.lhs.terms.front().second->sort);
        for (std::size_t n = 0; n < total; ++n) {
            if (n > 0) advance(idx, radix);
            if (id.decreasing_only && !strictly_decreasing(idx)) continue;
            ++out.evaluated;
            auto l = combine(id.lhs, lt, idx, dim_out);
            auto r = combine(id.rhs, rt, idx, dim_out);
            if (!(l == r)) {
                out.pass = false;
                out.witness = idx;
                out.lhs = std::move(l);
                out.rhs = std::move(r);
                return out;
            }
        }
        return out;
    }

    /// Both sides at one tuple of input positions.
    std::pair<Vector<K>, Vector<K>> values_at(const Identity& id, const std::vector<std::size_t>& idx) {
        if (idx.size() != id.arity()) throw InputError("tuple length differs from arity of " + id.name);
        std::vector<const Table*> lt, rt;
        for (const auto& [c, t] : id.lhs.terms) lt.push_back(&table(t));
        for (const auto& [c, t] : id.rhs.terms) rt.push_back(&table(t));
        const std::size_t n = sort_dim(id.lhs.terms.front().second->sort);
        return {combine(id.lhs, lt, idx, n), combine(id.rhs, rt, idx, n)};
    }

private:
    struct Table {
        std::vector<std::size_t> vars;
        std::vector<Vector<K>> values;
    };

    std::size_t sort_dim(Sort s) const { return s == Sort::algebra ? ctx_.dim_a : ctx_.dim_v; }

    static void advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& radix) {
        for (std::size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < radix[k]) return;
            idx[k] = 0;
        }
    }
    static bool strictly_decreasing(const std::vector<std::size_t>& idx) {
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (idx[k - 1] <= idx[k]) return false;
        return true;
    }

    /// Position in a table for a full assignment of variable indices.
    std::size_t offset(const Table& t, const std::vector<std::size_t>& full) const {
        std::size_t off = 0;
        for (auto v : t.vars) off = off * inputs_[v].size() + full[v];
        return off;
    }

    Vector<K> combine(const Poly& p, const std::vector<const Table*>& tabs, const std::vector<std::size_t>& idx,
                      std::size_t n) const {
        Vector<K> acc(ctx_.field, n);
        for (std::size_t k = 0; k < p.terms.size(); ++k) {
            const auto& v = tabs[k]->values[offset(*tabs[k], idx)];
            if (v.size() != n) throw DimensionMismatch("identity sides mix algebra and module values");
            const long c = p.terms[k].first;
            if (c == 1) acc += v;
            else if (c == -1) acc -= v;
            else acc.axpy(ctx_.field.from_int(c), v);
        }
        return acc;
    }

    const Matrix<K>& twist_power(Sort s, unsigned p) {
        auto& cache = s == Sort::algebra ? alpha_pow_ : phi_pow_;
        const Matrix<K>& base = s == Sort::algebra ? ctx_.alpha : ctx_.phi;
        if (cache.empty()) cache.push_back(Matrix<K>::identity(ctx_.field, sort_dim(s)));
        while (cache.size() <= p) cache.push_back(base * cache.back());
        return cache[p];
    }

    const Table& table(const TermPtr& t) {
        if (auto it = memo_.find(t->key); it != memo_.end()) return it->second;
        Table out;
        out.vars = t->vars;
        switch (t->kind) {
            case Term::Kind::var: {
                if (t->var >= inputs_.size()) throw InputError("variable index out of range");
                out.values = inputs_[t->var];
                for (const auto& v : out.values)
                    if (v.size() != sort_dim(t->sort)) throw DimensionMismatch("input vector has wrong length");
                break;
            }
            case Term::Kind::twist: {
                const Table& c = table(t->a);
                const Matrix<K>& m = twist_power(t->sort, t->power);
                out.values.reserve(c.values.size());
                for (const auto& v : c.values) out.values.push_back(m.apply(v));
                break;
            }
            case Term::Kind::mul: {
                auto pit = ctx_.products.find(t->label);
                if (pit == ctx_.products.end())
                    throw UnknownLabel("product \"" + t->label + "\" not available for this suite");
                const Tensor<K>& tensor = pit->second;
                const Table& x = table(t->a);
                const Table& y = table(t->b);
                fill(out, [&](const std::vector<std::size_t>& full) {
                    return tensor.eval(x.values[offset(x, full)], y.values[offset(y, full)]);
                });
                break;
            }
            case Term::Kind::act: {
                auto ait = ctx_.actions.find(t->label);
                if (ait == ctx_.actions.end()) throw UnknownLabel("action \"" + t->label + "\" not available");
                const auto& mats = ait->second;
                const Table& x = table(t->a);
                const Table& v = table(t->b);
                fill(out, [&](const std::vector<std::size_t>& full) {
                    const auto& xv = x.values[offset(x, full)];
                    const auto& vv = v.values[offset(v, full)];
                    Vector<K> acc(ctx_.field, ctx_.dim_v);
                    for (std::size_t i = 0; i < xv.size(); ++i)
                        if (!xv[i].is_zero()) acc.axpy(xv[i], mats[i].apply(vv));
                    return acc;
                });
                break;
            }
        }
        return memo_.emplace(t->key, std::move(out)).first->second;
    }

    template <class F>
    void fill(Table& out, F&& f) {
        std::size_t total = 1;
        std::vector<std::size_t> radix;
        for (auto v : out.vars) {
            radix.push_back(inputs_[v].size());
            total *= inputs_[v].size();
        }
        std::vector<std::size_t> full(inputs_.size(), 0);
        std::vector<std::size_t> local(out.vars.size(), 0);
        out.values.reserve(total);
        for (std::size_t n = 0; n < total; ++n) {
            if (n > 0) advance(local, radix);
            for (std::size_t k = 0; k < local.size(); ++k) full[out.vars[k]] = local[k];
            out.values.push_back(f(full));
        }
    }

    const EvalContext<K>& ctx_;
    std::vector<std::vector<Vector<K>>> inputs_;
    std::unordered_map<std::string, Table> memo_;
    std::vector<Matrix<K>> alpha_pow_, phi_pow_;
};

}  // namespace hjd

#endif  // HJD_EXPR_HPP
