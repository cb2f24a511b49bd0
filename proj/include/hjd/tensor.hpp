// Structure-constant tensors of bilinear products.
//
// c(i, j, k) is the coefficient of e_k in e_i * e_j.

#ifndef HJD_TENSOR_HPP
#define HJD_TENSOR_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "hjd/error.hpp"
#include "hjd/linear.hpp"
#include "hjd/scalar.hpp"

namespace hjd {

template <Scalar K>
class Tensor {
public:
    Tensor() = default;
    Tensor(field_t<K> f, std::size_t n) : field_(std::move(f)), n_(n), c_(n * n * n, field_.zero()) {}

    /// Builds the tensor of a bilinear map from its values on basis pairs.
    static Tensor from_basis(const field_t<K>& f, std::size_t n,
                             const std::function<Vector<K>(std::size_t, std::size_t)>& mul) {
        Tensor t(f, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.set_product(i, j, mul(i, j));
        return t;
    }

    /// Same, but from a map on arbitrary vectors (evaluated on basis vectors).
    static Tensor from_bilinear(const field_t<K>& f, std::size_t n,
                                const std::function<Vector<K>(const Vector<K>&, const Vector<K>&)>& mul) {
        return from_basis(f, n, [&](std::size_t i, std::size_t j) {
            return mul(Vector<K>::basis(f, n, i), Vector<K>::basis(f, n, j));
        });
    }

    const field_t<K>& field() const { return field_; }
    std::size_t dim() const { return n_; }

    K& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const K& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    Vector<K> basis_product(std::size_t i, std::size_t j) const {
        Vector<K> v(field_, n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
        return v;
    }
    void set_product(std::size_t i, std::size_t j, const Vector<K>& v) {
        if (v.size() != n_) throw DimensionMismatch("product value has wrong length");
        for (std::size_t k = 0; k < n_; ++k) (*this)(i, j, k) = v[k];
    }

    /// Bilinear evaluation sum_{i,j} x_i y_j c(i, j, .).
    Vector<K> eval(const Vector<K>& x, const Vector<K>& y) const {
        if (x.size() != n_ || y.size() != n_)
            throw DimensionMismatch("product of vectors of length " + std::to_string(x.size()) + " and " +
                                    std::to_string(y.size()) + " in dimension " + std::to_string(n_));
        Vector<K> out(field_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                const K s = x[i] * y[j];
                const K* row = &c_[(i * n_ + j) * n_];
                for (std::size_t k = 0; k < n_; ++k)
                    if (!row[k].is_zero()) out[k].add_product(s, row[k]);
            }
        }
        return out;
    }

    /// Swaps the two input slots: t'(i, j, k) = t(j, i, k).
    Tensor transposed() const {
        Tensor t(field_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) t(i, j, k) = (*this)(j, i, k);
        return t;
    }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        same_dim(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        same_dim(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Tensor& operator*=(const K& s) {
        for (auto& a : c_) a *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const K& s, Tensor t) { return t *= s; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    void same_dim(const Tensor& o) const {
        if (o.n_ != n_) throw DimensionMismatch("tensor dimensions differ");
    }

    field_t<K> field_{};
    std::size_t n_ = 0;
    std::vector<K> c_;
};

}  // namespace hjd

#endif  // HJD_TENSOR_HPP
