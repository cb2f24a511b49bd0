// Exact scalars: arbitrary-precision rationals and prime-field elements.

#ifndef HJD_SCALAR_HPP
#define HJD_SCALAR_HPP

#include <gmpxx.h>

#include <charconv>
#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hjd/error.hpp"

namespace hjd {

class Rational;
class Fp;

/// The field of rational numbers. Stateless.
struct RationalField {
    using value_type = Rational;

    Rational zero() const;
    Rational one() const;
    Rational from_int(long n) const;
    /// Parses "n" or "p/q"; rejects anything not already in reduced canonical form.
    Rational parse(std::string_view text) const;
    /// Small random element, used by property tests and random-vector evaluation.
    template <class Rng>
    Rational random(Rng& rng) const;
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field F_p. The modulus is a runtime value.
struct PrimeField {
    using value_type = Fp;

    std::int64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::int64_t modulus);
    /// Skips the primality check; for moduli taken from an already-validated element.
    static PrimeField unchecked(std::int64_t modulus) {
        PrimeField f;
        f.p = modulus;
        return f;
    }

    Fp zero() const;
    Fp one() const;
    Fp from_int(long n) const;
    /// Parses a decimal in [0, p).
    Fp parse(std::string_view text) const;
    Fp element(std::int64_t reduced_value) const;
    template <class Rng>
    Fp random(Rng& rng) const;
    std::string name() const { return "F" + std::to_string(p); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Reduced fraction with positive denominator.
class Rational {
public:
    using field_type = RationalField;

    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    RationalField field() const { return {}; }

    bool is_zero() const { return sgn(q_) == 0; }
    const mpq_class& raw() const { return q_; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// this += a * b without temporaries; integer operands stay on the mpz path.
    void add_product(const Rational& a, const Rational& b) {
        if (mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(a.q_.get_den_mpz_t(), 1) == 0 &&
            mpz_cmp_ui(b.q_.get_den_mpz_t(), 1) == 0) {
            mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
            return;
        }
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    }

    Rational inverse() const { return Rational(1) / *this; }

    /// "n" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

/// Element of F_p. Carries its modulus so that mixing fields is detected.
class Fp {
public:
    using field_type = PrimeField;

    Fp() = default;  // unbound; only valid as a placeholder before assignment

    PrimeField field() const { return PrimeField::unchecked(p_); }
    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ -= o.v_;
        if (v_ < 0) v_ += p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    void add_product(const Fp& a, const Fp& b) {
        check(a);
        check(b);
        v_ = (v_ + a.v_ * b.v_) % p_;
    }
    Fp& operator/=(const Fp& o) {
        check(o);
        if (o.v_ == 0) throw DivisionByZero("division by zero in " + field().name());
        return *this *= o.inverse();
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    /// Orders by representative in [0, p); only used for canonical enumeration order.
    friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
        a.check(b);
        return a.v_ <=> b.v_;
    }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of zero in " + field().name());
        // Fermat: a^(p-2)
        std::int64_t result = 1, base = v_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = (result * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return Fp(result, p_);
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    friend struct PrimeField;
    Fp(std::int64_t v, std::int64_t p) : v_(v), p_(p) {}

    void check(const Fp& o) const {
        if (p_ == 0 || o.p_ == 0) throw FieldMismatch("use of an unbound F_p element");
        if (p_ != o.p_)
            throw FieldMismatch("F" + std::to_string(p_) + " mixed with F" + std::to_string(o.p_));
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

// --- RationalField ---------------------------------------------------------

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(long n) const { return Rational(n); }

namespace detail {

inline bool is_decimal_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    // no leading zeros, no "-0"
    if (s[i] == '0' && s.size() - i > 1) return false;
    if (i == 1 && s.size() == 2 && s[1] == '0') return false;
    return true;
}

}  // namespace detail

inline Rational RationalField::parse(std::string_view text) const {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!detail::is_decimal_integer(text, true))
            throw ScalarParseError("invalid rational \"" + std::string(text) + "\"");
        return Rational(mpq_class(mpz_class(std::string(text))));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!detail::is_decimal_integer(num, true) || !detail::is_decimal_integer(den, false))
        throw ScalarParseError("invalid rational \"" + std::string(text) + "\"");
    const mpz_class n(std::string{num}), d(std::string{den});
    if (d == 0) throw ScalarParseError("zero denominator in \"" + std::string(text) + "\"");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (d == 1 || g != 1 || n == 0)
        throw ScalarParseError("unreduced rational \"" + std::string(text) + "\"");
    return Rational(mpq_class(n, d));
}

template <class Rng>
Rational RationalField::random(Rng& rng) const {
    // mostly small integers, occasionally halves and thirds
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<int> den_pick(0, 5);
    static constexpr long dens[] = {1, 1, 1, 1, 2, 3};
    return Rational(num(rng), dens[den_pick(rng)]);
}

// --- PrimeField ------------------------------------------------------------

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline PrimeField::PrimeField(std::int64_t modulus) : p(modulus) {
    if (modulus < 5 || modulus >= (std::int64_t{1} << 31) || !detail::is_prime(modulus))
        throw InvalidField("F_p requires a prime 5 <= p < 2^31, got " + std::to_string(modulus));
}

inline Fp PrimeField::zero() const { return Fp(0, p); }
inline Fp PrimeField::one() const { return Fp(1, p); }
inline Fp PrimeField::from_int(long n) const {
    std::int64_t v = n % p;
    if (v < 0) v += p;
    return Fp(v, p);
}
inline Fp PrimeField::element(std::int64_t reduced_value) const {
    if (reduced_value < 0 || reduced_value >= p)
        throw ScalarParseError("value " + std::to_string(reduced_value) + " not reduced mod " +
                               std::to_string(p));
    return Fp(reduced_value, p);
}

inline Fp PrimeField::parse(std::string_view text) const {
    if (!detail::is_decimal_integer(text, false))
        throw ScalarParseError("invalid F_p scalar \"" + std::string(text) + "\"");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || v >= p)
        throw ScalarParseError("F_p scalar \"" + std::string(text) + "\" not reduced mod " +
                               std::to_string(p));
    return Fp(v, p);
}

template <class Rng>
Fp PrimeField::random(Rng& rng) const {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    return Fp(d(rng), p);
}

/// Field descriptor of a scalar type.
template <class K>
using field_t = typename K::field_type;

/// Any type usable as a scalar by the rest of the library.
template <class K>
concept Scalar = requires(const K& a, const K& b, K& acc) {
    typename K::field_type;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.field() } -> std::same_as<typename K::field_type>;
    { a.to_string() } -> std::same_as<std::string>;
    acc.add_product(a, b);
};

static_assert(Scalar<Rational>);
static_assert(Scalar<Fp>);

}  // namespace hjd

#endif  // HJD_SCALAR_HPP
