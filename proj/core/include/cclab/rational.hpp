#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}
inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}
inline int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("int64 overflow");
    return static_cast<int64_t>(v);
}
}  // namespace detail

// Exact rational with int64 numerator/denominator. Every operation is
// overflow checked; integers (den == 1) take a fast path.
class Rational {
public:
    Rational() = default;
    Rational(int64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int64_t n, int64_t d) : n_(n), d_(d) {
        if (d == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    int64_t num() const { return n_; }
    int64_t den() const { return d_; }
    bool is_zero() const { return n_ == 0; }
    bool is_integer() const { return d_ == 1; }

    Rational operator-() const {
        Rational r;
        r.n_ = detail::checked_sub(0, n_);
        r.d_ = d_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (d_ == 1 && o.d_ == 1) {
            n_ = detail::checked_add(n_, o.n_);
            return *this;
        }
        __int128 n = static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_;
        __int128 d = static_cast<__int128>(d_) * o.d_;
        assign128(n, d);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        if (d_ == 1 && o.d_ == 1) {
            n_ = detail::checked_mul(n_, o.n_);
            return *this;
        }
        if (n_ == 0 || o.n_ == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        int64_t g1 = std::gcd(n_, o.d_), g2 = std::gcd(o.n_, d_);
        n_ = detail::checked_mul(n_ / g1, o.n_ / g2);
        d_ = detail::checked_mul(d_ / g2, o.d_ / g1);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.n_ == 0) throw std::domain_error("division by zero");
        Rational inv;
        inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
        inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    BigRational big() const { return BigRational(n_) / BigRational(d_); }
    std::string str() const { return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_); }
    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (d_ < 0) {
            n_ = detail::checked_sub(0, n_);
            d_ = detail::checked_sub(0, d_);
        }
        int64_t g = std::gcd(n_, d_);
        if (g > 1) {
            n_ /= g;
            d_ /= g;
        }
        if (n_ == 0) d_ = 1;
    }
    void assign128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n == 0) d = 1;
        n_ = detail::narrow(n);
        d_ = detail::narrow(d);
    }

    int64_t n_ = 0;
    int64_t d_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

// Decimal rendering with a fixed number of significant digits.
std::string to_decimal(const BigRational& r, int sig_digits = 12);
inline std::string to_decimal(const Rational& r, int sig_digits = 12) { return to_decimal(r.big(), sig_digits); }

BigInt ipow(const BigInt& b, unsigned e);
BigRational rpow(const BigRational& b, long e);
// "3", "-0.0011", "99/100"; throws std::invalid_argument
BigRational parse_rational(const std::string& s);

}  // namespace cclab
