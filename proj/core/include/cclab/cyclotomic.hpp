#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cclab/rational.hpp"

namespace cclab {

// Power basis data for Q(zeta_e): coordinates of zeta_e^k (0 <= k < e) in
// the basis 1, zeta, ..., zeta^(phi-1) obtained by reduction modulo the
// e-th cyclotomic polynomial. That basis is an integral basis of Z[zeta_e].
struct CycloBasis {
    int e = 1;
    int phi = 1;
    std::vector<int64_t> cyclotomic_poly;          // Phi_e, low to high, monic
    std::vector<std::vector<int64_t>> power;       // power[k] has length phi

    static const CycloBasis& get(int e);

private:
    static const CycloBasis& get_locked(int e);
};

int euler_phi(int e);
int64_t lcm64(int64_t a, int64_t b);

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigRational& c) { return c == 0; }
inline bool coeff_less(const Rational& a, const Rational& b) { return a < b; }
inline bool coeff_less(const BigRational& a, const BigRational& b) { return a < b; }
inline BigRational coeff_big(const Rational& c) { return c.big(); }
inline BigRational coeff_big(const BigRational& c) { return c; }
inline double coeff_double(const Rational& c) { return c.to_double(); }
inline double coeff_double(const BigRational& c) { return static_cast<double>(c); }

template <class C>
class CycT {
public:
    CycT() : CycT(1) {}
    explicit CycT(int e) : b_(&CycloBasis::get(e)), c_(b_->phi) {}
    CycT(int e, const C& rational_value) : CycT(e) { c_[0] = rational_value; }

    static CycT zeta(int e, long k) {
        CycT r(e);
        long m = ((k % e) + e) % e;
        const auto& row = r.b_->power[m];
        for (int i = 0; i < r.b_->phi; ++i)
            if (row[i] != 0) r.c_[i] = C(row[i]);
        return r;
    }

    int order() const { return b_->e; }
    int degree() const { return b_->phi; }
    const std::vector<C>& coeffs() const { return c_; }
    const C& coeff(int i) const { return c_[i]; }
    C& coeff_mut(int i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!coeff_is_zero(x)) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!coeff_is_zero(c_[i])) return false;
        return true;
    }
    const C& rational_value() const { return c_[0]; }

    // Embedding into Q(zeta_f) for a multiple f of the current order.
    CycT lift(int f) const {
        if (f == b_->e) return *this;
        if (f % b_->e != 0) throw std::invalid_argument("lift: order does not divide target");
        CycT r(f);
        int step = f / b_->e;
        for (int i = 0; i < b_->phi; ++i) {
            if (coeff_is_zero(c_[i])) continue;
            r.add_power(static_cast<long>(i) * step, c_[i]);
        }
        return r;
    }

    // Galois action zeta -> zeta^a, gcd(a, e) = 1.
    CycT galois(long a) const {
        CycT r(b_->e);
        long e = b_->e;
        for (int i = 0; i < b_->phi; ++i) {
            if (coeff_is_zero(c_[i])) continue;
            r.add_power(((a % e + e) % e) * i % e, c_[i]);
        }
        return r;
    }
    CycT conj() const { return galois(-1); }

    CycT& operator+=(const CycT& o) {
        if (o.b_ != b_) return *this = unify_add(*this, o, false);
        for (int i = 0; i < b_->phi; ++i)
            if (!coeff_is_zero(o.c_[i])) c_[i] += o.c_[i];
        return *this;
    }
    CycT& operator-=(const CycT& o) {
        if (o.b_ != b_) return *this = unify_add(*this, o, true);
        for (int i = 0; i < b_->phi; ++i)
            if (!coeff_is_zero(o.c_[i])) c_[i] -= o.c_[i];
        return *this;
    }
    CycT operator-() const {
        CycT r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    CycT& operator*=(const C& s) {
        if (coeff_is_zero(s)) {
            for (auto& x : c_) x = C(0);
            return *this;
        }
        for (auto& x : c_)
            if (!coeff_is_zero(x)) x *= s;
        return *this;
    }
    CycT& operator/=(const C& s) {
        for (auto& x : c_)
            if (!coeff_is_zero(x)) x /= s;
        return *this;
    }

    friend CycT operator+(CycT a, const CycT& b) { return a += b; }
    friend CycT operator-(CycT a, const CycT& b) { return a -= b; }
    friend CycT operator*(CycT a, const C& s) { return a *= s; }
    friend CycT operator*(const C& s, CycT a) { return a *= s; }
    friend CycT operator/(CycT a, const C& s) { return a /= s; }

    friend CycT operator*(const CycT& a, const CycT& b) {
        if (a.b_ != b.b_) {
            int f = static_cast<int>(lcm64(a.order(), b.order()));
            return a.lift(f) * b.lift(f);
        }
        if (a.is_rational()) return b * a.c_[0];
        if (b.is_rational()) return a * b.c_[0];
        const int phi = a.b_->phi;
        std::vector<C> tmp(2 * phi - 1);
        std::vector<int> nzb;
        nzb.reserve(phi);
        for (int j = 0; j < phi; ++j)
            if (!coeff_is_zero(b.c_[j])) nzb.push_back(j);
        for (int i = 0; i < phi; ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (int j : nzb) tmp[i + j] += a.c_[i] * b.c_[j];
        }
        CycT r(a.order());
        for (int i = 0; i < phi; ++i) r.c_[i] = std::move(tmp[i]);
        for (int k = phi; k < 2 * phi - 1; ++k)
            if (!coeff_is_zero(tmp[k])) r.add_power(k, tmp[k]);
        return r;
    }
    CycT& operator*=(const CycT& o) { return *this = *this * o; }

    friend bool operator==(const CycT& a, const CycT& b) {
        if (a.b_ == b.b_) return a.c_ == b.c_;
        int f = static_cast<int>(lcm64(a.order(), b.order()));
        return a.lift(f).c_ == b.lift(f).c_;
    }
    friend bool operator!=(const CycT& a, const CycT& b) { return !(a == b); }

    // Lexicographic order on coefficient vectors (same field only).
    friend bool lex_less(const CycT& a, const CycT& b) {
        for (int i = 0; i < a.b_->phi; ++i) {
            if (coeff_less(a.c_[i], b.c_[i])) return true;
            if (coeff_less(b.c_[i], a.c_[i])) return false;
        }
        return false;
    }

    std::complex<double> to_complex() const {
        std::complex<double> z = 0;
        const double tau = 6.283185307179586476925286766559;
        for (int i = 0; i < b_->phi; ++i) {
            if (coeff_is_zero(c_[i])) continue;
            double ang = tau * i / b_->e;
            z += coeff_double(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < b_->phi; ++i) {
            if (coeff_is_zero(c_[i])) continue;
            std::string cs = coeff_string(c_[i]);
            if (!s.empty()) s += (cs[0] == '-') ? " - " : " + ";
            else if (cs[0] == '-') s += "-";
            if (cs[0] == '-') cs.erase(0, 1);
            if (i == 0) s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += "z" + std::to_string(b_->e) + (i > 1 ? "^" + std::to_string(i) : "");
            }
        }
        return s.empty() ? "0" : s;
    }

    // x += c * zeta^k
    void add_power(long k, const C& c) {
        const auto& row = b_->power[((k % b_->e) + b_->e) % b_->e];
        for (int i = 0; i < b_->phi; ++i) {
            if (row[i] == 0) continue;
            if (row[i] == 1) c_[i] += c;
            else if (row[i] == -1) c_[i] -= c;
            else c_[i] += c * C(row[i]);
        }
    }

private:
    static std::string coeff_string(const Rational& c) { return c.str(); }
    static std::string coeff_string(const BigRational& c) { return c.str(); }
    static CycT unify_add(const CycT& a, const CycT& b, bool sub) {
        int f = static_cast<int>(lcm64(a.order(), b.order()));
        CycT r = a.lift(f);
        if (sub) r -= b.lift(f);
        else r += b.lift(f);
        return r;
    }

    const CycloBasis* b_;
    std::vector<C> c_;
};

using Cyc = CycT<Rational>;
using BigCyc = CycT<BigRational>;

BigCyc to_big(const Cyc& x);
// Coordinates in the subfield Q(zeta_d) (d | e); throws if x is not in it.
Cyc descend(const Cyc& x, int d);
// Smallest d dividing x.order() with x in Q(zeta_d).
int conductor_order(const Cyc& x);

}  // namespace cclab
