#include "interval.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstring>
#include <vector>

namespace cclab::detail {

namespace {

struct Mpq {
    mpq_t v;
    explicit Mpq(const BigRational& r) {
        mpq_init(v);
        std::string s = boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
        mpq_set_str(v, s.c_str(), 10);
        mpq_canonicalize(v);
    }
    ~Mpq() { mpq_clear(v); }
    Mpq(const Mpq&) = delete;
    Mpq& operator=(const Mpq&) = delete;
};

BigRational to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return BigRational(0);
    if (!mpfr_number_p(x)) throw std::domain_error("interval end is not finite");
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, x);
    char* s = mpz_get_str(nullptr, 10, z);
    BigInt m(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, std::strlen(s) + 1);
    mpz_clear(z);
    BigRational r(m);
    if (e >= 0)
        r *= BigRational(BigInt(1) << static_cast<unsigned>(e));
    else
        r /= BigRational(BigInt(1) << static_cast<unsigned>(-e));
    return r;
}

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Interval Interval::exact(const BigRational& r, mpfr_prec_t prec) {
    Interval x(prec);
    Mpq q(r);
    mpfr_set_q(x.lo_, q.v, MPFR_RNDD);
    mpfr_set_q(x.hi_, q.v, MPFR_RNDU);
    return x;
}

BigRational Interval::lower() const { return to_rational(lo_); }
BigRational Interval::upper() const { return to_rational(hi_); }

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = joint(a, b);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo()) <= 0 && mpfr_sgn(b.hi()) >= 0) throw std::domain_error("interval division by a range containing 0");
    mpfr_prec_t p = joint(a, b);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval isqrt(const Interval& a) {
    if (mpfr_sgn(a.hi()) < 0) throw std::domain_error("square root of a negative interval");
    Interval r(a.prec());
    if (mpfr_sgn(a.lo()) <= 0)
        mpfr_set_zero(r.lo_mut(), 1);
    else
        mpfr_sqrt(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Interval ilog(const Interval& a) {
    if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("log of a non-positive interval");
    Interval r(a.prec());
    mpfr_log(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_log(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Interval iexp(const Interval& a) {
    Interval r(a.prec());
    mpfr_exp(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Interval imax(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval ipow(const Interval& b, const Interval& e) { return iexp(e * ilog(b)); }

Interval qpow(long q, const Interval& e) {
    if (q < 1) throw std::domain_error("qpow base must be >= 1");
    if (q == 1) return Interval::integer(1, e.prec());
    return ipow(Interval::integer(q, e.prec()), e);
}

Interval ipow_int(const Interval& a, unsigned k) {
    Interval r = Interval::integer(1, a.prec()), b = a;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Interval cos2pi(long k, long e, mpfr_prec_t prec) {
    k = ((k % e) + e) % e;
    if (k == 0) return Interval::integer(1, prec);
    if (2 * k == e) return Interval::integer(-1, prec);
    if (4 * k == e || 4 * k == 3 * e) return Interval::integer(0, prec);
    // angle 2 pi k / e stays strictly inside (0, pi) or (pi, 2 pi), so cos is
    // monotone across the tiny angle enclosure
    Interval pi(prec);
    mpfr_const_pi(pi.lo_mut(), MPFR_RNDD);
    mpfr_const_pi(pi.hi_mut(), MPFR_RNDU);
    Interval ang = pi * Interval::exact(BigRational(2 * k, e), prec);
    Interval r(prec);
    mpfr_t a, b;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    mpfr_cos(a, ang.lo(), MPFR_RNDD);
    mpfr_cos(b, ang.hi(), MPFR_RNDD);
    mpfr_min(r.lo_mut(), a, b, MPFR_RNDD);
    mpfr_cos(a, ang.lo(), MPFR_RNDU);
    mpfr_cos(b, ang.hi(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

Interval real_part(const BigCyc& x, mpfr_prec_t prec) {
    Interval r = Interval::integer(0, prec);
    for (int i = 0; i < x.degree(); ++i) {
        if (x.coeff(i) == 0) continue;
        r = r + Interval::exact(x.coeff(i), prec) * cos2pi(i, x.order(), prec);
    }
    return r;
}

std::optional<BigRational> abs2_exact(const Cyc& x) {
    Cyc t = x * x.conj();
    if (!t.is_rational()) return std::nullopt;
    return t.rational_value().big();
}

Interval abs2_interval(const Cyc& x, mpfr_prec_t prec) {
    if (auto a = abs2_exact(x)) return Interval::exact(*a, prec);
    Interval r = real_part(to_big(x * x.conj()), prec);
    if (mpfr_sgn(r.lo()) < 0) mpfr_set_zero(r.lo_mut(), 1);
    return r;
}

Certified certify(const BigRational& lhs, Relation rel, const IntervalFn& rhs) {
    Certified c;
    for (mpfr_prec_t p = 64; p <= 4096; p *= 2) {
        Interval v = rhs(p);
        BigRational lo = v.lower(), hi = v.upper();
        c.lo = lo;
        c.hi = hi;
        c.precision = p;
        auto settle = [&](bool holds, const BigRational& w) {
            c.decided = true;
            c.holds = holds;
            c.witness = w;
        };
        switch (rel) {
            case Relation::LE:
                if (lhs <= lo) settle(true, lo);
                else if (lhs > hi) settle(false, hi);
                break;
            case Relation::LT:
                if (lhs < lo) settle(true, lo);
                else if (lhs >= hi) settle(false, hi);
                break;
            case Relation::GE:
                if (lhs >= hi) settle(true, hi);
                else if (lhs < lo) settle(false, lo);
                break;
            case Relation::GT:
                if (lhs > hi) settle(true, hi);
                else if (lhs <= lo) settle(false, lo);
                break;
            case Relation::EQ:
                if (lo == hi && lhs == lo) settle(true, lo);
                else if (lhs < lo) settle(false, lo);
                else if (lhs > hi) settle(false, hi);
                break;
        }
        if (c.decided) return c;
    }
    return c;
}

void decide_certified(BoundReport& r, const BigRational& lhs, Relation rel, const IntervalFn& rhs, bool applicable) {
    Certified c = certify(lhs, rel, rhs);
    r.lhs = lhs;
    r.relation = rel;
    r.rhs_exact = c.lo == c.hi;
    std::string encl = "rhs in [" + to_decimal(c.lo, 12) + ", " + to_decimal(c.hi, 12) + "]";
    r.note = r.note.empty() ? encl : r.note + "; " + encl;
    if (!c.decided) {
        r.rhs = c.lo;
        r.verdict = Verdict::NotApplicable;
        r.note += "; undecided at 4096 bits";
        return;
    }
    r.rhs = c.witness;
    if (!applicable)
        r.verdict = Verdict::NotApplicable;
    else
        r.verdict = c.holds ? Verdict::Pass : Verdict::Fail;
}

}  // namespace cclab::detail
