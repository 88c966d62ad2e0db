#pragma once

// Outward-rounded real intervals on MPFR, converted to exact rationals at
// the edges. Private to the core library.

#include <mpfr.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "cclab/cyclotomic.hpp"
#include "cclab/rational.hpp"
#include "cclab/report.hpp"

namespace cclab::detail {

class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : Interval(o.prec_) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval exact(const BigRational& r, mpfr_prec_t prec);
    static Interval integer(long v, mpfr_prec_t prec) { return exact(BigRational(v), prec); }

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

    BigRational lower() const;
    BigRational upper() const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval isqrt(const Interval& a);  // clamps a negative lower end to 0
Interval ilog(const Interval& a);   // natural log, a > 0
Interval iexp(const Interval& a);
Interval imax(const Interval& a, const Interval& b);
// b^e for b > 0
Interval ipow(const Interval& b, const Interval& e);
// q^e for an integer q >= 1
Interval qpow(long q, const Interval& e);
// a^k for a >= 0 by repeated squaring
Interval ipow_int(const Interval& a, unsigned k);
// cos(2 pi k / e)
Interval cos2pi(long k, long e, mpfr_prec_t prec);
// real part of sum_i c_i zeta_e^i
Interval real_part(const BigCyc& x, mpfr_prec_t prec);
// |x|^2, exact when x conj(x) is rational
Interval abs2_interval(const Cyc& x, mpfr_prec_t prec);
// x conj(x) when rational
std::optional<BigRational> abs2_exact(const Cyc& x);

using IntervalFn = std::function<Interval(mpfr_prec_t)>;

struct Certified {
    bool decided = false;
    bool holds = false;
    BigRational witness;  // the rational end of the enclosure that decided it
    BigRational lo, hi;   // final enclosure
    mpfr_prec_t precision = 0;
};

// Decide lhs REL rhs with rhs given by enclosures of increasing precision
// (64 bits doubling up to 4096).
Certified certify(const BigRational& lhs, Relation rel, const IntervalFn& rhs);

// certify() then fill the report; undecided comparisons are reported
// not-applicable with a note.
void decide_certified(BoundReport& r, const BigRational& lhs, Relation rel, const IntervalFn& rhs,
                      bool applicable = true);

}  // namespace cclab::detail
