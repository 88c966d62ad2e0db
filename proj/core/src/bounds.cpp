#include "cclab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cclab/weil.hpp"
#include "interval.hpp"

namespace cclab {

using detail::decide_certified;
using detail::Interval;
using detail::IntervalFn;

namespace {

BigRational qpow(int q, long e) { return rpow(BigRational(q), e); }

std::string istr(long long v) { return std::to_string(v); }

std::string group_name(const GroupTable& G) { return G.has_spec() ? G.spec().str() : G.label(); }

Interval exact(const BigRational& r, mpfr_prec_t p) { return Interval::exact(r, p); }

// log_q x
Interval logq(const BigRational& x, int q, mpfr_prec_t p) { return detail::ilog(exact(x, p)) / detail::ilog(exact(q, p)); }

// coeff * q^e with a rational exponent; exact when e is an integer
void decide_power(BoundReport& r, const BigRational& lhs, Relation rel, const BigRational& coeff, int q,
                  const BigRational& e, bool applicable) {
    if (boost::multiprecision::denominator(e) == 1) {
        long k = static_cast<long>(boost::multiprecision::numerator(e));
        decide(r, lhs, rel, coeff * qpow(q, k), applicable);
        return;
    }
    decide_certified(
        r, lhs, rel, [&](mpfr_prec_t p) { return exact(coeff, p) * detail::qpow(q, exact(e, p)); }, applicable);
}

// lhs <= rhs(p) proven
bool certainly(const BigRational& lhs, Relation rel, const IntervalFn& rhs) {
    auto c = detail::certify(lhs, rel, rhs);
    return c.decided && c.holds;
}

// |x|^2 REL rhs. When |x|^2 is irrational the comparison runs on rhs - |x|^2
// and the report shows the enclosure ends that decided it.
void decide_abs2(BoundReport& r, const Cyc& x, Relation rel, const IntervalFn& rhs, bool applicable = true) {
    if (auto a = detail::abs2_exact(x)) {
        decide_certified(r, *a, rel, rhs, applicable);
        return;
    }
    auto c = detail::certify(0, rel, [&](mpfr_prec_t p) { return rhs(p) - detail::abs2_interval(x, p); });
    const mpfr_prec_t p = c.precision;
    Interval a = detail::abs2_interval(x, p), b = rhs(p);
    const bool upper = rel == Relation::LE || rel == Relation::LT;
    r.relation = rel;
    r.rhs_exact = false;
    r.lhs = upper == c.holds ? a.upper() : a.lower();
    r.rhs = upper == c.holds ? b.lower() : b.upper();
    std::string note = "|x|^2 irrational, enclosure ends shown";
    r.note = r.note.empty() ? note : r.note + "; " + note;
    if (!c.decided) {
        r.verdict = Verdict::NotApplicable;
        r.note += "; undecided at 4096 bits";
    } else {
        r.verdict = !applicable ? Verdict::NotApplicable : c.holds ? Verdict::Pass : Verdict::Fail;
    }
}

// |x|^{2k} REL rhs, proven; undecided counts as false
bool abs2_power_holds(const Cyc& x, unsigned k, Relation rel, const IntervalFn& rhs) {
    if (auto a = detail::abs2_exact(x)) {
        BigRational v = rpow(*a, k);
        return certainly(v, rel, rhs);
    }
    return certainly(0, rel, [&](mpfr_prec_t p) { return rhs(p) - detail::ipow_int(detail::abs2_interval(x, p), k); });
}

// Folds many instance reports into one: the first failure, else the
// tightest instance.
class Fold {
public:
    Fold(std::string id, std::string instance) : id_(std::move(id)), instance_(std::move(instance)) {}

    void add(const BoundReport& r, const std::string& label) {
        ++count_;
        switch (r.verdict) {
            case Verdict::Pass: ++pass_; break;
            case Verdict::Fail: ++fail_; break;
            case Verdict::NotApplicable:
                ++na_;
                if (r.holds()) ++informative_holds_;
                break;
        }
        bool take = false;
        if (!have_)
            take = true;
        else if (r.verdict == Verdict::Fail && best_.verdict != Verdict::Fail)
            take = true;
        else if (r.verdict == best_.verdict && r.verdict != Verdict::Fail && r.margin() < best_.margin())
            take = true;
        else if (best_.verdict == Verdict::NotApplicable && r.verdict == Verdict::Pass)
            take = true;
        if (take) {
            best_ = r;
            label_ = label;
            have_ = true;
        }
    }

    BoundReport result() const {
        BoundReport r = best_;
        r.id = id_;
        r.instance = instance_;
        if (!have_) {
            r.verdict = Verdict::NotApplicable;
            r.note = "no instances";
            return r;
        }
        r.verdict = fail_ ? Verdict::Fail : pass_ ? Verdict::Pass : Verdict::NotApplicable;
        std::ostringstream os;
        os << "instances=" << count_ << " pass=" << pass_ << " fail=" << fail_ << " n/a=" << na_;
        if (na_) os << " (informative holds " << informative_holds_ << "/" << na_ << ")";
        os << "; shown: " << label_;
        if (!best_.note.empty()) os << "; " << best_.note;
        r.note = os.str();
        r.param("instances", istr(count_));
        return r;
    }

private:
    std::string id_, instance_;
    BoundReport best_;
    std::string label_;
    bool have_ = false;
    int64_t count_ = 0, pass_ = 0, fail_ = 0, na_ = 0, informative_holds_ = 0;
};

Family family_of(const GroupTable& G) { return G.has_spec() ? G.spec().family : Family::GL; }

bool is_sp_like(const GroupTable& G) {
    Family f = family_of(G);
    return f == Family::Sp || (f == Family::SL && G.dim() == 2);
}

int64_t degree(const CharacterTable& t, int i) { return t.degrees[i]; }

int64_t sigma_of(const ClassFunction& rho, const CharacterTable& t) { return profile(rho, t).sigma; }

BigRational big(const Rational& r) { return r.big(); }

// floor(x) for x >= 0
BigInt floor_of(const BigRational& x) {
    return boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
}

}  // namespace

int rank_parameter(const GroupTable& G) {
    const auto& f = G.form();
    if (f.kind == FormKind::Symplectic || f.kind == FormKind::Quadratic) return f.witt_index;
    return G.dim();
}

// ----- Gaussian binomials and orbit counts -----

BigInt gauss_binom(int j, int i, int q) {
    if (i < 0 || i > j) throw std::invalid_argument("gauss_binom needs 0 <= i <= j");
    BigInt num = 1, den = 1;
    for (int t = 0; t < i; ++t) {
        num *= ipow(BigInt(q), j) - ipow(BigInt(q), t);
        den *= ipow(BigInt(q), i) - ipow(BigInt(q), t);
    }
    if (num % den != 0) throw std::logic_error("gauss_binom: inexact division");
    return num / den;
}

BoundReport gauss_binom_check(int j, int i, int q) {
    BoundReport r;
    r.id = "gauss-binomial";
    r.instance = "q=" + istr(q);
    r.param("j", istr(j)).param("i", istr(i)).param("q", istr(q));
    decide(r, BigRational(gauss_binom(j, i, q)), Relation::LT, BigRational(32, 9) * qpow(q, static_cast<long>(i) * (j - i)));
    return r;
}

BigInt orbit_count(const ClassPartition& cls, int j, double budget) {
    const GroupTable& G = *cls.group();
    const int Q = G.field().q(), d = G.dim();
    if (static_cast<double>(d) * j * std::log(static_cast<double>(Q)) > std::log(budget) + 1e-9)
        throw BudgetError("orbit_count: |V|^j exceeds the budget");
    BigInt total = 0;
    for (int c = 0; c < cls.count(); ++c) {
        int k = fixed_space_dims(G.field(), G.element(cls.rep(c)), d).first;
        total += BigInt(cls.size(c)) * ipow(BigInt(Q), static_cast<unsigned>(k * j));
    }
    if (total % G.order() != 0) throw std::logic_error("orbit_count: Burnside sum not divisible by |G|");
    return total / G.order();
}

int64_t orbit_count_enumerated(const GroupTable& G, int j, size_t budget) {
    const Field& F = G.field();
    const int Q = F.q(), d = G.dim();
    size_t nv = 1;
    for (int i = 0; i < d; ++i) nv *= Q;
    double tuples_d = std::pow(static_cast<double>(nv), j);
    if (tuples_d > static_cast<double>(budget)) throw BudgetError("orbit_count_enumerated: too many tuples");
    size_t tuples = 1;
    for (int i = 0; i < j; ++i) tuples *= nv;

    std::vector<std::vector<uint32_t>> perms;
    std::vector<int> gens = G.generators();
    if (gens.empty())
        for (int g = 1; g < G.order(); ++g) gens.push_back(g);
    std::vector<int> v(d);
    for (int g : gens) {
        Mat m = G.element(g);
        std::vector<uint32_t> p(nv);
        for (size_t x = 0; x < nv; ++x) {
            size_t y = x;
            for (int k = 0; k < d; ++k) {
                v[k] = static_cast<int>(y % Q);
                y /= Q;
            }
            auto w = mat_vec(F, m, v, d);
            size_t idx = 0;
            for (int k = d - 1; k >= 0; --k) idx = idx * Q + w[k];
            p[x] = static_cast<uint32_t>(idx);
        }
        perms.push_back(std::move(p));
    }

    std::vector<uint32_t> parent(tuples);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t t = 0; t < tuples; ++t)
        for (const auto& p : perms) {
            size_t y = t, img = 0, scale = 1;
            for (int i = 0; i < j; ++i) {
                img += static_cast<size_t>(p[y % nv]) * scale;
                y /= nv;
                scale *= nv;
            }
            uint32_t a = find(static_cast<uint32_t>(t)), b = find(static_cast<uint32_t>(img));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    int64_t roots = 0;
    for (size_t t = 0; t < tuples; ++t)
        if (parent[t] == t) ++roots;
    return roots;
}

std::vector<BoundReport> orbit_bound_check(const ClassesPtr& cls, int j, size_t oracle_budget) {
    const GroupTable& G = *cls->group();
    const int Q = G.field().q(), q = G.q(), d = G.dim();
    const Family fam = family_of(G);
    const std::string inst = group_name(G);
    const bool j_ok = j >= 1 && j <= d;
    BigInt N = orbit_count(*cls, j);
    const BigRational Nr(N);
    std::vector<BoundReport> out;

    auto base = [&](const std::string& id) {
        BoundReport r;
        r.id = id;
        r.instance = inst;
        r.param("j", istr(j)).param("q", istr(q));
        return r;
    };

    if (fam == Family::GL || fam == Family::GU) {
        if (fam == Family::GL) {
            BoundReport r = base("orbits-linear");
            decide_power(r, Nr, Relation::LE, 8, q, BigRational(j * j, 4), j_ok);
            out.push_back(r);
        } else {
            BoundReport r = base("orbits-unitary");
            decide(r, Nr, Relation::LE, 2 * qpow(q, static_cast<long>(j) * j), j_ok);
            out.push_back(r);
        }
    } else {
        int eps = 0;
        bool full = false;
        if (G.form().kind == FormKind::Symplectic || is_sp_like(G)) {
            eps = -1;
            full = fam == Family::Sp || fam == Family::SL;
        } else if (G.form().kind == FormKind::Quadratic) {
            eps = 1;
            full = fam == Family::GO || (fam == Family::SO && q % 2 == 0);
        }
        if (eps != 0) {
            long e = static_cast<long>(j) * (j + eps) / 2;
            BoundReport up = base("orbits-form-upper");
            up.param("epsilon", istr(eps));
            if (!full) up.note = "only the full isometry group is covered";
            decide(up, Nr, Relation::LT, 6 * qpow(q, e), full && j_ok);
            out.push_back(up);
            if (2 * j <= d) {
                BoundReport lo = base("orbits-form-lower");
                lo.param("epsilon", istr(eps));
                if (!full) lo.note = "only the full isometry group is covered";
                decide(lo, Nr, Relation::GE, qpow(q, e), full && j_ok);
                out.push_back(lo);
            }
        }
    }

    double tuples = std::pow(static_cast<double>(Q), static_cast<double>(d) * j);
    if (tuples <= static_cast<double>(oracle_budget)) {
        BoundReport r = base("orbits-oracle");
        r.note = "Burnside count against union-find enumeration";
        decide(r, Nr, Relation::EQ, BigRational(orbit_count_enumerated(G, j, oracle_budget)));
        out.push_back(r);
    }
    return out;
}

// ----- centralizers -----

int64_t centralizer_bruteforce(const GroupTable& G, int g) {
    int64_t n = 0;
    for (int h = 0; h < G.order(); ++h)
        if (G.mul(g, h) == G.mul(h, g)) ++n;
    return n;
}

std::vector<BoundReport> centralizer_bound_check(const ClassesPtr& cls, bool brute_force) {
    const GroupTable& G = *cls->group();
    const Family fam = family_of(G);
    const bool applicable = fam == Family::Sp || fam == Family::SO || is_sp_like(G);
    const int q = G.q();
    std::vector<BoundReport> out;
    for (int c = 0; c < cls->count(); ++c) {
        int k = fixed_space_dims(G.field(), G.element(cls->rep(c)), G.dim()).first;
        int64_t cent = cls->centralizer_order(c);
        BoundReport r;
        r.id = "centralizer-lower";
        r.instance = group_name(G);
        r.param("class", istr(c)).param("k", istr(k));
        int64_t lhs = cent;
        if (brute_force) {
            lhs = centralizer_bruteforce(G, cls->rep(c));
            if (lhs != cent) r.note = "brute-force count " + istr(lhs) + " differs from class size data " + istr(cent);
        }
        decide(r, BigRational(lhs), Relation::GE, qpow(q, static_cast<long>(k) * (k - 3) / 2), applicable);
        if (lhs != cent) r.verdict = Verdict::Fail;
        out.push_back(r);
    }
    return out;
}

// ----- restriction norms -----

Subgroup standard_restriction_subgroup(const GroupPtr& G) {
    const int d = G->dim(), m = G->form().witt_index;
    std::vector<int> fixed;
    if (d % 2 == 1)
        fixed = {2 * m};
    else if (d == 2 * m)
        fixed = {m - 1, 2 * m - 1};
    else
        fixed = {2 * m, 2 * m + 1};
    std::string label = "Stab(";
    for (size_t i = 0; i < fixed.size(); ++i) label += (i ? "," : "") + istr(fixed[i]);
    return fix_basis_vectors(G, fixed, label + ")");
}

RealBounds restriction_rhs(int q, int n, const BigRational& D, bool odd_dimension, int precision) {
    Interval inner = odd_dimension ? exact(BigRational(7 * n) + 5 * D, precision) : exact(BigRational(41 * n) + 16 * D, precision);
    Interval v = detail::qpow(q, Interval::integer(2, precision) + detail::isqrt(inner));
    return {v.lower(), v.upper()};
}

std::vector<BoundReport> restriction_norm_check(const CharacterTable& t, const SubgroupClasses& H) {
    const GroupTable& G = t.group();
    const int d = G.dim(), q = G.q();
    const bool odd = d % 2 == 1;
    const int n = odd ? (d - 1) / 2 : d / 2;
    const Family fam = family_of(G);
    bool applicable;
    if (odd)
        applicable = q % 2 == 1 && (fam == Family::SO || fam == Family::Omega) && n >= 3;
    else
        applicable = (fam == Family::Sp || fam == Family::SO || fam == Family::Omega) && n >= 2;
    std::vector<BoundReport> out;
    for (int i = 0; i < t.size(); ++i) {
        ClassFunction r = restrict_to(t.irr[i], H);
        BigRational lhs = big(inner(r, r));
        int64_t deg = degree(t, i);
        BoundReport rep;
        rep.id = odd ? "restriction-norm-odd" : "restriction-norm-even";
        rep.instance = group_name(G) + " > " + group_name(*H.sub->group());
        rep.param("chi", istr(i)).param("degree", istr(deg)).param("n", istr(n));
        if (!applicable) rep.note = odd ? "needs q odd, SO or Omega, n >= 3" : "needs Sp, SO or Omega with n >= 2";
        decide_certified(
            rep, lhs, Relation::LE,
            [&](mpfr_prec_t p) {
                Interval D = detail::imax(Interval::integer(1, p), logq(BigRational(deg), q, p));
                Interval in = odd ? Interval::integer(7 * n, p) + Interval::integer(5, p) * D
                                  : Interval::integer(41 * n, p) + Interval::integer(16, p) * D;
                return detail::qpow(q, Interval::integer(2, p) + detail::isqrt(in));
            },
            applicable);
        out.push_back(rep);
    }
    return out;
}

// ----- multiplicity inequalities -----

std::vector<BoundReport> tensor_product_check(const CharacterTable& t, int m) {
    const GroupTable& G = t.group();
    const int n = G.dim(), q = G.q(), k = t.size();
    const Family fam = family_of(G);
    const bool family_ok = fam == Family::GL || fam == Family::GU;
    if (m < 1 || m > 2) throw std::invalid_argument("tensor_product_check supports m = 1, 2");
    // m-multisets of irreducibles with their products
    std::vector<std::vector<int>> sets;
    std::vector<ClassFunction> prods;
    for (int a = 0; a < k; ++a) {
        if (m == 1) {
            sets.push_back({a});
            prods.push_back(t.irr[a]);
        } else
            for (int b = a; b < k; ++b) {
                sets.push_back({a, b});
                prods.push_back(t.irr[a] * t.irr[b]);
            }
    }
    Fold fold("tensor-inner-product", group_name(G));
    for (size_t x = 0; x < sets.size(); ++x)
        for (size_t y = x; y < sets.size(); ++y) {
            BigRational lhs = big(inner(prods[x], prods[y]));
            BigInt maxdeg = 1;
            for (int a : sets[x]) maxdeg = std::max(maxdeg, BigInt(degree(t, a)));
            for (int a : sets[y]) maxdeg = std::max(maxdeg, BigInt(degree(t, a)));
            auto L = [&](mpfr_prec_t p) { return logq(BigRational(maxdeg), q, p) / Interval::integer(n, p); };
            // n >= 7, L <= n/5, 2.8 m L <= n
            bool gate = family_ok && n >= 7 &&
                        certainly(BigRational(n), Relation::GE, [&](mpfr_prec_t p) { return Interval::integer(5, p) * L(p); }) &&
                        certainly(BigRational(n), Relation::GE,
                                  [&](mpfr_prec_t p) { return exact(BigRational(28 * m, 10), p) * L(p); });
            BoundReport r;
            r.param("m", istr(m));
            decide_certified(
                r, lhs, Relation::LE,
                [&](mpfr_prec_t p) {
                    Interval l = L(p);
                    return Interval::integer(8, p) * detail::qpow(q, Interval::integer(2 * m * m, p) * l * l);
                },
                gate);
            std::string label;
            for (int a : sets[x]) label += "chi" + istr(a) + " ";
            label += "| ";
            for (int a : sets[y]) label += "chi" + istr(a) + " ";
            fold.add(r, label);
        }
    BoundReport out = fold.result();
    out.param("m", istr(m));
    return {out};
}

std::vector<BoundReport> tensor_sigma_check(const CharacterTable& t) {
    const GroupTable& G = t.group();
    const int n = G.dim(), q = G.q(), k = t.size();
    const Family fam = family_of(G);
    const bool family_ok = fam == Family::GL || fam == Family::GU;
    Fold fold("tensor-sigma", group_name(G));
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            BigRational lhs(sigma_of(t.irr[a] * t.irr[b], t));
            BigRational degs = BigRational(degree(t, a)) * degree(t, b);
            BoundReport r;
            decide_certified(
                r, lhs, Relation::LE,
                [&](mpfr_prec_t p) {
                    Interval L = detail::imax(Interval::integer(1, p), logq(degs, q, p) / Interval::integer(n, p));
                    return detail::qpow(q, Interval::integer(5, p) * L * L);
                },
                family_ok && n >= 7);
            fold.add(r, "chi" + istr(a) + " chi" + istr(b));
        }
    return {fold.result()};
}

std::vector<BoundReport> tensor_power_check(const CharacterTable& t, int max_m) {
    const GroupTable& G = t.group();
    const int n = G.dim(), q = G.q();
    const bool family_ok = family_of(G) == Family::GU;
    std::vector<BoundReport> out;
    for (int m = 1; m <= max_m; ++m) {
        Fold fold("tensor-power-sigma", group_name(G));
        for (int i = 0; i < t.size(); ++i) {
            ClassFunction pw = t.irr[i];
            for (int s = 1; s < m; ++s) pw *= t.irr[i];
            BigRational lhs(sigma_of(pw, t));
            int64_t deg = degree(t, i);
            BoundReport r;
            decide_certified(
                r, lhs, Relation::LE,
                [&](mpfr_prec_t p) {
                    Interval L = detail::imax(exact(BigRational(1, 2), p), logq(BigRational(deg), q, p) / Interval::integer(n, p));
                    return detail::qpow(q, Interval::integer(15 * m * m, p) * L * L);
                },
                family_ok && n >= 7);
            fold.add(r, "chi" + istr(i));
        }
        BoundReport f = fold.result();
        f.param("m", istr(m));
        out.push_back(f);
    }
    return out;
}

BigRational levi_constant(LeviBound which) {
    switch (which) {
        case LeviBound::Classical: return 705;
        case LeviBound::Standard: return 1216;
        case LeviBound::Derived: return 1696;
    }
    return 0;
}

namespace {

Interval levi_exponent(const Interval& A, int n, const Interval& L, int m) {
    mpfr_prec_t p = A.prec();
    Interval root = detail::isqrt(A * Interval::integer(n, p) * L * L * L);
    if (m == 0) return root;
    return Interval::integer(m, p) * root + Interval::integer(15 * m * m, p) * L * L;
}

}  // namespace

RealBounds levi_factor(const BigRational& A, int q, int n, const BigRational& L, int m, int precision) {
    Interval v = detail::qpow(q, levi_exponent(exact(A, precision), n, exact(L, precision), m));
    return {v.lower(), v.upper()};
}

std::vector<BoundReport> levi_restriction_check(const CharacterTable& t, const SubgroupClasses& levi,
                                                const CharacterTable& levi_table, LeviBound which, int max_m) {
    const GroupTable& G = t.group();
    const int q = G.q(), n = rank_parameter(G), d = G.dim();
    const Family fam = family_of(G);
    const int sign = G.has_spec() ? G.spec().sign : 0;
    bool family_ok = false;
    std::string id;
    switch (which) {
        case LeviBound::Classical:
            id = "levi-restriction";
            family_ok = fam == Family::Sp || (fam == Family::SO && sign == 1) || (fam == Family::Omega && sign == 1 && q % 2 == 0);
            break;
        case LeviBound::Standard:
            id = "levi-restriction-standard";
            family_ok = (fam == Family::SO && d % 2 == 1 && q % 2 == 1) || ((fam == Family::SO || fam == Family::Omega) && sign == -1);
            break;
        case LeviBound::Derived:
            id = "levi-restriction-derived";
            family_ok = fam == Family::Omega && q % 2 == 1 && (d % 2 == 1 || sign == 1);
            break;
    }
    const BigRational A = levi_constant(which);
    const BigRational slope = which == LeviBound::Derived ? BigRational(85, 10) : BigRational(76, 10);
    const BigRational offset = which == LeviBound::Derived ? BigRational(16, 10) : BigRational(14, 10);

    std::vector<BoundReport> out;
    for (int i = 0; i < t.size(); ++i) {
        const int64_t deg = degree(t, i);
        auto L = [&](mpfr_prec_t p) {
            return detail::imax(Interval::integer(1, p), logq(BigRational(deg), q, p) / Interval::integer(n, p));
        };
        bool gate = family_ok &&
                    certainly(BigRational(n), Relation::GE, [&](mpfr_prec_t p) { return exact(slope, p) * L(p); }) &&
                    certainly(BigRational(n), Relation::GE,
                              [&](mpfr_prec_t p) { return Interval::integer(7, p) + exact(offset, p) * L(p); });
        const int top = which == LeviBound::Derived ? 1 : std::max(1, max_m);
        ClassFunction pw = t.irr[i];
        for (int m = 1; m <= top; ++m) {
            if (m > 1) pw *= t.irr[i];
            BigRational lhs(sigma_of(restrict_to(pw, levi), levi_table));
            // sigma(chi, G) = 1 for irreducible chi
            BoundReport r;
            r.id = m == 1 ? id : id + "-power";
            r.instance = group_name(G) + " > " + group_name(*levi.sub->group());
            r.param("chi", istr(i)).param("degree", istr(deg)).param("n", istr(n)).param("m", istr(m));
            r.param("A", to_decimal(A, 6));
            if (!gate) r.note = "outside the stated n/L range";
            int mm = m == 1 ? 0 : m;
            decide_certified(
                r, lhs, Relation::LE, [&](mpfr_prec_t p) { return detail::qpow(q, levi_exponent(exact(A, p), n, L(p), mm)); },
                gate);
            out.push_back(r);
        }
    }
    return out;
}

std::vector<BoundReport> parabolic_linear_check(const CharacterTable& Pn, const SubgroupClasses& Pm,
                                                const CharacterTable& Pm_table, int n, int m, int q) {
    std::vector<BoundReport> out;
    for (int i = 0; i < Pn.size(); ++i) {
        const BigInt deg(degree(Pn, i));
        // L = log_q deg / n; L <= n/5 <=> deg^5 <= q^{n^2}; floor(1.4 L) = max k with q^{5kn} <= deg^7
        bool l_ok = ipow(deg, 5) <= ipow(BigInt(q), static_cast<unsigned>(n * n));
        int k = 0;
        while (ipow(BigInt(q), static_cast<unsigned>(5 * (k + 1) * n)) <= ipow(deg, 7)) ++k;
        bool gate = n >= 7 && l_ok && m >= 1 && m <= n - k;
        auto prof = profile(restrict_to(Pn.irr[i], Pm), Pm_table);
        BoundReport r;
        r.id = "parabolic-linear-constituent";
        r.instance = group_name(Pn.group()) + " > " + group_name(*Pm.sub->group());
        r.param("phi", istr(i)).param("degree", deg.str()).param("n", istr(n)).param("m", istr(m));
        if (!gate) r.note = "outside the stated n/L range";
        decide(r, BigRational(prof.lambda), Relation::GE, BigRational(1), gate);
        out.push_back(r);
    }
    return out;
}

// ----- sigma / lambda calculus -----

std::vector<BoundReport> sigma_lambda_check(const CharacterTable& t, const SubgroupClasses& H, const CharacterTable& Ht) {
    const std::string inst = group_name(t.group()) + " > " + group_name(Ht.group());
    const int64_t index = t.group().order() / Ht.group().order();
    const int k = t.size();

    std::vector<int64_t> sigH(k), lamH(k);
    for (int a = 0; a < k; ++a) {
        auto p = profile(restrict_to(t.irr[a], H), Ht);
        sigH[a] = p.sigma;
        lamH[a] = p.lambda;
    }

    std::vector<std::pair<std::string, ClassFunction>> rhos;
    for (int a = 0; a < k; ++a) rhos.emplace_back("chi" + istr(a), t.irr[a]);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) rhos.emplace_back("chi" + istr(a) + "*chi" + istr(b), t.irr[a] * t.irr[b]);
    rhos.emplace_back("regular", ClassFunction::regular(t.classes));

    Fold f_ls("mults-lambda-sigma", inst), f_sn("mults-sigma-norm", inst), f_sr("mults-sigma-restriction", inst),
        f_lr("mults-lambda-restriction", inst), f_rl("mults-restriction-lower", inst), f_ru("mults-restriction-upper", inst);
    for (const auto& [label, rho] : rhos) {
        auto pg = profile(rho, t);
        auto ph = profile(restrict_to(rho, H), Ht);
        int64_t max_s = 0, max_l = 0;
        for (int a = 0; a < k; ++a)
            if (pg.multiplicities[a] > 0) {
                max_s = std::max(max_s, sigH[a]);
                max_l = std::max(max_l, lamH[a]);
            }
        const BigRational sg(pg.sigma), lg(pg.lambda), sh(ph.sigma), lh(ph.lambda);
        BoundReport r;
        decide(r, lg, Relation::LE, sg);
        f_ls.add(r, label);
        decide(r, sg, Relation::LE, big(inner(rho, rho)));
        f_sn.add(r, label);
        decide(r, sh, Relation::LE, sg * max_s);
        f_sr.add(r, label);
        decide(r, lh, Relation::LE, sg * max_l);
        f_lr.add(r, label);
        decide(r, sg, Relation::LE, sh);
        f_rl.add(r, label);
        decide(r, sh, Relation::LE, sg * index);
        f_ru.add(r, label);
    }

    std::vector<std::pair<std::string, ClassFunction>> phis;
    for (int a = 0; a < Ht.size(); ++a) phis.emplace_back("phi" + istr(a), Ht.irr[a]);
    for (int a = 0; a < Ht.size(); ++a)
        for (int b = a; b < Ht.size(); ++b) phis.emplace_back("phi" + istr(a) + "*phi" + istr(b), Ht.irr[a] * Ht.irr[b]);
    Fold f_il("mults-induction-lower", inst), f_iu("mults-induction-upper", inst);
    for (const auto& [label, phi] : phis) {
        const BigRational s(sigma_of(phi, Ht));
        const BigRational si(sigma_of(induce_from(phi, H), t));
        BoundReport r;
        decide(r, s, Relation::LE, si);
        f_il.add(r, label);
        decide(r, si, Relation::LE, s * index);
        f_iu.add(r, label);
    }
    return {f_ls.result(), f_sn.result(), f_sr.result(), f_lr.result(), f_rl.result(), f_ru.result(), f_il.result(), f_iu.result()};
}

std::vector<BoundReport> abelian_normal_check(const CharacterTable& P, const SubgroupClasses& L, const CharacterTable& Lt) {
    std::vector<int> linear;
    for (int a = 0; a < Lt.size(); ++a)
        if (degree(Lt, a) == 1) linear.push_back(a);
    Fold fold("abelian-normal-linear", group_name(P.group()) + " > " + group_name(Lt.group()));
    for (int i = 0; i < P.size(); ++i) {
        ClassFunction r = restrict_to(P.irr[i], L);
        Rational worst(0);
        for (int a : linear) worst = std::max(worst, inner(r, Lt.irr[a]));
        BoundReport rep;
        decide(rep, big(worst), Relation::LE, BigRational(1));
        fold.add(rep, "chi" + istr(i));
    }
    BoundReport out = fold.result();
    out.param("linear_characters", istr(static_cast<long long>(linear.size())));
    return {out};
}

// ----- constants -----

std::vector<BoundReport> constant_certificates() {
    std::vector<BoundReport> out;
    auto make = [](const std::string& id, const std::string& what) {
        BoundReport r;
        r.id = id;
        r.instance = "constants";
        r.note = what;
        return r;
    };
    auto I = [](long v, mpfr_prec_t p) { return Interval::integer(v, p); };
    auto S = [](const BigRational& v, mpfr_prec_t p) { return detail::isqrt(Interval::exact(v, p)); };
    const BigRational A1(69), A2 = BigRational(196, 100) * A1, A3(148), A4(2226, 10), A5(705), B(1216), C(1696);

    {   // 2 + sqrt(57x) <= sqrt(69x) for x >= 7
        BoundReport r = make("constant-a1", "2 <= (sqrt(69) - sqrt(57)) sqrt(7)");
        decide_certified(r, 2, Relation::LE, [&](mpfr_prec_t p) { return (S(69, p) - S(57, p)) * S(7, p); });
        out.push_back(r);
    }
    {
        BoundReport r = make("constant-a2", "1.4^2 * 69");
        decide(r, A2, Relation::EQ, BigRational(13524, 100));
        out.push_back(r);
    }
    for (int n = 7; n <= 64; ++n) {
        BoundReport r = make("constant-a3", "(1/2) log2 n <= (sqrt(148) - sqrt(135.24)) sqrt(n)");
        r.param("n", istr(n));
        decide_certified(r, 0, Relation::LE, [&](mpfr_prec_t p) {
            Interval half_log2 = detail::ilog(I(n, p)) / (I(2, p) * detail::ilog(I(2, p)));
            return (S(A3, p) - S(A2, p)) * S(n, p) - half_log2;
        });
        out.push_back(r);
    }
    {   // d/dn [c sqrt(n) - log2(n)/2] >= 0 once c sqrt(n) ln 2 >= 1
        BoundReport r = make("constant-a3-monotone", "1 <= (sqrt(148) - sqrt(135.24)) sqrt(8) ln 2");
        decide_certified(r, 1, Relation::LE,
                         [&](mpfr_prec_t p) { return (S(A3, p) - S(A2, p)) * S(8, p) * detail::ilog(I(2, p)); });
        out.push_back(r);
    }
    {
        BoundReport r = make("constant-a4-ratio", "1/(1 - 1.4/7.6) < 1.226");
        decide(r, 1 / (1 - BigRational(14, 76)), Relation::LT, BigRational(1226, 1000));
        out.push_back(r);
        BoundReport s = make("constant-a4-square", "1.226^2 <= 1.504");
        decide(s, BigRational(1226, 1000) * BigRational(1226, 1000), Relation::LE, BigRational(1504, 1000));
        out.push_back(s);
        BoundReport t = make("constant-a4", "1.504 * 148 <= 222.6");
        decide(t, BigRational(1504, 1000) * A3, Relation::LE, A4);
        out.push_back(t);
    }
    {
        BoundReport r = make("constant-a5", "705 >= (sqrt(222.6) + sqrt(135.24))^2");
        decide_certified(r, A5, Relation::GE, [&](mpfr_prec_t p) {
            Interval s = S(A4, p) + S(A2, p);
            return s * s;
        });
        out.push_back(r);
    }
    {
        BoundReport r = make("constant-b", "1216 >= (sqrt(69) + sqrt(705))^2");
        decide_certified(r, B, Relation::GE, [&](mpfr_prec_t p) {
            Interval s = S(A1, p) + S(A5, p);
            return s * s;
        });
        out.push_back(r);
    }
    {
        BoundReport r = make("constant-c", "1696 >= (1/3 + sqrt(1216 (10/9)^3))^2");
        decide_certified(r, C, Relation::GE, [&](mpfr_prec_t p) {
            Interval s = Interval::exact(BigRational(1, 3), p) + S(B * BigRational(1000, 729), p);
            return s * s;
        });
        out.push_back(r);
    }
    {   // sum_{i>=0} 2^{-i(i+1)/2}: partial sum to T plus the tail 2^{1-(T+1)(T+2)/2}
        const int T = 6;
        BigRational partial = 0;
        for (int i = 0; i <= T; ++i) partial += qpow(2, -static_cast<long>(i) * (i + 1) / 2);
        BigRational tail = qpow(2, 1 - static_cast<long>(T + 1) * (T + 2) / 2);
        BoundReport r = make("series-53-32", "sum 2^{-i(i+1)/2} (partial to 6 plus tail) < 53/32");
        decide(r, partial + tail, Relation::LT, BigRational(53, 32));
        out.push_back(r);
        BoundReport s = make("series-53-32-majorant", "1 + 1/2 + 1/8 + sum_{t>=6} 2^{-t} = 53/32");
        decide(s, 1 + BigRational(1, 2) + BigRational(1, 8) + qpow(2, -5), Relation::EQ, BigRational(53, 32));
        out.push_back(s);
    }
    {   // prod_{s>=1} (1 - 2^{-s}) >= prod_{s<=10} (1 - 2^{-s}) (1 - 2^{-10}) > 9/32
        BigRational prod = 1;
        for (int s = 1; s <= 10; ++s) prod *= 1 - qpow(2, -s);
        prod *= 1 - qpow(2, -10);
        BoundReport r = make("gauss-product-32-9", "prod_{s>=1} (1 - 2^{-s}) > 9/32");
        decide(r, prod, Relation::GT, BigRational(9, 32));
        out.push_back(r);
    }
    {
        BoundReport r = make("orbit-constant-6", "(32/9)(53/32) < 6");
        decide(r, BigRational(32, 9) * BigRational(53, 32), Relation::LT, 6);
        out.push_back(r);
    }
    return out;
}

std::vector<BoundReport> orthogonal_order_check(int max_m, const std::vector<int>& qs) {
    std::vector<BoundReport> out;
    for (int q : qs) {
        Fold fold("orthogonal-order", "q=" + istr(q));
        for (int m = 1; m <= max_m; ++m) {
            std::vector<int> signs = m % 2 == 0 ? std::vector<int>{1, -1} : std::vector<int>{0};
            for (int sign : signs) {
                GroupSpec spec{Family::GO, m, q, sign};
                BigInt order;
                try {
                    spec.validate();
                    order = group_order(spec);
                } catch (const std::exception&) {
                    continue;
                }
                // only used in odd characteristic; O-(2,2) has order 6 > 16/3
                BoundReport r;
                decide(r, BigRational(order), Relation::LE, BigRational(8, 3) * qpow(q, static_cast<long>(m) * (m - 1) / 2),
                       q % 2 == 1);
                fold.add(r, spec.str());
            }
        }
        BoundReport f = fold.result();
        f.param("q", istr(q)).param("max_m", istr(max_m));
        out.push_back(f);
    }
    return out;
}

BoundReport irr_count_check(const CharacterTable& t) {
    const GroupTable& G = t.group();
    const int d = G.dim(), q = G.q();
    const Family fam = family_of(G);
    BoundReport r;
    r.id = "irr-count";
    r.instance = group_name(G);
    bool applicable = false;
    BigRational coeff(76, 5);
    int n = d / 2;
    if (d % 2 == 0 && (fam == Family::Sp || fam == Family::SO || fam == Family::Omega || is_sp_like(G))) {
        applicable = true;
    } else if (d % 2 == 1 && fam == Family::SO && q % 2 == 1) {
        applicable = true;
        coeff = BigRational(73, 10);
        n = (d - 1) / 2;
    }
    r.param("n", istr(n)).param("coefficient", to_decimal(coeff, 4));
    decide(r, BigRational(t.size()), Relation::LE, coeff * qpow(q, n), applicable);
    return r;
}

std::vector<BoundReport> min_degree_check(const CharacterTable& t) {
    const GroupTable& G = t.group();
    const int q = G.q(), n = rank_parameter(G);
    std::optional<int64_t> d;
    for (int64_t x : t.degrees)
        if (x > 1 && (!d || x < *d)) d = x;
    std::vector<BoundReport> out;
    auto make = [&](const char* id) {
        BoundReport r;
        r.id = id;
        r.instance = group_name(G);
        r.param("n", istr(n)).param("q", istr(q));
        return r;
    };
    if (!d) {
        BoundReport r = make("min-degree");
        r.note = "no irreducible of degree above 1";
        decide(r, 0, Relation::EQ, 0);
        out.push_back(r);
        return out;
    }
    BoundReport a = make("min-degree-third");
    a.note = "applies from n = 9";
    decide_power(a, BigRational(*d), Relation::GT, 1, q, BigRational(n, 3), n >= 9);
    out.push_back(a);
    BoundReport b = make("min-degree-four-fifths");
    b.note = "applies from n = 9";
    decide_power(b, BigRational(*d), Relation::GT, 1, q, BigRational(4 * n, 5), n >= 9);
    out.push_back(b);
    if (family_of(G) == Family::Sp && q % 2 == 1) {
        BoundReport c = make("min-degree-weil");
        decide(c, BigRational(*d), Relation::GE, (qpow(q, n) - 1) / 2);
        out.push_back(c);
    }
    return out;
}

std::vector<BoundReport> restriction_tail_check(const std::vector<int>& qs, int max_n) {
    std::vector<BoundReport> out;
    for (int q : qs) {
        Fold fold("restriction-norm-tail", "q=" + istr(q));
        for (int n = 2; n <= max_n; ++n)
            for (int D = 1; D <= n * (2 * n + 1) / 2; ++D) {
                BoundReport r;
                // 0 < q^{2+sqrt(41n+16D)} - q^{2+sqrt(40n+16D+1)} - 15.2
                decide_certified(r, 0, Relation::LT, [&](mpfr_prec_t p) {
                    Interval a = detail::qpow(q, Interval::integer(2, p) + detail::isqrt(Interval::integer(41 * n + 16 * D, p)));
                    Interval b = detail::qpow(q, Interval::integer(2, p) + detail::isqrt(Interval::integer(40 * n + 16 * D + 1, p)));
                    return a - b - Interval::exact(BigRational(76, 5), p);
                });
                fold.add(r, "n=" + istr(n) + " D=" + istr(D));
            }
        BoundReport f = fold.result();
        f.param("q", istr(q)).param("max_n", istr(max_n));
        f.note += "; integer D up to n(2n+1)/2";
        out.push_back(f);
    }
    return out;
}

// ----- delta / epsilon -----

namespace {

BigRational delta_cap(const BigRational& gamma) { return std::min<BigRational>(gamma / 4, (1 - gamma) * BigRational(5, 7)); }

BigRational delta_slack(const BigRational& gamma, const BigRational& delta) {
    return gamma - delta / (1 - gamma) - 4 * (1 - gamma);
}

void check_gamma(const BigRational& g, const char* what) {
    if (!(g > BigRational(4, 5) && g < 1))
        throw std::invalid_argument(std::string(what) + " must lie strictly between 4/5 and 1");
}

}  // namespace

bool delta_feasible(const BigRational& gamma, const BigRational& delta, const BigRational& A) {
    if (delta <= 0 || delta > delta_cap(gamma)) return false;
    BigRational R = delta_slack(gamma, delta);
    if (R < 0) return false;
    return A * delta / (2 * gamma) <= R * R;
}

std::vector<BoundReport> delta_certificate(const BigRational& gamma, const BigRational& delta, const BigRational& A) {
    const std::string inst = "gamma=" + to_decimal(gamma, 12);
    std::vector<BoundReport> out;
    BoundReport range;
    range.id = "delta-range";
    range.instance = inst;
    range.param("gamma", to_decimal(gamma, 12)).param("delta", to_decimal(delta, 12));
    range.note = "delta <= min(gamma/4, (1-gamma)/1.4)";
    decide(range, delta, Relation::LE, delta_cap(gamma), delta > 0);
    if (delta <= 0) range.verdict = Verdict::Fail;
    out.push_back(range);

    BoundReport c;
    c.id = "delta-constraint";
    c.instance = inst;
    c.param("gamma", to_decimal(gamma, 12)).param("delta", to_decimal(delta, 12)).param("A", to_decimal(A, 12));
    BigRational R = delta_slack(gamma, delta);
    decide(c, A * delta / (2 * gamma), Relation::LE, R * R);
    if (R < 0) c.verdict = Verdict::Fail;
    Interval sum = detail::isqrt(Interval::exact(A * delta / (2 * gamma), 128)) + Interval::exact(delta / (1 - gamma), 128) +
                   Interval::exact(4 * (1 - gamma), 128);
    std::ostringstream os;
    os << "A delta/(2 gamma) <= (gamma - delta/(1-gamma) - 4(1-gamma))^2; sqrt term "
       << to_decimal(detail::isqrt(Interval::exact(A * delta / (2 * gamma), 128)).upper(), 6) << " + "
       << to_decimal(delta / (1 - gamma), 6) << " + " << to_decimal(4 * (1 - gamma), 6) << " = "
       << to_decimal(sum.upper(), 8) << " vs gamma " << to_decimal(gamma, 8)
       << "; the regime L <= n delta / 2 gamma is not part of this check";
    c.note = os.str();
    out.push_back(c);
    return out;
}

DeltaResult delta_solver(const BigRational& gamma, const BigRational& A, int decimals) {
    check_gamma(gamma, "gamma");
    DeltaResult res;
    res.gamma = gamma;
    res.A = A;
    res.decimals = decimals;
    const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(decimals));
    BigInt lo = 0, hi = floor_of(delta_cap(gamma) * BigRational(scale));
    auto feasible = [&](const BigInt& k) { return k > 0 && delta_feasible(gamma, BigRational(k, scale), A); };
    // largest feasible k in [0, hi]; the constraint is monotone in delta
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (feasible(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    res.delta_max = BigRational(lo, scale);

    BoundReport top;
    top.id = "delta-max";
    top.instance = "gamma=" + to_decimal(gamma, 12);
    top.param("gamma", to_decimal(gamma, 12)).param("A", to_decimal(A, 12)).param("decimals", istr(decimals));
    top.note = "largest multiple of 10^-" + istr(decimals) + " meeting both constraints; next step is infeasible";
    bool next_infeasible = !feasible(lo + 1);
    decide(top, res.delta_max, Relation::GT, BigRational(0), true);
    if (!next_infeasible) top.verdict = Verdict::Fail;
    res.reports.push_back(top);
    if (lo > 0)
        for (auto& r : delta_certificate(gamma, res.delta_max, A)) res.reports.push_back(r);
    return res;
}

namespace {

// truncate x > 0 to two significant figures
BigRational two_significant(const BigRational& x) {
    if (x <= 0) return 0;
    BigRational unit = 1;
    while (unit > x) unit /= 10;
    while (unit * 10 <= x) unit *= 10;
    BigRational step = unit / 10;
    return BigRational(floor_of(x / step)) * step;
}

}  // namespace

EpsilonComposition epsilon_composition(const BigRational& epsilon, std::optional<BigRational> epsilon_star) {
    check_gamma(epsilon, "epsilon");
    EpsilonComposition ec;
    ec.epsilon = epsilon;
    if (epsilon_star)
        ec.epsilon_star = *epsilon_star;
    else if (epsilon == BigRational(992, 1000))
        ec.epsilon_star = BigRational(99, 100);
    else
        ec.epsilon_star = epsilon / 2 + BigRational(2, 5);
    if (!(ec.epsilon_star > BigRational(4, 5) && ec.epsilon_star < epsilon))
        throw std::invalid_argument("epsilon* must satisfy 4/5 < epsilon* < epsilon");
    DeltaResult d = delta_solver(ec.epsilon_star);
    ec.delta_star = two_significant(d.delta_max);
    BigRational cap = BigRational(16, 25) * epsilon * (epsilon - ec.epsilon_star);
    ec.delta = std::min(ec.delta_star, cap);

    const std::string inst = "epsilon=" + to_decimal(epsilon, 12);
    BoundReport lo;
    lo.id = "epsilon-star-lower";
    lo.instance = inst;
    lo.param("epsilon_star", to_decimal(ec.epsilon_star, 12));
    decide(lo, ec.epsilon_star, Relation::GT, BigRational(4, 5));
    ec.reports.push_back(lo);
    BoundReport hi;
    hi.id = "epsilon-star-upper";
    hi.instance = inst;
    hi.param("epsilon_star", to_decimal(ec.epsilon_star, 12));
    decide(hi, ec.epsilon_star, Relation::LT, epsilon);
    ec.reports.push_back(hi);
    for (auto r : delta_certificate(ec.epsilon_star, ec.delta_star)) {
        r.id = "epsilon-" + r.id;
        ec.reports.push_back(r);
    }
    BoundReport fin;
    fin.id = "epsilon-delta";
    fin.instance = inst;
    fin.param("delta_star", to_decimal(ec.delta_star, 12)).param("delta", to_decimal(ec.delta, 12));
    fin.note = "delta = min(delta*, (16/25) epsilon (epsilon - epsilon*))";
    decide(fin, ec.delta, Relation::LE, cap);
    ec.reports.push_back(fin);
    return ec;
}

// ----- character bound predicates -----

BoundReport schur_bound_check(const CharacterTable& t) {
    const auto& cls = *t.classes;
    Fold fold("centralizer-character-bound", group_name(t.group()));
    for (int i = 0; i < t.size(); ++i)
        for (int c = 0; c < cls.count(); ++c) {
            BoundReport r;
            const int64_t cent = cls.centralizer_order(c);
            decide_abs2(r, t.irr[i][c], Relation::LE, [&](mpfr_prec_t p) { return Interval::integer(cent, p); });
            fold.add(r, "chi" + istr(i) + " class" + istr(c));
        }
    return fold.result();
}

namespace {

// |C| <= q^{n^2 delta}
bool centralizer_gate(int64_t cent, int q, int n, const BigRational& delta) {
    return certainly(BigRational(cent), Relation::LE,
                     [&](mpfr_prec_t p) { return detail::qpow(q, Interval::exact(delta * n * n, p)); });
}

}  // namespace

BoundReport character_bound_check(const CharacterTable& t, const std::string& id, const BigRational& factor,
                                  const BigRational& exponent, const BigRational& delta, int min_n) {
    const GroupTable& G = t.group();
    const auto& cls = *t.classes;
    const int n = rank_parameter(G), q = G.q();
    const BigInt a = boost::multiprecision::numerator(exponent), b = boost::multiprecision::denominator(exponent);
    const unsigned ua = static_cast<unsigned>(a), ub = static_cast<unsigned>(b);
    const BigRational f2b = rpow(factor * factor, static_cast<long>(ub));
    std::vector<BigRational> deg_pow(t.size());
    for (int i = 0; i < t.size(); ++i) deg_pow[i] = BigRational(ipow(BigInt(degree(t, i)), 2 * ua)) * f2b;

    int64_t pairs = 0, gated = 0, violations = 0, informative_violations = 0;
    for (int c = 0; c < cls.count(); ++c) {
        const bool gate = n >= min_n && centralizer_gate(cls.centralizer_order(c), q, n, delta);
        for (int i = 0; i < t.size(); ++i) {
            ++pairs;
            // |chi(g)|^{2b} <= factor^{2b} chi(1)^{2a}
            const BigRational& bound = deg_pow[i];
            bool holds = abs2_power_holds(t.irr[i][c], ub, Relation::LE, [&](mpfr_prec_t p) { return exact(bound, p); });
            if (gate) {
                ++gated;
                if (!holds) ++violations;
            } else if (!holds) {
                ++informative_violations;
            }
        }
    }
    BoundReport r;
    r.id = id;
    r.instance = group_name(G);
    r.param("factor", to_decimal(factor, 6)).param("exponent", to_decimal(exponent, 6)).param("delta", to_decimal(delta, 6));
    r.param("n", istr(n)).param("pairs", istr(pairs)).param("gated_pairs", istr(gated));
    std::ostringstream os;
    os << "violations among gated pairs: " << violations << "; outside the hypotheses " << informative_violations
       << " of " << (pairs - gated) << " pairs fail the bound";
    if (n < min_n) os << "; n = " << n << " < " << min_n;
    r.note = os.str();
    decide(r, BigRational(violations), Relation::EQ, BigRational(0), gated > 0);
    return r;
}

std::vector<BoundReport> weil_value_check(const CharacterTable& t, const BigRational& delta) {
    const GroupTable& G = t.group();
    const auto& cls = *t.classes;
    if (!uses_weil_theta(G)) throw std::invalid_argument("weil_value_check needs Sp_2n(q) with q odd");
    const int n = G.dim() / 2, q = G.q();
    std::vector<int> weil;
    for (bool tw : {false, true}) {
        auto p = profile(weil_character(t.classes, tw), t);
        for (int i = 0; i < t.size(); ++i)
            if (p.multiplicities[i] > 0 && std::find(weil.begin(), weil.end(), i) == weil.end()) weil.push_back(i);
    }
    std::sort(weil.begin(), weil.end());

    Fold small("weil-small-eigenspace", group_name(G)), large("weil-large-eigenspace", group_name(G));
    for (int c = 0; c < cls.count(); ++c) {
        auto [k1, k2] = fixed_space_dims(G.field(), G.element(cls.rep(c)), G.dim());
        const int e = std::max(k1, k2);
        for (int i : weil) {
            const Cyc& x = t.irr[i][c];
            const int64_t deg = degree(t, i);
            BoundReport r;
            r.param("e", istr(e));
            const std::string label = "chi" + istr(i) + " class" + istr(c);
            if (e <= 5) {
                // |chi(g)|^2 < chi(1)^{6/n}
                decide_abs2(
                    r, x, Relation::LT,
                    [&](mpfr_prec_t p) { return detail::ipow(Interval::integer(deg, p), exact(BigRational(6, n), p)); },
                    n >= 9);
                small.add(r, label);
            } else {
                bool gate = n >= 9 && centralizer_gate(cls.centralizer_order(c), q, n, delta);
                decide_abs2(
                    r, x, Relation::LT,
                    [&](mpfr_prec_t p) {
                        Interval ex = Interval::integer(9, p) * detail::isqrt(Interval::exact(delta, p)) / Interval::integer(4, p);
                        return detail::ipow(Interval::integer(deg, p), ex);
                    },
                    gate);
                large.add(r, label);
            }
        }
    }
    BoundReport s = small.result(), l = large.result();
    s.param("weil_characters", istr(static_cast<long long>(weil.size())));
    l.param("weil_characters", istr(static_cast<long long>(weil.size()))).param("delta", to_decimal(delta, 6));
    return {s, l};
}

Threshold spin_threshold(SpinCase c, int n, int q) {
    Threshold t;
    switch (c) {
        case SpinCase::SpinOdd:
            t.value = qpow(q, static_cast<long>(n) * (n + 1) / 2) / 4;
            t.min_n = 2;
            break;
        case SpinCase::SpinEven:
            t.value = qpow(q, static_cast<long>(n) * (n - 1) / 2) / 4;
            t.min_n = 3;
            break;
        case SpinCase::SOOdd:
            t.squared = qpow(q, static_cast<long>(n) * n);
            if (n % 2 == 0) t.value = qpow(q, static_cast<long>(n) * n / 2);
            t.min_n = 2;
            break;
        case SpinCase::SOEven:
            t.value = BigRational(q - 1) * qpow(q, static_cast<long>(n) * (n - 1) / 2 - 1);
            t.min_n = 4;
            break;
    }
    if (t.value) t.squared = *t.value * *t.value;
    return t;
}

std::vector<BoundReport> spin_reducibility_check(const CharacterTable& so, const SubgroupClasses& omega) {
    const GroupTable& G = so.group();
    const int d = G.dim(), q = G.q();
    const bool odd = d % 2 == 1;
    const int n = odd ? (d - 1) / 2 : d / 2;
    const Threshold th = spin_threshold(odd ? SpinCase::SOOdd : SpinCase::SOEven, n, q);
    const bool applicable = q % 2 == 1 && n >= th.min_n && family_of(G) == Family::SO;
    std::vector<BoundReport> out;
    int reducible = 0;
    for (int i = 0; i < so.size(); ++i) {
        ClassFunction r = restrict_to(so.irr[i], omega);
        if (inner(r, r) <= Rational(1)) continue;
        ++reducible;
        BoundReport rep;
        rep.id = odd ? "spin-so-odd-reducible" : "spin-so-even-reducible";
        rep.instance = group_name(G);
        rep.param("chi", istr(i)).param("degree", istr(degree(so, i))).param("n", istr(n));
        rep.note = "chi(1)^2 against the squared threshold " + to_decimal(th.squared, 12);
        if (!applicable) rep.note += "; outside the stated range";
        decide(rep, BigRational(degree(so, i)) * degree(so, i), Relation::GT, th.squared, applicable);
        out.push_back(rep);
    }
    if (reducible == 0) {
        BoundReport rep;
        rep.id = odd ? "spin-so-odd-reducible" : "spin-so-even-reducible";
        rep.instance = group_name(G);
        rep.note = "no irreducible character is reducible over the derived subgroup";
        decide(rep, 0, Relation::EQ, 0, false);
        out.push_back(rep);
    }
    return out;
}

}  // namespace cclab
