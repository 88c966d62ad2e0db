#include "cclab/level.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cclab {

namespace {

BigRational qpow(int q, long e) { return rpow(BigRational(q), e); }

std::string istr(long long v) { return std::to_string(v); }

BigRational to_big(const Rational& r) { return r.big(); }

bool positive(const Rational& r) { return r > Rational(0); }

}  // namespace

LevelCap level_cap(const GroupTable& G) {
    LevelCap c;
    const int q = G.q();
    const bool odd = q % 2 == 1;
    const int d = G.dim();
    bool symplectic = G.form().kind == FormKind::Symplectic;
    bool orthogonal = G.form().kind == FormKind::Quadratic;
    Family fam = G.has_spec() ? G.spec().family : Family::GL;
    if (G.has_spec() && fam == Family::SL && d == 2) symplectic = true;
    if (symplectic) {
        c.n = d / 2;
        if (odd) {
            c.scope = LevelScope::SymplecticOdd;
            c.cap = 2 * c.n + 1;
        } else {
            c.scope = LevelScope::SymplecticEven;
            c.cap = c.n + 1;
        }
    } else if (orthogonal) {
        c.scope = LevelScope::Orthogonal;
        c.n = d;
        c.cap = d / 2 + 1;
        if (G.has_spec() && ((odd && (fam == Family::SO || fam == Family::Omega)) || (!odd && fam == Family::Omega)))
            c.sharp_cap = d / 2;
    }
    return c;
}

LevelSweep compute_levels(const TablePtr& table) {
    LevelSweep s;
    s.table = table;
    const ClassesPtr& cls = table->classes;
    s.cap = level_cap(*cls->group());
    if (s.cap.scope == LevelScope::None) throw std::invalid_argument("levels are defined for symplectic and orthogonal groups only");
    s.theta = theta_character(cls);
    const int top = s.cap.cap + 2;
    s.powers.push_back(ClassFunction::trivial(cls));
    for (int k = 1; k <= top; ++k) s.powers.push_back(s.powers.back() * s.theta);

    const int r = table->size();
    std::vector<std::vector<Rational>> mult(r, std::vector<Rational>(top + 1));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k <= top; ++k) mult[i][k] = inner(s.powers[k], table->irr[i]);

    s.levels.resize(r);
    std::ostringstream bad;
    for (int i = 0; i < r; ++i) {
        s.levels[i].character = i;
        for (int k = 0; k <= top; ++k)
            if (positive(mult[i][k])) {
                s.levels[i].level = k;
                s.levels[i].multiplicity = mult[i][k];
                break;
            }
        for (int k = 0; k + 2 <= top; ++k)
            if (positive(mult[i][k]) && !positive(mult[i][k + 2])) {
                s.monotone = false;
                bad << "chi" << i << " k=" << k << "; ";
            }
    }
    s.monotone_detail = bad.str();
    return s;
}

BoundReport level_range_check(const LevelSweep& sweep) {
    BoundReport r;
    r.id = "level-range";
    r.instance = sweep.table->group().label();
    int worst = 0;
    bool missing = false;
    for (const auto& l : sweep.levels) {
        if (l.level < 0) missing = true;
        worst = std::max(worst, l.level);
    }
    const int cap = sweep.cap.sharp_cap >= 0 ? sweep.cap.sharp_cap : sweep.cap.cap;
    r.param("cap", istr(sweep.cap.cap));
    if (sweep.cap.sharp_cap >= 0) r.param("sharp_cap", istr(sweep.cap.sharp_cap));
    r.param("max_level", istr(worst));
    decide(r, BigRational(worst), Relation::LE, BigRational(cap));
    if (missing) {
        r.verdict = Verdict::Fail;
        r.note = "some character was not reached by Theta powers";
    }
    if (!sweep.monotone) r.note += " monotonicity violated: " + sweep.monotone_detail;
    return r;
}

BoundReport theta_value_check(const LevelSweep& sweep) {
    BoundReport r;
    r.id = "theta-values";
    r.instance = sweep.table->group().label();
    const auto& cls = *sweep.table->classes;
    const int q = sweep.table->group().q();
    std::set<BigRational> allowed{BigRational(0)};
    const auto& cap = sweep.cap;
    if (cap.scope == LevelScope::SymplecticOdd) {
        for (int i = 0; i < cap.n; ++i) {
            allowed.insert(2 * qpow(q, i));
            allowed.insert(-2 * qpow(q, i));
        }
        allowed.insert(2 * qpow(q, cap.n));
    } else {
        const int dim = sweep.table->group().dim();
        for (int d = dim % 2; d <= dim; d += 2) allowed.insert(2 * qpow(q, d));
    }
    int violations = 0;
    std::ostringstream note;
    const Cyc& one = sweep.theta[0];
    for (int c = 0; c < cls.count(); ++c) {
        const Cyc& v = sweep.theta[c];
        if (!v.is_rational() || !allowed.count(v.rational_value().big())) {
            ++violations;
            note << "class " << c << " value " << v.str() << "; ";
        } else if (c != 0 && v == one) {
            ++violations;
            note << "class " << c << " attains Theta(1); ";
        }
    }
    r.param("classes", istr(cls.count()));
    r.param("allowed_values", istr(static_cast<long long>(allowed.size())));
    decide(r, BigRational(violations), Relation::EQ, BigRational(0));
    r.note = note.str();
    return r;
}

std::optional<BigRational> bound_sp_odd(int n, int k, int q) {
    if (n < 1 || k < 0 || q % 2 == 0) return std::nullopt;
    if (k == 0) return BigRational(1);
    return qpow(q, static_cast<long>(n) * k - static_cast<long>(k) * (k + 1) / 2) * rpow(BigRational(q - 1, 2), k);
}

std::optional<BigRational> bound_sp_even(int n, int k, int q) {
    if (n < 1 || k < 0 || q % 2 == 1) return std::nullopt;
    if (k == 0) return BigRational(1);
    return qpow(q, 2L * n * k - static_cast<long>(k) * (2 * k + 1)) *
           rpow(BigRational((q - 1) * (q - 1), 2), k);
}

std::optional<BigRational> bound_orthogonal(int n, int k, int q) {
    if (n < 4 || k < 0) return std::nullopt;
    if (k == 0) return BigRational(1);
    const int g = q % 2 == 1 ? 2 : 1;
    if (n == 4 && k == 1) return BigRational(q - 1, g);
    if (n == 5 && k == 1) return BigRational(q * q - 1, 2);
    if (n == 8 && k == 2) return qpow(q, 4) * BigRational((q - 1) * (q - 1), g);
    if (n == 9 && k == 2) return qpow(q, 5) * BigRational(static_cast<int64_t>(q * q - 1) * (q - 1), 2);
    if (n < 6) return std::nullopt;
    return qpow(q, static_cast<long>(n) * k - 2L * k * (k + 1)) * rpow(BigRational(q - 1), k);
}

namespace {
BigRational orthogonal_general(int n, int k, int q) {
    if (k == 0) return BigRational(1);
    return qpow(q, static_cast<long>(n) * k - 2L * k * (k + 1)) * rpow(BigRational(q - 1), k);
}
}  // namespace

BigRational upper_sp_odd(int n, int l, int q) { return rpow((qpow(q, n) + 1) / 2, l); }
BigRational upper_sp_even(int n, int l, int q) { return rpow((qpow(q, 2 * n) - 1) / (q - 1), l); }
BigRational upper_orthogonal(int n, int l, int q) { return rpow((qpow(q, n) - 1) / (q - 1), l); }

std::vector<BoundReport> degree_level_check(const LevelSweep& sweep) {
    std::vector<BoundReport> out;
    const auto& t = *sweep.table;
    const GroupTable& G = t.group();
    const int q = G.q();
    const auto& cap = sweep.cap;
    bool applicable = false;
    switch (cap.scope) {
        case LevelScope::SymplecticOdd: applicable = cap.n >= 1; break;
        case LevelScope::SymplecticEven: applicable = cap.n >= 2; break;
        case LevelScope::Orthogonal:
            applicable = G.has_spec() && G.spec().family == Family::Omega && cap.n >= 6 &&
                         !(q == 2 && (cap.n == 8 || cap.n == 9));
            break;
        case LevelScope::None: break;
    }
    for (int i = 0; i < t.size(); ++i) {
        const int l = sweep.levels[i].level;
        const int k = (l + 2) / 3;
        BigRational lo, hi;
        switch (cap.scope) {
            case LevelScope::SymplecticOdd:
                lo = *bound_sp_odd(cap.n, k, q);
                hi = upper_sp_odd(cap.n, l, q);
                break;
            case LevelScope::SymplecticEven:
                lo = *bound_sp_even(cap.n, k, q);
                hi = upper_sp_even(cap.n, l, q);
                break;
            default:
                lo = orthogonal_general(cap.n, k, q);
                hi = upper_orthogonal(cap.n, l, q);
                break;
        }
        const BigRational deg(t.degrees[i]);
        BoundReport a;
        a.id = "degree-lower-by-level";
        a.instance = G.label();
        a.param("chi", istr(i)).param("level", istr(l)).param("k", istr(k));
        decide(a, deg, Relation::GE, lo, applicable && l >= 0);
        BoundReport b;
        b.id = "degree-upper-by-level";
        b.instance = G.label();
        b.param("chi", istr(i)).param("level", istr(l));
        decide(b, deg, Relation::LE, hi, applicable && l >= 0);
        if (l < 0) a.verdict = b.verdict = Verdict::Fail;
        out.push_back(std::move(a));
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BoundReport> degree_contrapositive_check(const LevelSweep& sweep, int kmax) {
    std::vector<BoundReport> out;
    const auto& t = *sweep.table;
    const GroupTable& G = t.group();
    const int q = G.q();
    const auto& cap = sweep.cap;
    for (int k = 1; k <= kmax; ++k) {
        std::optional<BigRational> b;
        bool applicable = false;
        switch (cap.scope) {
            case LevelScope::SymplecticOdd:
                b = bound_sp_odd(cap.n, k, q);
                applicable = true;
                break;
            case LevelScope::SymplecticEven:
                b = bound_sp_even(cap.n, k, q);
                applicable = cap.n >= 2;
                break;
            case LevelScope::Orthogonal:
                b = bound_orthogonal(cap.n, k, q);
                applicable = G.has_spec() && G.spec().family == Family::Omega && cap.n >= 6;
                break;
            case LevelScope::None: break;
        }
        BoundReport r;
        r.id = "small-degree-small-level";
        r.instance = G.label();
        r.param("k", istr(k));
        if (!b) {
            r.note = "bound undefined for these parameters";
            decide(r, BigRational(0), Relation::EQ, BigRational(0), false);
            out.push_back(std::move(r));
            continue;
        }
        int violations = 0;
        int below = 0;
        for (int i = 0; i < t.size(); ++i) {
            if (BigRational(t.degrees[i]) < *b) {
                ++below;
                if (sweep.levels[i].level < 0 || sweep.levels[i].level > 3 * (k - 1)) ++violations;
            }
        }
        r.param("bound", to_decimal(*b)).param("characters_below", istr(below));
        decide(r, BigRational(violations), Relation::EQ, BigRational(0), applicable);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

RankSetup make_rank_setup(const ClassesPtr& cls) {
    const GroupTable& G = *cls->group();
    const Field& F = G.field();
    if (G.form().kind != FormKind::Quadratic) throw std::invalid_argument("U-rank needs an orthogonal group");
    if (F.p() == 2) throw std::invalid_argument("U-rank is defined in odd characteristic only");
    RankSetup rs;
    rs.classes = cls;
    rs.n = G.form().witt_index;
    const int d = G.dim();
    const int n = rs.n;
    const int q = F.q();
    for (int j = 1; j <= n; ++j) {
        const int free = j * (j - 1) / 2;
        int64_t count = 1;
        for (int i = 0; i < free; ++i) count *= q;
        std::vector<int> ids;
        std::vector<std::vector<int>> params;
        std::vector<std::vector<int>> ys;
        std::vector<int> ranks;
        for (int64_t code = 0; code < count; ++code) {
            std::vector<int> X(j * j, 0);
            int64_t c = code;
            for (int a = 0; a < j; ++a)
                for (int b = a + 1; b < j; ++b) {
                    int v = static_cast<int>(c % q);
                    c /= q;
                    X[a * j + b] = v;
                    X[b * j + a] = F.neg(v);
                }
            Mat g = mat_identity(d);
            for (int a = 0; a < j; ++a)
                for (int b = 0; b < j; ++b) g[a * d + n + b] = X[a * j + b];
            int id = G.find(g);
            if (id < 0) throw std::logic_error("radical center element missing from the group");
            ids.push_back(id);
            params.push_back(X);
            ys.push_back(X);
            ranks.push_back(rank_rect(F, X, j, j));
        }
        rs.center_ids.push_back(std::move(ids));
        rs.center_params.push_back(std::move(params));
        rs.ys.push_back(std::move(ys));
        rs.y_ranks.push_back(std::move(ranks));
    }
    return rs;
}

namespace {

// value of lambda_Y at [I_j, X]: zeta_p^Tr(tr(XY))
int lambda_exponent(const Field& F, const std::vector<int>& X, const std::vector<int>& Y, int j) {
    int t = 0;
    for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) t = F.add(t, F.mul(X[a * j + b], Y[b * j + a]));
    return F.trace(t);
}

Rational rational_or_throw(const Cyc& x, const char* what) {
    if (!x.is_rational()) throw std::logic_error(std::string(what) + ": value is not rational");
    return x.rational_value();
}

}  // namespace

Rational center_multiplicity(const RankSetup& rs, const ClassFunction& chi, int j, int y_index) {
    const GroupTable& G = *rs.classes->group();
    const Field& F = G.field();
    const int p = F.p();
    const auto& ids = rs.center_ids[j - 1];
    const auto& Y = rs.ys[j - 1][y_index];
    Cyc s(1);
    for (size_t x = 0; x < ids.size(); ++x) {
        int t = lambda_exponent(F, rs.center_params[j - 1][x], Y, j);
        s += chi[rs.classes->class_of(ids[x])] * Cyc::zeta(p, (p - t) % p);
    }
    return rational_or_throw(s, "center multiplicity") / Rational(static_cast<int64_t>(ids.size()));
}

RankResult urank(const RankSetup& rs, const ClassFunction& chi) {
    RankResult r;
    r.rank_by_j.assign(rs.n, -1);
    for (int j = 1; j <= rs.n; ++j) {
        for (size_t y = 0; y < rs.ys[j - 1].size(); ++y) {
            const int rk = rs.y_ranks[j - 1][y];
            if (rk <= r.rank_by_j[j - 1]) continue;
            if (positive(center_multiplicity(rs, chi, j, static_cast<int>(y)))) {
                r.rank_by_j[j - 1] = rk;
                if (rk > r.rank || r.y_index < 0) {
                    r.rank = rk;
                    r.j = j;
                    r.y_index = static_cast<int>(y);
                }
            }
        }
    }
    return r;
}

RankLevelReport rank_level_checks(const LevelSweep& sweep, const RankSetup& rs) {
    RankLevelReport out;
    const auto& t = *sweep.table;
    const GroupTable& G = t.group();
    const int q = G.field().q();
    const int n = rs.n;
    const bool is_so = G.has_spec() && G.spec().family == Family::SO;
    const bool split = is_so && G.dim() == 2 * n;

    for (int i = 0; i < t.size(); ++i) out.ranks.push_back(urank(rs, t.irr[i]));

    for (int i = 0; i < t.size(); ++i) {
        const int l = sweep.levels[i].level;
        const int rk = out.ranks[i].rank;
        BoundReport r;
        r.id = "rank-vs-level";
        r.instance = G.label();
        r.param("chi", istr(i)).param("rank", istr(rk)).param("level", istr(l));
        decide(r, BigRational(rk), Relation::LE, BigRational(std::min(2 * l, n)), is_so && l >= 0);
        if (rk % 2 != 0) {
            r.verdict = Verdict::Fail;
            r.note = "odd rank";
        }
        out.reports.push_back(std::move(r));
    }

    const ClassFunction tau = tau_character(rs.classes);
    {
        BoundReport r;
        r.id = "rank-of-tau";
        r.instance = G.label();
        int rk = urank(rs, tau).rank;
        decide(r, BigRational(rk), Relation::EQ, BigRational(2), split && n >= 2);
        out.reports.push_back(std::move(r));
    }

    // multiplicity of each rank-2r character of Z(U_2r) in tau^r
    ClassFunction tau_r = ClassFunction::trivial(rs.classes);
    for (int r = 1; 2 * r <= n; ++r) {
        tau_r *= tau;
        const int j = 2 * r;
        GroupSpec sp{Family::Sp, 2 * r, q, 0};
        BigRational expected = qpow(q, 2L * r * (n - 2 * r)) * BigRational(group_order(sp));
        for (size_t y = 0; y < rs.ys[j - 1].size(); ++y) {
            if (rs.y_ranks[j - 1][y] != j) continue;
            BoundReport rep;
            rep.id = "radical-multiplicity-in-tau-power";
            rep.instance = G.label();
            rep.param("r", istr(r)).param("j", istr(j)).param("y", istr(static_cast<long long>(y)));
            decide(rep, to_big(center_multiplicity(rs, tau_r, j, static_cast<int>(y))), Relation::EQ, expected, split);
            out.reports.push_back(std::move(rep));
        }
    }

    // additivity on products with k + l <= n
    {
        int pairs = 0, bad = 0;
        std::ostringstream note;
        for (int a = 0; a < t.size(); ++a)
            for (int b = a; b < t.size(); ++b) {
                const int k = out.ranks[a].rank, l = out.ranks[b].rank;
                if (k + l > n) continue;
                ++pairs;
                int got = urank(rs, t.irr[a] * t.irr[b]).rank;
                if (got != k + l) {
                    ++bad;
                    note << "(" << a << "," << b << ") ";
                }
            }
        BoundReport r;
        r.id = "rank-additivity";
        r.instance = G.label();
        r.param("pairs", istr(pairs));
        decide(r, BigRational(bad), Relation::EQ, BigRational(0), split);
        r.note = note.str();
        out.reports.push_back(std::move(r));
    }

    // rank seen on P_l, on P_n and on the standard SO+_{2l}
    {
        int bad = 0;
        for (int i = 0; i < t.size(); ++i) {
            const auto& rr = out.ranks[i];
            const int l = rr.rank;
            if (l == 0) continue;
            int on_small = 0;
            for (int j = 1; j <= l; ++j) on_small = std::max(on_small, rr.rank_by_j[j - 1]);
            if (rr.rank_by_j[l - 1] != l || rr.rank_by_j[n - 1] != l || on_small != l) ++bad;
        }
        BoundReport r;
        r.id = "rank-on-parabolics";
        r.instance = G.label();
        decide(r, BigRational(bad), Relation::EQ, BigRational(0), split);
        out.reports.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

DualPairAnalysis dual_pair_analysis(const DualPair& dp, const LevelSweep& g_levels, const RankSetup& g_rank,
                                    const CharacterTable& s_table) {
    DualPairAnalysis a;
    const auto& gt = *g_levels.table;
    const GroupTable& G = gt.group();
    a.r = s_table.group().dim() / 2;
    const int n = g_rank.n;
    const bool applicable = G.has_spec() && G.spec().family == Family::SO && G.dim() == 2 * n && 2 * a.r <= n;
    const int q = G.field().q();

    BigRational dim_sum = 0;
    for (int i = 0; i < s_table.size(); ++i) {
        const ClassFunction& alpha = s_table.irr[i];
        ClassFunction D = dual_pair_component(dp, alpha);
        MultiplicityProfile prof = profile(D, gt);
        ClassFunction low(gt.classes), top(gt.classes);
        bool top_char = true, top_levels = true;
        for (int c = 0; c < gt.size(); ++c) {
            const int64_t m = prof.multiplicities[c];
            if (m == 0) continue;
            ClassFunction part = gt.irr[c] * Rational(m);
            if (g_levels.levels[c].level >= 0 && g_levels.levels[c].level <= a.r - 1) {
                low += part;
            } else {
                top += part;
                if (m < 0) top_char = false;
                if (g_levels.levels[c].level != a.r) top_levels = false;
            }
        }
        int top_rank = top.is_zero() ? -1 : urank(g_rank, top).rank;
        dim_sum += rational_or_throw(D[0], "D(1)").big() * BigRational(s_table.degrees[i]);

        BoundReport rc;
        rc.id = "dual-pair-component-is-character";
        rc.instance = G.label();
        rc.param("alpha", istr(i)).param("sigma", istr(prof.sigma));
        int64_t min_mult = 0;
        for (auto m : prof.multiplicities) min_mult = std::min(min_mult, m);
        decide(rc, BigRational(min_mult), Relation::GE, BigRational(0), applicable);
        if (!prof.integral) rc.verdict = Verdict::Fail;
        a.reports.push_back(rc);

        BoundReport rl;
        rl.id = "dual-pair-top-part-levels";
        rl.instance = G.label();
        rl.param("alpha", istr(i));
        decide(rl, BigRational(top_char && top_levels && !top.is_zero() ? 1 : 0), Relation::EQ, BigRational(1),
               applicable);
        if (top.is_zero()) rl.note = "top part is zero";
        a.reports.push_back(rl);

        BoundReport rr;
        rr.id = "dual-pair-top-part-rank";
        rr.instance = G.label();
        rr.param("alpha", istr(i));
        decide(rr, BigRational(top_rank), Relation::EQ, BigRational(2 * a.r), applicable);
        a.reports.push_back(rr);

        a.D.push_back(std::move(D));
        a.profiles.push_back(std::move(prof));
        a.D_low.push_back(std::move(low));
        a.D_top.push_back(std::move(top));
        a.top_is_character.push_back(top_char);
        a.top_levels_equal_r.push_back(top_levels);
        a.top_max_rank.push_back(top_rank);
    }

    BoundReport rd;
    rd.id = "dual-pair-dimension";
    rd.instance = G.label();
    decide(rd, dim_sum, Relation::EQ, qpow(q, static_cast<long>(dp.gamma_dim) / 2), true);
    a.reports.push_back(rd);

    ClassFunction tau = tau_character(gt.classes);
    ClassFunction tau_r = ClassFunction::trivial(gt.classes);
    for (int i = 0; i < a.r; ++i) tau_r *= tau;
    a.restriction_is_tau_power = dual_pair_restriction_to_G(dp) == tau_r;
    BoundReport rt;
    rt.id = "weil-restriction-is-tau-power";
    rt.instance = G.label();
    rt.param("r", istr(a.r));
    decide(rt, BigRational(a.restriction_is_tau_power ? 1 : 0), Relation::EQ, BigRational(1), true);
    a.reports.push_back(rt);
    return a;
}

std::vector<BoundReport> so_regular_check(const DualPair& dp, const RankSetup& g_rank, const CharacterTable& s_table) {
    std::vector<BoundReport> out;
    const GroupTable& G = *dp.G->group();
    const Field& F = G.field();
    const int p = F.p();
    const int n = g_rank.n;
    const int r = s_table.group().dim() / 2;
    const auto& Sc = *dp.S;
    const auto& ids = g_rank.center_ids[n - 1];
    const auto& params = g_rank.center_params[n - 1];

    // omega(u, s) for u in U and one s per class of S
    std::vector<std::vector<Cyc>> w(ids.size());
    for (size_t u = 0; u < ids.size(); ++u)
        for (int c = 0; c < Sc.count(); ++c) w[u].push_back(dp.omega(ids[u], Sc.rep(c)));

    const Rational denom(static_cast<int64_t>(ids.size()) * Sc.group_order());
    for (size_t y = 0; y < g_rank.ys[n - 1].size(); ++y) {
        const int rk = g_rank.y_ranks[n - 1][y];
        const bool hyp = rk == 2 * r;
        const auto& Y = g_rank.ys[n - 1][y];
        std::vector<Cyc> lam_conj;
        for (size_t u = 0; u < ids.size(); ++u) {
            int t = lambda_exponent(F, params[u], Y, n);
            lam_conj.push_back(Cyc::zeta(p, (p - t) % p));
        }
        Cyc on_u(1);
        for (size_t u = 0; u < ids.size(); ++u) on_u += w[u][0] * lam_conj[u];
        Rational mult_u = rational_or_throw(on_u, "U multiplicity") / Rational(static_cast<int64_t>(ids.size()));
        BoundReport ru;
        ru.id = "siegel-character-multiplicity";
        ru.instance = G.label();
        ru.param("y", istr(static_cast<long long>(y))).param("rank", istr(rk));
        decide(ru, mult_u.big(), Relation::GE, BigRational(Sc.group_order()), hyp);
        out.push_back(ru);

        int64_t deficient = 0;
        std::ostringstream note;
        for (int i = 0; i < s_table.size(); ++i) {
            const ClassFunction& alpha = s_table.irr[i];
            Cyc s(1);
            for (size_t u = 0; u < ids.size(); ++u)
                for (int c = 0; c < Sc.count(); ++c)
                    s += w[u][c] * lam_conj[u] * alpha[c].conj() * Rational(Sc.size(c));
            Rational m = rational_or_throw(s, "U x S multiplicity") / denom;
            if (m < Rational(s_table.degrees[i])) {
                ++deficient;
                note << "alpha" << i << " mult " << m.str() << "; ";
            }
        }
        BoundReport rs;
        rs.id = "siegel-contains-regular";
        rs.instance = G.label();
        rs.param("y", istr(static_cast<long long>(y))).param("rank", istr(rk)).param("r", istr(r));
        decide(rs, BigRational(deficient), Relation::EQ, BigRational(0), hyp);
        rs.note = hyp ? note.str() : "rank differs from 2r; outside the hypothesis";
        out.push_back(rs);
    }
    return out;
}

}  // namespace cclab
