#include "cclab/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cclab {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

struct ModField {
    u64 l;
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= l ? s - l : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + l - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % l); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        if (a == 0) throw std::domain_error("modular inverse of zero");
        return pow(a, l - 2);
    }
    u64 from(int64_t x) const {
        int64_t m = static_cast<int64_t>(x % static_cast<int64_t>(l));
        return m < 0 ? static_cast<u64>(m + static_cast<int64_t>(l)) : static_cast<u64>(m);
    }
};

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    ModField F{n};
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = F.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = F.mul(x, x);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

u64 next_prime_1_mod(u64 e, u64 above) {
    u64 k = above / e + 1;
    while (!miller_rabin(k * e + 1)) ++k;
    return k * e + 1;
}

// element of exact order e in F_l (e | l-1)
u64 root_of_order(const ModField& F, u64 e) {
    u64 n = F.l - 1;
    std::vector<u64> primes;
    u64 m = n;
    for (u64 p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (u64 g = 2;; ++g) {
        bool prim = true;
        for (u64 p : primes)
            if (F.pow(g, n / p) == 1) {
                prim = false;
                break;
            }
        if (prim) return F.pow(g, n / e);
    }
}

using Poly = std::vector<u64>;  // low to high

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& m, const ModField& F) {
    ptrim(a);
    const size_t dm = m.size() - 1;
    u64 li = F.inv(m.back());
    while (a.size() >= m.size()) {
        u64 c = F.mul(a.back(), li);
        size_t sh = a.size() - m.size();
        for (size_t i = 0; i <= dm; ++i) a[sh + i] = F.sub(a[sh + i], F.mul(c, m[i]));
        ptrim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, const ModField& F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return pmod(r, m, F);
}

Poly pgcd(Poly a, Poly b, const ModField& F) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 li = F.inv(a.back());
        for (auto& x : a) x = F.mul(x, li);
    }
    return a;
}

Poly ppowmod(Poly base, u64 e, const Poly& m, const ModField& F) {
    Poly r{1};
    base = pmod(base, m, F);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, F);
        base = pmulmod(base, base, m, F);
        e >>= 1;
    }
    return r;
}

// distinct roots of a squarefree product of linear factors
void split_roots(const Poly& f, const ModField& F, std::mt19937_64& rng, std::vector<u64>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        out.push_back(F.sub(0, F.mul(f[0], F.inv(f[1]))));
        return;
    }
    while (true) {
        u64 a = rng() % F.l;
        Poly t = ppowmod(Poly{a, 1}, (F.l - 1) / 2, f, F);
        if (t.empty()) t = {0};
        t[0] = F.sub(t[0], 1);
        Poly g = pgcd(f, t, F);
        if (g.size() > 1 && g.size() < f.size()) {
            // f / g (g monic)
            const size_t dg = g.size() - 1;
            Poly q(f.size() - dg, 0), r = f;
            for (size_t i = f.size() - 1; i >= dg; --i) {
                u64 c = r[i];
                q[i - dg] = c;
                for (size_t j = 0; j <= dg; ++j) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g[j]));
                if (i == dg) break;
            }
            ptrim(q);
            split_roots(g, F, rng, out);
            split_roots(q, F, rng, out);
            return;
        }
    }
}

// Characteristic polynomial of a d x d matrix via Hessenberg reduction.
Poly charpoly(std::vector<u64> a, int n, const ModField& F) {
    auto A = [&](int i, int j) -> u64& { return a[static_cast<size_t>(i) * n + j]; };
    for (int m = 1; m < n - 1; ++m) {
        int piv = -1;
        for (int i = m; i < n; ++i)
            if (A(i, m - 1) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != m) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(m, j));
            for (int i = 0; i < n; ++i) std::swap(A(i, piv), A(i, m));
        }
        u64 inv = F.inv(A(m, m - 1));
        for (int i = m + 1; i < n; ++i) {
            u64 u = F.mul(A(i, m - 1), inv);
            if (u == 0) continue;
            for (int j = 0; j < n; ++j) A(i, j) = F.sub(A(i, j), F.mul(u, A(m, j)));
            for (int j = 0; j < n; ++j) A(j, m) = F.add(A(j, m), F.mul(u, A(j, i)));
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - a_{k-1,k-1}) p_{k-1} - sum ...
        Poly r(k + 1, 0);
        for (size_t i = 0; i < p[k - 1].size(); ++i) {
            r[i + 1] = F.add(r[i + 1], p[k - 1][i]);
            r[i] = F.sub(r[i], F.mul(A(k - 1, k - 1), p[k - 1][i]));
        }
        u64 t = 1;
        for (int i = 1; i < k; ++i) {
            t = F.mul(t, A(k - i, k - i - 1));
            u64 c = F.mul(t, A(k - i - 1, k - 1));
            for (size_t j = 0; j < p[k - i - 1].size(); ++j) r[j] = F.sub(r[j], F.mul(c, p[k - i - 1][j]));
        }
        p[k] = r;
    }
    return p[n];
}

// RREF in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<u64>>& rows, int cols, const ModField& F) {
    std::vector<int> piv;
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        u64 inv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u64 m = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(m, rows[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    return piv;
}

std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> rows, int cols, const ModField& F) {
    auto piv = rref(rows, cols, F);
    std::vector<char> isp(cols, 0);
    for (int c : piv) isp[c] = 1;
    std::vector<std::vector<u64>> basis;
    for (int fcol = 0; fcol < cols; ++fcol) {
        if (isp[fcol]) continue;
        std::vector<u64> v(cols, 0);
        v[fcol] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.sub(0, rows[r][fcol]);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Space {
    std::vector<std::vector<u64>> basis;  // RREF rows
    std::vector<int> pivots;
};

class SplitFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::vector<u64>> common_eigenvectors(const ClassPartition& cls, const ModField& F) {
    const int r = cls.count();
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<Space> done, todo;
    {
        Space all;
        for (int i = 0; i < r; ++i) {
            std::vector<u64> v(r, 0);
            v[i] = 1;
            all.basis.push_back(v);
            all.pivots.push_back(i);
        }
        if (r == 1) done.push_back(all);
        else todo.push_back(all);
    }
    for (int c = 1; c < r && !todo.empty(); ++c) {
        const auto& row = cls.mult_row(c);  // row[j*r + k] = a_{c j k}
        std::vector<Space> next;
        for (auto& sp : todo) {
            const int d = static_cast<int>(sp.basis.size());
            // images M b_t, with (M v)_j = sum_k a_{c j k} v_k
            std::vector<std::vector<u64>> img(d, std::vector<u64>(r, 0));
            for (int t = 0; t < d; ++t)
                for (int j = 0; j < r; ++j) {
                    u64 s = 0;
                    for (int k = 0; k < r; ++k) {
                        u64 v = sp.basis[t][k];
                        if (v == 0) continue;
                        int64_t a = row[static_cast<size_t>(j) * r + k];
                        if (a != 0) s = F.add(s, F.mul(F.from(a), v));
                    }
                    img[t][j] = s;
                }
            std::vector<u64> R(static_cast<size_t>(d) * d);
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t) R[static_cast<size_t>(s) * d + t] = img[t][sp.pivots[s]];
            Poly cp = charpoly(R, d, F);
            // distinct roots
            Poly xl = ppowmod(Poly{0, 1}, F.l, cp, F);
            xl.resize(std::max<size_t>(xl.size(), 2), 0);
            xl[1] = F.sub(xl[1], 1);
            Poly g = pgcd(cp, xl, F);
            std::vector<u64> roots;
            split_roots(g, F, rng, roots);
            std::sort(roots.begin(), roots.end());
            int total = 0;
            std::vector<Space> pieces;
            for (u64 lam : roots) {
                std::vector<std::vector<u64>> rows(d, std::vector<u64>(d));
                for (int s = 0; s < d; ++s)
                    for (int t = 0; t < d; ++t)
                        rows[s][t] = F.sub(R[static_cast<size_t>(s) * d + t], s == t ? lam : 0);
                auto ns = nullspace(rows, d, F);
                total += static_cast<int>(ns.size());
                Space piece;
                for (const auto& coeffs : ns) {
                    std::vector<u64> v(r, 0);
                    for (int t = 0; t < d; ++t)
                        if (coeffs[t] != 0)
                            for (int k = 0; k < r; ++k) v[k] = F.add(v[k], F.mul(coeffs[t], sp.basis[t][k]));
                    piece.basis.push_back(v);
                }
                piece.pivots = rref(piece.basis, r, F);
                pieces.push_back(std::move(piece));
            }
            if (total != d) throw SplitFailure("eigenspaces do not span");
            for (auto& pc : pieces) {
                if (pc.basis.size() == 1) done.push_back(std::move(pc));
                else next.push_back(std::move(pc));
            }
        }
        todo = std::move(next);
    }
    if (!todo.empty()) throw SplitFailure("class matrices do not separate the eigenspaces");
    std::vector<std::vector<u64>> vecs;
    for (auto& sp : done) vecs.push_back(sp.basis[0]);
    return vecs;
}

int64_t isqrt_exact(int64_t n) {
    if (n < 0) return -1;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

bool lex_less_fn(const ClassFunction& a, const ClassFunction& b) {
    for (int c = 0; c < a.size(); ++c) {
        if (lex_less(a[c], b[c])) return true;
        if (lex_less(b[c], a[c])) return false;
    }
    return false;
}

}  // namespace

TablePtr build_table(const ClassesPtr& clsp, int class_bound) {
    const ClassPartition& cls = *clsp;
    const int r = cls.count();
    if (r > class_bound)
        throw BudgetError("group has " + std::to_string(r) + " classes, above the bound " + std::to_string(class_bound));
    const int e = cls.exponent();
    const int64_t order = cls.group_order();
    u64 above = u64{1} << 31;
    for (int attempt = 0; attempt < 16; ++attempt) {
        u64 l = next_prime_1_mod(static_cast<u64>(e), above);
        above = l;
        ModField F{l};
        std::vector<std::vector<u64>> vecs;
        try {
            vecs = common_eigenvectors(cls, F);
        } catch (const SplitFailure&) {
            continue;
        }
        if (static_cast<int>(vecs.size()) != r) continue;
        const u64 z = root_of_order(F, static_cast<u64>(e));
        std::vector<u64> zpow(e);
        zpow[0] = 1;
        for (int k = 1; k < e; ++k) zpow[k] = F.mul(zpow[k - 1], z);

        auto tbl = std::make_shared<CharacterTable>();
        tbl->classes = clsp;
        tbl->exponent = e;
        tbl->modulus_used = l;
        bool ok = true;
        for (auto& w : vecs) {
            if (w[0] == 0) {
                ok = false;
                break;
            }
            u64 w0 = F.inv(w[0]);
            for (auto& x : w) x = F.mul(x, w0);
            u64 S = 0;
            for (int j = 0; j < r; ++j)
                S = F.add(S, F.mul(F.mul(w[j], w[cls.inverse_class(j)]), F.inv(F.from(cls.size(j)))));
            if (S == 0) {
                ok = false;
                break;
            }
            u64 d2 = F.mul(F.from(order), F.inv(S));
            int64_t d = d2 <= static_cast<u64>(order) ? isqrt_exact(static_cast<int64_t>(d2)) : -1;
            if (d <= 0 || order % d != 0) {
                ok = false;
                break;
            }
            std::vector<u64> chi(r);
            for (int j = 0; j < r; ++j) chi[j] = F.mul(F.mul(w[j], F.from(d)), F.inv(F.from(cls.size(j))));
            std::vector<Cyc> vals(r, Cyc(e));
            for (int j = 0; j < r && ok; ++j) {
                const int o = cls.element_order(j);
                const int step = e / o;
                u64 oinv = F.inv(F.from(o));
                int64_t total = 0;
                for (int k = 0; k < o; ++k) {
                    u64 s = 0;
                    for (int t = 0; t < o; ++t) {
                        int64_t ex = -static_cast<int64_t>(k) * t % o;
                        if (ex < 0) ex += o;
                        s = F.add(s, F.mul(chi[cls.power_class(j, t)], zpow[ex * step]));
                    }
                    u64 m = F.mul(s, oinv);
                    if (m > static_cast<u64>(d)) {
                        ok = false;
                        break;
                    }
                    total += static_cast<int64_t>(m);
                    if (m != 0) vals[j].add_power(static_cast<long>(k) * step, Rational(static_cast<int64_t>(m)));
                }
                if (total != d) ok = false;
            }
            if (!ok) break;
            tbl->irr.emplace_back(clsp, std::move(vals));
            tbl->degrees.push_back(d);
        }
        if (!ok) continue;
        // canonical order: degree, trivial first, then lexicographic values
        std::vector<int> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        auto is_trivial = [&](int i) {
            for (int c = 0; c < r; ++c)
                if (tbl->irr[i][c] != Cyc(e, Rational(1))) return false;
            return true;
        };
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            if (tbl->degrees[a] != tbl->degrees[b]) return tbl->degrees[a] < tbl->degrees[b];
            bool ta = is_trivial(a), tb = is_trivial(b);
            if (ta != tb) return ta;
            return lex_less_fn(tbl->irr[a], tbl->irr[b]);
        });
        auto sorted = std::make_shared<CharacterTable>();
        sorted->classes = clsp;
        sorted->exponent = e;
        sorted->modulus_used = l;
        for (int i : perm) {
            sorted->irr.push_back(tbl->irr[i]);
            sorted->degrees.push_back(tbl->degrees[i]);
        }
        for (int c = 0; c < r; ++c) sorted->centralizers.push_back(cls.centralizer_order(c));
        TableCheck chk = verify_table(*sorted);
        if (!chk.ok()) continue;
        return sorted;
    }
    throw std::logic_error("character table construction failed for every modulus tried");
}

TableCheck verify_table(const CharacterTable& t) {
    TableCheck chk;
    const auto& cls = *t.classes;
    const int r = cls.count();
    const int n = t.size();
    chk.count_matches = n == r;
    BigInt sum = 0;
    chk.degrees_divide = true;
    for (int i = 0; i < n; ++i) {
        sum += BigInt(t.degrees[i]) * t.degrees[i];
        if (t.degrees[i] <= 0 || cls.group_order() % t.degrees[i] != 0) chk.degrees_divide = false;
        if (t.irr[i][0] != Cyc(t.exponent, Rational(t.degrees[i]))) chk.degrees_divide = false;
    }
    chk.degree_sum = sum == BigInt(cls.group_order());
    chk.row_orthogonality = chk.count_matches;
    for (int i = 0; i < n && chk.row_orthogonality; ++i)
        for (int j = i; j < n; ++j)
            if (inner(t.irr[i], t.irr[j]) != Rational(i == j ? 1 : 0)) {
                chk.row_orthogonality = false;
                chk.detail = "row orthogonality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
    chk.column_orthogonality = chk.count_matches;
    for (int a = 0; a < r && chk.column_orthogonality; ++a)
        for (int b = a; b < r; ++b) {
            Cyc s(t.exponent);
            for (int i = 0; i < n; ++i) s += t.irr[i][a] * t.irr[i][b].conj();
            Cyc want(t.exponent, Rational(a == b ? cls.centralizer_order(a) : 0));
            if (s != want) {
                chk.column_orthogonality = false;
                chk.detail = "column orthogonality fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                break;
            }
        }
    return chk;
}

MultiplicityProfile profile(const ClassFunction& rho, const CharacterTable& t) {
    MultiplicityProfile p;
    for (int i = 0; i < t.size(); ++i) {
        Rational m = inner(rho, t.irr[i]);
        int64_t mi = 0;
        if (!m.is_integer()) {
            p.integral = false;
            p.is_character = false;
            mi = m.num() / m.den();
        } else {
            mi = m.num();
        }
        if (mi < 0) p.is_character = false;
        p.multiplicities.push_back(mi);
        p.sigma += mi;
        if (t.degrees[i] == 1) p.lambda += mi;
    }
    return p;
}

int trivial_index(const CharacterTable&) { return 0; }

}  // namespace cclab
