#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cclab/cyclotomic.hpp"
#include "cclab/rational.hpp"

namespace cclab {

std::string to_decimal(const BigRational& r, int sig_digits) {
    if (r == 0) return "0";
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    // scale so that the integer part carries sig_digits digits
    int exp10 = 0;
    BigInt ten = 10;
    while (num >= den * ipow(ten, static_cast<unsigned>(sig_digits))) {
        den *= 10;
        ++exp10;
    }
    while (num < den * ipow(ten, static_cast<unsigned>(sig_digits - 1))) {
        num *= 10;
        --exp10;
    }
    BigInt q = (2 * num + den) / (2 * den);  // round half up
    if (q >= ipow(ten, static_cast<unsigned>(sig_digits))) {
        q /= 10;
        ++exp10;
    }
    std::string digits = q.str();
    // value = digits * 10^exp10
    int point = static_cast<int>(digits.size()) + exp10;
    std::string out;
    if (point > 21 || point < -6) {
        out = digits.substr(0, 1);
        std::string rest = digits.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) out += "." + rest;
        out += "e" + std::to_string(point - 1);
    } else if (point <= 0) {
        out = "0." + std::string(-point, '0') + digits;
        while (out.back() == '0') out.pop_back();
    } else if (point >= static_cast<int>(digits.size())) {
        out = digits + std::string(point - digits.size(), '0');
    } else {
        out = digits.substr(0, point) + "." + digits.substr(point);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r = 1, x = b;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

BigRational rpow(const BigRational& b, long e) {
    if (e >= 0) {
        BigRational r = 1, x = b;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= x;
            x *= x;
            k >>= 1;
        }
        return r;
    }
    if (b == 0) throw std::domain_error("zero to a negative power");
    return 1 / rpow(b, -e);
}

BigRational parse_rational(const std::string& text) {
    std::string s = text;
    auto fail = [&]() { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (s.empty()) throw fail();
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    auto digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string body = s.substr(i);
    BigRational r;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string a = body.substr(0, slash), b = body.substr(slash + 1);
        if (!digits(a) || !digits(b)) throw fail();
        BigInt den(b);
        if (den == 0) throw fail();
        r = BigRational(BigInt(a), den);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string a = body.substr(0, dot), b = body.substr(dot + 1);
        if (a.empty()) a = "0";
        if (!digits(a) || (!b.empty() && !digits(b)) || (b.empty() && body.size() == 1)) throw fail();
        r = BigRational(BigInt(a));
        if (!b.empty()) r += BigRational(BigInt(b), ipow(BigInt(10), static_cast<unsigned>(b.size())));
    } else {
        if (!digits(body)) throw fail();
        r = BigRational(BigInt(body));
    }
    return neg ? -r : r;
}

int euler_phi(int e) {
    int r = e, n = e;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<int64_t>;

Poly poly_div_exact(Poly num, const Poly& den) {
    // den monic
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    Poly q(nn - dn + 1, 0);
    for (int i = nn; i >= dn; --i) {
        int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (int i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

const Poly& compute_cyclotomic(int e, std::map<int, Poly>& memo) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Poly p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = poly_div_exact(p, compute_cyclotomic(d, memo));
    return memo[e] = p;
}

}  // namespace

const CycloBasis& CycloBasis::get(int e) {
    if (e <= 0) throw std::invalid_argument("cyclotomic order must be positive");
    // bases are never freed, so a per-thread pointer cache avoids the lock
    thread_local std::map<int, const CycloBasis*> local;
    if (auto hit = local.find(e); hit != local.end()) return *hit->second;
    const CycloBasis& b = get_locked(e);
    local.emplace(e, &b);
    return b;
}

const CycloBasis& CycloBasis::get_locked(int e) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloBasis>> cache;
    static std::map<int, Poly> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return *it->second;
    auto b = std::make_unique<CycloBasis>();
    b->e = e;
    b->cyclotomic_poly = compute_cyclotomic(e, memo);
    b->phi = static_cast<int>(b->cyclotomic_poly.size()) - 1;
    const int phi = b->phi;
    b->power.assign(e, std::vector<int64_t>(phi, 0));
    std::vector<int64_t> cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < e; ++k) {
        b->power[k] = cur;
        // multiply by x
        int64_t top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) cur[i] = detail::checked_sub(cur[i], detail::checked_mul(top, b->cyclotomic_poly[i]));
    }
    const CycloBasis& ref = *b;
    cache[e] = std::move(b);
    return ref;
}

BigCyc to_big(const Cyc& x) {
    BigCyc r(x.order());
    for (int i = 0; i < x.degree(); ++i)
        if (!x.coeff(i).is_zero()) r.coeff_mut(i) = x.coeff(i).big();
    return r;
}

Cyc descend(const Cyc& x, int d) {
    const int e = x.order();
    if (e % d != 0) throw std::invalid_argument("descend: d must divide the order");
    if (d == e) return x;
    const int pe = x.degree();
    const int pd = euler_phi(d);
    const int step = e / d;
    // augmented system: columns = images of zeta_d^i, rhs = x
    std::vector<std::vector<Rational>> m(pe, std::vector<Rational>(pd + 1));
    for (int i = 0; i < pd; ++i) {
        Cyc v = Cyc::zeta(e, static_cast<long>(i) * step);
        for (int r = 0; r < pe; ++r) m[r][i] = v.coeff(r);
    }
    for (int r = 0; r < pe; ++r) m[r][pd] = x.coeff(r);
    int row = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < pd && row < pe; ++col) {
        int piv = -1;
        for (int r = row; r < pe; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (int r = 0; r < pe; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c <= pd; ++c) m[r][c] -= f * m[row][c];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (int r = row; r < pe; ++r)
        if (!m[r][pd].is_zero()) throw std::domain_error("descend: value not in subfield");
    Cyc y(d);
    for (int i = 0; i < row; ++i) {
        if (m[i][pd].is_zero()) continue;
        y.add_power(pivcol[i], m[i][pd]);
    }
    return y;
}

int conductor_order(const Cyc& x) {
    const int e = x.order();
    for (int d = 1; d <= e; ++d) {
        if (e % d) continue;
        try {
            (void)descend(x, d);
            return d;
        } catch (const std::domain_error&) {
        }
    }
    return e;
}

}  // namespace cclab
