#include "cclab/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cclab {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int>(1LL * r * b % p);
        b = static_cast<int>(1LL * b * b % p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    Poly mm = m;
    trim(mm);
    int dm = static_cast<int>(mm.size()) - 1;
    int lead_inv = inv_mod(mm.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int c = static_cast<int>(1LL * a.back() * lead_inv % p);
        int shift = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * mm[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(r, m, p);
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, int64_t e, const Poly& m, int p) {
    Poly r{1};
    base = poly_mod(base, m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int FieldSpec::q() const {
    int r = 1;
    for (int i = 0; i < f; ++i) r *= p;
    return r;
}

bool poly_irreducible_mod_p(const std::vector<int>& monic, int p) {
    int deg = static_cast<int>(monic.size()) - 1;
    if (deg <= 1) return deg == 1;
    // gcd(x^(p^i) - x, f) = 1 for i <= deg/2
    Poly xp{0, 1};
    for (int i = 1; i <= deg / 2; ++i) {
        xp = poly_powmod(xp, p, monic, p);
        Poly t = xp;
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = (t[1] - 1 + p) % p;
        Poly g = poly_gcd(t, monic, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldSpec field_make(int p, int f) {
    if (!is_prime(p)) throw std::invalid_argument("field_make: " + std::to_string(p) + " is not prime");
    if (f < 1) throw std::invalid_argument("field_make: exponent must be positive");
    int64_t q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > (1 << 20)) throw std::invalid_argument("field_make: field larger than 2^20");
    }
    FieldSpec s;
    s.p = p;
    s.f = f;
    if (f == 1) {
        s.modulus = {0, 1};
        return s;
    }
    // enumerate the lower coefficients as a base-p counter whose most
    // significant digit is the x^(f-1) coefficient
    for (int64_t code = 0; code < q; ++code) {
        Poly m(f + 1, 0);
        m[f] = 1;
        int64_t c = code;
        for (int i = 0; i < f; ++i) {
            m[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (m[0] == 0) continue;
        if (poly_irreducible_mod_p(m, p)) {
            s.modulus = m;
            return s;
        }
    }
    throw std::logic_error("field_make: no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()) {
    const int p = spec_.p, f = spec_.f, q = q_;
    auto to_poly = [&](int a) {
        Poly r(f, 0);
        for (int i = 0; i < f; ++i) {
            r[i] = a % p;
            a /= p;
        }
        trim(r);
        return r;
    };
    auto from_poly = [&](const Poly& r) {
        int a = 0, w = 1;
        for (int i = 0; i < f; ++i) {
            if (i < static_cast<int>(r.size())) a += r[i] * w;
            w *= p;
        }
        return a;
    };
    Poly m(spec_.modulus.begin(), spec_.modulus.end());
    auto slow_mul = [&](int a, int b) {
        if (f == 1) return static_cast<int>(1LL * a * b % p);
        return from_poly(poly_mulmod(to_poly(a), to_poly(b), m, p));
    };

    neg_.resize(q);
    for (int a = 0; a < q; ++a) neg_[a] = add_digits(0, a, true);

    // smallest generator of the multiplicative group
    log_.assign(q, -1);
    exp_.assign(q - 1 > 0 ? q - 1 : 1, 1);
    if (q == 2) {
        primitive_ = 1;
        log_[1] = 0;
        exp_[0] = 1;
    } else {
        for (int g = 2; g < q; ++g) {
            std::vector<int> e(q - 1);
            int x = 1, k = 0;
            bool ok = true;
            for (k = 0; k < q - 1; ++k) {
                if (k > 0 && x == 1) {
                    ok = false;
                    break;
                }
                e[k] = x;
                x = slow_mul(x, g);
            }
            if (!ok || x != 1) continue;
            primitive_ = g;
            exp_ = e;
            for (int i = 0; i < q - 1; ++i) log_[exp_[i]] = i;
            break;
        }
    }
    inv_.assign(q, 0);
    for (int a = 1; a < q; ++a) inv_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];

    if (q <= 256) {
        add_.resize(static_cast<size_t>(q) * q);
        mul_.resize(static_cast<size_t>(q) * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = add_digits(a, b, false);
                int s = 0;
                if (a != 0 && b != 0) {
                    s = log_[a] + log_[b];
                    if (s >= q - 1) s -= q - 1;
                    s = exp_[s];
                }
                mul_[a * q + b] = s;
            }
    }

    trace_.resize(q);
    for (int a = 0; a < q; ++a) {
        int t = 0;
        for (int i = 0; i < f; ++i) t = add(t, frobenius(a, i));
        if (t >= p) throw std::logic_error("trace outside the prime field");
        trace_[a] = t;
    }
}

std::shared_ptr<const Field> Field::make(int p, int f) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto fld = std::make_shared<const Field>(field_make(p, f));
    cache[key] = fld;
    return fld;
}

int Field::add_digits(int a, int b, bool subtract) const {
    const int p = spec_.p;
    int r = 0, w = 1;
    for (int i = 0; i < spec_.f; ++i) {
        int da = a % p, db = b % p;
        a /= p;
        b /= p;
        int d = subtract ? (da - db + p) % p : (da + db) % p;
        r += d * w;
        w *= p;
    }
    return r;
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero in finite field");
    return inv_[a];
}

int Field::exp(int64_t k) const {
    int64_t n = q_ - 1;
    return exp_[((k % n) + n) % n];
}

int Field::pow(int a, int64_t e) const {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return 0;
    }
    int64_t n = q_ - 1;
    int64_t k = static_cast<int64_t>(log_[a]) * (((e % n) + n) % n) % n;
    return exp_[k];
}

int Field::frobenius(int a, int k) const {
    if (a == 0) return 0;
    int64_t e = 1;
    for (int i = 0; i < k; ++i) e *= spec_.p;
    return pow(a, e);
}

int Field::from_int(int64_t n) const {
    int64_t p = spec_.p;
    return static_cast<int>(((n % p) + p) % p);
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(spec_.f);
    for (int i = 0; i < spec_.f; ++i) {
        c[i] = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
    int a = 0, w = 1;
    for (int i = 0; i < spec_.f; ++i) {
        int ci = i < static_cast<int>(c.size()) ? ((c[i] % spec_.p) + spec_.p) % spec_.p : 0;
        a += ci * w;
        w *= spec_.p;
    }
    return a;
}

int Field::sqrt(int a) const {
    if (a == 0) return 0;
    if (spec_.p == 2) return frobenius(a, spec_.f - 1);
    if (log_[a] % 2 != 0) throw std::domain_error("sqrt of a nonsquare");
    int r = exp_[log_[a] / 2];
    // choose the representative with the smaller encoding
    return std::min(r, neg(r));
}

std::string Field::str(int a) const {
    if (spec_.f == 1) return std::to_string(a);
    if (a == 0) return "0";
    return "w^" + std::to_string(log_[a]);
}

}  // namespace cclab
