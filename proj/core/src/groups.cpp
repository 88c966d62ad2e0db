#include "cclab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cclab {

namespace {

uint64_t hash_bytes(const uint8_t* b, int len) {
    uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
    }
    h ^= h >> 31;
    h *= 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    return h;
}

// Growable open-addressing set of fixed-length byte strings.
class ByteSet {
public:
    explicit ByteSet(int len) : len_(len) { rehash(1024); }

    // returns (id, inserted)
    std::pair<int, bool> insert(const uint8_t* b) {
        if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
        uint64_t h = hash_bytes(b, len_) & mask_;
        while (true) {
            int32_t s = slots_[h];
            if (s < 0) break;
            if (std::memcmp(data_.data() + static_cast<size_t>(s) * len_, b, len_) == 0) return {s, false};
            h = (h + 1) & mask_;
        }
        int id = static_cast<int>(count_++);
        data_.insert(data_.end(), b, b + len_);
        slots_[h] = id;
        return {id, true};
    }
    int find(const uint8_t* b) const {
        uint64_t h = hash_bytes(b, len_) & mask_;
        while (true) {
            int32_t s = slots_[h];
            if (s < 0) return -1;
            if (std::memcmp(data_.data() + static_cast<size_t>(s) * len_, b, len_) == 0) return s;
            h = (h + 1) & mask_;
        }
    }
    size_t size() const { return count_; }
    const uint8_t* at(int id) const { return data_.data() + static_cast<size_t>(id) * len_; }
    std::vector<uint8_t>& data() { return data_; }

private:
    void rehash(size_t n) {
        slots_.assign(n, -1);
        mask_ = n - 1;
        for (size_t id = 0; id < count_; ++id) {
            uint64_t h = hash_bytes(at(static_cast<int>(id)), len_) & mask_;
            while (slots_[h] >= 0) h = (h + 1) & mask_;
            slots_[h] = static_cast<int32_t>(id);
        }
    }

    int len_;
    size_t count_ = 0;
    std::vector<uint8_t> data_;
    std::vector<int32_t> slots_;
    uint64_t mask_ = 0;
};

std::vector<uint8_t> to_bytes(const Mat& m) {
    std::vector<uint8_t> b(m.size());
    for (size_t i = 0; i < m.size(); ++i) b[i] = static_cast<uint8_t>(m[i]);
    return b;
}

BigInt bpow(int64_t q, int64_t e) { return ipow(BigInt(q), static_cast<unsigned>(e)); }

std::pair<int, int> prime_power(int q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int f = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++f;
    }
    if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, f};
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "GL";
        case Family::SL: return "SL";
        case Family::GU: return "GU";
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::GO: return "O";
        case Family::SO: return "SO";
        case Family::Omega: return "Omega";
    }
    return "?";
}

std::string GroupSpec::str() const {
    std::string s = family_name(family);
    if (orthogonal() && dim % 2 == 0) s += sign > 0 ? "+" : "-";
    return s + "(" + std::to_string(dim) + "," + std::to_string(q) + ")";
}

int GroupSpec::witt_index() const {
    if (family == Family::Sp) return dim / 2;
    if (orthogonal()) return (dim % 2 == 0 && sign < 0) ? dim / 2 - 1 : dim / 2;
    return 0;
}

void GroupSpec::validate() const {
    auto [p, f] = prime_power(q);
    (void)f;
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (unitary() ? q * q > 256 : q > 256) throw std::invalid_argument("field too large for byte-encoded matrices");
    if (dim > 16) throw std::invalid_argument("dimension too large");
    switch (family) {
        case Family::Sp:
            if (dim % 2 != 0) throw std::invalid_argument("Sp requires even dimension");
            if (sign != 0) throw std::invalid_argument("Sp takes no type sign");
            break;
        case Family::GO:
        case Family::SO:
        case Family::Omega:
            if (dim % 2 == 1) {
                if (p == 2) throw std::invalid_argument("odd-dimensional orthogonal groups require odd q");
                if (sign != 0) throw std::invalid_argument("odd-dimensional orthogonal groups take no type sign");
            } else if (sign != 1 && sign != -1) {
                throw std::invalid_argument("even-dimensional orthogonal groups need a type sign + or -");
            }
            if (family == Family::Omega && p != 2 && dim < 3)
                throw std::invalid_argument("Omega is only supported in dimension >= 3 for odd q");
            break;
        default:
            if (sign != 0) throw std::invalid_argument(family_name(family) + " takes no type sign");
    }
}

BigInt group_order(const GroupSpec& s) {
    s.validate();
    const int64_t q = s.q;
    const int n = s.dim;
    BigInt r = 1;
    switch (s.family) {
        case Family::GL:
        case Family::SL:
            r = bpow(q, static_cast<int64_t>(n) * (n - 1) / 2);
            for (int i = 1; i <= n; ++i) r *= bpow(q, i) - 1;
            if (s.family == Family::SL) r /= (q - 1);
            return r;
        case Family::GU:
        case Family::SU:
            r = bpow(q, static_cast<int64_t>(n) * (n - 1) / 2);
            for (int i = 1; i <= n; ++i) r *= bpow(q, i) - (i % 2 ? -1 : 1);
            if (s.family == Family::SU) r /= (q + 1);
            return r;
        case Family::Sp: {
            int m = n / 2;
            r = bpow(q, static_cast<int64_t>(m) * m);
            for (int i = 1; i <= m; ++i) r *= bpow(q, 2 * i) - 1;
            return r;
        }
        default: break;
    }
    const bool even_q = q % 2 == 0;
    if (n % 2 == 1) {
        int m = n / 2;
        r = 2 * bpow(q, static_cast<int64_t>(m) * m);
        for (int i = 1; i <= m; ++i) r *= bpow(q, 2 * i) - 1;
    } else {
        int m = n / 2;
        r = 2 * bpow(q, static_cast<int64_t>(m) * (m - 1)) * (bpow(q, m) - s.sign);
        for (int i = 1; i < m; ++i) r *= bpow(q, 2 * i) - 1;
    }
    if (s.family == Family::GO) return r;
    if (s.family == Family::SO) return even_q ? r : r / 2;
    return even_q ? r / 2 : r / 4;
}

FormSpec standard_form(const GroupSpec& s, const Field& F) {
    FormSpec fs;
    const int n = s.dim;
    fs.dim = n;
    fs.gram = mat_zero(n);
    if (s.family == Family::GL || s.family == Family::SL) {
        fs.kind = FormKind::None;
        fs.gram = mat_identity(n);
        return fs;
    }
    if (s.unitary()) {
        fs.kind = FormKind::Hermitian;
        fs.gram = mat_identity(n);
        return fs;
    }
    fs.witt_index = s.witt_index();
    const int m = fs.witt_index;
    if (s.family == Family::Sp) {
        fs.kind = FormKind::Symplectic;
        for (int i = 0; i < m; ++i) {
            fs.gram[i * n + (m + i)] = 1;
            fs.gram[(m + i) * n + i] = F.neg(1);
        }
        return fs;
    }
    fs.kind = FormKind::Quadratic;
    fs.quad.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        fs.gram[i * n + (m + i)] = 1;
        fs.gram[(m + i) * n + i] = 1;
    }
    const bool even_q = F.p() == 2;
    if (n % 2 == 1) {
        fs.gram[(n - 1) * n + (n - 1)] = 1;
        fs.quad[n - 1] = F.inv(F.from_int(2));
    } else if (s.sign < 0) {
        int a = n - 2, b = n - 1;
        if (even_q) {
            int c = 1;
            for (int x = 1; x < F.q(); ++x)
                if (F.trace(x) == 1) {
                    c = x;
                    break;
                }
            fs.gram[a * n + b] = 1;
            fs.gram[b * n + a] = 1;
            fs.quad[a] = 1;
            fs.quad[b] = c;
        } else {
            int nu = 0;
            for (int x = 1; x < F.q(); ++x)
                if (!F.is_square(x)) {
                    nu = x;
                    break;
                }
            int half = F.inv(F.from_int(2));
            fs.gram[a * n + a] = 1;
            fs.gram[b * n + b] = F.neg(nu);
            fs.quad[a] = half;
            fs.quad[b] = F.mul(half, F.neg(nu));
        }
    }
    return fs;
}

int quad_value(const Field& F, const FormSpec& form, const std::vector<int>& x) {
    const int n = form.dim;
    int s = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        s = F.add(s, F.mul(form.quad[i], F.mul(x[i], x[i])));
        for (int j = i + 1; j < n; ++j)
            if (x[j] != 0 && form.gram[i * n + j] != 0) s = F.add(s, F.mul(form.gram[i * n + j], F.mul(x[i], x[j])));
    }
    return s;
}

bool preserves_form(const Field& F, const FormSpec& form, const Mat& g, int q_base) {
    const int n = form.dim;
    if (form.kind == FormKind::None) return mat_det(F, g, n) != 0;
    Mat gt = mat_transpose(g, n);
    if (form.kind == FormKind::Hermitian) {
        int k = 0;
        for (int t = 1; t < q_base; t *= F.p()) ++k;
        gt = mat_frobenius(F, gt, k);
    }
    if (mat_mul(F, mat_mul(F, gt, form.gram, n), g, n) != form.gram) return false;
    if (form.kind == FormKind::Quadratic && F.p() == 2) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> col(n);
            for (int r = 0; r < n; ++r) col[r] = g[r * n + i];
            if (quad_value(F, form, col) != form.quad[i]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

GroupTable::GroupTable(std::string label, FieldPtr field, int dim, FormSpec form, int q_base)
    : label_(std::move(label)), field_(std::move(field)), dim_(dim), form_(std::move(form)), q_(q_base) {}

Mat GroupTable::element(int id) const {
    const uint8_t* b = bytes(id);
    return Mat(b, b + entries());
}

int GroupTable::find_bytes(const uint8_t* b) const {
    const int len = entries();
    uint64_t h = hash_bytes(b, len) & mask_;
    while (true) {
        int32_t s = slots_[h];
        if (s < 0) return -1;
        if (std::memcmp(bytes(s), b, len) == 0) return s;
        h = (h + 1) & mask_;
    }
}

int GroupTable::find(const Mat& m) const {
    if (static_cast<int>(m.size()) != entries()) return -1;
    auto b = to_bytes(m);
    return find_bytes(b.data());
}

void GroupTable::mul_bytes(const uint8_t* a, const uint8_t* b, uint8_t* out) const {
    const int n = dim_;
    const Field& F = *field_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) {
                int x = a[i * n + k], y = b[k * n + j];
                if (x && y) s = F.add(s, F.mul(x, y));
            }
            out[i * n + j] = static_cast<uint8_t>(s);
        }
}

int GroupTable::mul(int a, int b) const {
    uint8_t buf[256];
    mul_bytes(bytes(a), bytes(b), buf);
    int r = find_bytes(buf);
    if (r < 0) throw std::logic_error("group table not closed under multiplication");
    return r;
}

int GroupTable::pow(int a, int64_t e) const {
    int64_t o = element_order(a);
    e = ((e % o) + o) % o;
    int r = 0, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

int GroupTable::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

void GroupTable::build_index() {
    size_t n = 1;
    while (n < 2 * count_ + 2) n <<= 1;
    slots_.assign(n, -1);
    mask_ = n - 1;
    for (size_t id = 0; id < count_; ++id) {
        uint64_t h = hash_bytes(bytes(static_cast<int>(id)), entries()) & mask_;
        while (slots_[h] >= 0) h = (h + 1) & mask_;
        slots_[h] = static_cast<int32_t>(id);
    }
}

void GroupTable::build_inverses() {
    inverse_.assign(count_, -1);
    for (size_t id = 0; id < count_; ++id) {
        if (inverse_[id] >= 0) continue;
        Mat inv = mat_inverse(*field_, element(static_cast<int>(id)), dim_);
        int j = find(inv);
        if (j < 0) throw std::logic_error("group table not closed under inverses");
        inverse_[id] = j;
        inverse_[j] = static_cast<int>(id);
    }
}

namespace {

// Deterministic order: identity first, then lexicographic bytes.
void canonical_sort(std::vector<uint8_t>& data, size_t count, int len) {
    std::vector<uint8_t> ident(len, 0);
    int n = 0;
    while (n * n < len) ++n;
    for (int i = 0; i < n; ++i) ident[i * n + i] = 1;
    std::vector<size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    const uint8_t* base = data.data();
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const uint8_t* pa = base + a * len;
        const uint8_t* pb = base + b * len;
        bool ia = std::memcmp(pa, ident.data(), len) == 0, ib = std::memcmp(pb, ident.data(), len) == 0;
        if (ia != ib) return ia;
        return std::memcmp(pa, pb, len) < 0;
    });
    std::vector<uint8_t> out(count * len);
    for (size_t i = 0; i < count; ++i) std::memcpy(out.data() + i * len, base + order[i] * len, len);
    data.swap(out);
}

}  // namespace

struct GroupBuilder {
    static std::shared_ptr<GroupTable> finish(std::shared_ptr<GroupTable> g, std::vector<uint8_t> data, size_t count,
                                              const std::vector<Mat>& gens) {
        canonical_sort(data, count, g->entries());
        g->data_ = std::move(data);
        g->count_ = count;
        g->build_index();
        g->build_inverses();
        std::vector<int> ids;
        for (const auto& m : gens) {
            int id = g->find(m);
            if (id > 0 && std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
        g->gens_ = ids;
        return g;
    }
};

std::shared_ptr<GroupTable> GroupTable::from_generators(std::string label, FieldPtr field, int dim, FormSpec form,
                                                        int q_base, const std::vector<Mat>& gens, size_t budget) {
    auto g = std::make_shared<GroupTable>(std::move(label), std::move(field), dim, std::move(form), q_base);
    const int len = dim * dim;
    ByteSet set(len);
    auto ident = to_bytes(mat_identity(dim));
    set.insert(ident.data());
    std::vector<std::vector<uint8_t>> gb;
    for (const auto& m : gens) gb.push_back(to_bytes(m));
    std::vector<uint8_t> buf(len);
    for (size_t head = 0; head < set.size(); ++head) {
        for (const auto& s : gb) {
            // copy: insert may reallocate the backing store
            std::vector<uint8_t> cur(set.at(static_cast<int>(head)), set.at(static_cast<int>(head)) + len);
            g->mul_bytes(cur.data(), s.data(), buf.data());
            set.insert(buf.data());
            if (set.size() > budget)
                throw TooLargeError("group " + g->label() + " exceeds the enumeration budget of " +
                                    std::to_string(budget) + " elements");
        }
    }
    size_t count = set.size();
    return GroupBuilder::finish(g, std::move(set.data()), count, gens);
}

std::shared_ptr<GroupTable> GroupTable::from_elements(std::string label, FieldPtr field, int dim, FormSpec form,
                                                      int q_base, std::vector<Mat> elems) {
    auto g = std::make_shared<GroupTable>(std::move(label), std::move(field), dim, std::move(form), q_base);
    ByteSet set(dim * dim);
    for (const auto& m : elems) {
        auto b = to_bytes(m);
        set.insert(b.data());
    }
    size_t count = set.size();
    return GroupBuilder::finish(g, std::move(set.data()), count, {});
}

namespace {

// Closure of a set of ids inside an enumerated group.
std::vector<char> closure_ids(const GroupTable& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
        for (int s : gens) {
            int x = G.mul(queue[h], s);
            if (!in[x]) {
                in[x] = 1;
                queue.push_back(x);
            }
        }
    return in;
}

// Greedy: keep a candidate when it is not in the span of those kept so far.
std::vector<int> reduce_generators(const GroupTable& G, const std::vector<int>& candidates, int target_order) {
    std::vector<int> kept;
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    int size = 1;
    for (int c : candidates) {
        if (size == target_order) break;
        if (in[c]) continue;
        kept.push_back(c);
        in = closure_ids(G, kept);
        size = static_cast<int>(std::count(in.begin(), in.end(), 1));
    }
    return kept;
}

std::vector<int> element_ids_where(const GroupTable& G, const std::function<bool(int)>& pred) {
    std::vector<int> r;
    for (int i = 0; i < G.order(); ++i)
        if (pred(i)) r.push_back(i);
    return r;
}

}  // namespace


Subgroup subgroup_from_ids(const GroupPtr& parent, std::vector<int> ids, std::string label) {
    std::vector<Mat> elems;
    elems.reserve(ids.size());
    for (int id : ids) elems.push_back(parent->element(id));
    auto H = GroupTable::from_elements(std::move(label), parent->field_ptr(), parent->dim(), parent->form(),
                                       parent->q(), std::move(elems));
    Subgroup s;
    s.embed.resize(H->order());
    for (int i = 0; i < H->order(); ++i) {
        int pid = parent->find(H->element(i));
        if (pid < 0) throw std::logic_error("subgroup element missing from parent");
        s.embed[i] = pid;
    }
    std::vector<int> all(H->order() - 1);
    std::iota(all.begin(), all.end(), 1);
    H->set_generators(reduce_generators(*H, all, H->order()));
    s.group = H;
    return s;
}

Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& gens, std::string label) {
    auto in = closure_ids(*parent, gens);
    return subgroup_from_ids(parent, element_ids_where(*parent, [&](int i) { return in[i] != 0; }), std::move(label));
}

Subgroup derived_subgroup(const GroupPtr& parent) {
    const GroupTable& G = *parent;
    const auto& S = G.generators();
    std::vector<int> comm;
    for (size_t a = 0; a < S.size(); ++a)
        for (size_t b = a + 1; b < S.size(); ++b) {
            int x = S[a], y = S[b];
            int c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
            if (c != 0) comm.push_back(c);
        }
    // normal closure
    std::vector<char> in = closure_ids(G, comm);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> extra;
        for (int c : comm)
            for (int s : S) {
                int d = G.mul(G.mul(G.inv(s), c), s);
                if (!in[d]) extra.push_back(d);
            }
        if (!extra.empty()) {
            comm.insert(comm.end(), extra.begin(), extra.end());
            in = closure_ids(G, comm);
            changed = true;
        }
    }
    std::string label = "[" + G.label() + "," + G.label() + "]";
    return subgroup_from_ids(parent, element_ids_where(G, [&](int i) { return in[i] != 0; }), label);
}

Subgroup fix_basis_vectors(const GroupPtr& parent, const std::vector<int>& idx, std::string label) {
    const int n = parent->dim();
    auto ids = element_ids_where(*parent, [&](int id) {
        const uint8_t* b = parent->bytes(id);
        for (int c : idx)
            for (int r = 0; r < n; ++r)
                if (b[r * n + c] != (r == c ? 1 : 0)) return false;
        return true;
    });
    return subgroup_from_ids(parent, std::move(ids), std::move(label));
}

namespace {

// g maps span(coords in `from`) into span(coords in `to`)
bool maps_span(const uint8_t* b, int n, const std::vector<int>& from, const std::vector<char>& to) {
    for (int c : from)
        for (int r = 0; r < n; ++r)
            if (!to[r] && b[r * n + c] != 0) return false;
    return true;
}

}  // namespace

Subgroup siegel_levi(const GroupPtr& parent) {
    const int n = parent->dim();
    const int m = parent->form().witt_index;
    std::vector<int> X, Xp;
    std::vector<char> inX(n, 0), inXp(n, 0);
    for (int i = 0; i < m; ++i) {
        X.push_back(i);
        inX[i] = 1;
        Xp.push_back(m + i);
        inXp[m + i] = 1;
    }
    auto ids = element_ids_where(*parent, [&](int id) {
        const uint8_t* b = parent->bytes(id);
        return maps_span(b, n, X, inX) && maps_span(b, n, Xp, inXp);
    });
    return subgroup_from_ids(parent, std::move(ids), "Levi(" + parent->label() + ")");
}

ParabolicData parabolic(const GroupPtr& Gp, int j) {
    const GroupTable& G = *Gp;
    const int n = G.dim();
    const int m = G.form().witt_index;
    if (j < 1 || j > m) throw std::invalid_argument("parabolic: j must lie in [1, Witt index]");
    const Field& F = G.field();
    const bool symplectic = G.form().kind == FormKind::Symplectic;
    std::vector<int> X, Xp, Xperp;
    std::vector<char> inX(n, 0), inXp(n, 0), inXperp(n, 1);
    for (int i = 0; i < j; ++i) {
        X.push_back(i);
        inX[i] = 1;
        Xp.push_back(m + i);
        inXp[m + i] = 1;
        inXperp[m + i] = 0;
    }
    for (int i = 0; i < n; ++i)
        if (inXperp[i]) Xperp.push_back(i);

    ParabolicData pd;
    pd.j = j;
    for (int id = 0; id < G.order(); ++id) {
        const uint8_t* b = G.bytes(id);
        if (!maps_span(b, n, X, inX)) continue;
        pd.P.push_back(id);
        if (maps_span(b, n, Xp, inXp)) pd.L.push_back(id);
        // unipotent radical: trivial on X, X^perp/X and V/X^perp
        bool u = true;
        for (int c = 0; c < n && u; ++c)
            for (int r = 0; r < n; ++r) {
                int v = b[r * n + c];
                if (r == c) v = F.sub(v, 1);
                if (v == 0) continue;
                if (inX[c]) u = false;
                else if (inXperp[c] && !inX[r]) u = false;
                else if (!inXperp[c] && !inXperp[r]) u = false;
                if (!u) break;
            }
        if (u) pd.U.push_back(id);
    }

    // Z(U_j) by block shape
    const int p = F.p();
    std::vector<std::pair<int, int>> free;
    for (int a = 0; a < j; ++a)
        for (int c = symplectic ? a : a + 1; c < j; ++c) free.emplace_back(a, c);
    int64_t total = 1;
    for (size_t k = 0; k < free.size(); ++k) total *= G.field().q();
    (void)p;
    for (int64_t code = 0; code < total; ++code) {
        std::vector<int> Xm(j * j, 0);
        int64_t c = code;
        for (auto [a, b] : free) {
            int v = static_cast<int>(c % F.q());
            c /= F.q();
            Xm[a * j + b] = v;
            Xm[b * j + a] = symplectic ? v : F.neg(v);
        }
        Mat g = mat_identity(n);
        for (int k = 0; k < j; ++k)
            for (int i = 0; i < j; ++i) g[i * n + (m + k)] = Xm[i * j + k];
        int id = G.find(g);
        if (id < 0) throw std::logic_error("parabolic: block-shape element not in group");
        pd.z_params.push_back(Xm);
        pd.z_ids.push_back(id);
    }
    pd.Z = pd.z_ids;
    std::sort(pd.Z.begin(), pd.Z.end());
    return pd;
}

std::pair<int, int> fixed_space_dims(const Field& F, const Mat& g, int n) {
    return {eigenspace_dim(F, g, n, 1), eigenspace_dim(F, g, n, F.neg(1))};
}

// ---------------------------------------------------------------------------
// Standard generators

namespace {

std::vector<int> field_basis_elements(const Field& F) {
    std::vector<int> r;
    for (int i = 0; i < F.f(); ++i) r.push_back(F.pow(F.primitive(), i));
    return r;
}

std::vector<Mat> gl_generators(const Field& F, int n, bool special) {
    std::vector<Mat> g;
    for (int i = 0; i + 1 < n; ++i)
        for (int a : field_basis_elements(F)) {
            Mat t = mat_identity(n);
            t[i * n + i + 1] = a;
            g.push_back(t);
            Mat u = mat_identity(n);
            u[(i + 1) * n + i] = a;
            g.push_back(u);
        }
    if (!special && F.q() > 2) {
        Mat d = mat_identity(n);
        d[0] = F.primitive();
        g.push_back(d);
    }
    return g;
}

std::vector<Mat> sp_generators(const Field& F, int m) {
    const int n = 2 * m;
    std::vector<Mat> g;
    for (const Mat& M : gl_generators(F, m, false)) {
        Mat Mit = mat_transpose(mat_inverse(F, M, m), m);
        Mat x = mat_zero(n);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                x[i * n + k] = M[i * m + k];
                x[(m + i) * n + (m + k)] = Mit[i * m + k];
            }
        g.push_back(x);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
            for (int c : field_basis_elements(F)) {
                Mat x = mat_identity(n);
                x[a * n + (m + b)] = c;
                x[b * n + (m + a)] = c;
                g.push_back(x);
            }
    Mat w = mat_zero(n);
    for (int i = 0; i < m; ++i) {
        w[i * n + (m + i)] = 1;
        w[(m + i) * n + i] = F.neg(1);
    }
    g.push_back(w);
    return g;
}

std::vector<Mat> gu_generators(const Field& F, int n, int q) {
    // norm-one scalars: lambda^(q+1) = 1
    int lam = F.pow(F.primitive(), q - 1);
    if (n == 1) return {Mat{lam}};
    auto conj = [&](int x) { return F.pow(x, q); };
    auto norm = [&](int x) { return F.mul(x, conj(x)); };
    std::vector<Mat> u2;
    const int Q = F.q();
    std::vector<int> units;
    for (int k = 0; k <= q; ++k) units.push_back(F.pow(lam, k));
    for (int a = 0; a < Q; ++a)
        for (int c = 0; c < Q; ++c) {
            if (F.add(norm(a), norm(c)) != 1) continue;
            for (int l : units) u2.push_back(Mat{a, F.neg(F.mul(l, conj(c))), c, F.mul(l, conj(a))});
        }
    // greedy small generating set of GU(2, q)
    std::vector<Mat> kept;
    {
        ByteSet span(4);
        auto id2 = to_bytes(mat_identity(2));
        span.insert(id2.data());
        for (const auto& cand : u2) {
            auto cb = to_bytes(cand);
            if (span.find(cb.data()) >= 0) continue;
            kept.push_back(cand);
            ByteSet ns(4);
            ns.insert(id2.data());
            for (size_t h = 0; h < ns.size(); ++h)
                for (const auto& s : kept) {
                    Mat cur(ns.at(static_cast<int>(h)), ns.at(static_cast<int>(h)) + 4);
                    auto prod = to_bytes(mat_mul(F, cur, s, 2));
                    ns.insert(prod.data());
                }
            span = std::move(ns);
            if (static_cast<int64_t>(span.size()) == static_cast<int64_t>(q) * (q * q - 1) * (q + 1)) break;
        }
    }
    std::vector<Mat> g;
    for (const auto& k : kept) {
        Mat x = mat_identity(n);
        x[0] = k[0];
        x[1] = k[1];
        x[n] = k[2];
        x[n + 1] = k[3];
        g.push_back(x);
    }
    for (int i = 0; i + 1 < n; ++i) {
        Mat t = mat_identity(n);
        t[i * n + i] = 0;
        t[(i + 1) * n + (i + 1)] = 0;
        t[i * n + i + 1] = 1;
        t[(i + 1) * n + i] = 1;
        g.push_back(t);
    }
    return g;
}

// Reflections (q odd) or orthogonal transvections (q even) in nonsingular
// vectors of support at most `support`.
std::vector<Mat> reflection_generators(const Field& F, const FormSpec& form, int support) {
    const int n = form.dim;
    std::vector<Mat> g;
    const bool even_q = F.p() == 2;
    std::vector<int> v(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            if (used == 0) return;
            int first = 0;
            while (v[first] == 0) ++first;
            if (v[first] != 1) return;  // projective normalization
            int Qv = quad_value(F, form, v);
            if (Qv == 0) return;
            Mat r = mat_identity(n);
            // r(x) = x - B(x,v)/Q(v) * v ; for q odd B(v,v) = 2Q(v)
            std::vector<int> Bv = mat_vec(F, mat_transpose(form.gram, n), v, n);  // Bv[c] = B(e_c, v)
            int qinv = F.inv(Qv);
            for (int c = 0; c < n; ++c) {
                int coef = F.mul(Bv[c], qinv);
                if (coef == 0) continue;
                for (int r0 = 0; r0 < n; ++r0) r[r0 * n + c] = F.sub(r[r0 * n + c], F.mul(coef, v[r0]));
            }
            (void)even_q;
            g.push_back(r);
            return;
        }
        v[pos] = 0;
        rec(pos + 1, used);
        if (used < support)
            for (int a = 1; a < F.q(); ++a) {
                v[pos] = a;
                rec(pos + 1, used + 1);
            }
        v[pos] = 0;
    };
    rec(0, 0);
    return g;
}

std::vector<Mat> brute_force_isometries(const Field& F, const FormSpec& form, int q_base) {
    const int n = form.dim;
    const int64_t total = static_cast<int64_t>(std::pow(static_cast<double>(F.q()), n * n));
    if (total > (int64_t{1} << 24)) throw std::logic_error("generator search failed and brute force is too large");
    std::vector<Mat> out;
    Mat g(n * n);
    for (int64_t code = 0; code < total; ++code) {
        int64_t c = code;
        for (int i = 0; i < n * n; ++i) {
            g[i] = static_cast<int>(c % F.q());
            c /= F.q();
        }
        if (mat_det(F, g, n) != 0 && preserves_form(F, form, g, q_base)) out.push_back(g);
    }
    return out;
}

// Subgroup kernel of a homomorphism-valued key; generators via Schreier.
std::shared_ptr<GroupTable> kernel_subgroup(const GroupTable& G, const std::function<int(int)>& key,
                                            const std::string& label, int expected) {
    const int k0 = key(0);
    std::vector<Mat> elems;
    for (int i = 0; i < G.order(); ++i)
        if (key(i) == k0) elems.push_back(G.element(i));
    // coset transversal keyed by key value
    std::map<int, int> rep{{k0, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int s : G.generators()) {
            int x = G.mul(t, s);
            int kx = key(x);
            if (!rep.count(kx)) {
                rep[kx] = x;
                queue.push_back(x);
            }
        }
    }
    std::vector<Mat> schreier;
    for (auto [kv, t] : rep) {
        (void)kv;
        for (int s : G.generators()) {
            int ts = G.mul(t, s);
            int g = G.mul(ts, G.inv(rep.at(key(ts))));
            if (g != 0) schreier.push_back(G.element(g));
        }
    }
    auto H = GroupTable::from_elements(label, G.field_ptr(), G.dim(), G.form(), G.q(), elems);
    std::vector<int> cand;
    for (const auto& m : schreier) {
        int id = H->find(m);
        if (id < 0) throw std::logic_error("Schreier generator outside kernel");
        if (std::find(cand.begin(), cand.end(), id) == cand.end()) cand.push_back(id);
    }
    H->set_generators(reduce_generators(*H, cand, expected));
    return H;
}

std::shared_ptr<GroupTable> finalize(std::shared_ptr<GroupTable> g, const GroupSpec& spec) {
    g->set_spec(spec);
    BigInt expected = group_order(spec);
    if (BigInt(g->order()) != expected)
        throw std::logic_error("enumeration of " + spec.str() + " gave " + std::to_string(g->order()) +
                               " elements, expected " + expected.str());
    return g;
}

}  // namespace

GroupPtr enumerate(const GroupSpec& spec, size_t budget) {
    spec.validate();
    BigInt expected = group_order(spec);
    if (expected > BigInt(budget))
        throw TooLargeError(spec.str() + " has order " + expected.str() + ", above the enumeration budget " +
                            std::to_string(budget));
    auto [p, f] = prime_power(spec.q);
    const bool unit = spec.unitary();
    FieldPtr F = Field::make(p, unit ? 2 * f : f);
    FormSpec form = standard_form(spec, *F);
    const int n = spec.dim;
    const std::string label = spec.str();

    auto shrink = [&](std::shared_ptr<GroupTable> g) {
        int ord = g->order();
        g->set_generators(reduce_generators(*g, g->generators(), ord));
        return g;
    };

    switch (spec.family) {
        case Family::GL:
        case Family::SL: {
            auto g = GroupTable::from_generators(label, F, n, form, spec.q,
                                                 gl_generators(*F, n, spec.family == Family::SL), budget);
            return finalize(shrink(g), spec);
        }
        case Family::Sp: {
            auto g = GroupTable::from_generators(label, F, n, form, spec.q, sp_generators(*F, n / 2), budget);
            return finalize(shrink(g), spec);
        }
        case Family::GU:
        case Family::SU: {
            GroupSpec gs = spec;
            gs.family = Family::GU;
            if (group_order(gs) > BigInt(budget)) throw TooLargeError("GU parent exceeds the enumeration budget");
            auto gu = GroupTable::from_generators(gs.str(), F, n, form, spec.q, gu_generators(*F, n, spec.q), budget);
            if (BigInt(gu->order()) != group_order(gs)) {
                // block generators can miss part of GU for tiny q; fall back to a direct search
                gu = GroupTable::from_elements(gs.str(), F, n, form, spec.q, brute_force_isometries(*F, form, spec.q));
                std::vector<int> all(gu->order() - 1);
                std::iota(all.begin(), all.end(), 1);
                gu->set_generators(all);
            }
            gu = shrink(gu);
            if (spec.family == Family::GU) return finalize(gu, spec);
            gu->set_spec(gs);
            auto key = [&](int id) { return mat_det(*F, gu->element(id), n); };
            int exp = static_cast<int>(static_cast<int64_t>(expected));
            return finalize(kernel_subgroup(*gu, key, label, exp), spec);
        }
        default: break;
    }

    // orthogonal families
    GroupSpec gos = spec;
    gos.family = Family::GO;
    BigInt go_order = group_order(gos);
    if (go_order > BigInt(budget)) throw TooLargeError("full isometry group exceeds the enumeration budget");
    std::shared_ptr<GroupTable> go;
    for (int support = 2; support <= n; ++support) {
        go = GroupTable::from_generators(gos.str(), F, n, form, spec.q, reflection_generators(*F, form, support),
                                         budget);
        if (BigInt(go->order()) == go_order) break;
    }
    if (BigInt(go->order()) != go_order)
        go = GroupTable::from_elements(gos.str(), F, n, form, spec.q, brute_force_isometries(*F, form, spec.q));
    {
        std::vector<int> all;
        if (go->generators().empty()) {
            all.resize(go->order() - 1);
            std::iota(all.begin(), all.end(), 1);
        } else {
            all = go->generators();
        }
        go->set_generators(reduce_generators(*go, all, go->order()));
    }
    go->set_spec(gos);
    if (BigInt(go->order()) != go_order) throw std::logic_error("orthogonal group enumeration failed");
    if (spec.family == Family::GO) return go;

    const bool even_q = p == 2;
    const int exp = static_cast<int>(static_cast<int64_t>(expected));
    if (spec.family == Family::SO) {
        if (even_q) {
            // SO is taken to be the full isometry group in characteristic 2
            auto so = GroupTable::from_elements(label, F, n, form, spec.q, [&] {
                std::vector<Mat> e;
                for (int i = 0; i < go->order(); ++i) e.push_back(go->element(i));
                return e;
            }());
            std::vector<int> gens;
            for (int gid : go->generators()) gens.push_back(so->find(go->element(gid)));
            so->set_generators(gens);
            return finalize(so, spec);
        }
        auto key = [&](int id) { return mat_det(*F, go->element(id), n); };
        return finalize(kernel_subgroup(*go, key, label, exp), spec);
    }
    // Omega
    if (even_q) {
        auto key = [&](int id) {
            Mat g = go->element(id);
            for (int i = 0; i < n; ++i) g[i * n + i] = F->sub(g[i * n + i], 1);
            return mat_rank(*F, g, n) % 2;
        };
        return finalize(kernel_subgroup(*go, key, label, exp), spec);
    }
    GroupSpec sos = spec;
    sos.family = Family::SO;
    auto detkey = [&](int id) { return mat_det(*F, go->element(id), n); };
    std::shared_ptr<const GroupTable> so =
        kernel_subgroup(*go, detkey, sos.str(), static_cast<int>(static_cast<int64_t>(group_order(sos))));
    Subgroup d = derived_subgroup(so);
    auto om = std::const_pointer_cast<GroupTable>(d.group);
    auto renamed = GroupTable::from_elements(label, F, n, form, spec.q, [&] {
        std::vector<Mat> e;
        for (int i = 0; i < om->order(); ++i) e.push_back(om->element(i));
        return e;
    }());
    renamed->set_generators(om->generators());
    return finalize(renamed, spec);
}

}  // namespace cclab
