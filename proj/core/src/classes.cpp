#include "cclab/classes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace cclab {

ClassPartition::ClassPartition(GroupPtr G) : G_(std::move(G)) {
    const GroupTable& g = *G_;
    const int N = g.order();
    std::vector<int> raw(N, -1);
    std::vector<std::vector<int>> orbits;
    std::vector<int> gens = g.generators();
    std::vector<int> gen_inv;
    for (int s : gens) gen_inv.push_back(g.inv(s));
    for (int x = 0; x < N; ++x) {
        if (raw[x] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> orbit{x};
        raw[x] = id;
        for (size_t h = 0; h < orbit.size(); ++h)
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = g.mul(g.mul(gen_inv[k], orbit[h]), gens[k]);
                if (raw[y] < 0) {
                    raw[y] = id;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    // order: identity class first, then by (size, representative encoding)
    std::vector<int> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    const int len = g.entries();
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& A = orbits[a];
        const auto& B = orbits[b];
        if ((A[0] == 0) != (B[0] == 0)) return A[0] == 0;
        if (A.size() != B.size()) return A.size() < B.size();
        return std::memcmp(g.bytes(A[0]), g.bytes(B[0]), len) < 0;
    });
    const int r = static_cast<int>(orbits.size());
    class_of_.assign(N, -1);
    reps_.resize(r);
    sizes_.resize(r);
    member_offsets_.assign(r + 1, 0);
    for (int c = 0; c < r; ++c) {
        const auto& o = orbits[perm[c]];
        reps_[c] = o[0];
        sizes_[c] = static_cast<int64_t>(o.size());
        for (int x : o) {
            class_of_[x] = c;
            member_list_.push_back(x);
        }
        member_offsets_[c + 1] = static_cast<int>(member_list_.size());
    }
    inverse_.resize(r);
    orders_.resize(r);
    powers_.resize(r);
    exponent_ = 1;
    for (int c = 0; c < r; ++c) {
        inverse_[c] = class_of_[g.inv(reps_[c])];
        std::vector<int> pw{0};
        int x = reps_[c];
        while (x != 0) {
            pw.push_back(class_of_[x]);
            x = g.mul(x, reps_[c]);
        }
        pw[0] = class_of_[0];
        orders_[c] = static_cast<int>(pw.size());
        powers_[c] = std::move(pw);
        exponent_ = static_cast<int>(lcm64(exponent_, orders_[c]));
    }
    rows_.resize(r);
}

int ClassPartition::power_class(int c, int64_t t) const {
    int64_t o = orders_[c];
    return powers_[c][((t % o) + o) % o];
}

std::vector<int> ClassPartition::members(int c) const {
    return std::vector<int>(member_list_.begin() + member_offsets_[c], member_list_.begin() + member_offsets_[c + 1]);
}

const std::vector<int64_t>& ClassPartition::mult_row(int c1) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (!rows_[c1].empty()) return rows_[c1];
    }
    const int r = count();
    const GroupTable& g = *G_;
    std::vector<int64_t> a(static_cast<size_t>(r) * r, 0);
    std::vector<int> inv_members;
    for (int i = member_offsets_[c1]; i < member_offsets_[c1 + 1]; ++i) inv_members.push_back(g.inv(member_list_[i]));
    for (int c3 = 0; c3 < r; ++c3) {
        int g3 = reps_[c3];
        for (int xi : inv_members) a[static_cast<size_t>(class_of_[g.mul(xi, g3)]) * r + c3] += 1;
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (rows_[c1].empty()) rows_[c1] = std::move(a);
    return rows_[c1];
}

ClassesPtr compute_classes(const GroupPtr& G) { return std::make_shared<const ClassPartition>(G); }

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(ClassesPtr cls) : cls_(std::move(cls)) {
    v_.assign(cls_->count(), Cyc(cls_->exponent()));
}

ClassFunction::ClassFunction(ClassesPtr cls, std::vector<Cyc> values) : cls_(std::move(cls)), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != cls_->count()) throw std::invalid_argument("class function has wrong length");
    const int e = cls_->exponent();
    for (auto& x : v_)
        if (x.order() != e) {
            if (e % x.order() == 0) x = x.lift(e);
            else x = descend(x.lift(static_cast<int>(lcm64(e, x.order()))), e);
        }
}

ClassFunction ClassFunction::trivial(const ClassesPtr& cls) {
    return from_rational(cls, [](int) { return 1; });
}

ClassFunction ClassFunction::regular(const ClassesPtr& cls) {
    int64_t n = cls->group_order();
    return from_rational(cls, [n](int c) { return c == 0 ? n : 0; });
}

ClassFunction ClassFunction::conj() const {
    ClassFunction r(*this);
    for (auto& x : r.v_) x = x.conj();
    return r;
}

void ClassFunction::check_same(const ClassFunction& o) const {
    if (cls_ != o.cls_) throw std::invalid_argument("class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    check_same(o);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    check_same(o);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
    check_same(o);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
    for (auto& x : v_) x *= s;
    return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.cls_ == b.cls_ && a.v_ == b.v_; }

bool ClassFunction::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

Rational inner(const ClassFunction& f, const ClassFunction& g) {
    if (f.classes() != g.classes()) throw std::invalid_argument("inner: class functions on different groups");
    const auto& cls = *f.classes();
    Cyc s(cls.exponent());
    for (int c = 0; c < cls.count(); ++c) {
        if (f[c].is_zero() || g[c].is_zero()) continue;
        Cyc t = f[c] * g[c].conj();
        t *= Rational(cls.size(c));
        s += t;
    }
    if (!s.is_rational()) throw std::logic_error("inner product is not rational");
    return s.rational_value() / Rational(cls.group_order());
}

Rational abs2(const Cyc& x) {
    Cyc t = x * x.conj();
    if (!t.is_rational()) throw std::logic_error("|x|^2 is not rational");
    return t.rational_value();
}

SubgroupClasses make_subgroup_classes(const ClassesPtr& parent, const Subgroup& H) {
    SubgroupClasses s;
    s.parent = parent;
    s.sub = compute_classes(H.group);
    s.embed = H.embed;
    s.fusion.resize(s.sub->count());
    for (int c = 0; c < s.sub->count(); ++c) s.fusion[c] = parent->class_of(H.embed[s.sub->rep(c)]);
    return s;
}

ClassFunction restrict_to(const ClassFunction& f, const SubgroupClasses& H) {
    if (f.classes() != H.parent) throw std::invalid_argument("restrict: function not on the parent group");
    std::vector<Cyc> v;
    for (int c = 0; c < H.sub->count(); ++c) v.push_back(f[H.fusion[c]]);
    return ClassFunction(H.sub, std::move(v));
}

ClassFunction induce_from(const ClassFunction& f, const SubgroupClasses& H) {
    if (f.classes() != H.sub) throw std::invalid_argument("induce: function not on the subgroup");
    const auto& P = *H.parent;
    ClassFunction r(H.parent);
    std::vector<Cyc> acc(P.count(), Cyc(f[0].order()));
    for (int d = 0; d < H.sub->count(); ++d) {
        if (f[d].is_zero()) continue;
        acc[H.fusion[d]] += f[d] * Rational(H.sub->size(d));
    }
    const int64_t h = H.sub->group_order();
    for (int c = 0; c < P.count(); ++c) {
        if (acc[c].is_zero()) continue;
        r.at(c) = acc[c].lift(P.exponent()) * Rational(P.centralizer_order(c), h);
    }
    return r;
}

int64_t double_cosets(const SubgroupClasses& H) {
    const GroupTable& G = *H.parent->group();
    const int N = G.order();
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    std::vector<int> gens;
    for (int s : H.sub->group()->generators()) gens.push_back(H.embed[s]);
    for (int x = 0; x < N; ++x)
        for (int s : gens) {
            unite(x, G.mul(s, x));
            unite(x, G.mul(x, s));
        }
    int64_t k = 0;
    for (int x = 0; x < N; ++x)
        if (find(x) == x) ++k;
    return k;
}

}  // namespace cclab
