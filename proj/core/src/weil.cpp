#include "cclab/weil.hpp"

#include <random>
#include <stdexcept>

namespace cclab {

ClassFunction tau_character(const ClassesPtr& cls) {
    const GroupTable& G = *cls->group();
    const int64_t qv = G.field().q();
    return ClassFunction::from_rational(cls, [&](int c) {
        int k = eigenspace_dim(G.field(), G.element(cls->rep(c)), G.dim(), 1);
        int64_t v = 1;
        for (int i = 0; i < k; ++i) v *= qv;
        return v;
    });
}

ClassFunction zeta_character(const ClassesPtr& cls) {
    const GroupTable& G = *cls->group();
    const int64_t q = G.q();
    return ClassFunction::from_rational(cls, [&](int c) {
        int k = eigenspace_dim(G.field(), G.element(cls->rep(c)), G.dim(), 1);
        int64_t v = G.dim() % 2 == 0 ? 1 : -1;
        for (int i = 0; i < k; ++i) v *= -q;
        return v;
    });
}

namespace {

Cyc from_counts(const std::vector<int64_t>& counts, int p) {
    Cyc r(p);
    for (int k = 0; k < p; ++k)
        if (counts[k] != 0) r.add_power(k, Rational(counts[k]));
    return r;
}

Mat block(const Mat& g, int N, int bi, int bj) {
    const int n = 2 * N;
    Mat r(static_cast<size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r[i * N + j] = g[(bi * N + i) * n + (bj * N + j)];
    return r;
}

}  // namespace

WeilModel::WeilModel(FieldPtr F, int N, bool twisted, size_t dim_budget)
    : F_(std::move(F)), N_(N), twisted_(twisted), c_(1) {
    if (F_->p() == 2) throw std::invalid_argument("the Weil model needs odd q");
    if (N < 1) throw std::invalid_argument("the Weil model needs N >= 1");
    const int q = F_->q();
    int64_t d = 1;
    for (int i = 0; i < N; ++i) {
        d *= q;
        if (d > static_cast<int64_t>(dim_budget))
            throw BudgetError("Weil model dimension " + std::to_string(q) + "^" + std::to_string(N) +
                              " exceeds the budget " + std::to_string(dim_budget));
    }
    dim_ = static_cast<int>(d);
    a_ = 1;
    if (twisted)
        for (int x = 1; x < q; ++x)
            if (!F_->is_square(x)) {
                a_ = x;
                break;
            }
    half_ = F_->inv(F_->from_int(2));
    vecs_.resize(dim_);
    for (int idx = 0; idx < dim_; ++idx) {
        std::vector<int> v(N);
        int t = idx;
        for (int i = 0; i < N; ++i) {
            v[i] = t % q;
            t /= q;
        }
        vecs_[idx] = v;
    }
    const int p = F_->p();
    // Gauss sum and the normalizing scalar c1 = +-G/q
    std::vector<int64_t> counts(p, 0);
    for (int t = 0; t < q; ++t) ++counts[psi_exp(F_->mul(t, t))];
    Cyc gauss = from_counts(counts, p);
    Cyc c1 = gauss / Rational(q);
    // pin the sign by (w0 nbar(1))^3 = m(-1) in the one-variable model
    auto psi = [&](int v) { return Cyc::zeta(p, psi_exp(v)); };
    std::vector<Cyc> A(static_cast<size_t>(q) * q, Cyc(p));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            // (w0 nbar(1) f)(x) = c1 sum_y psi(x y) psi(-y^2/2) f(y)
            int arg = F_->add(F_->mul(x, y), F_->neg(F_->mul(half_, F_->mul(y, y))));
            A[x * q + y] = psi(arg) * c1;
        }
    auto A3 = op_multiply(op_multiply(A, A, q), A, q);
    int chi_m1 = F_->is_square(F_->neg(1)) ? 1 : -1;
    std::vector<Cyc> want(static_cast<size_t>(q) * q, Cyc(p));
    for (int x = 0; x < q; ++x) want[x * q + F_->neg(x)] = Cyc(p, Rational(chi_m1));
    int sign = 0;
    if (A3 == want) sign = 1;
    else {
        std::vector<Cyc> neg(want.size(), Cyc(p));
        for (size_t i = 0; i < want.size(); ++i) neg[i] = -want[i];
        if (A3 == neg) sign = -1;
    }
    if (sign == 0) throw std::logic_error("Weil model: Fourier normalization could not be pinned");
    c1 *= Rational(sign);
    c_ = Cyc(p, Rational(1));
    for (int i = 0; i < N; ++i) c_ = c_ * c1;
}

std::optional<WeilModel::BigCell> WeilModel::big_cell(const Mat& g) const {
    const int N = N_;
    const Field& F = *F_;
    Mat B = block(g, N, 0, 1);
    if (mat_det(F, B, N) == 0) return std::nullopt;
    Mat A = block(g, N, 0, 0), D = block(g, N, 1, 1);
    Mat Binv = mat_inverse(F, B, N);
    BigCell bc;
    bc.M = mat_transpose(Binv, N);
    bc.X = mat_mul(F, D, Binv, N);
    bc.Y = mat_mul(F, Binv, A, N);
    bc.chi_det = F.is_square(mat_det(F, bc.M, N)) ? 1 : -1;
    return bc;
}

int WeilModel::kernel_arg(const BigCell& bc, int xi, int zi) const {
    const Field& F = *F_;
    const int N = N_;
    const auto& x = vecs_[xi];
    const auto& z = vecs_[zi];
    int qx = 0, qz = 0, b = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (x[i] && x[j] && bc.X[i * N + j]) qx = F.add(qx, F.mul(bc.X[i * N + j], F.mul(x[i], x[j])));
            if (z[i] && z[j] && bc.Y[i * N + j]) qz = F.add(qz, F.mul(bc.Y[i * N + j], F.mul(z[i], z[j])));
            if (x[i] && z[j] && bc.M[i * N + j]) b = F.add(b, F.mul(bc.M[i * N + j], F.mul(x[i], z[j])));
        }
    return F.sub(b, F.mul(half_, F.add(qx, qz)));
}

std::vector<Cyc> WeilModel::kernel_matrix(const BigCell& bc) const {
    const int p = F_->p();
    Cyc s = c_ * Rational(bc.chi_det);
    std::vector<Cyc> K(static_cast<size_t>(dim_) * dim_, Cyc(p));
    for (int x = 0; x < dim_; ++x)
        for (int z = 0; z < dim_; ++z) K[static_cast<size_t>(x) * dim_ + z] = Cyc::zeta(p, psi_exp(kernel_arg(bc, x, z))) * s;
    return K;
}

Mat WeilModel::find_shift(const Mat& g) const {
    const int N = N_;
    const Field& F = *F_;
    const int q = F.q();
    Mat B = block(g, N, 0, 1), D = block(g, N, 1, 1);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) slots.emplace_back(i, j);
    int64_t total = 1;
    for (size_t k = 0; k < slots.size(); ++k) total *= q;
    for (int64_t code = 1; code < total; ++code) {
        Mat Y(static_cast<size_t>(N) * N, 0);
        int64_t c = code;
        for (auto [i, j] : slots) {
            int v = static_cast<int>(c % q);
            c /= q;
            Y[i * N + j] = v;
            Y[j * N + i] = v;
        }
        if (mat_det(F, mat_sub(F, mat_mul(F, Y, B, N), D, N), N) != 0) return Y;
    }
    throw std::logic_error("Weil model: no Bruhat shift found");
}

namespace {

Mat shift_element(const Field& F, const Mat& Y, int N) {
    // h = nbar(Y) w0 = [[0, I], [-I, Y]]
    const int n = 2 * N;
    Mat h = mat_zero(n);
    for (int i = 0; i < N; ++i) {
        h[i * n + (N + i)] = 1;
        h[(N + i) * n + i] = F.neg(1);
        for (int j = 0; j < N; ++j) h[(N + i) * n + (N + j)] = Y[i * N + j];
    }
    return h;
}

}  // namespace

Cyc WeilModel::trace(const Mat& g) const {
    const int p = F_->p();
    std::vector<int64_t> counts(p, 0);
    if (auto bc = big_cell(g)) {
        for (int x = 0; x < dim_; ++x) ++counts[psi_exp(kernel_arg(*bc, x, x))];
        return from_counts(counts, p) * (c_ * Rational(bc->chi_det));
    }
    const Field& F = *F_;
    const int n = 2 * N_;
    Mat Y = find_shift(g);
    Mat h = shift_element(F, Y, N_);
    Mat g2 = mat_mul(F, mat_inverse(F, h, n), g, n);
    auto bh = big_cell(h);
    auto b2 = big_cell(g2);
    if (!bh || !b2) throw std::logic_error("Weil model: Bruhat factorization failed");
    for (int x = 0; x < dim_; ++x)
        for (int z = 0; z < dim_; ++z) ++counts[psi_exp(F.add(kernel_arg(*bh, x, z), kernel_arg(*b2, z, x)))];
    Cyc s = c_ * c_ * Rational(bh->chi_det * b2->chi_det);
    return from_counts(counts, p) * s;
}

std::vector<Cyc> WeilModel::op(const Mat& g) const {
    if (auto bc = big_cell(g)) return kernel_matrix(*bc);
    const Field& F = *F_;
    const int n = 2 * N_;
    Mat h = shift_element(F, find_shift(g), N_);
    Mat g2 = mat_mul(F, mat_inverse(F, h, n), g, n);
    return op_multiply(kernel_matrix(*big_cell(h)), kernel_matrix(*big_cell(g2)), dim_);
}

std::vector<Cyc> op_multiply(const std::vector<Cyc>& a, const std::vector<Cyc>& b, int n) {
    const int e = a.empty() ? 1 : a[0].order();
    std::vector<Cyc> r(static_cast<size_t>(n) * n, Cyc(e));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Cyc& x = a[static_cast<size_t>(i) * n + k];
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Cyc& y = b[static_cast<size_t>(k) * n + j];
                if (!y.is_zero()) r[static_cast<size_t>(i) * n + j] += x * y;
            }
        }
    return r;
}

bool uses_weil_theta(const GroupTable& G) {
    if (G.field().p() == 2) return false;
    if (G.form().kind == FormKind::Symplectic) return true;
    // SL_2 = Sp_2: every determinant-one 2x2 matrix preserves [[0,1],[-1,0]]
    return G.has_spec() && G.spec().family == Family::SL && G.dim() == 2;
}

ClassFunction weil_character(const ClassesPtr& cls, bool twisted) {
    const GroupTable& G = *cls->group();
    if (!uses_weil_theta(G)) throw std::invalid_argument("weil_character needs Sp(2N, q) with q odd");
    WeilModel model(G.field_ptr(), G.dim() / 2, twisted);
    std::vector<Cyc> v;
    for (int c = 0; c < cls->count(); ++c) v.push_back(model.trace(G.element(cls->rep(c))));
    return ClassFunction(cls, std::move(v));
}

ClassFunction theta_character(const ClassesPtr& cls) {
    if (uses_weil_theta(*cls->group())) return weil_character(cls, false) + weil_character(cls, true);
    return tau_character(cls) + zeta_character(cls);
}

// ---------------------------------------------------------------------------

Mat DualPair::embed(int g_elem, int s_elem) const {
    const GroupTable& GG = *G->group();
    const GroupTable& SS = *S->group();
    const Field& F = GG.field();
    Mat k = mat_kron(F, GG.element(g_elem), GG.dim(), SS.element(s_elem), SS.dim());
    return mat_mul(F, mat_mul(F, basis_change_inv, k, gamma_dim), basis_change, gamma_dim);
}

DualPair make_dual_pair(const ClassesPtr& G, const ClassesPtr& S, size_t dim_budget) {
    const GroupTable& GG = *G->group();
    const GroupTable& SS = *S->group();
    if (GG.form().kind != FormKind::Quadratic || SS.form().kind != FormKind::Symplectic)
        throw std::invalid_argument("dual pair: need an orthogonal G and a symplectic S");
    if (GG.field().q() != SS.field().q()) throw std::invalid_argument("dual pair: fields differ");
    const int dB = GG.dim(), dA = SS.dim();
    const int n = GG.form().witt_index;
    if (2 * n != dB) throw std::invalid_argument("dual pair: the orthogonal space must be split");
    const int m = dA / 2;
    const Field& F = GG.field();
    DualPair dp;
    dp.G = G;
    dp.S = S;
    dp.gamma_dim = dB * dA;
    const int W = dp.gamma_dim;
    const int Nw = W / 2;
    Mat P = mat_zero(W);
    auto tensor_index = [&](int b, int a) { return b * dA + a; };
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 2 * m; ++k) {
            int col_e = i * 2 * m + k;
            int col_f = Nw + i * 2 * m + k;
            int v_i = n + i, u_i = i;
            if (k < m) {
                P[tensor_index(v_i, k) * W + col_e] = 1;             // v_i (x) e_k
                P[tensor_index(u_i, m + k) * W + col_f] = 1;         // u_i (x) f_k
            } else {
                P[tensor_index(v_i, k) * W + col_e] = 1;             // v_i (x) f_{k-m}
                P[tensor_index(u_i, k - m) * W + col_f] = F.neg(1);  // -u_i (x) e_{k-m}
            }
        }
    Mat gram = mat_kron(F, GG.form().gram, dB, SS.form().gram, dA);
    Mat J = mat_zero(W);
    for (int i = 0; i < Nw; ++i) {
        J[i * W + (Nw + i)] = 1;
        J[(Nw + i) * W + i] = F.neg(1);
    }
    if (mat_mul(F, mat_mul(F, mat_transpose(P, W), gram, W), P, W) != J)
        throw std::logic_error("dual pair: basis of W is not symplectic");
    dp.basis_change = P;
    dp.basis_change_inv = mat_inverse(F, P, W);
    dp.model = std::make_shared<WeilModel>(GG.field_ptr(), Nw, false, dim_budget);
    return dp;
}

ClassFunction dual_pair_component(const DualPair& dp, const ClassFunction& alpha) {
    const auto& Gc = *dp.G;
    const auto& Sc = *dp.S;
    std::vector<Cyc> v;
    for (int c = 0; c < Gc.count(); ++c) {
        Cyc s(1);
        for (int d = 0; d < Sc.count(); ++d) {
            if (alpha[d].is_zero()) continue;
            s += dp.omega(Gc.rep(c), Sc.rep(d)) * alpha[d].conj() * Rational(Sc.size(d));
        }
        v.push_back(s / Rational(Sc.group_order()));
    }
    return ClassFunction(dp.G, std::move(v));
}

ClassFunction dual_pair_restriction_to_G(const DualPair& dp) {
    std::vector<Cyc> v;
    for (int c = 0; c < dp.G->count(); ++c) v.push_back(dp.omega(dp.G->rep(c), 0));
    return ClassFunction(dp.G, std::move(v));
}

}  // namespace cclab

namespace cclab {

std::vector<BoundReport> weil_model_check(const ClassesPtr& cls, int pairs, uint64_t seed, size_t dim_budget) {
    const GroupTable& G = *cls->group();
    if (!uses_weil_theta(G)) throw std::invalid_argument("the Weil model needs Sp(2N, q) with q odd");
    const int N = G.dim() / 2;
    const int64_t q = G.field().q();
    const std::string name = G.has_spec() ? G.spec().str() : G.label();
    std::vector<BoundReport> out;

    for (bool twisted : {false, true}) {
        WeilModel model(G.field_ptr(), N, twisted, dim_budget);
        const std::string tag = twisted ? "omega*" : "omega";

        // homomorphism
        const int64_t order = G.order();
        const bool exhaustive = order * order <= pairs;
        const int64_t trials = exhaustive ? order * order : pairs;
        std::mt19937_64 rng(seed + (twisted ? 1 : 0));
        std::uniform_int_distribution<int> pick(0, G.order() - 1);
        int64_t bad = 0;
        for (int64_t k = 0; k < trials; ++k) {
            int a, b;
            if (exhaustive) {
                a = static_cast<int>(k / order);
                b = static_cast<int>(k % order);
            } else {
                a = pick(rng);
                b = pick(rng);
            }
            auto A = model.op(G.element(a)), B = model.op(G.element(b));
            if (op_multiply(A, B, model.dim()) != model.op(G.element(G.mul(a, b)))) ++bad;
        }
        BoundReport hom;
        hom.id = "weil-homomorphism";
        hom.instance = name + " " + tag;
        hom.param("pairs", std::to_string(trials)).param("exhaustive", exhaustive ? "true" : "false");
        hom.param("seed", std::to_string(seed));
        hom.note = "lhs = pairs with op(gh) != op(g) op(h)";
        decide(hom, BigRational(bad), Relation::EQ, BigRational(0));
        out.push_back(hom);

        // |trace|^2 on every element
        int64_t mismatches = 0;
        for (int g = 0; g < G.order(); ++g) {
            Mat m = G.element(g);
            int k = fixed_space_dims(G.field(), m, G.dim()).first;
            Cyc t = model.trace(m);
            Cyc n2 = t * t.conj();
            if (!n2.is_rational() || n2.rational_value().big() != rpow(BigRational(q), k)) ++mismatches;
        }
        BoundReport tr;
        tr.id = "weil-trace-norm";
        tr.instance = name + " " + tag;
        tr.param("elements", std::to_string(G.order()));
        tr.note = "lhs = elements with |trace op(g)|^2 != q^dim Ker(g-1)";
        decide(tr, BigRational(mismatches), Relation::EQ, BigRational(0));
        out.push_back(tr);
    }

    ClassFunction w = weil_character(cls, false), ws = weil_character(cls, true);
    ClassFunction tau = tau_character(cls), zeta = zeta_character(cls);
    const BigRational qN = rpow(BigRational(q), N);

    for (const auto* chi : {&w, &ws}) {
        BoundReport d;
        d.id = "weil-degree";
        d.instance = name + (chi == &ws ? " omega*" : " omega");
        Cyc deg = chi->degree();
        decide(d, deg.is_rational() ? deg.rational_value().big() : BigRational(-1), Relation::EQ, qN);
        out.push_back(d);

        // two irreducible constituents of degrees (q^N +- 1)/2
        BoundReport sp;
        sp.id = "weil-two-constituents";
        sp.instance = d.instance;
        sp.note = "lhs = [omega, omega]";
        decide(sp, inner(*chi, *chi).big(), Relation::EQ, BigRational(2));
        out.push_back(sp);
    }

    const bool q1 = q % 4 == 1;
    auto identity = [&](const std::string& id, const ClassFunction& lhs, const ClassFunction& rhs,
                        const std::string& rhs_name) {
        BoundReport r;
        r.id = id;
        r.instance = name;
        r.param("q mod 4", std::to_string(q % 4)).param("rhs", rhs_name);
        int diff = 0;
        for (int c = 0; c < cls->count(); ++c)
            if (lhs[c] != rhs[c]) ++diff;
        r.note = "lhs = classes where the identity fails";
        decide(r, BigRational(diff), Relation::EQ, BigRational(0));
        out.push_back(r);
    };
    identity("weil-square", w * w, q1 ? tau : zeta, q1 ? "tau" : "zeta");
    identity("weil-twisted-square", ws * ws, q1 ? tau : zeta, q1 ? "tau" : "zeta");
    identity("weil-mixed-product", w * ws, q1 ? zeta : tau, q1 ? "zeta" : "tau");
    identity("weil-norm-product", w * w.conj(), tau, "tau");
    return out;
}

}  // namespace cclab
