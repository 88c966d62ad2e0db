#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cclab/chartable.hpp"
#include "cclab/report.hpp"

namespace cclab {

// Permutation character g -> |C_A(g)| on the natural module and its signed
// companion (-1)^dim(A) (-q)^dim Ker(g-1). q is the size of the matrix field.
ClassFunction tau_character(const ClassesPtr& cls);
ClassFunction zeta_character(const ClassesPtr& cls);

// Weil representation of Sp_{2N}(q), q odd, on functions F_q^N -> C.
// Group elements are 2N x 2N matrices preserving J = [[0, I], [-I, 0]].
class WeilModel {
public:
    // twisted = false uses psi(t) = zeta_p^Tr(t); twisted = true uses
    // psi(a t) with a the smallest nonsquare.
    WeilModel(FieldPtr F, int N, bool twisted, size_t dim_budget = 2000);

    int N() const { return N_; }
    int dim() const { return dim_; }
    bool twisted() const { return twisted_; }
    const Field& field() const { return *F_; }
    // normalizing scalar of the Fourier part, c = c1^N
    const Cyc& fourier_scalar() const { return c_; }

    Cyc trace(const Mat& g) const;
    // dense operator, row-major dim x dim
    std::vector<Cyc> op(const Mat& g) const;

private:
    struct BigCell {
        Mat X, M, Y;  // N x N
        int chi_det;  // +1 / -1
    };
    std::optional<BigCell> big_cell(const Mat& g) const;
    Mat find_shift(const Mat& g) const;  // symmetric Y' with Y'B - D invertible
    int psi_exp(int v) const { return F_->trace(F_->mul(a_, v)); }
    // exponent of the kernel at (x, z), as an element of F_q
    int kernel_arg(const BigCell& bc, int x, int z) const;
    std::vector<Cyc> kernel_matrix(const BigCell& bc) const;

    FieldPtr F_;
    int N_;
    int dim_;
    bool twisted_;
    int a_;
    int half_;
    Cyc c_;
    std::vector<std::vector<int>> vecs_;  // index -> coordinates
};

std::vector<Cyc> op_multiply(const std::vector<Cyc>& a, const std::vector<Cyc>& b, int n);

// Character of the model on an enumerated Sp_{2N}(q) with the standard form.
ClassFunction weil_character(const ClassesPtr& cls, bool twisted);

// Theta: omega + omega* for Sp with q odd, tau + zeta otherwise.
ClassFunction theta_character(const ClassesPtr& cls);
bool uses_weil_theta(const GroupTable& G);

// Checks of the model on an enumerated Sp_{2N}(q), q odd: op(gh) = op(g) op(h)
// on random pairs (all pairs when |G|^2 <= pairs), |trace op(g)|^2 =
// q^{dim Ker(g-1)} on every element, the degree split of omega, and the
// products omega^2, omega*^2, omega omega* against tau / zeta.
std::vector<BoundReport> weil_model_check(const ClassesPtr& cls, int pairs = 1000, uint64_t seed = 1,
                                          size_t dim_budget = 2000);

// Dual pair G = SO(B) x S = Sp(A) inside Gamma = Sp(B (x) A), B split.
struct DualPair {
    ClassesPtr G, S;
    int gamma_dim = 0;    // dim W
    Mat basis_change;     // columns: symplectic basis of W in tensor coordinates
    Mat basis_change_inv;
    std::shared_ptr<WeilModel> model;

    Mat embed(int g_elem, int s_elem) const;  // element of Sp(W) in the symplectic basis
    Cyc omega(int g_elem, int s_elem) const { return model->trace(embed(g_elem, s_elem)); }
};

DualPair make_dual_pair(const ClassesPtr& G, const ClassesPtr& S, size_t dim_budget = 2000);

// D_alpha(g) = (1/|S|) sum_s omega(g s) conj(alpha(s))
ClassFunction dual_pair_component(const DualPair& dp, const ClassFunction& alpha);
// omega restricted to G x 1
ClassFunction dual_pair_restriction_to_G(const DualPair& dp);

}  // namespace cclab
