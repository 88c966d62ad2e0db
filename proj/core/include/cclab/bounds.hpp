#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/chartable.hpp"
#include "cclab/report.hpp"

namespace cclab {

// Certified enclosure [lo, hi] of a real number.
struct RealBounds {
    BigRational lo, hi;
    bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
};

// n as used by the degree and centralizer statements: the Witt index for
// symplectic and orthogonal groups, the dimension for linear and unitary ones.
int rank_parameter(const GroupTable& G);

// ----- Gaussian binomials and orbit counts -----

BigInt gauss_binom(int j, int i, int q);
// gauss_binom(j, i, q) < (32/9) q^{i(j-i)}
BoundReport gauss_binom_check(int j, int i, int q);

// Orbits of G on ordered j-tuples of its natural module, by Burnside over
// the classes. Throws BudgetError when |V|^j exceeds the budget.
BigInt orbit_count(const ClassPartition& cls, int j, double budget = 1e8);
// Independent count: union-find over the action of the generators.
int64_t orbit_count_enumerated(const GroupTable& G, int j, size_t budget = 20000000);

// GL / GU: N_j <= 8 q^{j^2/4} / 2 q^{j^2}; Sp / GO: N_j < 6 q^{j(j+e)/2} and,
// for j <= dim/2, N_j >= q^{j(j+e)/2}. Adds an oracle comparison when
// |V|^j <= oracle_budget.
std::vector<BoundReport> orbit_bound_check(const ClassesPtr& cls, int j, size_t oracle_budget = 2000000);

// ----- centralizers -----

int64_t centralizer_bruteforce(const GroupTable& G, int g);
// |C_G(g)| >= q^{(k^2-3k)/2}, k = dim C_V(g), one report per class
std::vector<BoundReport> centralizer_bound_check(const ClassesPtr& cls, bool brute_force = true);

// ----- restriction norms -----

// Pointwise stabilizer of a nondegenerate 2-space (even dimension: the last
// hyperbolic pair, or the anisotropic plane for minus type) or 1-space (odd
// dimension: the anisotropic vector).
Subgroup standard_restriction_subgroup(const GroupPtr& G);
// [chi|_H, chi|_H] <= q^{2+sqrt(41n+16D)} (even dimension) or
// q^{2+sqrt(7n+5D)} (odd dimension), D = max(1, log_q chi(1)).
std::vector<BoundReport> restriction_norm_check(const CharacterTable& G, const SubgroupClasses& H);
RealBounds restriction_rhs(int q, int n, const BigRational& D, bool odd_dimension, int precision = 128);

// ----- multiplicity inequalities -----

// [chi_1...chi_m, chi'_1...chi'_m] <= 8 q^{2 m^2 L^2} over unordered m-sets
// of irreducibles, L = max log_q chi(1) / n.
std::vector<BoundReport> tensor_product_check(const CharacterTable& G, int m);
// sigma(chi_1 chi_2) <= q^{5 (L_1+L_2)^2} with L_1 + L_2 raised to 1 when below.
std::vector<BoundReport> tensor_sigma_check(const CharacterTable& G);
// sigma(chi^m) <= q^{15 m^2 L^2} sigma(chi)^m, L >= 1/2
std::vector<BoundReport> tensor_power_check(const CharacterTable& G, int max_m);

enum class LeviBound {
    Classical,  // A = 705, sigma(chi, L_n) <= q^{sqrt(A n L^3)} sigma(chi, G)
    Standard,   // B = 1216, L_n inside a standard SO+_{2n}
    Derived,    // C = 1696, sigma(chi, L_n meet G) <= q^{sqrt(C n L^3)}
};
BigRational levi_constant(LeviBound which);
// q^{sqrt(A n L^3)}; with m > 0, the power form q^{m sqrt(A n L^3) + 15 m^2 L^2}
RealBounds levi_factor(const BigRational& A, int q, int n, const BigRational& L, int m = 0, int precision = 128);
// For every irreducible chi of G (and chi^m for 2 <= m <= max_m where the
// statement has a power form).
std::vector<BoundReport> levi_restriction_check(const CharacterTable& G, const SubgroupClasses& levi,
                                                const CharacterTable& levi_table, LeviBound which, int max_m = 1);

// Restriction of each irreducible of P_n to P_m contains a linear character.
std::vector<BoundReport> parabolic_linear_check(const CharacterTable& Pn, const SubgroupClasses& Pm,
                                                const CharacterTable& Pm_table, int n, int m, int q);

// ----- sigma / lambda calculus -----

// Every inequality relating sigma/lambda of rho on G and on H, for rho in
// Irr(G), pairwise products of irreducibles, and the regular character;
// induction inequalities for phi in Irr(H).
std::vector<BoundReport> sigma_lambda_check(const CharacterTable& G, const SubgroupClasses& H,
                                            const CharacterTable& H_table);
// P = Q x| L with Q abelian normal: [chi|_L, lambda] <= 1 for linear lambda.
std::vector<BoundReport> abelian_normal_check(const CharacterTable& P, const SubgroupClasses& L,
                                              const CharacterTable& L_table);

// ----- constants -----

// The numerical chain behind the 705 / 1216 / 1696 constants, the 53/32
// series, the 32/9 product, and the 6 in the orbit bound.
std::vector<BoundReport> constant_certificates();
// |GO^e_m(q)| <= (8/3) q^{m(m-1)/2}, q odd (even q is reported informatively)
std::vector<BoundReport> orthogonal_order_check(int max_m, const std::vector<int>& qs);
// |Irr(G)| <= 15.2 q^n (Sp_2n, SO_2n, Omega_2n) or 7.3 q^n (SO_2n+1)
BoundReport irr_count_check(const CharacterTable& t);
// Smallest degree above 1 against q^{n/3} and q^{4n/5} (gated to n >= 9) and,
// for Sp_2n(q) with q odd, against (q^n - 1)/2. No such degree: vacuous pass.
std::vector<BoundReport> min_degree_check(const CharacterTable& t);
// 15.2 + q^{2+sqrt(40n+16D+1)} < q^{2+sqrt(41n+16D)}
std::vector<BoundReport> restriction_tail_check(const std::vector<int>& qs, int max_n);

// ----- delta / epsilon -----

// 0 < delta <= min(gamma/4, (1-gamma)/1.4) and
// sqrt(A delta / 2 gamma) + delta/(1-gamma) + 4(1-gamma) <= gamma, decided
// exactly by squaring.
bool delta_feasible(const BigRational& gamma, const BigRational& delta, const BigRational& A = BigRational(1216));
std::vector<BoundReport> delta_certificate(const BigRational& gamma, const BigRational& delta,
                                           const BigRational& A = BigRational(1216));

struct DeltaResult {
    BigRational gamma, A;
    BigRational delta_max;  // multiple of 10^-decimals
    int decimals = 6;
    std::vector<BoundReport> reports;
};
// Throws std::invalid_argument unless 4/5 < gamma < 1.
DeltaResult delta_solver(const BigRational& gamma, const BigRational& A = BigRational(1216), int decimals = 6);

struct EpsilonComposition {
    BigRational epsilon, epsilon_star, delta_star, delta;
    std::vector<BoundReport> reports;
};
// epsilon* = epsilon/2 + 2/5 unless given (0.992 uses 0.99); delta* is
// delta_max(epsilon*) cut to two significant figures; delta = min(delta*,
// (16/25) epsilon (epsilon - epsilon*)).
EpsilonComposition epsilon_composition(const BigRational& epsilon, std::optional<BigRational> epsilon_star = {});

// ----- character bound predicates -----

// |chi(g)|^2 <= |C_G(g)| for all pairs; one aggregate report.
BoundReport schur_bound_check(const CharacterTable& t);
// |chi(g)| <= factor * chi(1)^exponent whenever |C_G(g)| <= q^{n^2 delta},
// n >= min_n. Aggregate report: lhs = violations among gated pairs.
BoundReport character_bound_check(const CharacterTable& t, const std::string& id, const BigRational& factor,
                                  const BigRational& exponent, const BigRational& delta, int min_n = 9);
// Weil characters of Sp_2n(q), q odd: |chi(g)| < chi(1)^{3/n} when e(g) <= 5,
// |chi(g)| < chi(1)^{9 sqrt(delta)/8} when e(g) >= 6 and the centralizer gate holds.
std::vector<BoundReport> weil_value_check(const CharacterTable& t, const BigRational& delta);

enum class SpinCase {
    SpinOdd,      // faithful chars of Spin_{2n+1}: q^{n(n+1)/2}/4, n >= 2
    SpinEven,     // Spin^e_{2n} not from Omega: q^{n(n-1)/2}/4, n >= 3
    SOOdd,        // SO_{2n+1} reducible over Omega: q^{n^2/2}, n >= 2
    SOEven,       // SO^e_{2n} reducible over Omega: (q-1) q^{n(n-1)/2-1}, n >= 4
};
struct Threshold {
    BigRational squared;               // threshold^2 (always rational)
    std::optional<BigRational> value;  // when the threshold itself is rational
    int min_n = 0;
};
Threshold spin_threshold(SpinCase c, int n, int q);
// Irreducibles of SO reducible over Omega = [SO, SO] exceed the threshold.
std::vector<BoundReport> spin_reducibility_check(const CharacterTable& SO, const SubgroupClasses& omega);

}  // namespace cclab
