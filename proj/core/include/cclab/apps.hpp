#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/bounds.hpp"
#include "cclab/chartable.hpp"
#include "cclab/report.hpp"

namespace cclab {

// ----- random walks on a conjugacy class -----

// P^t as a class function: entry k is the probability of each single element
// of class k after t steps, each step multiplying by a uniform element of C.
// Computed by class-algebra convolution and by character inversion; throws
// std::logic_error if the two disagree.
std::vector<BigRational> walk_distribution(const CharacterTable& t, int cls, int steps);

struct WalkStep {
    int t = 0;
    std::vector<BigRational> element_prob;  // per class, as above
    BigRational l1;                         // sum_x |P^t(x) - 1/|G||
    BigRational linf;                       // max_x ||G| P^t(x) - 1|
    RealBounds linf_bound;                  // sum_{chi != 1} (|chi(g)|/chi(1))^t chi(1)^2
    BigRational ds_bound;                   // bound on l1^2: sum_{chi != 1} (|chi(g)|^2/chi(1)^2)^t chi(1)^2
};

struct WalkReport {
    std::string group;
    int cls = 0;
    int t_max = 0;
    bool degenerate = false;  // central class: the walk stays on a coset
    std::vector<WalkStep> steps;
    BigRational threshold{1, 4};
    std::optional<int> mixing_time;  // least t <= t_max with l1 < threshold
    std::vector<BigRational> zeta;   // Witten zeta at s = 0, 1, 2
    std::vector<BoundReport> reports;
};

// t = 0..t_max, t_max <= 64
WalkReport mixing_bounds(const CharacterTable& t, int cls, int t_max);

// sum over Irr(G) of chi(1)^{-s}
BigRational witten_zeta(const CharacterTable& t, long s);
RealBounds witten_zeta_bounds(const CharacterTable& t, const BigRational& s, int precision = 128);

// ----- product-one counts -----

// #{(g_1..g_m) in C_1 x ... x C_m : g_1 ... g_m = 1} by the class product
// formula. Throws std::logic_error when the character sum is not a
// nonnegative integer.
BigInt product_one_count(const CharacterTable& t, const std::vector<int>& classes);
// Enumeration over C_1 x ... x C_{m-1}; BudgetError above the budget.
BigInt product_one_bruteforce(const ClassPartition& cls, const std::vector<int>& classes, double budget = 1e9);

struct ProductOneReport {
    std::string group;
    std::vector<int> classes;
    BigInt count;
    std::optional<BigInt> brute;
    std::optional<int> expected_dim;
    std::optional<BigRational> ratio;  // count / q^expected_dim
    std::vector<BoundReport> reports;
};

// Count, optional oracle, and the projection bound N <= prod_{j != i} |C_j|.
ProductOneReport product_one_report(const CharacterTable& t, const std::vector<int>& classes, bool brute_force = true,
                                    double budget = 1e9);

struct DimensionRow {
    int q = 0, m = 0;
    std::vector<int> classes;
    BigInt count;
    BigRational ratio;            // count / q^{2m-3}
    BigRational main_term_ratio;  // count / (prod |C_i| / |G|)
    bool regular_semisimple = true;
    bool eigenvalue_coincidence = false;  // a_1 ... a_m = 1 for some eigenvalue choice
};

struct DimensionExperiment {
    std::vector<DimensionRow> rows;
    std::vector<BoundReport> reports;
};

// SL(2,q) for prime q: every multiset of m regular semisimple classes
// (centralizer order q - 1 or q + 1), plus the unipotent tuples as labelled
// reference rows.
DimensionExperiment sl2_dimension_experiment(const std::vector<int>& qs, const std::vector<int>& ms);

// least m0 >= 3 with m0^2 r / (2 m0 - 2) < e (m0 - 2 - 2/h)
int m0_condition(int r, int e, int h);
BoundReport m0_check(int r, int e, int h);

}  // namespace cclab
