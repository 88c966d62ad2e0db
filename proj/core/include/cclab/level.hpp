#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/report.hpp"
#include "cclab/weil.hpp"

namespace cclab {

// Which generating character and which a-priori level cap apply.
enum class LevelScope { SymplecticOdd, SymplecticEven, Orthogonal, None };

struct LevelCap {
    LevelScope scope = LevelScope::None;
    int n = 0;          // Sp_{2n}: n; orthogonal: dim of the natural module
    int cap = 0;        // general cap
    int sharp_cap = -1; // smaller cap when it applies, else -1
};

LevelCap level_cap(const GroupTable& G);

struct LevelResult {
    int character = 0;
    int level = -1;          // -1: not reached within the computed powers
    Rational multiplicity;   // [Theta^level, chi]
};

struct LevelSweep {
    TablePtr table;
    LevelCap cap;
    ClassFunction theta;
    std::vector<ClassFunction> powers;  // Theta^0 .. Theta^(cap + 2)
    std::vector<LevelResult> levels;    // indexed like table->irr
    bool monotone = true;               // [Theta^k, chi] > 0 => [Theta^(k+2), chi] > 0
    std::string monotone_detail;

    int level(int chi) const { return levels[chi].level; }
};

LevelSweep compute_levels(const TablePtr& table);

// Every level inside the cap (and the sharper cap where it applies).
BoundReport level_range_check(const LevelSweep& sweep);

// Theta(g) lands in the allowed value list, and Theta(g) = Theta(1) only at g = 1.
BoundReport theta_value_check(const LevelSweep& sweep);

// Rational lower/upper degree bound functions. Out-of-range parameters give
// std::nullopt.
std::optional<BigRational> bound_sp_odd(int n, int k, int q);      // q^{nk-k(k+1)/2} ((q-1)/2)^k
std::optional<BigRational> bound_sp_even(int n, int k, int q);     // q^{2nk-k(2k+1)} ((q-1)^2/2)^k
std::optional<BigRational> bound_orthogonal(int n, int k, int q);  // with the small special cases
BigRational upper_sp_odd(int n, int l, int q);                     // ((q^n+1)/2)^l
BigRational upper_sp_even(int n, int l, int q);                    // ((q^{2n}-1)/(q-1))^l
BigRational upper_orthogonal(int n, int l, int q);                 // ((q^n-1)/(q-1))^l

// Lower and upper degree bounds by level, one report per character (two
// bounds each). Groups outside the theorem's range come back
// not-applicable with the bounds still evaluated.
std::vector<BoundReport> degree_level_check(const LevelSweep& sweep);

// chi(1) < b(n,k) implies level <= 3(k-1), for k = 1..kmax.
std::vector<BoundReport> degree_contrapositive_check(const LevelSweep& sweep, int kmax);

// ----- U-rank (orthogonal groups in odd characteristic) -----

// The split SO+_{2n} sits on the first 2n coordinates (u_i = e_i,
// v_i = e_{n+i}); for odd dimension or minus type it is the pointwise
// stabilizer of the remaining coordinates.
struct RankSetup {
    ClassesPtr classes;
    int n = 0;  // Witt index
    // centers[j-1]: element ids of [I_j, X] and the X's (j x j, row-major)
    std::vector<std::vector<int>> center_ids;
    std::vector<std::vector<std::vector<int>>> center_params;
    // alternating j x j matrices Y with their ranks
    std::vector<std::vector<std::vector<int>>> ys;
    std::vector<std::vector<int>> y_ranks;
};

RankSetup make_rank_setup(const ClassesPtr& cls);

// multiplicity of lambda_Y in chi restricted to Z(U_j)
Rational center_multiplicity(const RankSetup& rs, const ClassFunction& chi, int j, int y_index);

struct RankResult {
    int rank = 0;
    int j = 0;          // witness (0 when rank 0 and nothing else found)
    int y_index = -1;
    std::vector<int> rank_by_j;  // max rank seen on Z(U_j), j = 1..n
};

RankResult urank(const RankSetup& rs, const ClassFunction& chi);

// Rank is even and at most min(2 level, n); the multiplicity of each
// rank-2r character in tau^r on Z(U_2r); additivity on products; behaviour
// on parabolic and standard subgroups.
struct RankLevelReport {
    std::vector<RankResult> ranks;
    std::vector<BoundReport> reports;
};

RankLevelReport rank_level_checks(const LevelSweep& sweep, const RankSetup& rs);

// ----- dual pair SO+_{2n} x Sp_{2r} -----

struct DualPairAnalysis {
    int r = 0;
    std::vector<ClassFunction> D;        // per irreducible alpha of S
    std::vector<MultiplicityProfile> profiles;
    std::vector<ClassFunction> D_low;    // constituents of level <= r - 1
    std::vector<ClassFunction> D_top;    // the rest
    std::vector<bool> top_is_character;
    std::vector<bool> top_levels_equal_r;
    std::vector<int> top_max_rank;
    bool restriction_is_tau_power = false;  // omega restricted to G equals tau^r
    std::vector<BoundReport> reports;
};

DualPairAnalysis dual_pair_analysis(const DualPair& dp, const LevelSweep& g_levels, const RankSetup& g_rank,
                                    const CharacterTable& s_table);

// Restriction of the Weil character to U x S (U the Siegel radical, abelian)
// contains lambda (x) reg_S for every lambda of rank 2r.
std::vector<BoundReport> so_regular_check(const DualPair& dp, const RankSetup& g_rank, const CharacterTable& s_table);

}  // namespace cclab
