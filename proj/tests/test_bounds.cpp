#include <doctest.h>

#include "cclab/bounds.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

TEST_SUITE("bounds-suite") {

TEST_CASE("Gaussian binomials") {
    for (int j = 0; j < 6; ++j) CHECK(gauss_binom(j, 0, 3) == 1);
    CHECK(gauss_binom(2, 1, 2) == 3);
    CHECK(gauss_binom(4, 2, 3) == 130);
    auto r = gauss_binom_check(4, 2, 3);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.rhs == BigRational(32 * 81, 9));
    // subspace count identity: sum_i binom(j, i)_q counts all subspaces; pascal rule
    for (int q : {2, 3, 4})
        for (int j = 1; j < 6; ++j)
            for (int i = 1; i < j; ++i)
                CHECK(gauss_binom(j, i, q) ==
                      gauss_binom(j - 1, i - 1, q) + boost::multiprecision::pow(BigInt(q), i) * gauss_binom(j - 1, i, q));
}

TEST_CASE("orbit counts") {
    CHECK(orbit_count(*classes_for("Sp(2,3)"), 1) == 2);
    CHECK(orbit_count(*classes_for("GL(2,3)"), 1) == 2);
    BigInt n2 = orbit_count(*classes_for("Sp(4,3)"), 2);
    CHECK(n2 >= 3);
    CHECK(n2 <= 18);
    for (const char* g : {"Sp(2,3)", "GL(2,3)", "GU(2,2)", "GO+(4,3)"})
        for (int j = 1; j <= 2; ++j) {
            CAPTURE(g);
            auto cls = classes_for(g);
            CHECK(orbit_count(*cls, j) == orbit_count_enumerated(*cls->group(), j));
        }
    auto rs = orbit_bound_check(classes_for("Sp(4,3)"), 2);
    CHECK(count_verdict(rs, Verdict::Fail) == 0);
    CHECK(with_id(rs, "orbits-form-upper")[0].rhs == 18);
    CHECK(with_id(rs, "orbits-form-lower")[0].rhs == 3);
    CHECK_THROWS_AS(orbit_count(*classes_for("Sp(4,3)"), 5, 1e8), BudgetError);
}

TEST_CASE("centralizer lower bound") {
    auto cls = classes_for("Sp(2,3)");
    CHECK(centralizer_bruteforce(*cls->group(), 0) == 24);
    for (const char* g : {"Sp(4,3)", "SO(5,3)", "SO+(4,3)"}) {
        CAPTURE(g);
        auto c = classes_for(g);
        auto rs = centralizer_bound_check(c, true);
        CHECK(count_verdict(rs, Verdict::Pass) == c->count());
    }
    auto rs = centralizer_bound_check(cls, true);
    CHECK(rs[0].rhs == BigRational(1, 3));  // identity: k = 2
}

TEST_CASE("restriction norms") {
    auto sp = table_for("Sp(4,3)");
    auto H = make_subgroup_classes(sp->classes, standard_restriction_subgroup(sp->classes->group()));
    auto rs = restriction_norm_check(*sp, H);
    CHECK(count_verdict(rs, Verdict::Pass) == sp->size());
    CHECK(rs[0].lhs == 1);
    auto so = table_for("SO(5,3)");
    auto K = make_subgroup_classes(so->classes, standard_restriction_subgroup(so->classes->group()));
    auto ks = restriction_norm_check(*so, K);
    CHECK(count_verdict(ks, Verdict::NotApplicable) == so->size());
    auto rhs = restriction_rhs(3, 9, 1, false);
    CHECK(rhs.lo <= rhs.hi);
}

TEST_CASE("Levi constants and factors") {
    CHECK(levi_constant(LeviBound::Classical) == 705);
    CHECK(levi_constant(LeviBound::Standard) == 1216);
    CHECK(levi_constant(LeviBound::Derived) == 1696);
    // sqrt(705 * 9) = 79.65...
    auto f = levi_factor(705, 3, 9, 1);
    CHECK(f.lo > rpow(BigRational(3), 79));
    CHECK(f.hi < rpow(BigRational(3), 80));
    auto consts = constant_certificates();
    CHECK(count_verdict(consts, Verdict::Fail) == 0);
    CHECK(!with_id(consts, "series-53-32").empty());
}

TEST_CASE("multiplicity inequalities in informative mode") {
    auto t = table_for("GL(2,3)");
    auto rs = tensor_sigma_check(*t);
    CHECK(count_verdict(rs, Verdict::Fail) == 0);
    CHECK(count_verdict(rs, Verdict::NotApplicable) == static_cast<int>(rs.size()));
    for (const auto& r : rs) CHECK(r.lhs >= 1);
    auto pw = tensor_power_check(*table_for("Sp(4,3)"), 3);
    CHECK(count_verdict(pw, Verdict::Fail) == 0);
}

TEST_CASE("delta solver") {
    auto a = delta_solver(BigRational(99, 100));
    CHECK(a.delta_max >= BigRational(11, 10000));
    CHECK(delta_feasible(BigRational(99, 100), a.delta_max));
    CHECK(!delta_feasible(BigRational(99, 100), a.delta_max + BigRational(1, 1000000)));
    auto b = delta_solver(BigRational(9, 10));
    CHECK(b.delta_max >= BigRational(36, 100000));
    auto near = delta_solver(BigRational(8001, 10000));
    CHECK(near.delta_max < BigRational(1, 100000));
    CHECK(near.delta_max < b.delta_max);
    CHECK_THROWS_AS(delta_solver(BigRational(4, 5)), std::invalid_argument);
    CHECK_THROWS_AS(delta_solver(BigRational(1)), std::invalid_argument);
}

TEST_CASE("epsilon composition") {
    auto e = epsilon_composition(BigRational(992, 1000));
    CHECK(e.epsilon_star == BigRational(99, 100));
    CHECK(e.delta == BigRational(11, 10000));
    auto f = epsilon_composition(BigRational(9, 10));
    CHECK(f.epsilon_star == BigRational(85, 100));
    CHECK(f.delta > 0);
    CHECK_THROWS(epsilon_composition(BigRational(4, 5)));
}

TEST_CASE("character bound predicates") {
    for (const char* g : {"SL(2,3)", "Sp(4,3)", "SO+(4,3)", "GU(2,2)"}) {
        auto t = table_for(g);
        CHECK(schur_bound_check(*t).verdict == Verdict::Pass);
        auto r = character_bound_check(*t, "gamma", 4, BigRational(99, 100), BigRational(11, 10000));
        CHECK(r.verdict == Verdict::NotApplicable);
    }
    auto w = weil_value_check(*table_for("Sp(2,3)"), BigRational(11, 10000));
    CHECK(count_verdict(w, Verdict::Fail) == 0);
}

TEST_CASE("spin thresholds") {
    CHECK(*spin_threshold(SpinCase::SOEven, 4, 3).value == 486);
    CHECK(*spin_threshold(SpinCase::SpinOdd, 2, 3).value == BigRational(27, 4));
    auto so = table_for("SO+(4,3)");
    auto O = make_subgroup_classes(so->classes, derived_subgroup(so->classes->group()));
    auto rs = spin_reducibility_check(*so, O);
    CHECK(count_verdict(rs, Verdict::Fail) == 0);
}

TEST_CASE("orthogonal order bound") {
    CHECK(count_verdict(orthogonal_order_check(6, {3, 5, 7}), Verdict::Fail) == 0);
    CHECK(count_verdict(restriction_tail_check({2, 3}, 10), Verdict::Fail) == 0);
}

TEST_CASE("certified rounding never flips with precision") {
    auto lo = restriction_rhs(3, 4, 2, true, 64), hi = restriction_rhs(3, 4, 2, true, 256);
    CHECK(lo.lo <= hi.lo);
    CHECK(hi.hi <= lo.hi);
    CHECK(hi.lo <= hi.hi);
}

}
