#include <doctest.h>

#include "cclab/level.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

TEST_SUITE("level-rank") {

TEST_CASE("trivial character has level 0; Weil constituents of Sp(2,3) have level 1") {
    auto sw = compute_levels(table_for("Sp(2,3)"));
    CHECK(sw.level(0) == 0);
    for (int i = 0; i < sw.table->size(); ++i)
        if (sw.table->degrees[i] == 1 && i != 0) CHECK(sw.level(i) >= 1);
    // degrees (q -+ 1)/2 = 1, 2: the nontrivial linear ones and the degree-2 ones
    int weil = 0;
    for (int i = 0; i < sw.table->size(); ++i)
        if (sw.level(i) == 1) {
            CHECK((sw.table->degrees[i] == 1 || sw.table->degrees[i] == 2));
            ++weil;
        }
    CHECK(weil == 4);
}

TEST_CASE("Steinberg character of SL(2,3) has level 2 or 3") {
    auto sw = compute_levels(table_for("Sp(2,3)"));
    for (int i = 0; i < sw.table->size(); ++i)
        if (sw.table->degrees[i] == 3) {
            CHECK(sw.level(i) >= 2);
            CHECK(sw.level(i) <= 3);
        }
}

TEST_CASE("levels stay inside the caps") {
    struct Case {
        const char* g;
        int cap;
    };
    for (auto [g, cap] : {Case{"Sp(2,3)", 3}, Case{"Sp(4,2)", 3}, Case{"Omega+(4,3)", 2}, Case{"Sp(4,3)", 5}}) {
        CAPTURE(g);
        auto sw = compute_levels(table_for(g));
        CHECK(level_range_check(sw).verdict == Verdict::Pass);
        for (const auto& l : sw.levels) {
            CHECK(l.level >= 0);
            CHECK(l.level <= cap);
        }
        CHECK(sw.monotone);
    }
}

TEST_CASE("level is not defined for linear groups") {
    CHECK_THROWS_AS(compute_levels(table_for("GL(2,3)")), std::invalid_argument);
}

TEST_CASE("degree bound functions") {
    CHECK(*bound_sp_odd(2, 1, 3) == 3);
    CHECK(*bound_sp_odd(1, 1, 3) == 1);
    CHECK(*bound_sp_odd(2, 0, 3) == 1);
    CHECK(upper_sp_odd(1, 1, 3) == 2);
    for (int q : {3, 5, 7, 2, 4}) {
        auto b = bound_orthogonal(8, 2, q);
        REQUIRE(b);
        BigRational expect = rpow(BigRational(q), 4) * (q - 1) * (q - 1) / (q % 2 ? 2 : 1);
        CHECK(*b == expect);
    }
}

TEST_CASE("degree bounds by level") {
    for (const char* g : {"Sp(2,3)", "Sp(4,3)", "Sp(4,2)"}) {
        CAPTURE(g);
        auto t = table_for(g);
        auto rs = degree_level_check(compute_levels(t));
        CHECK(count_verdict(rs, Verdict::Fail) == 0);
        CHECK(count_verdict(rs, Verdict::Pass) == 2 * t->size());
    }
    auto contra = degree_contrapositive_check(compute_levels(table_for("Sp(4,3)")), 4);
    CHECK(count_verdict(contra, Verdict::Fail) == 0);
}

TEST_CASE("Theta values on Sp(4,3)") {
    auto sw = compute_levels(table_for("Sp(4,3)"));
    CHECK(theta_value_check(sw).verdict == Verdict::Pass);
}

TEST_CASE("U-ranks on SO+(4,3)") {
    auto t = table_for("SO+(4,3)");
    auto rs = make_rank_setup(t->classes);
    CHECK(urank(rs, t->irr[0]).rank == 0);
    for (const auto& chi : t->irr) {
        int r = urank(rs, chi).rank;
        CHECK((r == 0 || r == 2));
    }
    CHECK(urank(rs, tau_character(t->classes)).rank == 2);
    auto sw = compute_levels(t);
    auto rl = rank_level_checks(sw, rs);
    CHECK(count_verdict(rl.reports, Verdict::Fail) == 0);
    auto mult = with_id(rl.reports, "radical-multiplicity-in-tau-power");
    REQUIRE(!mult.empty());
    for (const auto& r : mult) {
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.lhs == 24);
    }
}

TEST_CASE("rank additivity with the trivial character") {
    auto t = table_for("SO+(4,3)");
    auto rs = make_rank_setup(t->classes);
    CHECK(urank(rs, t->irr[0] * t->irr[0]).rank == 0);
}

}
