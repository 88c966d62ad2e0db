#include <doctest.h>

#include "cclab/apps.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

namespace {

int class_with_order(const ClassPartition& cls, int order) {
    for (int c = 0; c < cls.count(); ++c)
        if (cls.element_order(c) == order) return c;
    return -1;
}

}  // namespace

TEST_SUITE("applications") {

TEST_CASE("walk distributions") {
    auto t = table_for("SL(2,3)");
    const auto& cls = *t->classes;
    const int c = class_with_order(cls, 4);
    auto p0 = walk_distribution(*t, c, 0);
    CHECK(p0[0] == 1);
    for (int k = 1; k < cls.count(); ++k) CHECK(p0[k] == 0);
    for (int steps = 1; steps <= 6; ++steps) {
        auto p = walk_distribution(*t, c, steps);
        BigRational total = 0;
        for (int k = 0; k < cls.count(); ++k) {
            CHECK(p[k] >= 0);
            total += p[k] * cls.size(k);
        }
        CHECK(total == 1);
    }
    // two steps by brute force over pairs of class members
    auto p2 = walk_distribution(*t, c, 2);
    const auto& G = *cls.group();
    auto members = cls.members(c);
    std::vector<int64_t> hits(G.order(), 0);
    for (int x : members)
        for (int y : members) ++hits[G.mul(x, y)];
    for (int k = 0; k < cls.count(); ++k)
        CHECK(p2[k] == BigRational(hits[cls.rep(k)], static_cast<int64_t>(members.size() * members.size())));
}

TEST_CASE("mixing bounds") {
    auto t = table_for("SL(2,5)");
    const int c = class_with_order(*t->classes, 5);
    WalkReport w = mixing_bounds(*t, c, 20);
    CHECK(count_verdict(w.reports, Verdict::Fail) == 0);
    for (const auto& s : w.steps) {
        CHECK(s.ds_bound >= s.l1 * s.l1);
        CHECK(s.linf_bound.hi >= s.linf);
    }
    CHECK(w.steps.back().l1 < BigRational(1, 20));
    CHECK(w.steps.back().l1 < w.steps[2].l1);
    CHECK(w.mixing_time.has_value());
    auto central = mixing_bounds(*t, class_with_order(*t->classes, 2), 2);
    CHECK(central.degenerate);
}

TEST_CASE("Witten zeta") {
    auto t = table_for("SL(2,5)");
    CHECK(witten_zeta(*t, 0) == 9);
    BigRational expect = 1 + BigRational(2, 4) + BigRational(2, 9) + BigRational(2, 16) + BigRational(1, 25) +
                         BigRational(1, 36);
    CHECK(witten_zeta(*t, 2) == expect);
    BigRational prev = witten_zeta(*t, 1);
    for (long s = 2; s < 8; ++s) {
        BigRational z = witten_zeta(*t, s);
        CHECK(z < prev);
        CHECK(z > 1);
        prev = z;
    }
    auto half = witten_zeta_bounds(*t, BigRational(3, 2));
    CHECK(half.lo < witten_zeta(*t, 1));
    CHECK(half.hi > witten_zeta(*t, 2));
}

TEST_CASE("product-one counts agree with enumeration") {
    auto t = table_for("SL(2,3)");
    const auto& cls = *t->classes;
    for (int a = 0; a < cls.count(); ++a)
        for (int b = 0; b < cls.count(); ++b) {
            BigInt n = product_one_count(*t, {a, b});
            CHECK(n == (b == cls.inverse_class(a) ? BigInt(cls.size(a)) : BigInt(0)));
        }
    const int c = class_with_order(cls, 4);
    CHECK(product_one_count(*t, {c, c, c}) == product_one_bruteforce(cls, {c, c, c}));
    auto t5 = table_for("SL(2,5)");
    auto rep = product_one_report(*t5, {3, 4, 5});
    REQUIRE(rep.brute);
    CHECK(*rep.brute == rep.count);
    CHECK(count_verdict(rep.reports, Verdict::Fail) == 0);
    CHECK_THROWS_AS(product_one_bruteforce(*t5->classes, {5, 5, 5, 5}, 10), BudgetError);
}

TEST_CASE("projection bound") {
    auto t = table_for("SL(2,5)");
    for (int a = 1; a < t->size(); ++a)
        for (int b = a; b < t->size(); ++b) {
            auto rep = product_one_report(*t, {a, b, a}, false);
            for (const auto& r : with_id(rep.reports, "product-one-projection")) CHECK(r.verdict == Verdict::Pass);
        }
}

TEST_CASE("SL2 dimension experiment rows") {
    auto ex = sl2_dimension_experiment({5}, {3});
    bool unipotent_seen = false;
    for (const auto& row : ex.rows) {
        CHECK(row.count >= 0);
        if (!row.regular_semisimple) unipotent_seen = true;
    }
    CHECK(unipotent_seen);
    auto three = sl2_dimension_experiment({3}, {3});
    bool coincidence = false;
    for (const auto& row : three.rows)
        if (!row.regular_semisimple && row.eigenvalue_coincidence) coincidence = true;
    CHECK(coincidence);
}

TEST_CASE("m0 condition") {
    CHECK(m0_condition(4, 4, 1000) <= 7);
    CHECK(m0_condition(8, 29, 30) == 3);
    CHECK(m0_condition(3, 3, 2) > 0);
    CHECK(m0_check(2, 2, 6).verdict == Verdict::Pass);
    CHECK_THROWS_AS(m0_condition(0, 1, 1), std::invalid_argument);
}

}
