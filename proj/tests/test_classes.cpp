#include <doctest.h>

#include <algorithm>
#include <random>

#include "cclab/bounds.hpp"
#include "cclab/weil.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

TEST_SUITE("class-algebra") {

TEST_CASE("SL(2,3) class sizes") {
    auto cls = classes_for("SL(2,3)");
    std::vector<int64_t> sizes;
    for (int c = 0; c < cls->count(); ++c) sizes.push_back(cls->size(c));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int64_t>{1, 1, 4, 4, 4, 4, 6});
}

TEST_CASE("partition is a conjugation-invariant partition") {
    for (const char* g : {"SL(2,3)", "GL(2,3)", "Sp(4,2)"}) {
        auto cls = classes_for(g);
        const auto& G = *cls->group();
        int64_t total = 0;
        for (int c = 0; c < cls->count(); ++c) total += cls->size(c);
        CHECK(total == G.order());
        for (int x = 0; x < G.order(); ++x)
            for (int h : G.generators()) REQUIRE(cls->class_of(G.mul(G.mul(G.inv(h), x), h)) == cls->class_of(x));
    }
}

TEST_CASE("abelian groups have singleton classes") {
    auto cls = compute_classes(enumerate(parse_group_spec("GL(1,7)")));
    CHECK(cls->count() == 6);
    for (int c = 0; c < cls->count(); ++c) CHECK(cls->size(c) == 1);
}

TEST_CASE("inner products") {
    auto cls = classes_for("Sp(2,3)");
    auto one = ClassFunction::trivial(cls);
    CHECK(inner(one, one) == Rational(1));
    CHECK(inner(tau_character(cls), one) == Rational(2));
    auto t = table_for("Sp(4,3)");
    for (const auto& chi : t->irr) CHECK(inner(chi, chi) == Rational(1));
}

TEST_CASE("induction and restriction") {
    auto t = table_for("Sp(4,3)");
    auto H = make_subgroup_classes(t->classes, standard_restriction_subgroup(t->classes->group()));
    auto ht = build_table(H.sub);
    auto oneH = ClassFunction::trivial(H.sub);
    CHECK(induce_from(oneH, H).degree() == Cyc(t->exponent, Rational(51840 / 24)));
    CHECK(restrict_to(ClassFunction::trivial(t->classes), H) == oneH);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto& chi = t->irr[rng() % t->size()];
        const auto& phi = ht->irr[rng() % ht->size()];
        CHECK(inner(restrict_to(chi, H), phi) == inner(chi, induce_from(phi, H)));
    }
}

TEST_CASE("double cosets") {
    auto cls = classes_for("SL(2,3)");
    auto G = cls->group();
    std::vector<int> all(G->order());
    for (int i = 0; i < G->order(); ++i) all[i] = i;
    CHECK(double_cosets(make_subgroup_classes(cls, subgroup_from_ids(G, all, "G"))) == 1);
    CHECK(double_cosets(make_subgroup_classes(cls, subgroup_from_ids(G, {0}, "1"))) == 24);

    auto sp = classes_for("Sp(4,3)");
    ParabolicData pd = parabolic(sp->group(), 2);
    auto P = make_subgroup_classes(sp, subgroup_from_ids(sp->group(), pd.P, "P2"));
    auto ind = induce_from(ClassFunction::trivial(P.sub), P);
    CHECK(Rational(double_cosets(P)) == inner(ind, ind));
}

TEST_CASE("profiles") {
    auto t = table_for("Sp(2,3)");
    auto reg = profile(ClassFunction::regular(t->classes), *t);
    int64_t s = 0;
    for (auto d : t->degrees) s += d;
    CHECK(reg.sigma == s);
    auto one = profile(ClassFunction::trivial(t->classes), *t);
    CHECK(one.sigma == 1);
    CHECK(one.lambda == 1);
    auto tau = profile(tau_character(t->classes), *t);
    CHECK(tau.is_character);
    CHECK(tau.multiplicities[trivial_index(*t)] == 2);
}

TEST_CASE("class multiplication coefficients") {
    auto cls = classes_for("SL(2,3)");
    const auto& G = *cls->group();
    const int k = cls->count();
    for (int c2 = 0; c2 < k; ++c2)
        for (int c3 = 0; c3 < k; ++c3) CHECK(cls->mult_coeff(0, c2, c3) == (c2 == c3 ? 1 : 0));
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            int64_t total = 0;
            for (int c3 = 0; c3 < k; ++c3) total += cls->mult_coeff(c1, c2, c3) * cls->size(c3);
            CHECK(total == cls->size(c1) * cls->size(c2));
        }
    // brute force for the order-4 class (-1 squared gives the center)
    for (int c = 0; c < k; ++c) {
        if (cls->element_order(c) != 4) continue;
        for (int c3 = 0; c3 < k; ++c3) {
            int64_t n = 0;
            for (int x : cls->members(c))
                for (int y : cls->members(c)) n += G.mul(x, y) == cls->rep(c3);
            CHECK(cls->mult_coeff(c, c, c3) == n);
        }
    }
}

TEST_CASE("every irreducible occurs in Theta^k for k below the number of Theta values") {
    for (const char* g : {"Sp(2,3)", "SL(2,5)", "Sp(4,2)"}) {
        auto t = table_for(g);
        auto theta = theta_character(t->classes);
        std::vector<Cyc> vals(theta.values());
        int distinct = 0;
        for (size_t i = 0; i < vals.size(); ++i)
            if (std::find(vals.begin(), vals.begin() + i, vals[i]) == vals.begin() + i) ++distinct;
        std::vector<bool> seen(t->size(), false);
        ClassFunction pw = ClassFunction::trivial(t->classes);
        for (int k = 0; k < distinct; ++k) {
            for (int i = 0; i < t->size(); ++i)
                if (inner(pw, t->irr[i]) > Rational(0)) seen[i] = true;
            pw *= theta;
        }
        CAPTURE(g);
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}

}
