#include <doctest.h>

#include <random>

#include "cclab/weil.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

namespace {

int class_with_order(const ClassPartition& cls, int order) {
    for (int c = 0; c < cls.count(); ++c)
        if (cls.element_order(c) == order) return c;
    return -1;
}

Cyc rat(const ClassFunction& f, int64_t v) { return Cyc(f.classes()->exponent(), Rational(v)); }

}  // namespace

TEST_SUITE("weil-characters") {

TEST_CASE("tau and zeta on Sp(2,3)") {
    auto cls = classes_for("Sp(2,3)");
    auto tau = tau_character(cls), zeta = zeta_character(cls);
    CHECK(tau[0] == rat(tau, 9));
    CHECK(zeta[0] == rat(zeta, 9));
    const int minus_one = class_with_order(*cls, 2), u = class_with_order(*cls, 3);
    REQUIRE(minus_one >= 0);
    REQUIRE(u >= 0);
    CHECK(tau[minus_one] == rat(tau, 1));
    CHECK(tau[u] == rat(tau, 3));
    CHECK(zeta[u] == rat(zeta, -3));
    CHECK((tau + zeta)[u].is_zero());
}

TEST_CASE("zeta equals tau on SO+(4,3)") {
    auto cls = classes_for("SO+(4,3)");
    CHECK(tau_character(cls) == zeta_character(cls));
}

TEST_CASE("Theta on Sp(2,3)") {
    auto cls = classes_for("Sp(2,3)");
    auto theta = theta_character(cls);
    CHECK(theta[0] == rat(theta, 6));
    const int u = class_with_order(*cls, 3);
    CHECK(theta[u].is_zero());
    CHECK((theta * theta)[u] == (tau_character(cls) + zeta_character(cls))[u] * Rational(2));
    for (int c = 1; c < cls->count(); ++c) CHECK(theta[c] != theta[0]);
}

TEST_CASE("omega + omega* splits into four constituents of degrees (q^n +- 1)/2") {
    for (const char* g : {"Sp(2,3)", "Sp(2,5)", "Sp(4,3)"}) {
        CAPTURE(g);
        auto t = table_for(g);
        const int64_t qn = g == std::string("Sp(4,3)") ? 9 : parse_group_spec(g).q;
        auto p = profile(weil_character(t->classes, false) + weil_character(t->classes, true), *t);
        REQUIRE(p.is_character);
        std::vector<int64_t> degs;
        for (int i = 0; i < t->size(); ++i)
            for (int64_t k = 0; k < p.multiplicities[i]; ++k) degs.push_back(t->degrees[i]);
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<int64_t>{(qn - 1) / 2, (qn - 1) / 2, (qn + 1) / 2, (qn + 1) / 2});
        CHECK(p.sigma == 4);
    }
}

TEST_CASE("product identities by q mod 4") {
    // q = 5: omega^2 = tau, omega omega* = zeta; q = 3: the other way round
    for (const char* g : {"Sp(2,5)", "Sp(2,3)", "Sp(4,3)"}) {
        CAPTURE(g);
        auto cls = classes_for(g);
        auto w = weil_character(cls, false), ws = weil_character(cls, true);
        auto tau = tau_character(cls), zeta = zeta_character(cls);
        const bool one_mod_4 = parse_group_spec(g).q % 4 == 1;
        CHECK(w * w == (one_mod_4 ? tau : zeta));
        CHECK(ws * ws == (one_mod_4 ? tau : zeta));
        CHECK(w * ws == (one_mod_4 ? zeta : tau));
        CHECK(w * w.conj() == tau);
    }
}

TEST_CASE("model operators") {
    auto F = Field::make(3, 1);
    WeilModel M(F, 1, false);
    CHECK(M.dim() == 3);
    auto id = M.op(mat_identity(2));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(id[r * 3 + c] == (r == c ? Cyc(3, Rational(1)) : Cyc(3)));
    CHECK(M.trace(mat_identity(2)) == Cyc(3, Rational(3)));

    auto G = classes_for("Sp(2,3)")->group();
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int g = rng() % G->order(), h = rng() % G->order();
        auto lhs = M.op(G->element(G->mul(g, h)));
        auto rhs = op_multiply(M.op(G->element(g)), M.op(G->element(h)), M.dim());
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("trace norms on Sp(4,3)") {
    auto G = classes_for("Sp(4,3)")->group();
    WeilModel M(G->field_ptr(), 2, false);
    for (int g = 0; g < G->order(); g += 13) {
        auto [k, _] = fixed_space_dims(G->field(), G->element(g), 4);
        int64_t pw = 1;
        for (int i = 0; i < k; ++i) pw *= 3;
        REQUIRE(abs2(M.trace(G->element(g))) == Rational(pw));
    }
}

TEST_CASE("model check report") {
    auto rs = weil_model_check(classes_for("Sp(2,3)"), 1000);
    CHECK(count_verdict(rs, Verdict::Fail) == 0);
    auto hom = with_id(rs, "weil-homomorphism");
    REQUIRE(!hom.empty());
    CHECK(hom[0].verdict == Verdict::Pass);
}

TEST_CASE("dual pair restriction is a power of tau") {
    auto G = classes_for("SO+(4,3)");
    auto S = classes_for("Sp(2,3)");
    DualPair dp = make_dual_pair(G, S);
    CHECK(dp.model->dim() == 81);
    auto tau = tau_character(G);
    CHECK(dual_pair_restriction_to_G(dp) == tau);
    // D_1(1) counts the S-invariants of the model
    auto one = ClassFunction::trivial(S);
    auto D1 = dual_pair_component(dp, one);
    CHECK(D1.degree().is_rational());
    CHECK(D1.degree().rational_value() > Rational(0));
}

}
