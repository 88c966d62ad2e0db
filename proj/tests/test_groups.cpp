#include <doctest.h>

#include <functional>
#include <set>

#include "cclab/bounds.hpp"
#include "cclab/config.hpp"
#include "cclab/groups.hpp"

using namespace cclab;

namespace {

// closed forms written out independently of group_order()
BigInt prod(int from, int to, const std::function<BigInt(int)>& f) {
    BigInt r = 1;
    for (int i = from; i <= to; ++i) r *= f(i);
    return r;
}

BigInt oracle_order(const GroupSpec& s) {
    const BigInt q = s.q;
    auto qp = [&](int e) { return boost::multiprecision::pow(q, static_cast<unsigned>(e)); };
    const int n = s.dim, m = n / 2;
    const BigInt gl = qp(n * (n - 1) / 2) * prod(1, n, [&](int i) { return qp(i) - 1; });
    const BigInt gu = qp(n * (n - 1) / 2) * prod(1, n, [&](int i) { return qp(i) - (i % 2 ? -1 : 1); });
    const int odd_q = s.q % 2;
    switch (s.family) {
        case Family::GL: return gl;
        case Family::SL: return gl / (q - 1);
        case Family::GU: return gu;
        case Family::SU: return gu / (q + 1);
        case Family::Sp: return qp(m * m) * prod(1, m, [&](int i) { return qp(2 * i) - 1; });
        default: break;
    }
    BigInt go;
    if (n % 2) go = 2 * qp(m * m) * prod(1, m, [&](int i) { return qp(2 * i) - 1; });
    else go = 2 * qp(m * (m - 1)) * (qp(m) - s.sign) * prod(1, m - 1, [&](int i) { return qp(2 * i) - 1; });
    if (s.family == Family::GO) return go;
    if (s.family == Family::SO) return odd_q ? go / 2 : go;
    return odd_q ? go / 4 : go / 2;  // Omega
}

}  // namespace

TEST_SUITE("classical-groups") {

TEST_CASE("enumerated orders match closed forms") {
    for (const char* t : {"GL(1,5)", "GL(2,3)", "GL(3,2)", "SL(2,3)", "SL(2,5)", "SL(2,7)", "GU(2,2)", "SU(2,3)",
                          "Sp(2,3)", "Sp(4,2)", "Sp(4,3)", "SO(3,3)", "SO(5,3)", "SO+(4,3)", "SO-(4,3)", "GO+(4,3)",
                          "GO-(4,2)", "Omega+(4,3)", "Omega-(4,3)", "SO+(4,2)"}) {
        CAPTURE(t);
        GroupSpec s = parse_group_spec(t);
        auto G = enumerate(s);
        CHECK(BigInt(G->order()) == oracle_order(s));
        CHECK(group_order(s) == oracle_order(s));
    }
    CHECK(group_order(parse_group_spec("Sp(2,3)")) == 24);
    CHECK(group_order(parse_group_spec("SO+(4,3)")) == 576);
    CHECK(group_order(parse_group_spec("Sp(4,2)")) == 720);
    CHECK(group_order(parse_group_spec("Sp(4,3)")) == 51840);
    CHECK(group_order(parse_group_spec("GL(1,7)")) == 6);
}

TEST_CASE("identity is id 0, inverses are an involution, elements preserve the form") {
    for (const char* t : {"SL(2,3)", "Sp(4,2)", "SO+(4,3)", "GU(2,2)", "SO(5,3)"}) {
        CAPTURE(t);
        auto G = enumerate(parse_group_spec(t));
        CHECK(G->element(0) == mat_identity(G->dim()));
        for (int a = 0; a < G->order(); ++a) {
            REQUIRE(G->inv(G->inv(a)) == a);
            REQUIRE(G->mul(a, G->inv(a)) == 0);
        }
        for (int a = 0; a < G->order(); a += 7) CHECK(preserves_form(G->field(), G->form(), G->element(a), G->q()));
    }
}

TEST_CASE("budget overruns throw") {
    CHECK_THROWS_AS(enumerate(parse_group_spec("Sp(4,3)"), 1000), TooLargeError);
}

TEST_CASE("standard subgroups") {
    auto sp = enumerate(parse_group_spec("Sp(4,3)"));
    CHECK(standard_restriction_subgroup(sp).group->order() == 24);
    CHECK(siegel_levi(sp).group->order() == 48);
    auto so = enumerate(parse_group_spec("SO+(4,3)"));
    auto D = derived_subgroup(so);
    CHECK(so->order() / D.group->order() == 2);
    CHECK(D.group->order() == enumerate(parse_group_spec("Omega+(4,3)"))->order());
}

TEST_CASE("parabolic data") {
    auto so = enumerate(parse_group_spec("SO+(4,3)"));
    CHECK(parabolic(so, 2).Z.size() == 3);
    CHECK(parabolic(so, 1).Z.size() == 1);
    auto sp = enumerate(parse_group_spec("Sp(4,3)"));
    ParabolicData p2 = parabolic(sp, 2);
    CHECK(p2.U.size() == 27);
    CHECK(p2.Z.size() == 27);  // Siegel radical is abelian
    for (const GroupPtr& G : {sp, so})
        for (int j = 1; j <= 2; ++j) {
            ParabolicData pd = parabolic(G, j);
            CHECK(pd.P.size() == pd.U.size() * pd.L.size());
            std::set<int> U(pd.U.begin(), pd.U.end());
            int common = 0;
            for (int l : pd.L) common += U.count(l);
            CHECK(common == 1);
            for (int z : pd.Z)
                for (int u : pd.U) REQUIRE(G->mul(z, u) == G->mul(u, z));
        }
}

TEST_CASE("fixed space dimensions") {
    auto F = Field::make(3, 1);
    Mat I = mat_identity(4);
    CHECK(fixed_space_dims(*F, I, 4) == std::pair<int, int>{4, 0});
    CHECK(fixed_space_dims(*F, mat_scale(*F, F->neg(1), I), 4) == std::pair<int, int>{0, 4});
    // x -> x + B(x, u_1) u_1 sends v_1 to v_1 - u_1
    auto sp = enumerate(parse_group_spec("Sp(4,3)"));
    Mat t = mat_identity(4);
    t[0 * 4 + 2] = F->neg(1);
    REQUIRE(sp->find(t) >= 0);
    CHECK(fixed_space_dims(*F, t, 4) == std::pair<int, int>{3, 0});
}

TEST_CASE("vectors with equal form data form one orbit") {
    // Sp: all nonzero vectors; GO: nonzero vectors split by Q value
    CHECK(orbit_count_enumerated(*enumerate(parse_group_spec("Sp(4,3)")), 1) == 2);
    CHECK(orbit_count_enumerated(*enumerate(parse_group_spec("GO+(4,3)")), 1) == 4);
    CHECK(orbit_count_enumerated(*enumerate(parse_group_spec("GO-(4,3)")), 1) == 4);
}

}
