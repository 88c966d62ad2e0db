#include <doctest.h>

#include "cclab/bounds.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;

TEST_SUITE("char-table") {

TEST_CASE("degree multisets") {
    CHECK(degree_list(*table_for("SL(2,3)")) == std::vector<int64_t>{1, 1, 1, 2, 2, 2, 3});
    CHECK(degree_list(*table_for("SL(2,5)")) == std::vector<int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
    CHECK(table_for("Sp(4,3)")->size() == 34);
}

TEST_CASE("cyclic group has the powers of zeta_n as characters") {
    auto t = build_table(compute_classes(enumerate(parse_group_spec("GL(1,7)"))));
    REQUIRE(t->size() == 6);
    const auto& G = t->group();
    const int g = G.generators().front();
    REQUIRE(G.element_order(g) == 6);
    for (const auto& chi : t->irr) {
        CHECK(chi.degree() == Cyc(t->exponent, Rational(1)));
        // chi(g^k) = chi(g)^k, chi(g) a 6th root of unity
        Cyc z = chi[t->classes->class_of(g)];
        Cyc acc(t->exponent, Rational(1));
        for (int k = 0; k < 6; ++k) {
            CHECK(chi[t->classes->class_of(G.pow(g, k))] == acc);
            acc *= z;
        }
        CHECK(acc == Cyc(t->exponent, Rational(1)));
    }
}

TEST_CASE("table invariants on the catalog") {
    for (const char* g : {"SL(2,3)", "SL(2,5)", "SL(2,7)", "GL(2,3)", "GL(3,2)", "GU(2,2)", "Sp(4,2)", "SO+(4,3)",
                          "Omega+(4,3)", "SO-(4,3)"}) {
        CAPTURE(g);
        auto t = table_for(g);
        TableCheck chk = verify_table(*t);
        CHECK(chk.ok());
        for (auto d : t->degrees) CHECK(t->group().order() % d == 0);
        CHECK(trivial_index(*t) == 0);
    }
}

TEST_CASE("irreducible count bound") {
    auto sp = irr_count_check(*table_for("Sp(4,3)"));
    CHECK(sp.verdict == Verdict::Pass);
    CHECK(sp.lhs == 34);
    CHECK(sp.rhs == BigRational(1368, 10));
    auto s2 = irr_count_check(*table_for("Sp(2,3)"));
    CHECK(s2.verdict == Verdict::Pass);
    CHECK(s2.lhs == 7);
    auto so = irr_count_check(*table_for("SO(5,3)"));
    CHECK(so.verdict != Verdict::Fail);
    CHECK(so.rhs == BigRational(73 * 9, 10));
}

TEST_CASE("smallest nontrivial degree") {
    auto t = table_for("SL(2,5)");
    int64_t m = 0;
    for (auto d : t->degrees)
        if (d > 1 && (m == 0 || d < m)) m = d;
    CHECK(m == 2);
    auto sp = min_degree_check(*table_for("Sp(4,3)"));
    auto weil = with_id(sp, "min-degree-weil");
    REQUIRE(weil.size() == 1);
    CHECK(weil[0].verdict == Verdict::Pass);
    CHECK(weil[0].lhs == 4);  // (3^2 - 1)/2
    auto trivial = min_degree_check(*build_table(compute_classes(enumerate(parse_group_spec("GL(1,2)")))));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].verdict == Verdict::Pass);
}

}
