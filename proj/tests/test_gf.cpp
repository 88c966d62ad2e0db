#include <doctest.h>

#include <random>

#include "cclab/classes.hpp"
#include "cclab/gf.hpp"

using namespace cclab;

TEST_SUITE("gf-arith") {

TEST_CASE("prime field uses the identity encoding") {
    auto F = Field::make(3, 1);
    CHECK(F->q() == 3);
    CHECK(F->mul(2, 2) == 1);
    CHECK(F->add(2, 2) == 1);
}

TEST_CASE("F4 modulus is x^2 + x + 1") {
    auto F = Field::make(2, 2);
    CHECK(F->spec().modulus == std::vector<int>{1, 1, 1});
    // the only irreducible monic quadratic over F2
    int irreducible = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) irreducible += poly_irreducible_mod_p({b, a, 1}, 2);
    CHECK(irreducible == 1);
}

TEST_CASE("F9 satisfies x^9 = x") {
    auto F = Field::make(3, 2);
    for (int x = 0; x < 9; ++x) CHECK(F->pow(x, 9) == x);
}

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 1}}) {
        auto F = Field::make(p, f);
        const int q = F->q();
        for (int a = 0; a < q; ++a) {
            if (a) CHECK(F->mul(a, F->pow(a, q - 2)) == 1);
            CHECK(F->add(a, F->neg(a)) == 0);
            for (int b = 0; b < q; ++b) {
                CHECK(F->mul(a, b) == F->mul(b, a));
                CHECK(F->sub(F->add(a, b), b) == a);
                int c = (a * 7 + b * 3) % q;
                CHECK(F->mul(F->add(a, b), c) == F->add(F->mul(a, c), F->mul(b, c)));
            }
        }
    }
}

TEST_CASE("inverse law over F_1024") {
    auto F = Field::make(2, 10);
    for (int x = 1; x < F->q(); ++x) REQUIRE(F->mul(x, F->inv(x)) == 1);
}

TEST_CASE("traces") {
    auto F9 = Field::make(3, 2);
    CHECK(F9->trace(0) == 0);
    CHECK(F9->trace(1) == 2);
    auto F4 = Field::make(2, 2);
    int g = F4->primitive();
    CHECK(F4->trace(g) == 1);
    CHECK(F4->add(g, F4->mul(g, g)) == 1);
    // trace is additive and lands in the prime field
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(F9->trace(F9->add(a, b)) == (F9->trace(a) + F9->trace(b)) % 3);
}

TEST_CASE("additive characters") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto F = Field::make(p, f);
        CHECK(F->additive_character(0) == Cyc(p, Rational(1)));
        Cyc sum(p);
        for (int x = 0; x < F->q(); ++x) sum += F->additive_character(x);
        CHECK(sum.is_zero());
    }
    auto F3 = Field::make(3, 1);
    Cyc g(3);
    for (int x = 0; x < 3; ++x) g += F3->additive_character(F3->mul(x, x));
    CHECK(abs2(g) == Rational(3));
}

TEST_CASE("cyclotomic arithmetic") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> k(0, 59), c(-5, 5);
    auto random_cyc = [&](int e) {
        Cyc x(e);
        for (int i = 0; i < 4; ++i) x += Cyc::zeta(e, k(rng)) * Rational(c(rng));
        return x;
    };
    for (int trial = 0; trial < 50; ++trial) {
        for (int e : {4, 12, 15}) {
            Cyc a = random_cyc(e), b = random_cyc(e), d = random_cyc(e);
            CHECK((a + b) * d == a * d + b * d);
            CHECK(a.conj().conj() == a);
            CHECK(abs2(Cyc::zeta(e, k(rng))) == Rational(1));
        }
    }
    CHECK(Cyc::zeta(7, 7) == Cyc(7, Rational(1)));
    // zeta_10^2 is zeta_5 after embedding
    CHECK(Cyc::zeta(10, 2) * Cyc::zeta(5, 0) == Cyc::zeta(5, 1));
    Cyc s(5);
    for (int i = 0; i < 5; ++i) s += Cyc::zeta(5, i);
    CHECK(s.is_zero());
}

}
