#include "doctest.h"

#include "equijac/poly.hpp"
#include "test_support.hpp"

using namespace equijac;

namespace {
Poly x1 = Poly::variable(Var::X1);
Poly x2 = Poly::variable(Var::X2);
Poly g5 = Poly::variable(Var::G5);
Poly g6 = Poly::variable(Var::G6);
}  // namespace

TEST_CASE("rational helpers") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(rat_from_string("3/7") == make_rat(3, 7));
    CHECK(rat_pow(make_rat(2), -4) == make_rat(1, 16));
    CHECK(rat_to_string(make_rat(-5, 3)) == "-5/3");
}

TEST_CASE("ring basics") {
    CHECK((x1 + (-x1)).is_zero());
    CHECK((x1 - x2) * (x1 + x2) == x1 * x1 - x2 * x2);
    CHECK(g6.scaled(make_rat(144)).scaled(make_rat(1, 144)) == g6);
}

TEST_CASE("partial derivative") {
    CHECK(partial(x1 * x1 * x1, Var::X1) == (x1 * x1).scaled(make_rat(3)));
    CHECK(partial(g5 * x1 * x2, Var::X2) == g5 * x1);
    CHECK(partial(g5, Var::X1).is_zero());
}

TEST_CASE("partial satisfies the Leibniz rule") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Poly a = testing::random_poly(rng), b = testing::random_poly(rng);
        for (Var v : {Var::X1, Var::G3}) {
            CHECK(partial(a * b, v) == partial(a, v) * b + a * partial(b, v));
        }
    }
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Poly a = testing::random_poly(rng), b = testing::random_poly(rng),
             c = testing::random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("division by Delta") {
    auto q = div_delta(x1 * x1 - x2 * x2);
    REQUIRE(q.has_value());
    CHECK(*q == x1 + x2);

    auto q3 = div_delta(x1 * x1 * x1 - x2 * x2 * x2);
    REQUIRE(q3.has_value());
    CHECK(*q3 == x1 * x1 + x1 * x2 + x2 * x2);

    CHECK(!div_delta(x1 + x2).has_value());
}

TEST_CASE("div_delta round-trips on random multiples") {
    std::mt19937_64 rng(13);
    Poly delta = x1 - x2;
    for (int i = 0; i < 30; ++i) {
        Poly a = testing::random_poly(rng);
        auto q = div_delta(delta * a);
        REQUIRE(q.has_value());
        CHECK((x1 - x2) * *q == delta * a);
    }
}

TEST_CASE("exact evaluation") {
    Poly g4 = Poly::variable(Var::G4);
    Poly p = g6 * g4 - g5 * g5;
    std::map<Var, Rational> vals{{Var::G6, make_rat(1)}, {Var::G5, make_rat(2)},
                                 {Var::G4, make_rat(3)}};
    CHECK(eval(p, vals) == make_rat(-1));

    std::map<Var, Rational> both{{Var::X1, make_rat(5)}, {Var::X2, make_rat(5)}};
    CHECK(eval(x1 - x2, both) == 0);
    CHECK(eval(Poly::constant(make_rat(1, 144)), {}) == make_rat(1, 144));
    CHECK_THROWS_WITH_AS(eval(g5, {}), "eval: no value for variable g5", std::invalid_argument);
}

TEST_CASE("expansion of x2 around x1") {
    // x2^2 -> x1^2 + 2 x1 t + t^2
    auto c = expand_x2_at_x1(x2 * x2, 4);
    CHECK(c[0] == x1 * x1);
    CHECK(c[1] == x1.scaled(make_rat(2)));
    CHECK(c[2] == Poly::constant(1));
    CHECK(c[3].is_zero());
}

TEST_CASE("division by the sextic") {
    Poly f;  // assemble f(x1) directly from its definition elsewhere is tested in curve tests
    static const long binom[7] = {1, 6, 15, 20, 15, 6, 1};
    for (int k = 0; k <= 6; ++k) {
        Mono m{};
        m[0] = static_cast<std::uint16_t>(k);
        m[static_cast<int>(g_var(k))] = 1;
        f += Poly::monomial(m, make_rat(binom[k]));
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        Poly a = testing::random_poly(rng);
        auto q = div_sextic_x1(f * a);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK(!div_sextic_x1(x1).has_value());
    CHECK(!div_sextic_x1(f + Poly::constant(1)).has_value());
}

TEST_CASE("graded-lex order and printing") {
    Poly p = x1 * x1 + x2.scaled(make_rat(3)) - Poly::constant(2);
    CHECK(p.to_string() == "x1^2 + 3*x2 - 2");
}
