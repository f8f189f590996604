#include "doctest.h"

#include "equijac/sl2.hpp"
#include "test_support.hpp"

using namespace equijac;

namespace {

CurveElement over_delta(const Poly& p, int k) { return CurveElement(p, {}, {}, {}, k); }

}  // namespace

TEST_CASE("derivation values on generators") {
    // e(1/Delta^2) = 0
    CurveElement d2 = over_delta(Poly::constant(1), 2);
    CHECK(sl2_e(d2).is_zero());
    CHECK(sl2_h(d2) == d2.scaled(make_rat(4)));

    // h((y1-y2)/Delta^3) = 3 (y1-y2)/Delta^3
    CurveElement p4hw({}, Poly::constant(1), Poly::constant(-1), {}, 3);
    CHECK(sl2_h(p4hw) == p4hw.scaled(make_rat(3)));
    CHECK(sl2_e(p4hw).is_zero());

    // e(g6 g4 - g5^2) = 0
    Poly g4 = Poly::variable(Var::G4), g5 = Poly::variable(Var::G5), g6 = Poly::variable(Var::G6);
    CHECK(sl2_apply(Gen::E, g6 * g4 - g5 * g5).is_zero());

    // The invariant I is killed by all three generators.
    CurveElement I = invariant_I();
    CHECK(sl2_e(I).is_zero());
    CHECK(sl2_h(I).is_zero());
    CHECK(sl2_f(I).is_zero());
}

TEST_CASE("commutators [e,f]=h, [h,e]=2e, [h,f]=-2f") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 8; ++i) {
        CurveElement u = testing::random_element(rng);
        CHECK(sl2_e(sl2_f(u)) - sl2_f(sl2_e(u)) == sl2_h(u));
        CHECK(sl2_h(sl2_e(u)) - sl2_e(sl2_h(u)) == sl2_e(u).scaled(make_rat(2)));
        CHECK(sl2_h(sl2_f(u)) - sl2_f(sl2_h(u)) == sl2_f(u).scaled(make_rat(-2)));
    }
}

TEST_CASE("derivations satisfy the Leibniz rule") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 8; ++i) {
        CurveElement u = testing::random_element(rng), v = testing::random_element(rng);
        for (Gen g : {Gen::E, Gen::H, Gen::F}) {
            CHECK(sl2_apply(g, u * v) == sl2_apply(g, u) * v + u * sl2_apply(g, v));
        }
    }
}

TEST_CASE("orbit of the g module") {
    IrrModule G = expand_orbit(CurveElement::from_poly(Poly::variable(Var::G6)), 7, "G");
    check_module_laws(G);
    // v_i = (-1)^i C(6,i) g_{6-i}
    static const long binom[7] = {1, 6, 15, 20, 15, 6, 1};
    for (int i = 0; i <= 6; ++i) {
        Rational c = make_rat((i % 2 ? -1 : 1) * binom[i]);
        CHECK(G.basis[i] == CurveElement::from_poly(Poly::variable(g_var(6 - i)).scaled(c)));
    }
}

TEST_CASE("orbit precondition failures are reported") {
    CHECK_THROWS(expand_orbit(over_delta(Poly::constant(1), 2), 4));  // wrong weight
    CHECK_THROWS(expand_orbit(CurveElement::y1(), 3));                // not e-annihilated? e(y1)=0
}

TEST_CASE("hw_tensor anchors") {
    IrrModule P5 = expand_orbit(over_delta(Poly::constant(1), 2), 5, "P5");
    check_module_laws(P5);

    // [P5 (.) P5]_1 = 1/144
    CurveElement c = hw_tensor(P5, P5, 4);
    CHECK(c.is_constant());
    CHECK(c.constant_value() == make_rat(1, 144));

    // Odd projections of a module with itself vanish identically.
    CHECK(hw_tensor(P5, P5, 1).is_zero());
    CHECK(hw_tensor(P5, P5, 3).is_zero());

    IrrModule G = expand_orbit(CurveElement::from_poly(Poly::variable(Var::G6)), 7, "G");
    Poly g0 = Poly::variable(Var::G0), g1 = Poly::variable(Var::G1), g2 = Poly::variable(Var::G2),
         g3 = Poly::variable(Var::G3), g4 = Poly::variable(Var::G4), g5 = Poly::variable(Var::G5),
         g6 = Poly::variable(Var::G6);
    CHECK(hw_tensor(G, G, 2) == CurveElement::from_poly(g6 * g4 - g5 * g5));
    CHECK(hw_tensor(G, G, 6) ==
          CurveElement::from_poly(
              (g6 * g0 - (g5 * g1).scaled(make_rat(6)) + (g4 * g2).scaled(make_rat(15)) -
               (g3 * g3).scaled(make_rat(10)))
                  .scaled(make_rat(1, 360))));

    // hw_tensor(U, V, 0) is the product of the highest-weight elements.
    CHECK(hw_tensor(G, P5, 0) == P5.hw() * G.hw());
}

TEST_CASE("hw_tensor results are e-annihilated") {
    IrrModule P5 = expand_orbit(over_delta(Poly::constant(1), 2), 5, "P5");
    IrrModule G = expand_orbit(CurveElement::from_poly(Poly::variable(Var::G6)), 7, "G");
    for (int p = 0; p <= 4; ++p) {
        CurveElement t = hw_tensor(G, P5, p);
        CHECK(sl2_e(t).is_zero());
        if (!t.is_zero()) CHECK(sl2_h(t) == t.scaled(make_rat(7 + 5 - 2 * p - 2)));
    }
}

TEST_CASE("e-kernel weight spaces") {
    auto k28 = e_kernel_weight_space(2, 8);
    REQUIRE(k28.size() == 1);
    Poly g4 = Poly::variable(Var::G4), g5 = Poly::variable(Var::G5), g6 = Poly::variable(Var::G6);
    // Normalized to integer content with positive leading coefficient.
    CHECK(k28[0] == g6 * g4 - g5 * g5);

    CHECK(e_kernel_weight_space(3, 10).size() == 1);
    CHECK(e_kernel_weight_space(3, 6).size() == 2);
    CHECK(e_kernel_weight_space(3, 12).size() == 1);
    // The true V13 cubic highest weight: g6^2 g3 - 3 g6 g5 g4 + 2 g5^3.
    Poly g3 = Poly::variable(Var::G3);
    CHECK(e_kernel_weight_space(3, 12)[0] ==
          g6 * g6 * g3 - (g6 * g5 * g4).scaled(make_rat(3)) + (g5 * g5 * g5).scaled(make_rat(2)));

    CHECK_THROWS(e_kernel_weight_space(2, 13));
}
