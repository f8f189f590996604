#include "doctest.h"

#include "equijac/curve.hpp"
#include "test_support.hpp"

using namespace equijac;

TEST_CASE("sextic") {
    // All g_k = 1 at x1 = 1 gives the binomial sum (1+1)^6 = 64.
    std::map<Var, Rational> vals{{Var::X1, make_rat(1)}};
    for (int k = 0; k <= 6; ++k) vals[g_var(k)] = make_rat(1);
    CHECK(eval(curve_sextic(1), vals) == make_rat(64));

    CHECK(coefficient_of(coefficient_of(curve_sextic(1), Var::X1, 5), Var::G5, 1) ==
          Poly::constant(6));

    Poly just_g6 = coefficient_of(curve_sextic(2), Var::G6, 1);
    Mono m{};
    m[1] = 6;
    CHECK(just_g6 == Poly::monomial(m, Rational(1)));
}

TEST_CASE("polar form") {
    Poly F = polar_form();
    // Coefficient of g3: x1^3 + 9 x1^2 x2 + 9 x1 x2^2 + x2^3.
    Poly x1 = Poly::variable(Var::X1), x2 = Poly::variable(Var::X2);
    Poly expect = x1 * x1 * x1 + (x1 * x1 * x2).scaled(make_rat(9)) +
                  (x1 * x2 * x2).scaled(make_rat(9)) + x2 * x2 * x2;
    CHECK(coefficient_of(F, Var::G3, 1) == expect);
    // Coefficient of g6: x1^3 x2^3.
    CHECK(coefficient_of(F, Var::G6, 1) == x1 * x1 * x1 * x2 * x2 * x2);

    // F(x,x) = f(x): substitute x2 -> x1 via the expansion helper at t^0.
    CHECK(expand_x2_at_x1(F, 0)[0] == expand_x2_at_x1(curve_sextic(1), 0)[0]);

    // dF/dx2 at x2 = x1 equals f'(x1)/2 (polarization symmetry).
    CHECK(expand_x2_at_x1(partial(F, Var::X2), 0)[0] ==
          partial(curve_sextic(1), Var::X1).scaled(make_rat(1, 2)));
}

TEST_CASE("curve element reduction and normalization") {
    CurveElement y1 = CurveElement::y1();
    CurveElement sq = y1 * y1;
    CHECK(sq.a() == curve_sextic(1));
    CHECK(sq.b().is_zero());

    // ((x1-x2) * 1) / Delta -> 1
    CurveElement u(delta_poly(), {}, {}, {}, 1);
    CHECK(u == CurveElement::one());

    // (x1^2 - x2^2) / Delta^2 -> (x1+x2)/Delta
    Poly x1 = Poly::variable(Var::X1), x2 = Poly::variable(Var::X2);
    CurveElement v(x1 * x1 - x2 * x2, {}, {}, {}, 2);
    CHECK(v.delta_pow() == 1);
    CHECK(v.a() == x1 + x2);

    // I = (F - y1 y2)/Delta^3 stays put: d = -1 blocks cancellation.
    CurveElement I = invariant_I();
    CHECK(I.delta_pow() == 3);
    CHECK(I.d() == Poly::constant(-1));

    // 1/Delta^2 * 1/Delta^2 = 1/Delta^4
    CurveElement d2({}, {}, {}, {}, 0);
    CurveElement q(Poly::constant(1), {}, {}, {}, 2);
    CHECK((q * q).delta_pow() == 4);

    CurveElement w({}, Poly::constant(1), {}, {}, 1);
    CHECK((w - w).is_zero());
}

TEST_CASE("multiplication is associative and commutative") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        CurveElement a = testing::random_element(rng), b = testing::random_element(rng),
                     c = testing::random_element(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("curve derivative basics") {
    // CD1(y1) = f'(x1)/2
    CurveElement cd = curve_deriv(1, CurveElement::y1());
    CHECK(cd.delta_pow() == 0);
    CHECK(cd.a() == partial(curve_sextic(1), Var::X1).scaled(make_rat(1, 2)));
    CHECK(cd.b().is_zero());

    // CD1(x1) = y1
    CurveElement cx = curve_deriv(1, CurveElement::from_poly(Poly::variable(Var::X1)));
    CHECK(cx == CurveElement::y1());

    // CD1 applied to the reduced square of y1 equals CD1 of f(x1) = y1 f'(x1).
    CurveElement ysq = CurveElement::y1() * CurveElement::y1();
    CurveElement lhs = curve_deriv(1, ysq);
    CurveElement rhs = CurveElement::y1() *
                       CurveElement::from_poly(partial(curve_sextic(1), Var::X1));
    CHECK(lhs == rhs);
}

TEST_CASE("curve derivative power rule") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 6; ++i) {
        CurveElement u = testing::random_element(rng, 1);
        for (int which : {1, 2}) {
            CurveElement cd_u = curve_deriv(which, u);
            CurveElement u2 = u * u;
            CHECK(curve_deriv(which, u2) == (u * cd_u).scaled(make_rat(2)));
            CHECK(curve_deriv(which, u2 * u) == (u2 * cd_u).scaled(make_rat(3)));
        }
    }
}
