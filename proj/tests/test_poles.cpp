#include "doctest.h"

#include "equijac/poles.hpp"
#include "equijac/sl2.hpp"
#include "test_support.hpp"

using namespace equijac;

namespace {
CurveElement over_delta(const Poly& p, int k) { return CurveElement(p, {}, {}, {}, k); }
}  // namespace

TEST_CASE("y series") {
    auto c = y_series(4);
    // c0 = y1
    CHECK(c[0].p.is_zero());
    CHECK(c[0].q == Poly::constant(1));
    CHECK(c[0].fpow == 0);
    // c1 = f'(x1) y1 / (2 f)
    CHECK(c[1].p.is_zero());
    CHECK(c[1].q == partial(curve_sextic(1), Var::X1).scaled(make_rat(1, 2)));
    CHECK(c[1].fpow == 1);
}

TEST_CASE("y series squared reproduces f(x1+t)") {
    const int N = 4;
    auto c = y_series(N);
    auto fk = expand_x2_at_x1(curve_sextic(2), N);
    for (int k = 0; k <= N; ++k) {
        LocalCoeff acc{Poly(), Poly(), 0};
        for (int i = 0; i <= k; ++i) acc = lc_add(acc, lc_mul(c[i], c[k - i]));
        LocalCoeff expect{fk[k], Poly(), 0};
        LocalCoeff diff = lc_add(acc, lc_scale(expect, Rational(-1)));
        CHECK(diff.is_zero());
    }
}

TEST_CASE("branch expansion anchors") {
    // 1/Delta^2 on the divisor branch: start -2, leading coefficient 1.
    auto s = branch_expand(over_delta(Poly::constant(1), 2), Branch::Divisor);
    CHECK(s.start == -2);
    CHECK(s.coeffs.front().p == Poly::constant(1));
    CHECK(s.coeffs.front().q.is_zero());

    // (y1 - y2)/Delta^3 vanishes to first order on the diagonal: start -2.
    CurveElement p4hw({}, Poly::constant(1), Poly::constant(-1), {}, 3);
    CHECK(branch_expand(p4hw, Branch::Diagonal).start == -2);
    CHECK(branch_expand(p4hw, Branch::Divisor).start == -3);

    // I on the divisor branch: start -3, leading coefficient 2 f(x1).
    auto si = branch_expand(invariant_I(), Branch::Divisor);
    CHECK(si.start == -3);
    CHECK(si.coeffs.front().fpow == 0);
    CHECK(si.coeffs.front().p == curve_sextic(1).scaled(make_rat(2)));
    CHECK(si.coeffs.front().q.is_zero());

    // I on the diagonal: computed order 1 (the printed class has them swapped).
    CHECK(pole_orders(invariant_I()) == std::pair<int, int>(3, 1));
}

TEST_CASE("pole orders of coordinate generators") {
    CurveElement I = invariant_I();
    CurveElement p3hw = I * over_delta(Poly::constant(1), 1);
    CHECK(pole_orders(p3hw) == std::pair<int, int>(4, 2));
    CHECK(pole_orders(I * I) == std::pair<int, int>(6, 2));
    CHECK(pole_orders(over_delta(Poly::constant(1), 4)) == std::pair<int, int>(4, 4));
}

TEST_CASE("valuations are additive") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 6) {
        CurveElement a = testing::random_element(rng, 1);
        CurveElement b = testing::random_element(rng, 1);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        for (Branch br : {Branch::Divisor, Branch::Diagonal}) {
            CHECK(valuation(a * b, br) == valuation(a, br) + valuation(b, br));
        }
    }
}

TEST_CASE("zero element is rejected") {
    CHECK_THROWS(branch_expand(CurveElement(), Branch::Divisor));
    CHECK_THROWS(pole_orders(CurveElement()));
}
