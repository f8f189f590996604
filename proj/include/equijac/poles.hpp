#pragma once
// Exact valuations of curve-ring elements along the two branches over the
// locus x1 = x2: the diagonal (y2 = +y(x2)) and the divisor (y2 = -y(x2)).
// Expansion variable t with x2 = x1 + t; 1/Delta^k contributes t^-k.

#include "equijac/curve.hpp"

namespace equijac {

enum class Branch { Diagonal, Divisor };

// Element of the local coefficient ring (p + q*y1) / f(x1)^fpow,
// p and q free of x2, y1, y2.
struct LocalCoeff {
    Poly p, q;
    int fpow = 0;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
};

LocalCoeff lc_add(const LocalCoeff& a, const LocalCoeff& b);
LocalCoeff lc_mul(const LocalCoeff& a, const LocalCoeff& b);
LocalCoeff lc_scale(const LocalCoeff& a, const Rational& c);
// Cancels common f(x1) factors against fpow.
LocalCoeff lc_reduce(LocalCoeff a);

// Coefficients c_0..c_N of y(x1 + t) on the curve, c_0 = y1.
std::vector<LocalCoeff> y_series(int N);

struct BranchSeries {
    Branch branch;
    int start = 0;                   // lowest t exponent
    std::vector<LocalCoeff> coeffs;  // first entry non-zero
};

// Laurent expansion of u along the branch; requires u != 0. Grows the window
// up to maxN before giving up.
BranchSeries branch_expand(const CurveElement& u, Branch branch, int N = 16, int maxN = 64);

// (divisor order, diagonal order); negative means vanishing to that order.
std::pair<int, int> pole_orders(const CurveElement& u);

int valuation(const CurveElement& u, Branch branch);

}  // namespace equijac
