#pragma once
// The quotient ring Q[x1,x2,g0..g6,y1,y2]/(y1^2 - f(x1), y2^2 - f(x2))
// localized at Delta = x1 - x2. Every coordinate, covariant and identity
// of the engine lives here.

#include "equijac/poly.hpp"

namespace equijac {

// f(xi) = g6 xi^6 + 6 g5 xi^5 + 15 g4 xi^4 + 20 g3 xi^3 + 15 g2 xi^2 + 6 g1 xi + g0.
Poly curve_sextic(int i);

// The symmetric bi-cubic polar form F(x1,x2) with F(x,x) = f(x).
Poly polar_form();

inline Poly delta_poly() { return Poly::variable(Var::X1) - Poly::variable(Var::X2); }

// (a + b y1 + c y2 + d y1 y2) / Delta^delta_pow, components free of y1, y2.
// Kept normalized: when delta_pow > 0, not all components are Delta-divisible.
class CurveElement {
public:
    CurveElement() = default;
    CurveElement(Poly a, Poly b, Poly c, Poly d, int delta_pow);

    static CurveElement from_poly(const Poly& p);  // reduces any y powers
    static CurveElement constant(const Rational& r);
    static CurveElement one() { return constant(Rational(1)); }
    static CurveElement y1();
    static CurveElement y2();

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& c() const { return c_; }
    const Poly& d() const { return d_; }
    int delta_pow() const { return k_; }

    bool is_zero() const;
    bool is_constant() const;
    Rational constant_value() const;

    CurveElement operator-() const;
    friend CurveElement operator+(const CurveElement& u, const CurveElement& v);
    friend CurveElement operator-(const CurveElement& u, const CurveElement& v);
    friend CurveElement operator*(const CurveElement& u, const CurveElement& v);
    friend bool operator==(const CurveElement& u, const CurveElement& v);
    friend bool operator!=(const CurveElement& u, const CurveElement& v) { return !(u == v); }

    CurveElement scaled(const Rational& c) const;

    // h-weight if the element is homogeneous under h (Delta has weight -2).
    std::optional<int> uniform_weight() const;

    std::string to_string() const;

private:
    void normalize();

    Poly a_, b_, c_, d_;
    int k_ = 0;
};

// The invariant I = (F(x1,x2) - y1 y2) / Delta^3.
CurveElement invariant_I();

// CD_i(u) = y_i du/dx_i along the curve, as the polynomial operator
// y_i d/dx_i + (f'(x_i)/2) d/dy_i. i is 1 or 2.
CurveElement curve_deriv(int i, const CurveElement& u);

}  // namespace equijac
