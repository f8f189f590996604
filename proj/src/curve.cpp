#include "equijac/curve.hpp"

#include <sstream>

namespace equijac {

Poly curve_sextic(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("curve_sextic: i must be 1 or 2");
    Var x = (i == 1) ? Var::X1 : Var::X2;
    static const long binom[7] = {1, 6, 15, 20, 15, 6, 1};
    Poly f;
    for (int k = 0; k <= 6; ++k) {
        Mono m{};
        m[static_cast<int>(x)] = static_cast<std::uint16_t>(k);
        m[static_cast<int>(g_var(k))] = 1;
        f += Poly::monomial(m, make_rat(binom[k]));
    }
    return f;
}

Poly polar_form() {
    // F = g0 + 3(x1+x2) g1 + 3(x1^2+3x1x2+x2^2) g2 + (x1^3+9x1^2x2+9x1x2^2+x2^3) g3
    //   + 3x1x2(x1^2+3x1x2+x2^2) g4 + 3x1^2x2^2(x1+x2) g5 + x1^3x2^3 g6.
    auto mono = [](int e1, int e2, int gk, long coef) {
        Mono m{};
        m[0] = static_cast<std::uint16_t>(e1);
        m[1] = static_cast<std::uint16_t>(e2);
        m[static_cast<int>(g_var(gk))] = 1;
        return Poly::monomial(m, make_rat(coef));
    };
    Poly F;
    F += mono(0, 0, 0, 1);
    F += mono(1, 0, 1, 3) + mono(0, 1, 1, 3);
    F += mono(2, 0, 2, 3) + mono(1, 1, 2, 9) + mono(0, 2, 2, 3);
    F += mono(3, 0, 3, 1) + mono(2, 1, 3, 9) + mono(1, 2, 3, 9) + mono(0, 3, 3, 1);
    F += mono(3, 1, 4, 3) + mono(2, 2, 4, 9) + mono(1, 3, 4, 3);
    F += mono(3, 2, 5, 3) + mono(2, 3, 5, 3);
    F += mono(3, 3, 6, 1);
    return F;
}

CurveElement::CurveElement(Poly a, Poly b, Poly c, Poly d, int delta_pow)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), k_(delta_pow) {
    if (k_ < 0) throw std::invalid_argument("CurveElement: negative delta power");
    for (const Poly* p : {&a_, &b_, &c_, &d_})
        if (p->depends_on(Var::Y1) || p->depends_on(Var::Y2))
            throw std::invalid_argument("CurveElement: component depends on y");
    normalize();
}

CurveElement CurveElement::from_poly(const Poly& p) {
    // Split off y1/y2 powers and reduce y_i^2 -> f(x_i).
    Poly f1 = curve_sextic(1), f2 = curve_sextic(2);
    Poly comp[2][2];  // [y1 parity][y2 parity]
    const int iy1 = static_cast<int>(Var::Y1), iy2 = static_cast<int>(Var::Y2);
    for (const auto& [m, c] : p.terms()) {
        int e1 = m[iy1], e2 = m[iy2];
        Mono base = m;
        base[iy1] = 0;
        base[iy2] = 0;
        Poly t = Poly::monomial(base, c);
        for (int j = 0; j < e1 / 2; ++j) t = t * f1;
        for (int j = 0; j < e2 / 2; ++j) t = t * f2;
        comp[e1 % 2][e2 % 2] += t;
    }
    return CurveElement(comp[0][0], comp[1][0], comp[0][1], comp[1][1], 0);
}

CurveElement CurveElement::constant(const Rational& r) {
    return CurveElement(Poly::constant(r), {}, {}, {}, 0);
}

CurveElement CurveElement::y1() { return CurveElement({}, Poly::constant(1), {}, {}, 0); }
CurveElement CurveElement::y2() { return CurveElement({}, {}, Poly::constant(1), {}, 0); }

bool CurveElement::is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

bool CurveElement::is_constant() const {
    return k_ == 0 && a_.is_constant() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

Rational CurveElement::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant element");
    return a_.constant_value();
}

void CurveElement::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0) {
        auto qa = div_delta(a_);
        if (!qa) break;
        auto qb = div_delta(b_);
        if (!qb) break;
        auto qc = div_delta(c_);
        if (!qc) break;
        auto qd = div_delta(d_);
        if (!qd) break;
        a_ = std::move(*qa);
        b_ = std::move(*qb);
        c_ = std::move(*qc);
        d_ = std::move(*qd);
        --k_;
    }
}

CurveElement CurveElement::operator-() const { return CurveElement(-a_, -b_, -c_, -d_, k_); }

CurveElement operator+(const CurveElement& u, const CurveElement& v) {
    // Bring to the common Delta power.
    int k = std::max(u.k_, v.k_);
    Poly du = Poly::constant(1), dv = Poly::constant(1);
    Poly delta = delta_poly();
    for (int i = u.k_; i < k; ++i) du = du * delta;
    for (int i = v.k_; i < k; ++i) dv = dv * delta;
    return CurveElement(u.a_ * du + v.a_ * dv, u.b_ * du + v.b_ * dv, u.c_ * du + v.c_ * dv,
                        u.d_ * du + v.d_ * dv, k);
}

CurveElement operator-(const CurveElement& u, const CurveElement& v) { return u + (-v); }

CurveElement operator*(const CurveElement& u, const CurveElement& v) {
    Poly f1 = curve_sextic(1), f2 = curve_sextic(2);
    Poly a = u.a_ * v.a_ + (u.b_ * v.b_) * f1 + (u.c_ * v.c_) * f2 + (u.d_ * v.d_) * (f1 * f2);
    Poly b = u.a_ * v.b_ + u.b_ * v.a_ + (u.c_ * v.d_ + u.d_ * v.c_) * f2;
    Poly c = u.a_ * v.c_ + u.c_ * v.a_ + (u.b_ * v.d_ + u.d_ * v.b_) * f1;
    Poly d = u.a_ * v.d_ + u.d_ * v.a_ + u.b_ * v.c_ + u.c_ * v.b_;
    return CurveElement(std::move(a), std::move(b), std::move(c), std::move(d), u.k_ + v.k_);
}

bool operator==(const CurveElement& u, const CurveElement& v) {
    return u.k_ == v.k_ && u.a_ == v.a_ && u.b_ == v.b_ && u.c_ == v.c_ && u.d_ == v.d_;
}

CurveElement CurveElement::scaled(const Rational& c) const {
    if (c == 0) return CurveElement();
    return CurveElement(a_.scaled(c), b_.scaled(c), c_.scaled(c), d_.scaled(c), k_);
}

std::optional<int> CurveElement::uniform_weight() const {
    // Component weights shifted by the y content; Delta^-k contributes +2k.
    std::optional<int> w;
    auto merge = [&](const Poly& p, int shift) -> bool {
        if (p.is_zero()) return true;
        auto pw = p.uniform_weight();
        if (!pw) return false;
        int total = *pw + shift + 2 * k_;
        if (!w) w = total;
        return *w == total;
    };
    if (!merge(a_, 0)) return std::nullopt;
    if (!merge(b_, -3)) return std::nullopt;
    if (!merge(c_, -3)) return std::nullopt;
    if (!merge(d_, -6)) return std::nullopt;
    return w;
}

std::string CurveElement::to_string() const {
    std::ostringstream os;
    auto part = [&](const Poly& p, const char* y) {
        if (p.is_zero()) return;
        if (os.tellp() > 0) os << " + ";
        os << "(" << p.to_string() << ")";
        if (*y) os << "*" << y;
    };
    part(a_, "");
    part(b_, "y1");
    part(c_, "y2");
    part(d_, "y1*y2");
    if (os.tellp() == 0) return "0";
    std::string body = os.str();
    if (k_ == 0) return body;
    return "(" + body + ") / Delta^" + std::to_string(k_);
}

CurveElement invariant_I() {
    return CurveElement(polar_form(), {}, {}, Poly::constant(-1), 3);
}

CurveElement curve_deriv(int i, const CurveElement& u) {
    if (i != 1 && i != 2) throw std::invalid_argument("curve_deriv: i must be 1 or 2");
    Var x = (i == 1) ? Var::X1 : Var::X2;
    Poly f = curve_sextic(i);
    Poly fp = partial(f, x);  // f'(x_i)
    Poly half_fp = fp.scaled(make_rat(1, 2));
    // d/dx_i of Delta^-k gives -k * dDelta/dx_i / Delta^(k+1); dDelta/dx1 = 1, /dx2 = -1.
    Rational dsign = (i == 1) ? Rational(1) : Rational(-1);
    Poly delta = delta_poly();
    int k = u.delta_pow();

    // Numerator over Delta^(k+1): Delta * (partials) - k * dsign * (components).
    auto ddx = [&](const Poly& p) { return delta * partial(p, x) - p.scaled(Rational(k) * dsign); };
    Poly A = ddx(u.a()), B = ddx(u.b()), C = ddx(u.c()), D = ddx(u.d());

    Poly ra, rb, rc, rd;
    if (i == 1) {
        // y1 * (A + B y1 + C y2 + D y1 y2) = B f1 + A y1 + D f1 y2 + C y1 y2
        ra = B * f;
        rb = A;
        rc = D * f;
        rd = C;
        // (f'(x1)/2) * d/dy1: picks b + d y2, scaled by Delta (common denominator).
        ra += delta * (half_fp * u.b());
        rc += delta * (half_fp * u.d());
    } else {
        ra = C * f;
        rb = D * f;
        rc = A;
        rd = B;
        ra += delta * (half_fp * u.c());
        rb += delta * (half_fp * u.d());
    }
    return CurveElement(std::move(ra), std::move(rb), std::move(rc), std::move(rd), k + 1);
}

}  // namespace equijac
