#include "equijac/sl2.hpp"

#include "equijac/linalg.hpp"

namespace equijac {

namespace {

struct Derivation {
    // Coefficient polynomials for d/dx1, d/dx2 and each d/dg_k.
    Poly cx1, cx2, cg[7];
    // D(y_i) = ymul_i * y_i.
    Poly ymul1, ymul2;
    // D(Delta)/Delta is polynomial for all three generators.
    Poly dlog_delta;
};

const Derivation& derivation(Gen g) {
    static const Derivation e = [] {
        Derivation d;
        d.cx1 = Poly::constant(1);
        d.cx2 = Poly::constant(1);
        for (int k = 0; k < 6; ++k)
            d.cg[k] = Poly::variable(g_var(k + 1)).scaled(make_rat(-(6 - k)));
        d.dlog_delta = Poly();  // e(Delta) = 0
        return d;
    }();
    static const Derivation h = [] {
        Derivation d;
        d.cx1 = Poly::variable(Var::X1).scaled(make_rat(-2));
        d.cx2 = Poly::variable(Var::X2).scaled(make_rat(-2));
        for (int k = 0; k <= 6; ++k)
            d.cg[k] = Poly::variable(g_var(k)).scaled(make_rat(2 * k - 6));
        d.ymul1 = Poly::constant(-3);
        d.ymul2 = Poly::constant(-3);
        d.dlog_delta = Poly::constant(-2);  // h(Delta) = -2 Delta
        return d;
    }();
    static const Derivation f = [] {
        Derivation d;
        d.cx1 = -(Poly::variable(Var::X1) * Poly::variable(Var::X1));
        d.cx2 = -(Poly::variable(Var::X2) * Poly::variable(Var::X2));
        for (int k = 1; k <= 6; ++k)
            d.cg[k] = Poly::variable(g_var(k - 1)).scaled(make_rat(-k));
        d.ymul1 = Poly::variable(Var::X1).scaled(make_rat(-3));
        d.ymul2 = Poly::variable(Var::X2).scaled(make_rat(-3));
        // f(Delta) = -(x1^2 - x2^2) = -Delta (x1 + x2)
        d.dlog_delta = -(Poly::variable(Var::X1) + Poly::variable(Var::X2));
        return d;
    }();
    switch (g) {
        case Gen::E: return e;
        case Gen::H: return h;
        default: return f;
    }
}

Poly apply_poly_part(const Derivation& d, const Poly& p) {
    Poly r = d.cx1 * partial(p, Var::X1) + d.cx2 * partial(p, Var::X2);
    for (int k = 0; k <= 6; ++k) {
        if (d.cg[k].is_zero()) continue;
        Poly pp = partial(p, g_var(k));
        if (!pp.is_zero()) r += d.cg[k] * pp;
    }
    return r;
}

}  // namespace

Poly sl2_apply(Gen g, const Poly& p) {
    if (p.depends_on(Var::Y1) || p.depends_on(Var::Y2))
        throw std::invalid_argument("sl2_apply(Poly): y variables not supported here");
    return apply_poly_part(derivation(g), p);
}

CurveElement sl2_apply(Gen g, const CurveElement& u) {
    const Derivation& d = derivation(g);
    int k = u.delta_pow();
    Poly kl = d.dlog_delta.scaled(make_rat(k));
    // D(p/Delta^k) = [D(p) - k p D(Delta)/Delta] / Delta^k, plus the y multipliers.
    Poly a = apply_poly_part(d, u.a()) - kl * u.a();
    Poly b = apply_poly_part(d, u.b()) - kl * u.b() + d.ymul1 * u.b();
    Poly c = apply_poly_part(d, u.c()) - kl * u.c() + d.ymul2 * u.c();
    Poly dd = apply_poly_part(d, u.d()) - kl * u.d() + (d.ymul1 + d.ymul2) * u.d();
    return CurveElement(std::move(a), std::move(b), std::move(c), std::move(dd), k);
}




std::vector<Mono> g_monomials(int degree, int weight) {
    std::vector<Mono> out;
    Mono m{};
    // Choose exponents for g6 down to g0.
    std::function<void(int, int, int)> rec = [&](int k, int deg_left, int w_left) {
        if (k < 0) {
            if (deg_left == 0 && w_left == 0) out.push_back(m);
            return;
        }
        int wk = 2 * k - 6;
        for (int e = 0; e <= deg_left; ++e) {
            m[static_cast<int>(g_var(k))] = static_cast<std::uint16_t>(e);
            rec(k - 1, deg_left - e, w_left - e * wk);
        }
        m[static_cast<int>(g_var(k))] = 0;
    };
    rec(6, degree, weight);
    return out;
}

std::vector<Poly> e_kernel_weight_space(int degree, int weight) {
    auto basis = g_monomials(degree, weight);
    if (basis.empty()) throw std::invalid_argument("e_kernel_weight_space: empty weight space");
    auto image = g_monomials(degree, weight + 2);
    std::map<Mono, int, MonoLess> row_of;
    for (std::size_t i = 0; i < image.size(); ++i) row_of[image[i]] = static_cast<int>(i);

    RatMatrix mat(image.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Poly ep = sl2_apply(Gen::E, Poly::monomial(basis[j], Rational(1)));
        for (const auto& [mm, c] : ep.terms()) mat.at(row_of.at(mm), j) = c;
    }
    std::vector<Poly> out;
    for (const auto& vec : nullspace(mat)) {
        Poly p;
        for (std::size_t j = 0; j < basis.size(); ++j) p.add_term(basis[j], vec[j]);
        // Positive coefficient on the graded-lex leading monomial.
        if (!p.is_zero() && p.terms().rbegin()->second < 0) p = -p;
        out.push_back(p);
    }
    return out;
}

}  // namespace equijac
