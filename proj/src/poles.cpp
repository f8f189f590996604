#include "equijac/poles.hpp"

#include <algorithm>

namespace equijac {

namespace {

Poly f1_poly() {
    static const Poly f = curve_sextic(1);
    return f;
}

Poly f_power(int n) {
    Poly r = Poly::constant(1);
    for (int i = 0; i < n; ++i) r = r * f1_poly();
    return r;
}

}  // namespace

LocalCoeff lc_add(const LocalCoeff& a, const LocalCoeff& b) {
    int m = std::max(a.fpow, b.fpow);
    Poly fa = f_power(m - a.fpow), fb = f_power(m - b.fpow);
    return lc_reduce({a.p * fa + b.p * fb, a.q * fa + b.q * fb, m});
}

LocalCoeff lc_mul(const LocalCoeff& a, const LocalCoeff& b) {
    // (p1 + q1 y)(p2 + q2 y) = p1 p2 + q1 q2 f + (p1 q2 + q1 p2) y
    return lc_reduce({a.p * b.p + (a.q * b.q) * f1_poly(), a.p * b.q + a.q * b.p,
                      a.fpow + b.fpow});
}

LocalCoeff lc_scale(const LocalCoeff& a, const Rational& c) {
    return {a.p.scaled(c), a.q.scaled(c), a.fpow};
}

LocalCoeff lc_reduce(LocalCoeff a) {
    if (a.is_zero()) return {Poly(), Poly(), 0};
    while (a.fpow > 0) {
        auto p = div_sextic_x1(a.p);
        if (!p) break;
        auto q = div_sextic_x1(a.q);
        if (!q) break;
        a.p = std::move(*p);
        a.q = std::move(*q);
        --a.fpow;
    }
    return a;
}

namespace {

// Cache of y(x1+t) coefficients, extended on demand. High-order coefficients
// are expensive, so callers pull only as far as they need.
const LocalCoeff& y_coeff(int k) {
    static std::vector<LocalCoeff> c{LocalCoeff{Poly(), Poly::constant(1), 0}};  // c_0 = y1
    static std::vector<Poly> fk = expand_x2_at_x1(curve_sextic(2), 6);           // f is a sextic
    while (static_cast<int>(c.size()) <= k) {
        int n = static_cast<int>(c.size());
        LocalCoeff acc{n <= 6 ? fk[n] : Poly(), Poly(), 0};
        for (int i = 1; i < n; ++i)
            acc = lc_add(acc, lc_scale(lc_mul(c[i], c[n - i]), Rational(-1)));
        LocalCoeff y_over_2f{Poly(), Poly::constant(make_rat(1, 2)), 1};
        c.push_back(lc_mul(acc, y_over_2f));
    }
    return c[k];
}

}  // namespace

std::vector<LocalCoeff> y_series(int N) {
    // Y(t)^2 = f(x1 + t) = sum_k fk t^k, fk = f^(k)(x1)/k!; c_0 = y1 and
    // 2 c_0 c_k = fk - sum_{i=1..k-1} c_i c_{k-i}, with 1/y1 = y1/f(x1).
    std::vector<LocalCoeff> out;
    out.reserve(N + 1);
    for (int k = 0; k <= N; ++k) out.push_back(y_coeff(k));
    return out;
}

namespace {

// t^j coefficient of p(x1, x1 + t) without expanding the whole series.
Poly x2_coeff_at(const Poly& p, int j) {
    Poly out;
    const int ix1 = static_cast<int>(Var::X1), ix2 = static_cast<int>(Var::X2);
    for (const auto& [m, c] : p.terms()) {
        int e = m[ix2];
        if (e < j) continue;
        Rational binom(1);  // C(e, j)
        for (int i = 0; i < j; ++i) {
            binom *= e - i;
            binom /= i + 1;
        }
        Mono mm = m;
        mm[ix2] = 0;
        unsigned s = static_cast<unsigned>(mm[ix1]) + (e - j);
        if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
        mm[ix1] = static_cast<std::uint16_t>(s);
        out.add_term(mm, c * binom);
    }
    return out;
}

// t^j coefficient of the numerator of u with x2 -> x1 + t, y2 -> sign * Y(t);
// the per-component series are grown on demand.
struct NumeratorSeries {
    const CurveElement& u;
    Rational sign;
    std::vector<Poly> A, B, C, D;

    NumeratorSeries(const CurveElement& elem, Branch branch)
        : u(elem), sign(branch == Branch::Diagonal ? 1 : -1) {}

    void ensure(int j) {
        while (static_cast<int>(A.size()) <= j) {
            int k = static_cast<int>(A.size());
            A.push_back(x2_coeff_at(u.a(), k));
            B.push_back(x2_coeff_at(u.b(), k));
            C.push_back(x2_coeff_at(u.c(), k));
            D.push_back(x2_coeff_at(u.d(), k));
        }
    }

    LocalCoeff coeff(int j) {
        ensure(j);
        LocalCoeff out{A[j], B[j], 0};
        for (int i = 0; i <= j; ++i) {
            LocalCoeff cd{C[i], D[i], 0};
            if (cd.is_zero()) continue;
            out = lc_add(out, lc_scale(lc_mul(cd, y_coeff(j - i)), sign));
        }
        return out;
    }
};

}  // namespace

BranchSeries branch_expand(const CurveElement& u, Branch branch, int N, int maxN) {
    if (u.is_zero())
        throw std::invalid_argument("branch_expand: element is exactly zero");
    int window = std::max(N, maxN);
    NumeratorSeries series(u, branch);
    for (int j = 0; j <= window; ++j) {
        LocalCoeff c = series.coeff(j);
        if (c.is_zero()) continue;
        BranchSeries s;
        s.branch = branch;
        s.start = j - u.delta_pow();
        s.coeffs.push_back(std::move(c));
        // A couple of higher coefficients for callers that want to look further.
        for (int extra = 1; extra <= 2 && j + extra <= window; ++extra)
            s.coeffs.push_back(series.coeff(j + extra));
        return s;
    }
    throw std::runtime_error("branch_expand: no non-zero coefficient within window; increase N");
}

int valuation(const CurveElement& u, Branch branch) { return branch_expand(u, branch).start; }

std::pair<int, int> pole_orders(const CurveElement& u) {
    if (u.is_zero()) throw std::invalid_argument("pole_orders: element is zero");
    return {-valuation(u, Branch::Divisor), -valuation(u, Branch::Diagonal)};
}

}  // namespace equijac
