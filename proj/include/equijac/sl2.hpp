#pragma once
// The sl2 action on the curve ring: the three derivations e, h, f, irreducible
// modules in the normalization e(v_i) = (n-i) v_{i-1}, f(v_i) = (i+1) v_{i+1},
// h(v_i) = (n-2i-1) v_i, orbit expansion, the highest-weight projection of a
// tensor product, and e-kernels in the curve-coefficient weight spaces.
//
// Orbit expansion and projection are templated on the element type so the
// same laws drive both curve-ring values and formal quadratic forms.

#include <functional>
#include <vector>

#include "equijac/curve.hpp"

namespace equijac {

enum class Gen { E, H, F };

Poly sl2_apply(Gen g, const Poly& p);
CurveElement sl2_apply(Gen g, const CurveElement& u);

inline CurveElement sl2_e(const CurveElement& u) { return sl2_apply(Gen::E, u); }
inline CurveElement sl2_h(const CurveElement& u) { return sl2_apply(Gen::H, u); }
inline CurveElement sl2_f(const CurveElement& u) { return sl2_apply(Gen::F, u); }

template <class V>
struct BasicModule {
    int dim = 0;
    std::vector<V> basis;  // v_0 .. v_{dim-1}
    std::string label;

    const V& hw() const { return basis.front(); }
};

using IrrModule = BasicModule<CurveElement>;

// Checks all five action laws exactly; throws with the offending element on failure.
template <class V>
void check_module_laws(const BasicModule<V>& m) {
    int n = m.dim;
    if (n <= 0 || static_cast<int>(m.basis.size()) != n)
        throw std::logic_error("module '" + m.label + "': bad basis size");
    for (int i = 0; i < n; ++i) {
        const V& v = m.basis[i];
        V ev = sl2_apply(Gen::E, v);
        V expected_e = (i == 0) ? V() : m.basis[i - 1].scaled(make_rat(n - i));
        if (!(ev == expected_e))
            throw std::logic_error("module '" + m.label + "': e law fails at index " +
                                   std::to_string(i));
        V fv = sl2_apply(Gen::F, v);
        V expected_f = (i == n - 1) ? V() : m.basis[i + 1].scaled(make_rat(i + 1));
        if (!(fv == expected_f))
            throw std::logic_error("module '" + m.label + "': f law fails at index " +
                                   std::to_string(i));
        V hv = sl2_apply(Gen::H, v);
        if (!(hv == v.scaled(make_rat(n - 2 * i - 1))))
            throw std::logic_error("module '" + m.label + "': h law fails at index " +
                                   std::to_string(i));
    }
}

// Builds v_0 = hw, v_{i+1} = f(v_i)/(i+1); requires e(hw) = 0, h(hw) = (n-1) hw
// and f(v_{n-1}) = 0. A zero hw yields the zero module of the given dimension.
template <class V>
BasicModule<V> expand_orbit(const V& hw, int n, const std::string& label = "") {
    if (n <= 0) throw std::invalid_argument("expand_orbit: n must be positive");
    if (!sl2_apply(Gen::E, hw).is_zero() ||
        !(sl2_apply(Gen::H, hw) == hw.scaled(make_rat(n - 1))))
        throw std::logic_error("expand_orbit('" + label +
                               "'): not a highest-weight vector of weight " +
                               std::to_string(n - 1));
    BasicModule<V> m;
    m.dim = n;
    m.label = label;
    m.basis.reserve(n);
    m.basis.push_back(hw);
    for (int i = 0; i + 1 < n; ++i)
        m.basis.push_back(sl2_apply(Gen::F, m.basis.back()).scaled(make_rat(1, i + 1)));
    if (!sl2_apply(Gen::F, m.basis.back()).is_zero())
        throw std::logic_error("expand_orbit('" + label + "'): orbit does not close at dimension " +
                               std::to_string(n));
    return m;
}

// Highest-weight element of the dimension n+m-2p-1 component of U (x) V,
// dim U = n >= m = dim V:
//   sum_{i=0..p} (-1)^i [(n-i-1)!/(n-1)!] [(m-p+i-1)!/(m-1)!] u_i v_{p-i}.
template <class U, class W>
auto hw_tensor(const BasicModule<U>& A, const BasicModule<W>& B, int p)
    -> decltype(A.basis[0] * B.basis[0]) {
    int n = A.dim, m = B.dim;
    if (!(m <= n)) throw std::invalid_argument("hw_tensor: need dim U >= dim V");
    if (p < 0 || p > m - 1) throw std::invalid_argument("hw_tensor: p out of range");
    auto falling_ratio = [](int top, int bottom) {
        Rational r(1);
        for (int v = top + 1; v <= bottom; ++v) r /= v;
        return r;
    };
    decltype(A.basis[0] * B.basis[0]) sum;
    for (int i = 0; i <= p; ++i) {
        Rational c = falling_ratio(n - i - 1, n - 1) * falling_ratio(m - p + i - 1, m - 1);
        if (i % 2) c = -c;
        sum = sum + (A.basis[i] * B.basis[p - i]).scaled(c);
    }
    return sum;
}

// Basis of ker e on the span of degree-`degree` monomials in g0..g6 of
// h-weight `weight`.
std::vector<Poly> e_kernel_weight_space(int degree, int weight);

// All degree-d monomials in g0..g6 with the given h-weight.
std::vector<Mono> g_monomials(int degree, int weight);

}  // namespace equijac
