#pragma once
// Sparse exact-rational multivariate polynomials over the fixed alphabet
// x1, x2, y1, y2, g0..g6.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equijac {

using Rational = mpq_class;

// num/den, reduced, den > 0.
Rational make_rat(long num, long den = 1);
Rational rat_from_string(const std::string& s);
Rational rat_pow(const Rational& base, long exp);
std::string rat_to_string(const Rational& r);

enum class Var : int { X1 = 0, X2, Y1, Y2, G0, G1, G2, G3, G4, G5, G6 };

inline constexpr int kNumVars = 11;

inline Var g_var(int k) { return static_cast<Var>(static_cast<int>(Var::G0) + k); }
const char* var_name(Var v);

// Exponent vector in the fixed variable order.
using Mono = std::array<std::uint16_t, kNumVars>;

// Graded-lexicographic order: total degree first, then exponent of x1, x2, ...
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);
// h-weight of a monomial: x has weight -2, y weight -3, g_k weight 2k-6.
int mono_weight(const Mono& m);

class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoLess>;

    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly constant(long c) { return constant(make_rat(c)); }
    static Poly variable(Var v);
    static Poly monomial(const Mono& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;
    int degree_in(Var v) const;
    bool depends_on(Var v) const;

    // h-weight if every monomial has the same weight.
    std::optional<int> uniform_weight() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& c) const;

    void add_term(const Mono& m, const Rational& c);

    std::string to_string() const;

private:
    TermMap terms_;  // no zero coefficients stored
};

Poly partial(const Poly& p, Var v);

// Exact quotient by (x1 - x2), or nullopt when not divisible.
std::optional<Poly> div_delta(const Poly& p);

// Exact quotient by the sextic f(x1), or nullopt. Used by the local-series ring.
std::optional<Poly> div_sextic_x1(const Poly& p);

// Exact evaluation; the assignment must cover every variable that occurs.
Rational eval(const Poly& p, const std::map<Var, Rational>& assignment);

// Coefficients of p(x1, x1 + t, y, g) as a polynomial in t, truncated at t^N.
// Result[j] is the t^j coefficient; x2 does not occur in the output.
std::vector<Poly> expand_x2_at_x1(const Poly& p, int N);

// Coefficient of v^k in p, viewed as a polynomial in v.
Poly coefficient_of(const Poly& p, Var v, int k);

}  // namespace equijac
