#include "equijac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace equijac {

Rational make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool neg = exp < 0;
    unsigned long e = neg ? -static_cast<unsigned long>(exp) : exp;
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    if (neg) {
        if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
        r = Rational(1) / r;
    }
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"x1", "x2", "y1", "y2", "g0", "g1",
                                          "g2", "g3", "g4", "g5", "g6"};
    return names[static_cast<int>(v)];
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

int mono_weight(const Mono& m) {
    int w = 0;
    w += -2 * (m[0] + m[1]);
    w += -3 * (m[2] + m[3]);
    for (int k = 0; k <= 6; ++k) w += (2 * k - 6) * m[4 + k];
    return w;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Tie: the monomial with the larger exponent at the earliest variable is larger.
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Mono{}, c);
    return p;
}

Poly Poly::variable(Var v) {
    Mono m{};
    m[static_cast<int>(v)] = 1;
    Poly p;
    p.terms_.emplace(m, Rational(1));
    return p;
}

Poly Poly::monomial(const Mono& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

int Poly::degree_in(Var v) const {
    int d = 0;
    int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
    return d;
}

bool Poly::depends_on(Var v) const {
    int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_)
        if (m[i] > 0) return true;
    return false;
}

std::optional<int> Poly::uniform_weight() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        int mw = mono_weight(m);
        if (!w) w = mw;
        else if (*w != mw) return std::nullopt;
    }
    return w;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kNumVars; ++i) {
                unsigned s = static_cast<unsigned>(ma[i]) + mb[i];
                if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
                m[i] = static_cast<std::uint16_t>(s);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (largest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        bool wrote = false;
        if (!unit || m == Mono{}) {
            os << rat_to_string(a);
            wrote = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << "*";
            os << var_name(static_cast<Var>(i));
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

Poly partial(const Poly& p, Var v) {
    Poly r;
    int i = static_cast<int>(v);
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] -= 1;
        r.add_term(d, c * m[i]);
    }
    return r;
}

namespace {

// View p as a polynomial in `v` with Poly coefficients.
std::vector<Poly> coefficients_in(const Poly& p, Var v) {
    int i = static_cast<int>(v);
    std::vector<Poly> out(static_cast<std::size_t>(p.degree_in(v)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int k = rest[i];
        rest[i] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

}  // namespace

Poly coefficient_of(const Poly& p, Var v, int k) {
    int i = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (m[i] != k) continue;
        Mono rest = m;
        rest[i] = 0;
        r.add_term(rest, c);
    }
    return r;
}

std::optional<Poly> div_delta(const Poly& p) {
    if (p.is_zero()) return Poly();
    // Synthetic division by (x1 - x2) in x1: quotient coefficients from the top,
    // Q_{i-1} = A_i + x2*Q_i; remainder A_0 + x2*Q_0 must vanish.
    auto coef = coefficients_in(p, Var::X1);
    int d = static_cast<int>(coef.size()) - 1;
    Poly x2 = Poly::variable(Var::X2);
    std::vector<Poly> q(std::max(d, 0));
    Poly carry;  // Q_i during descent
    for (int i = d; i >= 1; --i) {
        Poly qi = coef[i] + (i == d ? Poly() : x2 * carry);
        q[i - 1] = qi;
        carry = qi;
    }
    Poly rem = coef[0] + (d >= 1 ? x2 * carry : Poly());
    if (!rem.is_zero()) return std::nullopt;
    Poly result;
    for (int i = 0; i < d; ++i) {
        Mono m{};
        m[0] = static_cast<std::uint16_t>(i);
        result += q[i] * Poly::monomial(m, Rational(1));
    }
    return result;
}

std::optional<Poly> div_sextic_x1(const Poly& p) {
    if (p.is_zero()) return Poly();
    // f(x1) = g6 x1^6 + 6 g5 x1^5 + 15 g4 x1^4 + 20 g3 x1^3 + 15 g2 x1^2 + 6 g1 x1 + g0.
    static const long binom[7] = {1, 6, 15, 20, 15, 6, 1};
    auto coef = coefficients_in(p, Var::X1);
    int d = static_cast<int>(coef.size()) - 1;
    if (d < 6) return std::nullopt;
    // Long division from the top; each quotient coefficient must be exactly
    // divisible by g6 at the monomial level.
    std::vector<Poly> rem = coef;
    std::vector<Poly> q(d - 6 + 1);
    for (int i = d; i >= 6; --i) {
        if (rem[i].is_zero()) continue;
        Poly qi;
        for (const auto& [m, c] : rem[i].terms()) {
            if (m[static_cast<int>(Var::G6)] == 0) return std::nullopt;
            Mono g = m;
            g[static_cast<int>(Var::G6)] -= 1;
            qi.add_term(g, c);
        }
        q[i - 6] = qi;
        for (int k = 0; k <= 6; ++k) {
            Poly gk = Poly::variable(g_var(6 - k)).scaled(make_rat(binom[k]));
            rem[i - k] -= qi * gk;
        }
    }
    for (int i = 0; i < 6 && i < static_cast<int>(rem.size()); ++i)
        if (!rem[i].is_zero()) return std::nullopt;
    Poly result;
    for (std::size_t i = 0; i < q.size(); ++i) {
        Mono m{};
        m[0] = static_cast<std::uint16_t>(i);
        result += q[i] * Poly::monomial(m, Rational(1));
    }
    return result;
}

Rational eval(const Poly& p, const std::map<Var, Rational>& assignment) {
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw std::invalid_argument(std::string("eval: no value for variable ") +
                                            var_name(static_cast<Var>(i)));
            t *= rat_pow(it->second, m[i]);
        }
        total += t;
    }
    return total;
}

std::vector<Poly> expand_x2_at_x1(const Poly& p, int N) {
    std::vector<Poly> out(static_cast<std::size_t>(N) + 1);
    const int ix1 = static_cast<int>(Var::X1), ix2 = static_cast<int>(Var::X2);
    for (const auto& [m, c] : p.terms()) {
        int e = m[ix2];
        // (x1 + t)^e  =  sum_j C(e,j) x1^(e-j) t^j
        Rational binom(1);
        for (int j = 0; j <= e && j <= N; ++j) {
            Mono mm = m;
            mm[ix2] = 0;
            unsigned s = static_cast<unsigned>(mm[ix1]) + (e - j);
            if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
            mm[ix1] = static_cast<std::uint16_t>(s);
            out[j].add_term(mm, c * binom);
            binom *= e - j;
            binom /= j + 1;
        }
    }
    return out;
}

}  // namespace equijac
