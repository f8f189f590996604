#pragma once
// Quadratic forms over the sixteen symbols {1} u P5 u P4 u P3 u P2 u P1 with
// coefficients polynomial in g0..g6. The sl2 action mixes the coefficient
// action with the module laws on the symbols, so identities evaluated here
// keep their attribution to symbol pairs instead of collapsing in the ring.

#include <map>

#include "equijac/catalog.hpp"
#include "equijac/sl2.hpp"

namespace equijac {

inline constexpr int kNumSymbols = 16;   // symbol 0 is the unit
inline constexpr int kNumPairs = 136;    // unordered pairs with repetition

struct SymbolInfo {
    std::string module;  // "P5".."P1"; empty for the unit
    int index = 0;
    int dim = 0;
};

const SymbolInfo& symbol_info(int s);
int symbol_id(const std::string& module, int index);
std::string symbol_name(int s);

// Canonical slot of the unordered pair (i, j) among the 136.
int pair_slot(int i, int j);
std::pair<int, int> slot_pair(int slot);

class FormalQuad {
public:
    using Key = std::pair<int, int>;  // sorted symbol ids

    FormalQuad() = default;
    static FormalQuad unit() { return from_g_poly(Poly::constant(1)); }
    static FormalQuad from_g_poly(const Poly& coef);  // coef * 1*1
    static FormalQuad symbol(int s);

    bool is_zero() const { return entries_.empty(); }
    const std::map<Key, Poly>& entries() const { return entries_; }

    FormalQuad scaled(const Rational& c) const;
    friend FormalQuad operator+(const FormalQuad& a, const FormalQuad& b);
    friend FormalQuad operator-(const FormalQuad& a, const FormalQuad& b);
    // Throws std::domain_error past quadratic symbol degree.
    friend FormalQuad operator*(const FormalQuad& a, const FormalQuad& b);
    friend bool operator==(const FormalQuad& a, const FormalQuad& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const FormalQuad& a, const FormalQuad& b) { return !(a == b); }

    void add_entry(int i, int j, const Poly& coef);

    std::string to_string() const;

private:
    std::map<Key, Poly> entries_;  // no zero polynomials stored
};

FormalQuad sl2_apply(Gen g, const FormalQuad& q);

// The coordinate atoms as formal symbol modules.
BasicModule<FormalQuad> formal_coordinate_module(const std::string& name);
// A g-covariant module lifted entrywise onto the unit pair.
BasicModule<FormalQuad> formal_lift(const IrrModule& m);

// Substitutes the registry's actual coordinate values for the symbols.
CurveElement substitute(const FormalQuad& q, const AtomRegistry& reg);

// Dense 136-vector of the form with the curve coefficients specialized.
std::vector<Rational> specialize(const FormalQuad& q, const std::map<Var, Rational>& curve);

}  // namespace equijac
