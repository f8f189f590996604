#include "equijac/formal.hpp"

#include <array>
#include <sstream>

namespace equijac {

namespace {

const std::array<SymbolInfo, kNumSymbols>& symbol_table() {
    static const std::array<SymbolInfo, kNumSymbols> table = [] {
        std::array<SymbolInfo, kNumSymbols> t;
        t[0] = {"", 0, 0};
        int s = 1;
        for (const auto& name : coordinate_names()) {
            int dim = name[1] - '0';
            for (int i = 0; i < dim; ++i) t[s++] = {name, i, dim};
        }
        return t;
    }();
    return table;
}

void check_g_only(const Poly& p) {
    for (Var v : {Var::X1, Var::X2, Var::Y1, Var::Y2})
        if (p.depends_on(v))
            throw std::invalid_argument("formal coefficient must involve only g0..g6");
}

}  // namespace

const SymbolInfo& symbol_info(int s) { return symbol_table().at(s); }

int symbol_id(const std::string& module, int index) {
    for (int s = 1; s < kNumSymbols; ++s) {
        const auto& info = symbol_table()[s];
        if (info.module == module && info.index == index) return s;
    }
    throw std::invalid_argument("no symbol " + module + "[" + std::to_string(index) + "]");
}

std::string symbol_name(int s) {
    if (s == 0) return "1";
    const auto& info = symbol_info(s);
    return info.module + "." + std::to_string(info.index);
}

int pair_slot(int i, int j) {
    if (i > j) std::swap(i, j);
    // Row i of the upper triangle starts after i*(2*16 - i + 1)/2 slots.
    return i * (2 * kNumSymbols - i + 1) / 2 + (j - i);
}

std::pair<int, int> slot_pair(int slot) {
    for (int i = 0; i < kNumSymbols; ++i) {
        int row = i * (2 * kNumSymbols - i + 1) / 2;
        if (slot < row + kNumSymbols - i) return {i, slot - row + i};
    }
    throw std::out_of_range("pair slot");
}

FormalQuad FormalQuad::from_g_poly(const Poly& coef) {
    FormalQuad q;
    q.add_entry(0, 0, coef);
    return q;
}

FormalQuad FormalQuad::symbol(int s) {
    FormalQuad q;
    q.add_entry(0, s, Poly::constant(1));
    return q;
}

void FormalQuad::add_entry(int i, int j, const Poly& coef) {
    if (coef.is_zero()) return;
    check_g_only(coef);
    if (i > j) std::swap(i, j);
    auto [it, inserted] = entries_.emplace(Key{i, j}, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FormalQuad FormalQuad::scaled(const Rational& c) const {
    FormalQuad q;
    if (c == 0) return q;
    for (const auto& [k, p] : entries_) q.entries_.emplace(k, p.scaled(c));
    return q;
}

FormalQuad operator+(const FormalQuad& a, const FormalQuad& b) {
    FormalQuad q = a;
    for (const auto& [k, p] : b.entries_) q.add_entry(k.first, k.second, p);
    return q;
}

FormalQuad operator-(const FormalQuad& a, const FormalQuad& b) {
    return a + b.scaled(Rational(-1));
}

FormalQuad operator*(const FormalQuad& a, const FormalQuad& b) {
    FormalQuad q;
    for (const auto& [ka, pa] : a.entries_) {
        int da = (ka.first > 0 ? 1 : 0) + (ka.second > 0 ? 1 : 0);
        for (const auto& [kb, pb] : b.entries_) {
            int db = (kb.first > 0 ? 1 : 0) + (kb.second > 0 ? 1 : 0);
            if (da + db > 2)
                throw std::domain_error("formal product exceeds quadratic symbol degree");
            // Collect the (at most two) non-unit symbols.
            int syms[2] = {0, 0}, count = 0;
            for (int s : {ka.first, ka.second, kb.first, kb.second})
                if (s > 0) syms[count++] = s;
            q.add_entry(count > 0 ? syms[0] : 0, count > 1 ? syms[1] : (count > 0 ? 0 : 0),
                        pa * pb);
        }
    }
    return q;
}

std::string FormalQuad::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string() << ")";
        if (k.second > 0) {
            os << "*" << symbol_name(k.first == 0 ? k.second : k.first);
            if (k.first > 0) os << "*" << symbol_name(k.second);
        }
    }
    return os.str();
}

FormalQuad sl2_apply(Gen g, const FormalQuad& q) {
    FormalQuad out;
    auto act_symbol = [&](int s) -> std::pair<Rational, int> {
        // Returns (coefficient, image symbol), image 0 meaning annihilation.
        if (s == 0) return {Rational(0), 0};
        const SymbolInfo& info = symbol_info(s);
        switch (g) {
            case Gen::E:
                if (info.index == 0) return {Rational(0), 0};
                return {Rational(info.dim - info.index), symbol_id(info.module, info.index - 1)};
            case Gen::F:
                if (info.index == info.dim - 1) return {Rational(0), 0};
                return {Rational(info.index + 1), symbol_id(info.module, info.index + 1)};
            default:
                return {Rational(info.dim - 2 * info.index - 1), s};
        }
    };
    for (const auto& [k, p] : q.entries()) {
        out.add_entry(k.first, k.second, sl2_apply(g, p));
        auto [c1, im1] = act_symbol(k.first);
        if (c1 != 0) out.add_entry(im1, k.second, p.scaled(c1));
        auto [c2, im2] = act_symbol(k.second);
        if (c2 != 0) out.add_entry(k.first, im2, p.scaled(c2));
    }
    return out;
}

BasicModule<FormalQuad> formal_coordinate_module(const std::string& name) {
    int dim = symbol_info(symbol_id(name, 0)).dim;
    BasicModule<FormalQuad> m;
    m.dim = dim;
    m.label = name;
    for (int i = 0; i < dim; ++i) m.basis.push_back(FormalQuad::symbol(symbol_id(name, i)));
    return m;
}

BasicModule<FormalQuad> formal_lift(const IrrModule& mod) {
    BasicModule<FormalQuad> m;
    m.dim = mod.dim;
    m.label = mod.label;
    for (const auto& v : mod.basis) {
        if (!v.b().is_zero() || !v.c().is_zero() || !v.d().is_zero() || v.delta_pow() != 0)
            throw std::invalid_argument("formal_lift: module is not coefficient-only");
        m.basis.push_back(FormalQuad::from_g_poly(v.a()));
    }
    return m;
}

CurveElement substitute(const FormalQuad& q, const AtomRegistry& reg) {
    CurveElement total;
    auto value = [&](int s) {
        if (s == 0) return CurveElement::one();
        const SymbolInfo& info = symbol_info(s);
        return reg.at(info.module).basis[info.index];
    };
    for (const auto& [k, p] : q.entries())
        total = total + CurveElement::from_poly(p) * value(k.first) * value(k.second);
    return total;
}

std::vector<Rational> specialize(const FormalQuad& q, const std::map<Var, Rational>& curve) {
    std::vector<Rational> v(kNumPairs, Rational(0));
    for (const auto& [k, p] : q.entries()) v[pair_slot(k.first, k.second)] = eval(p, curve);
    return v;
}

}  // namespace equijac

