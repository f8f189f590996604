#include "equijac/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace equijac {

const std::vector<std::string>& atom_names() {
    static const std::vector<std::string> names{
        "P1",    "P2",    "P3",    "P4",    "P5",   "G",     "G2_1",  "G2_5",  "G2_9",
        "G2_13", "G3_3",  "G3_7A", "G3_7B", "G3_9", "G3_11", "G3_13", "G3_15", "G3_19"};
    return names;
}

int atom_dim(const std::string& name) {
    static const std::map<std::string, int> dims = [] {
        std::map<std::string, int> d;
        for (int n = 1; n <= 5; ++n) d["P" + std::to_string(n)] = n;
        d["G"] = 7;
        for (int n : {1, 5, 9, 13}) d["G2_" + std::to_string(n)] = n;
        for (int n : {3, 9, 11, 13, 15, 19}) d["G3_" + std::to_string(n)] = n;
        d["G3_7A"] = 7;
        d["G3_7B"] = 7;
        return d;
    }();
    auto it = dims.find(name);
    if (it == dims.end()) throw std::invalid_argument("unknown atom: " + name);
    return it->second;
}

int Factor::dim() const {
    switch (kind) {
        case Kind::Atom: return atom_dim(atom);
        case Kind::TopPow: return toppow.dim;
        default: return bracket->dim;
    }
}

int Term::dim() const {
    int d = 1;
    for (const auto& f : factors) {
        int fd = f->dim();
        if (fd == 1) continue;
        if (d != 1) throw std::logic_error("term with two non-invariant factors");
        d = fd;
    }
    return d;
}

int Relation::dim() const {
    int d = terms.front().dim();
    for (const auto& t : terms)
        if (t.dim() != d) throw std::logic_error("relation mixes component dimensions");
    return d;
}

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= src.size() || src[pos] == '#';
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < src.size() && src[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            v = v * 10 + (src[pos++] - '0');
        return neg ? -v : v;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected name", start);
        std::string s;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            s += src[pos++];
        return s;
    }

    bool next_is_digit() {
        skip_ws();
        return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
    }

    // A digit after '*' continues a numeric chain; a name or '[' starts factors.
    bool star_then_digit() {
        std::size_t save = pos;
        if (!accept('*')) return false;
        bool digit = next_is_digit();
        pos = save;
        return digit;
    }

    // factored rational: ints with optional ^exp joined by '*', one optional '/' part.
    RatLit rational() {
        skip_ws();
        std::size_t start = pos;
        auto chain = [&]() {
            Rational v(1);
            while (true) {
                long base = integer();
                long exp = 1;
                if (accept('^')) exp = integer();
                v *= rat_pow(Rational(base), exp);
                if (!star_then_digit()) break;
                expect('*');
            }
            return v;
        };
        Rational v = chain();
        if (accept('/')) v /= chain();
        RatLit lit;
        lit.value = v;
        lit.text = src.substr(start, pos - start);
        // normalize any internal spaces out of the stored text
        std::string compact;
        for (char c : lit.text)
            if (c != ' ' && c != '\t') compact += c;
        lit.text = compact;
        return lit;
    }

    FactorPtr factor() {
        skip_ws();
        if (peek() == '[') return bracket_factor();
        std::string name = identifier();
        atom_dim(name);  // validates
        if (accept('^')) {
            Factor f;
            f.kind = Factor::Kind::TopPow;
            f.toppow.atom = name;
            f.toppow.power = static_cast<int>(integer());
            expect('_');
            f.toppow.dim = static_cast<int>(integer());
            if (f.toppow.power < 1)
                throw ParseError("top power exponent must be positive", pos);
            if (f.toppow.dim != f.toppow.power * (atom_dim(name) - 1) + 1)
                throw ParseError("top power dimension must be k*(n-1)+1", pos);
            return std::make_shared<Factor>(std::move(f));
        }
        Factor f;
        f.kind = Factor::Kind::Atom;
        f.atom = name;
        return std::make_shared<Factor>(std::move(f));
    }

    FactorPtr bracket_factor() {
        expect('[');
        Bracket br;
        int sign = 1;
        if (accept('-')) sign = -1;
        while (true) {
            BTerm bt;
            bt.sign = sign;
            if (next_is_digit()) {
                bt.scalar = rational();
                expect('*');
            }
            bt.operands.push_back(factor());
            if (accept('@')) bt.operands.push_back(factor());
            br.terms.push_back(std::move(bt));
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
        }
        expect(']');
        expect('_');
        br.dim = static_cast<int>(integer());
        validate_bracket(br);
        Factor f;
        f.kind = Factor::Kind::Bracket;
        f.bracket = std::make_shared<const Bracket>(std::move(br));
        return std::make_shared<Factor>(std::move(f));
    }

    void validate_bracket(const Bracket& br) {
        for (const auto& bt : br.terms) {
            if (bt.operands.size() == 1) {
                if (bt.operands[0]->dim() != br.dim)
                    throw ParseError("bare bracket operand of dimension " +
                                         std::to_string(bt.operands[0]->dim()) +
                                         " under projection to " + std::to_string(br.dim),
                                     pos);
                continue;
            }
            int da = bt.operands[0]->dim(), db = bt.operands[1]->dim();
            int lo = std::abs(da - db) + 1, hi = da + db - 1;
            if (br.dim < lo || br.dim > hi || (hi - br.dim) % 2 != 0)
                throw ParseError("illegal projection of " + std::to_string(da) + " (x) " +
                                     std::to_string(db) + " onto " + std::to_string(br.dim),
                                 pos);
        }
    }

    Term term(int sign) {
        Term t;
        t.sign = sign;
        if (next_is_digit()) {
            t.scalar = rational();
            expect('*');
        }
        t.factors.push_back(factor());
        while (true) {
            skip_ws();
            std::size_t save = pos;
            if (!accept('*')) break;
            if (next_is_digit()) {  // rational prefixes only lead a term
                pos = save;
                break;
            }
            t.factors.push_back(factor());
        }
        t.dim();  // validates the invariant-factor rule
        return t;
    }

    Relation relation() {
        Relation r;
        int sign = accept('-') ? -1 : 1;
        r.terms.push_back(term(sign));
        while (true) {
            if (accept('+')) r.terms.push_back(term(1));
            else if (accept('-')) r.terms.push_back(term(-1));
            else break;
        }
        expect('=');
        if (next_is_digit()) {
            RatLit rhs = rational();
            r.rhs = rhs;
        } else {
            throw ParseError("expected right-hand side", pos);
        }
        if (r.rhs.value != 0 && r.dim() != 1)
            throw ParseError("non-zero right-hand side on a relation of dimension " +
                                 std::to_string(r.dim()),
                             pos);
        return r;
    }
};

}  // namespace

Relation parse_relation(const std::string& text) {
    Parser p(text);
    Relation r = p.relation();
    if (!p.at_end()) throw ParseError("trailing input", p.pos);
    return r;
}

IdentityRecord parse_identity(const std::string& line) {
    auto hash = line.find('#');
    std::string body = line.substr(0, hash);
    IdentityRecord rec;
    rec.rel = parse_relation(body);
    rec.dim = rec.rel.dim();
    if (hash == std::string::npos) return rec;

    std::istringstream ann(line.substr(hash + 1));
    std::string kv;
    bool have_dim = false;
    while (ann >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("bad annotation token '" + kv + "'", hash);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "id") {
            rec.id = val;
        } else if (key == "grade") {
            int s, t;
            if (std::sscanf(val.c_str(), "(%d,%d)", &s, &t) != 2)
                throw ParseError("bad grade annotation '" + val + "'", hash);
            rec.grade = {s, t};
        } else if (key == "dim") {
            have_dim = true;
            if (std::stoi(val) != rec.dim)
                throw ParseError("annotated dim " + val + " but the relation has dimension " +
                                     std::to_string(rec.dim),
                                 hash);
        } else {
            throw ParseError("unknown annotation key '" + key + "'", hash);
        }
    }
    (void)have_dim;
    return rec;
}

std::vector<IdentityRecord> parse_catalog(const std::string& text) {
    std::vector<IdentityRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = line;
        auto nonspace = stripped.find_first_not_of(" \t\r");
        if (nonspace == std::string::npos) continue;
        if (stripped[nonspace] == '#') continue;
        while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' '))
            stripped.pop_back();
        out.push_back(parse_identity(stripped));
    }
    return out;
}

namespace {

std::string print_bterm(const BTerm& bt, bool first) {
    std::string s;
    if (!first) s += bt.sign < 0 ? " - " : " + ";
    else if (bt.sign < 0) s += "-";
    if (bt.scalar) s += bt.scalar->text + " * ";
    s += print_factor(*bt.operands[0]);
    if (bt.operands.size() == 2) s += " @ " + print_factor(*bt.operands[1]);
    return s;
}

}  // namespace

std::string print_factor(const Factor& f) {
    switch (f.kind) {
        case Factor::Kind::Atom: return f.atom;
        case Factor::Kind::TopPow:
            return f.toppow.atom + "^" + std::to_string(f.toppow.power) + "_" +
                   std::to_string(f.toppow.dim);
        default: {
            std::string s = "[";
            bool first = true;
            for (const auto& bt : f.bracket->terms) {
                s += print_bterm(bt, first);
                first = false;
            }
            s += "]_" + std::to_string(f.bracket->dim);
            return s;
        }
    }
}

std::string print_relation(const Relation& r) {
    std::string s;
    bool first = true;
    for (const auto& t : r.terms) {
        if (!first) s += t.sign < 0 ? " - " : " + ";
        else if (t.sign < 0) s += "-";
        first = false;
        if (t.scalar) s += t.scalar->text + " * ";
        bool ff = true;
        for (const auto& f : t.factors) {
            if (!ff) s += " * ";
            ff = false;
            s += print_factor(*f);
        }
    }
    s += " = " + r.rhs.text;
    return s;
}

std::string print_identity(const IdentityRecord& rec) {
    std::string s = print_relation(rec.rel) + "  # id=" + rec.id;
    if (rec.grade)
        s += " grade=(" + std::to_string(rec.grade->first) + "," +
             std::to_string(rec.grade->second) + ")";
    s += " dim=" + std::to_string(rec.dim);
    return s;
}

}  // namespace equijac

