#pragma once
// The identity DSL. Relations are signed sums of terms; a term is an optional
// factored rational times a product of factors; a factor is an atom, a top
// symmetric power atom^k_d, or a projection bracket [ ... ]_n whose summands
// pair at most two module-valued operands with '@'.

#include <memory>
#include <optional>

#include "equijac/poly.hpp"

namespace equijac {

// A rational literal in factored source form, e.g. "2^5*3^3*5" or "36/5".
struct RatLit {
    Rational value;
    std::string text;
};

struct Factor;
using FactorPtr = std::shared_ptr<const Factor>;

struct BTerm {
    int sign = 1;
    std::optional<RatLit> scalar;
    std::vector<FactorPtr> operands;  // one operand, or two joined by '@'
};

struct Bracket {
    std::vector<BTerm> terms;
    int dim = 0;
};

struct TopPowNode {
    std::string atom;
    int power = 0;
    int dim = 0;  // must equal power*(atom_dim-1)+1
};

struct Factor {
    enum class Kind { Atom, TopPow, Bracket };
    Kind kind = Kind::Atom;
    std::string atom;
    TopPowNode toppow;
    std::shared_ptr<const Bracket> bracket;

    int dim() const;
};

struct Term {
    int sign = 1;
    std::optional<RatLit> scalar;
    std::vector<FactorPtr> factors;

    Rational coefficient() const {
        Rational c = scalar ? scalar->value : Rational(1);
        return sign < 0 ? Rational(-c) : c;
    }
    int dim() const;  // the unique non-invariant factor dimension, or 1
};

struct Relation {
    std::vector<Term> terms;
    RatLit rhs;  // value 0, text "0" when homogeneous

    int dim() const;
};

struct IdentityRecord {
    std::string id;
    std::optional<std::pair<int, int>> grade;  // section header grade, absent for the Kummer set
    int dim = 0;
    Relation rel;
};

// Dimension of a DSL atom name; throws on unknown atoms.
int atom_dim(const std::string& name);
const std::vector<std::string>& atom_names();

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

Relation parse_relation(const std::string& text);
// One catalog line: relation plus a "# id=... [grade=(s,t)] dim=d" annotation.
IdentityRecord parse_identity(const std::string& line);
// Whole catalog file; blank lines and pure-comment lines are skipped.
std::vector<IdentityRecord> parse_catalog(const std::string& text);

std::string print_factor(const Factor& f);
std::string print_relation(const Relation& r);
std::string print_identity(const IdentityRecord& rec);

}  // namespace equijac
