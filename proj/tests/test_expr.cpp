#include "doctest.h"

#include <sstream>
#include "equijac/engine.hpp"
#include "equijac/expr.hpp"

using namespace equijac;

TEST_CASE("parses projections and constants") {
    Relation r = parse_relation("[P5 @ P4]_2 = 0");
    CHECK(r.terms.size() == 1);
    CHECK(r.rhs.value == 0);
    CHECK(r.dim() == 2);
    const Factor& f = *r.terms[0].factors[0];
    REQUIRE(f.kind == Factor::Kind::Bracket);
    CHECK(f.bracket->dim == 2);
    CHECK(f.bracket->terms[0].operands.size() == 2);

    Relation c = parse_relation("[P5 @ P5]_1 = 2^-4 * 3^-2");
    CHECK(c.rhs.value == make_rat(1, 144));

    Relation nested = parse_relation("[G @ [P5 @ P4]_8]_2 = 0");
    const Factor& nf = *nested.terms[0].factors[0];
    CHECK(nf.bracket->terms[0].operands[1]->kind == Factor::Kind::Bracket);
}

TEST_CASE("factored rationals") {
    Relation r = parse_relation("2^5*3^3*5 * P5 - 3/2*5 * P5 + 2^4*3^5*5/7^2 * P5 = 0");
    CHECK(r.terms[0].coefficient() == make_rat(4320));
    CHECK(r.terms[1].coefficient() == make_rat(-3, 10));
    CHECK(r.terms[2].coefficient() == make_rat(19440, 49));
}

TEST_CASE("top powers") {
    Relation r = parse_relation("[G @ P3^3_7]_1 - P1 = 0");
    const Factor& f = *r.terms[0].factors[0]->bracket->terms[0].operands[1];
    CHECK(f.kind == Factor::Kind::TopPow);
    CHECK(f.dim() == 7);
    CHECK_THROWS_AS(parse_relation("P3^3_6 = 0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_relation("[P5 @ Q7]_2 = 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relation("[P5 @ P4]_3 = 0"), ParseError);   // parity
    CHECK_THROWS_AS(parse_relation("[P5 @ P4]_99 = 0"), ParseError);  // range
    CHECK_THROWS_AS(parse_relation("P5 +"), ParseError);
    CHECK_THROWS_AS(parse_relation("[P5 @ P5]_5 = 1/12"), ParseError);  // rhs on dim 5
    CHECK_THROWS_AS(parse_relation("P5 * P4 = 0"), std::logic_error);   // two non-invariants
}

TEST_CASE("identity annotations") {
    IdentityRecord rec =
        parse_identity("[P5 @ P3]_5 = 0  # id=4.2-3 grade=(0,0) dim=5");
    CHECK(rec.id == "4.2-3");
    REQUIRE(rec.grade.has_value());
    CHECK(*rec.grade == std::pair<int, int>(0, 0));
    CHECK(rec.dim == 5);

    CHECK_THROWS_AS(parse_identity("[P5 @ P3]_5 = 0  # id=x dim=4"), ParseError);
}

TEST_CASE("parse then print is the identity on the shipped catalog") {
    std::istringstream in(shipped_catalog_text());
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        IdentityRecord rec = parse_identity(line);
        CHECK(print_identity(rec) == line);
        ++checked;
    }
    CHECK(checked == 24);
}

TEST_CASE("curve file parsing") {
    auto c = parse_curve_file("[1, -2, 3/7, 4, 5, 6, 7]");
    CHECK(c.at(Var::G2) == make_rat(3, 7));
    CHECK(c.size() == 7);
    CHECK_THROWS(parse_curve_file("[1, 2]"));
}

